#include "hoalg/exactlin.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <limits>

namespace hoalg::exactlin {

// ---------------------------------------------------------------- spaces

GradedSpace::GradedSpace() : GradedSpace(std::vector<BasisElement>{}) {}

GradedSpace::GradedSpace(std::vector<BasisElement> basis)
{
    auto b = std::make_shared<Basis>();
    for (std::size_t k = 0; k < basis.size(); ++k) {
        if (!b->index.emplace(basis[k].name, k).second)
            throw Error(fmt::format("duplicate basis name '{}'", basis[k].name));
    }
    b->elements = std::move(basis);
    factors_.push_back(std::move(b));
}

GradedSpace::GradedSpace(std::vector<std::shared_ptr<const Basis>> factors) : factors_(std::move(factors)) {}

GradedSpace GradedSpace::tensor(std::span<const GradedSpace> factors)
{
    std::vector<std::shared_ptr<const Basis>> all;
    for (const auto& f : factors)
        all.insert(all.end(), f.factors_.begin(), f.factors_.end());
    return GradedSpace(std::move(all));
}

GradedSpace GradedSpace::tensor_power(const GradedSpace& base, int n)
{
    if (n < 0)
        throw Error("negative tensor power");
    std::vector<std::shared_ptr<const Basis>> all;
    for (int k = 0; k < n; ++k)
        all.insert(all.end(), base.factors_.begin(), base.factors_.end());
    return GradedSpace(std::move(all));
}

Index GradedSpace::dim() const
{
    Index d = 1;
    for (const auto& f : factors_) {
        Index m = f->elements.size();
        if (m != 0 && d > std::numeric_limits<Index>::max() / m)
            throw Error("tensor space dimension overflows 64 bits");
        d *= m;
    }
    return d;
}

std::vector<std::size_t> GradedSpace::decode(Index i) const
{
    std::vector<std::size_t> digits(factors_.size());
    for (std::size_t k = factors_.size(); k-- > 0;) {
        Index m = factors_[k]->elements.size();
        digits[k] = static_cast<std::size_t>(i % m);
        i /= m;
    }
    return digits;
}

Index GradedSpace::encode(std::span<const std::size_t> digits) const
{
    if (digits.size() != factors_.size())
        throw Error("tensor index has the wrong length");
    Index i = 0;
    for (std::size_t k = 0; k < digits.size(); ++k)
        i = i * factors_[k]->elements.size() + digits[k];
    return i;
}

int GradedSpace::degree(Index i) const
{
    int deg = 0;
    auto digits = decode(i);
    for (std::size_t k = 0; k < digits.size(); ++k)
        deg += factors_[k]->elements[digits[k]].degree;
    return deg;
}

std::string GradedSpace::name(Index i) const
{
    if (factors_.empty())
        return "1";
    auto digits = decode(i);
    std::string out;
    for (std::size_t k = 0; k < digits.size(); ++k) {
        if (k)
            out += "⊗";
        out += factors_[k]->elements[digits[k]].name;
    }
    return out;
}

GradedSpace GradedSpace::factor(std::size_t k) const { return GradedSpace(std::vector{factors_.at(k)}); }

const std::vector<BasisElement>& GradedSpace::basis() const
{
    if (factors_.size() != 1)
        throw Error("basis() requested on a tensor product space");
    return factors_.front()->elements;
}

std::optional<std::size_t> GradedSpace::find(std::string_view name) const
{
    if (factors_.size() != 1)
        return std::nullopt;
    auto it = factors_.front()->index.find(std::string(name));
    if (it == factors_.front()->index.end())
        return std::nullopt;
    return it->second;
}

bool GradedSpace::operator==(const GradedSpace& other) const
{
    if (factors_.size() != other.factors_.size())
        return false;
    for (std::size_t k = 0; k < factors_.size(); ++k)
        if (factors_[k] != other.factors_[k] && factors_[k]->elements != other.factors_[k]->elements)
            return false;
    return true;
}

// --------------------------------------------------------------- vectors

void VectorBuilder::add(Index i, const Scalar& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = acc_.try_emplace(i, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            acc_.erase(it);
    }
}

void VectorBuilder::add(const SparseVector& v, const Scalar& c)
{
    for (const auto& [i, x] : v)
        add(i, x * c);
}

SparseVector VectorBuilder::take()
{
    SparseVector out(acc_.begin(), acc_.end());
    acc_.clear();
    return out;
}

SparseVector scaled(const SparseVector& v, const Scalar& c)
{
    if (c == 0)
        return {};
    SparseVector out;
    out.reserve(v.size());
    for (const auto& [i, x] : v)
        if (x != 0)
            out.emplace_back(i, x * c);
    return out;
}

SparseVector sum(const SparseVector& a, const SparseVector& b, const Scalar& cb)
{
    SparseVector out;
    out.reserve(a.size() + b.size());
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() || ib != b.end()) {
        if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
            out.push_back(*ia++);
        } else if (ia == a.end() || ib->first < ia->first) {
            Scalar x = ib->second * cb;
            if (x != 0)
                out.emplace_back(ib->first, x);
            ++ib;
        } else {
            Scalar x = ia->second + ib->second * cb;
            if (x != 0)
                out.emplace_back(ia->first, x);
            ++ia;
            ++ib;
        }
    }
    return out;
}

// ------------------------------------------------------------------ maps

GradedMap::GradedMap(GradedSpace source, GradedSpace target, int degree)
    : source_(std::move(source)), target_(std::move(target)), degree_(degree)
{
}

GradedMap GradedMap::identity(const GradedSpace& space)
{
    GradedMap id(space, space, 0);
    for (Index i = 0; i < space.dim(); ++i)
        id.columns_.emplace(i, SparseVector{{i, Scalar(1)}});
    return id;
}

void GradedMap::add_to_entry(Index row, Index col, const Scalar& c)
{
    if (c == 0)
        return;
    add_to_column(col, SparseVector{{row, c}});
}

void GradedMap::add_to_column(Index col, const SparseVector& v, const Scalar& c)
{
    if (c == 0 || v.empty())
        return;
    if (col >= source_.dim())
        throw Error(fmt::format("column {} out of range", col));
    int want = source_.degree(col) + degree_;
    for (const auto& [row, x] : v) {
        if (row >= target_.dim())
            throw Error(fmt::format("row {} out of range", row));
        if (target_.degree(row) != want)
            throw Error(fmt::format("entry ({}, {}) breaks the degree {} constraint", target_.name(row),
                                    source_.name(col), degree_));
    }
    auto it = columns_.find(col);
    if (it == columns_.end()) {
        auto s = scaled(v, c);
        if (!s.empty())
            columns_.emplace(col, std::move(s));
        return;
    }
    it->second = sum(it->second, v, c);
    if (it->second.empty())
        columns_.erase(it);
}

Scalar GradedMap::entry(Index row, Index col) const
{
    const auto& c = column(col);
    auto it = std::lower_bound(c.begin(), c.end(), row, [](const auto& e, Index r) { return e.first < r; });
    if (it != c.end() && it->first == row)
        return it->second;
    return 0;
}

const SparseVector& GradedMap::column(Index col) const
{
    static const SparseVector empty;
    auto it = columns_.find(col);
    return it == columns_.end() ? empty : it->second;
}

SparseVector GradedMap::apply(const SparseVector& v) const
{
    VectorBuilder b;
    for (const auto& [i, x] : v)
        b.add(column(i), x);
    return b.take();
}

std::size_t GradedMap::nonzero_count() const
{
    std::size_t n = 0;
    for (const auto& [col, v] : columns_)
        n += v.size();
    return n;
}

std::optional<GradedMap::Entry> GradedMap::first_nonzero() const
{
    if (columns_.empty())
        return std::nullopt;
    const auto& [col, v] = *columns_.begin();
    return Entry{v.front().first, col, v.front().second};
}

void GradedMap::check_same_shape(const GradedMap& other, const char* what) const
{
    if (!(source_ == other.source_) || !(target_ == other.target_) || degree_ != other.degree_)
        throw Error(fmt::format("{}: maps have different shapes", what));
}

GradedMap& GradedMap::operator+=(const GradedMap& other)
{
    check_same_shape(other, "sum");
    for (const auto& [col, v] : other.columns_)
        add_to_column(col, v, 1);
    return *this;
}

GradedMap& GradedMap::operator-=(const GradedMap& other)
{
    check_same_shape(other, "difference");
    for (const auto& [col, v] : other.columns_)
        add_to_column(col, v, -1);
    return *this;
}

GradedMap& GradedMap::operator*=(const Scalar& c)
{
    if (c == 0) {
        columns_.clear();
        return *this;
    }
    for (auto& [col, v] : columns_)
        for (auto& e : v)
            e.second *= c;
    return *this;
}

bool GradedMap::operator==(const GradedMap& other) const
{
    return source_ == other.source_ && target_ == other.target_ && degree_ == other.degree_ &&
           columns_ == other.columns_;
}

GradedMap compose(const GradedMap& g, const GradedMap& f)
{
    if (!(g.source() == f.target()))
        throw Error("compose: source of the outer map differs from target of the inner map");
    GradedMap out(f.source(), g.target(), f.degree() + g.degree());
    for (const auto& [col, v] : f.columns()) {
        auto image = g.apply(v);
        if (!image.empty())
            out.add_to_column(col, image);
    }
    return out;
}

GradedMap tensor_product(std::span<const GradedMap> factors)
{
    std::vector<GradedSpace> sources;
    std::vector<GradedSpace> targets;
    int degree = 0;
    for (const auto& f : factors) {
        sources.push_back(f.source());
        targets.push_back(f.target());
        degree += f.degree();
    }
    GradedMap out(GradedSpace::tensor(sources), GradedSpace::tensor(targets), degree);

    const std::size_t k = factors.size();
    std::vector<Index> target_dims(k);
    std::vector<Index> source_dims(k);
    for (std::size_t m = 0; m < k; ++m) {
        target_dims[m] = targets[m].dim();
        source_dims[m] = sources[m].dim();
        if (factors[m].is_zero())
            return out;
    }

    // Odometer over the nonzero columns of every factor.
    std::vector<std::map<Index, SparseVector>::const_iterator> pos(k);
    for (std::size_t m = 0; m < k; ++m)
        pos[m] = factors[m].columns().begin();

    while (true) {
        Index col = 0;
        long long sign_exp = 0;
        int prefix_degree = 0;
        for (std::size_t m = 0; m < k; ++m) {
            col = col * source_dims[m] + pos[m]->first;
            sign_exp += static_cast<long long>(factors[m].degree()) * prefix_degree;
            prefix_degree += sources[m].degree(pos[m]->first);
        }
        // Expand the product of the k column vectors.
        SparseVector acc{{0, Scalar(sign_power(sign_exp))}};
        for (std::size_t m = 0; m < k; ++m) {
            SparseVector next;
            next.reserve(acc.size() * pos[m]->second.size());
            for (const auto& [ia, xa] : acc)
                for (const auto& [ib, xb] : pos[m]->second)
                    next.emplace_back(ia * target_dims[m] + ib, xa * xb);
            acc = std::move(next);
        }
        std::sort(acc.begin(), acc.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        out.add_to_column(col, acc);

        std::size_t m = k;
        while (m-- > 0) {
            if (++pos[m] != factors[m].columns().end())
                break;
            pos[m] = factors[m].columns().begin();
        }
        if (m == static_cast<std::size_t>(-1))
            break;
    }
    return out;
}

GradedMap insert_map(const GradedSpace& base, std::size_t before, const GradedMap& f, std::size_t after)
{
    auto id = GradedMap::identity(base);
    std::vector<GradedMap> parts;
    for (std::size_t k = 0; k < before; ++k)
        parts.push_back(id);
    parts.push_back(f);
    for (std::size_t k = 0; k < after; ++k)
        parts.push_back(id);
    return tensor_product(parts);
}

GradedMap permutation_map(const GradedSpace& base, std::span<const int> sigma)
{
    const std::size_t n = sigma.size();
    auto power = GradedSpace::tensor_power(base, static_cast<int>(n));
    GradedMap out(power, power, 0);
    std::vector<std::size_t> image(n);
    for (Index col = 0; col < power.dim(); ++col) {
        auto digits = power.decode(col);
        long long swaps = 0;
        for (std::size_t p = 0; p < n; ++p) {
            image[p] = digits[sigma[p] - 1];
            for (std::size_t q = p + 1; q < n; ++q) {
                if (sigma[p] > sigma[q]) {
                    int dp = base.degree(digits[sigma[p] - 1]);
                    int dq = base.degree(digits[sigma[q] - 1]);
                    swaps += static_cast<long long>(dp) * dq;
                }
            }
        }
        out.add_to_entry(power.encode(image), col, sign_power(swaps));
    }
    return out;
}

GradedMap tensor_power_differential(const GradedMap& d, int n)
{
    auto power = GradedSpace::tensor_power(d.source(), n);
    GradedMap out(power, power, d.degree());
    for (int s = 0; s < n; ++s)
        out += insert_map(d.source(), s, d, n - s - 1);
    return out;
}

// ---------------------------------------------------------------- dense

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t k = 0; k < n; ++k)
        m(k, k) = 1;
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b)
{
    if (a.cols() != b.rows())
        throw Error("matrix product: inner dimensions differ");
    Matrix c(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(r, k) == 0)
                continue;
            for (std::size_t col = 0; col < b.cols(); ++col)
                if (b(k, col) != 0)
                    c(r, col) += a(r, k) * b(k, col);
        }
    return c;
}

RowEchelon row_reduce(Matrix m)
{
    RowEchelon out;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.rows() && m(pivot, col) == 0)
            ++pivot;
        if (pivot == m.rows())
            continue;
        if (pivot != row)
            for (std::size_t c = 0; c < m.cols(); ++c)
                std::swap(m(pivot, c), m(row, c));
        Scalar inv = 1 / m(row, col);
        for (std::size_t c = col; c < m.cols(); ++c)
            m(row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col) == 0)
                continue;
            Scalar factor = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c)
                if (m(row, c) != 0)
                    m(r, c) -= factor * m(row, c);
        }
        out.pivot_columns.push_back(col);
        ++row;
    }
    out.reduced = std::move(m);
    return out;
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivot_columns.size(); }

std::vector<std::vector<Scalar>> kernel_basis(const Matrix& m)
{
    auto ech = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : ech.pivot_columns)
        is_pivot[c] = true;
    std::vector<std::vector<Scalar>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        std::vector<Scalar> v(m.cols());
        v[free] = 1;
        for (std::size_t r = 0; r < ech.pivot_columns.size(); ++r)
            v[ech.pivot_columns[r]] = -ech.reduced(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

Matrix inverse(const Matrix& m)
{
    if (m.rows() != m.cols())
        throw Error("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c)
            aug(r, c) = m(r, c);
        aug(r, n + r) = 1;
    }
    auto ech = row_reduce(std::move(aug));
    if (ech.pivot_columns.size() < n || (n > 0 && ech.pivot_columns[n - 1] != n - 1))
        throw Error("matrix is singular");
    Matrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            inv(r, c) = ech.reduced(r, n + c);
    return inv;
}

}  // namespace hoalg::exactlin
