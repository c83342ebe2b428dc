#include "hoalg/operad.hpp"

#include <fmt/format.h>

namespace hoalg::operad {

// --------------------------------------------------------- free elements

void FreeElement::add(const DecoratedTree& tree, const Scalar& c)
{
    if (c == 0)
        return;
    if (!terms_.empty()) {
        const auto& first = terms_.begin()->first;
        if (first.leaf_count() != tree.leaf_count())
            throw Error("free element: trees with different leaf counts");
        if (first.degree() != tree.degree())
            throw Error("free element: trees with different degrees");
    }
    auto [it, inserted] = terms_.try_emplace(tree, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Scalar FreeElement::coefficient(const DecoratedTree& t) const
{
    auto it = terms_.find(t);
    return it == terms_.end() ? Scalar(0) : it->second;
}

std::optional<int> FreeElement::arity() const
{
    if (terms_.empty())
        return std::nullopt;
    return terms_.begin()->first.leaf_count();
}

std::optional<int> FreeElement::degree() const
{
    if (terms_.empty())
        return std::nullopt;
    return terms_.begin()->first.degree();
}

FreeElement& FreeElement::operator+=(const FreeElement& other)
{
    for (const auto& [t, c] : other.terms_)
        add(t, c);
    return *this;
}

FreeElement& FreeElement::operator-=(const FreeElement& other)
{
    for (const auto& [t, c] : other.terms_)
        add(t, -c);
    return *this;
}

FreeElement& FreeElement::operator*=(const Scalar& c)
{
    if (c == 0)
        terms_.clear();
    for (auto& [t, x] : terms_)
        x *= c;
    return *this;
}

FreeElement corolla_element(const Generator& g)
{
    FreeElement x;
    x.add(DecoratedTree::corolla(g), 1);
    return x;
}

std::string to_string(Family f) { return f == Family::ainf ? "ainf" : "linf"; }

Family parse_family(const std::string& name)
{
    if (name == "ainf")
        return Family::ainf;
    if (name == "linf")
        return Family::linf;
    throw Error(fmt::format("unknown family '{}' (expected ainf or linf)", name));
}

// ---------------------------------------------------------------- operad

DgFreeOperad::DgFreeOperad(std::string name, std::vector<Generator> generators, std::vector<FreeElement> differentials)
    : name_(std::move(name)), generators_(std::move(generators)), differentials_(std::move(differentials))
{
    if (generators_.size() != differentials_.size())
        throw Error("operad: one differential per generator is required");
    for (std::size_t k = 0; k < generators_.size(); ++k) {
        const auto& g = generators_[k];
        if (g.id != static_cast<int>(k))
            throw Error(fmt::format("operad: generator at position {} has id {}", k, g.id));
        const auto& dg = differentials_[k];
        if (dg.is_zero())
            continue;
        if (*dg.arity() != g.arity)
            throw Error(fmt::format("operad: ∂ of generator {} has {} leaves, expected {}", k, *dg.arity(), g.arity));
        if (*dg.degree() != g.degree - 1)
            throw Error(fmt::format("operad: ∂ of generator {} has degree {}, expected {}", k, *dg.degree(),
                                    g.degree - 1));
    }
}

const Generator& DgFreeOperad::generator(int id) const
{
    if (id < 0 || id >= static_cast<int>(generators_.size()))
        throw Error(fmt::format("operad '{}' has no generator {}", name_, id));
    return generators_[id];
}

const FreeElement& DgFreeOperad::differential(int id) const
{
    generator(id);
    return differentials_[id];
}

int DgFreeOperad::max_arity() const
{
    int m = 1;
    for (const auto& g : generators_)
        m = std::max(m, g.arity);
    return m;
}

DgFreeOperad DgFreeOperad::with_differential(int id, FreeElement value) const
{
    generator(id);
    auto diffs = differentials_;
    diffs[id] = std::move(value);
    return DgFreeOperad(name_, generators_, std::move(diffs));
}

Generator family_generator(Family f, int arity)
{
    return {arity - 2, arity, arity - 2, f == Family::ainf ? Symmetry::planar : Symmetry::antisymmetric};
}

FreeElement ainf_generator_diff(int n)
{
    if (n < 2)
        throw Error(fmt::format("A(∞) generator arity {} (must be at least 2)", n));
    FreeElement out;
    for (int j = 2; j <= n - 1; ++j) {
        int i = n + 1 - j;
        auto outer = DecoratedTree::corolla(family_generator(Family::ainf, i));
        auto inner = DecoratedTree::corolla(family_generator(Family::ainf, j));
        for (int s = 0; s <= n - j; ++s)
            out.add(trees::graft(outer, s + 1, inner), sign_power(j + s * (j + 1)));
    }
    return out;
}

FreeElement linf_generator_diff(int n)
{
    if (n < 2)
        throw Error(fmt::format("L(∞) generator arity {} (must be at least 2)", n));
    FreeElement out;
    const std::vector<int> leaf_degrees(n, 0);
    for (int i = 2; i <= n - 1; ++i) {
        int j = n + 1 - i;
        auto outer = family_generator(Family::linf, j);
        auto inner = family_generator(Family::linf, i);
        for (const auto& u : trees::unshuffles(i, n)) {
            // l_j(l_i(σ(1..i)), σ(i+1..n)) written out in preorder
            std::vector<trees::Node> nodes{{outer.id, outer.arity, outer.degree, outer.symmetry},
                                           {inner.id, inner.arity, inner.degree, inner.symmetry}};
            nodes.resize(2 + n);
            auto chi = trees::koszul_sign(u.sigma, leaf_degrees).chi;
            auto t = trees::canonical_form(DecoratedTree(std::move(nodes), u.sigma));
            out.add(t, sign_power(n) * chi * sign_power(i * (j - 1)));
        }
    }
    return out;
}

FreeElement generator_diff(Family f, int n) { return f == Family::ainf ? ainf_generator_diff(n) : linf_generator_diff(n); }

DgFreeOperad family_operad(Family f, int max_arity)
{
    if (max_arity < 2)
        throw Error("operad: max arity must be at least 2");
    std::vector<Generator> gens;
    std::vector<FreeElement> diffs;
    for (int n = 2; n <= max_arity; ++n) {
        gens.push_back(family_generator(f, n));
        diffs.push_back(generator_diff(f, n));
    }
    return DgFreeOperad(f == Family::ainf ? "A(inf)" : "L(inf)", std::move(gens), std::move(diffs));
}

DgFreeOperad ainf_operad(int max_arity) { return family_operad(Family::ainf, max_arity); }
DgFreeOperad linf_operad(int max_arity) { return family_operad(Family::linf, max_arity); }

// ------------------------------------------------------------ derivation

FreeElement extend_derivation(const DgFreeOperad& op, const FreeElement& x)
{
    FreeElement out;
    for (const auto& [tree, c] : x.terms()) {
        auto verts = tree.vertices();
        std::vector<int> suffix_degree(verts.size() + 1, 0);
        for (std::size_t k = verts.size(); k-- > 0;)
            suffix_degree[k] = suffix_degree[k + 1] + verts[k].degree;
        for (std::size_t k = 0; k < verts.size(); ++k) {
            const auto& g = op.generator(verts[k].generator);
            if (g.arity != verts[k].arity || g.degree != verts[k].degree || g.symmetry != verts[k].symmetry)
                throw Error(fmt::format("tree vertex {} does not match generator {} of '{}'",
                                        trees::vertex_name(verts[k]), g.id, op.name()));
            Scalar right = c * sign_power(suffix_degree[k + 1]);
            for (const auto& [piece, cp] : op.differential(g.id).terms())
                out.add(trees::substitute_vertex(tree, k, piece), right * cp);
        }
    }
    return out;
}

bool DSquaredReport::passed() const
{
    for (const auto& e : entries)
        if (!e.pass())
            return false;
    return true;
}

std::size_t DSquaredReport::residual_terms() const
{
    std::size_t n = 0;
    for (const auto& e : entries)
        n += e.residual.size();
    return n;
}

DSquaredReport check_d_squared(const DgFreeOperad& op, int max_arity)
{
    DSquaredReport report{op.name(), max_arity, {}};
    for (const auto& g : op.generators()) {
        if (g.arity > max_arity)
            continue;
        report.entries.push_back({g.id, g.arity, extend_derivation(op, op.differential(g.id))});
    }
    return report;
}

bool is_minimal(const DgFreeOperad& op)
{
    for (const auto& g : op.generators())
        for (const auto& [t, c] : op.differential(g.id).terms())
            if (t.vertex_count() < 2)
                return false;
    return true;
}

// -------------------------------------------------------------- homology

std::vector<DecoratedTree> arity_basis(const DgFreeOperad& op, int n)
{
    std::vector<Generator> usable;
    bool planar = false;
    bool antisymmetric = false;
    for (const auto& g : op.generators()) {
        if (g.arity > n)
            continue;
        usable.push_back(g);
        (g.symmetry == Symmetry::planar ? planar : antisymmetric) = true;
    }
    if (planar && antisymmetric)
        throw Error("arity basis: mixed planar and antisymmetric generators are not supported");
    return antisymmetric ? trees::enumerate_labeled_trees(n, usable) : trees::enumerate_trees(n, usable);
}

std::vector<BettiNumber> arity_homology(const DgFreeOperad& op, int n)
{
    if (op.max_arity() < n)
        throw Error(fmt::format("operad '{}' only has generators up to arity {}", op.name(), op.max_arity()));
    std::map<int, std::vector<DecoratedTree>> by_degree;
    for (auto& t : arity_basis(op, n))
        by_degree[t.degree()].push_back(std::move(t));

    std::map<int, std::size_t> boundary_rank;  // rank of ∂ leaving each degree
    for (const auto& [deg, basis] : by_degree) {
        auto below = by_degree.find(deg - 1);
        if (below == by_degree.end())
            continue;
        std::map<DecoratedTree, std::size_t> row_of;
        for (std::size_t r = 0; r < below->second.size(); ++r)
            row_of.emplace(below->second[r], r);
        exactlin::Matrix m(below->second.size(), basis.size());
        for (std::size_t c = 0; c < basis.size(); ++c) {
            FreeElement x;
            x.add(basis[c], 1);
            auto dx = extend_derivation(op, x);
            for (const auto& [t, coeff] : dx.terms())
                m(row_of.at(t), c) = coeff;
        }
        boundary_rank[deg] = exactlin::rank(m);
    }
    std::vector<BettiNumber> out;
    for (const auto& [deg, basis] : by_degree) {
        std::size_t out_rank = boundary_rank.count(deg) ? boundary_rank[deg] : 0;
        std::size_t in_rank = boundary_rank.count(deg + 1) ? boundary_rank[deg + 1] : 0;
        out.push_back({deg, basis.size() - out_rank - in_rank});
    }
    return out;
}

}  // namespace hoalg::operad
