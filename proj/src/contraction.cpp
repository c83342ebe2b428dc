#include "hoalg/contraction.hpp"

#include <fmt/format.h>

#include <map>

namespace hoalg::exactlin {

namespace {

using Column = std::vector<Scalar>;

struct DegreePiece {
    std::vector<Index> basis;           // indices into the complex, increasing
    std::vector<std::size_t> pivots;    // W: positions (in basis) of columns chosen as a complement of ker d
    std::vector<Column> homology;       // H: cycle representatives in local coordinates
    std::vector<std::size_t> homology_lead;
};

Matrix block(const GradedMap& d, const std::vector<Index>& rows, const std::vector<Index>& cols)
{
    Matrix m(rows.size(), cols.size());
    std::map<Index, std::size_t> row_pos;
    for (std::size_t r = 0; r < rows.size(); ++r)
        row_pos[rows[r]] = r;
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (const auto& [row, x] : d.column(cols[c]))
            m(row_pos.at(row), c) = x;
    return m;
}

Matrix dense(const GradedMap& f)
{
    Matrix m(f.target().dim(), f.source().dim());
    for (const auto& [col, v] : f.columns())
        for (const auto& [row, x] : v)
            m(row, col) = x;
    return m;
}

}  // namespace

Contraction homology_with_contraction(const GradedSpace& space, const GradedMap& d)
{
    if (!(d.source() == space) || !(d.target() == space))
        throw Error("differential must be an endomorphism of the given space");
    if (d.degree() != -1)
        throw Error(fmt::format("differential has degree {}, expected -1", d.degree()));
    if (auto bad = compose(d, d).first_nonzero())
        throw Error(fmt::format("d∘d ≠ 0: entry ({}, {}) = {}", space.name(bad->row), space.name(bad->col),
                                to_string(bad->value)));

    std::map<int, DegreePiece> pieces;
    for (Index k = 0; k < space.dim(); ++k)
        pieces[space.degree(k)].basis.push_back(k);

    auto basis_of = [&](int deg) -> const std::vector<Index>& {
        static const std::vector<Index> none;
        auto it = pieces.find(deg);
        return it == pieces.end() ? none : it->second.basis;
    };

    // Complement of the cycles: pivot columns of d restricted to each degree.
    std::map<int, Matrix> dmat;
    for (auto& [deg, piece] : pieces) {
        dmat[deg] = block(d, basis_of(deg - 1), piece.basis);
        piece.pivots = row_reduce(dmat[deg]).pivot_columns;
    }

    // Boundaries d(W_{k+1}), then a complement of them inside the cycles.
    std::map<int, std::vector<Column>> boundaries;
    for (auto& [deg, piece] : pieces) {
        auto& bnd = boundaries[deg];
        if (auto up = pieces.find(deg + 1); up != pieces.end()) {
            const Matrix& m = dmat[deg + 1];
            for (auto c : up->second.pivots) {
                Column v(piece.basis.size());
                for (std::size_t r = 0; r < piece.basis.size(); ++r)
                    v[r] = m(r, c);
                bnd.push_back(std::move(v));
            }
        }
        std::vector<Column> chosen = bnd;
        auto current_rank = chosen.size();
        std::vector<std::size_t> free_columns;
        for (std::size_t col = 0, k = 0; col < piece.basis.size(); ++col) {
            if (k < piece.pivots.size() && piece.pivots[k] == col)
                ++k;
            else
                free_columns.push_back(col);
        }
        auto cycles = kernel_basis(dmat[deg]);
        for (std::size_t idx = 0; idx < cycles.size(); ++idx) {
            chosen.push_back(cycles[idx]);
            Matrix test(piece.basis.size(), chosen.size());
            for (std::size_t c = 0; c < chosen.size(); ++c)
                for (std::size_t r = 0; r < piece.basis.size(); ++r)
                    test(r, c) = chosen[c][r];
            if (rank(test) > current_rank) {
                ++current_rank;
                piece.homology.push_back(cycles[idx]);
                piece.homology_lead.push_back(free_columns[idx]);
            } else {
                chosen.pop_back();
            }
        }
    }

    std::vector<BasisElement> hbasis;
    std::vector<std::pair<int, std::size_t>> hsource;  // (degree, position in piece.homology)
    for (auto& [deg, piece] : pieces) {
        for (std::size_t m = 0; m < piece.homology.size(); ++m) {
            const auto& z = piece.homology[m];
            std::size_t nonzeros = 0;
            for (const auto& x : z)
                nonzeros += (x != 0);
            const auto& base = space.basis()[piece.basis[piece.homology_lead[m]]].name;
            bool plain = nonzeros == 1 && z[piece.homology_lead[m]] == 1;
            hbasis.push_back({plain ? base : "[" + base + "]", deg});
            hsource.emplace_back(deg, m);
        }
    }
    GradedSpace homology(hbasis);

    Contraction c{space, d, homology, GradedMap(space, homology, 0), GradedMap(homology, space, 0),
                  GradedMap(space, space, 1)};

    std::map<std::pair<int, std::size_t>, Index> hindex;
    for (Index k = 0; k < hsource.size(); ++k) {
        hindex[hsource[k]] = k;
        const auto& [deg, m] = hsource[k];
        const auto& piece = pieces[deg];
        for (std::size_t r = 0; r < piece.basis.size(); ++r)
            if (piece.homology[m][r] != 0)
                c.i.add_to_entry(piece.basis[r], k, piece.homology[m][r]);
    }

    // Change of basis [B | H | W] in each degree; read p and h off its inverse.
    for (auto& [deg, piece] : pieces) {
        const auto n = piece.basis.size();
        const auto& bnd = boundaries[deg];
        Matrix change(n, n);
        std::size_t col = 0;
        for (const auto& v : bnd) {
            for (std::size_t r = 0; r < n; ++r)
                change(r, col) = v[r];
            ++col;
        }
        for (const auto& z : piece.homology) {
            for (std::size_t r = 0; r < n; ++r)
                change(r, col) = z[r];
            ++col;
        }
        for (auto pc : piece.pivots)
            change(pc, col++) = 1;
        if (col != n)
            throw Error(fmt::format("internal: splitting in degree {} has {} vectors for dimension {}", deg, col, n));
        Matrix coords = inverse(change);

        const auto* upper = pieces.count(deg + 1) ? &pieces[deg + 1] : nullptr;
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t b = 0; b < bnd.size(); ++b)
                if (coords(b, j) != 0)
                    c.h.add_to_entry(upper->basis[upper->pivots[b]], piece.basis[j], coords(b, j));
            for (std::size_t m = 0; m < piece.homology.size(); ++m)
                if (coords(bnd.size() + m, j) != 0)
                    c.p.add_to_entry(hindex.at({deg, m}), piece.basis[j], coords(bnd.size() + m, j));
        }
    }
    return c;
}

std::vector<std::string> ContractionCheck::failures() const
{
    std::vector<std::string> out;
    if (!d_squared_zero)
        out.emplace_back("d∘d = 0");
    if (!chain_maps)
        out.emplace_back("p and i are chain maps");
    if (!retraction)
        out.emplace_back("p∘i = id");
    if (!homotopy)
        out.emplace_back("d∘h + h∘d + i∘p = id");
    if (!h_squared_zero)
        out.emplace_back("h∘h = 0");
    if (!p_h_zero)
        out.emplace_back("p∘h = 0");
    if (!h_i_zero)
        out.emplace_back("h∘i = 0");
    return out;
}

ContractionCheck check_contraction(const Contraction& c)
{
    ContractionCheck r;
    r.d_squared_zero = compose(c.d, c.d).is_zero();
    r.chain_maps = compose(c.d, c.i).is_zero() && compose(c.p, c.d).is_zero();
    r.retraction = compose(c.p, c.i) == GradedMap::identity(c.homology);
    r.homotopy = compose(c.d, c.h) + compose(c.h, c.d) + compose(c.i, c.p) == GradedMap::identity(c.complex);
    r.h_squared_zero = compose(c.h, c.h).is_zero();
    r.p_h_zero = compose(c.p, c.h).is_zero();
    r.h_i_zero = compose(c.h, c.i).is_zero();
    return r;
}

bool induces_homology_isomorphism(const GradedMap& f, const GradedMap& d_source, const GradedMap& d_target)
{
    if (f.degree() != 0)
        return false;
    if (!(compose(d_target, f) == compose(f, d_source)))
        return false;
    auto src = homology_with_contraction(d_source.source(), d_source);
    auto tgt = homology_with_contraction(d_target.source(), d_target);
    auto induced = compose(tgt.p, compose(f, src.i));
    auto n = src.homology.dim();
    if (tgt.homology.dim() != n)
        return false;
    return rank(dense(induced)) == n;
}

}  // namespace hoalg::exactlin
