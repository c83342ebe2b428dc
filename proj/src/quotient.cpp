#include "hoalg/operad.hpp"

#include <fmt/format.h>

#include <algorithm>

namespace hoalg::operad {

namespace {

Symmetry symmetry_of(Presentation p) { return p == Presentation::ass ? Symmetry::planar : Symmetry::antisymmetric; }

std::vector<DecoratedTree> trees_over(Presentation p, int n, std::span<const Generator> gens)
{
    if (p == Presentation::ass)
        return trees::enumerate_trees(n, gens);
    return trees::enumerate_labeled_trees(n, gens);
}

FreeElement relator(Presentation p) { return p == Presentation::ass ? ainf_generator_diff(3) : linf_generator_diff(3); }

}  // namespace

QuotientSpace quotient_arity_space(Presentation presentation, int n, int cap)
{
    if (n < 1)
        throw Error(fmt::format("quotient: arity {} (must be at least 1)", n));
    if (n > cap)
        throw Error(fmt::format("quotient: arity {} exceeds the cap {}", n, cap));

    const Generator binary{0, 2, 0, symmetry_of(presentation)};
    const Generator ternary{1, 3, 0, symmetry_of(presentation)};

    QuotientSpace q;
    q.presentation = presentation;
    q.arity = n;
    if (n == 1)
        q.trees = {DecoratedTree()};
    else
        q.trees = trees_over(presentation, n, std::span(&binary, 1));

    std::map<DecoratedTree, std::size_t> column_of;
    std::vector<exactlin::BasisElement> span_basis;
    for (std::size_t k = 0; k < q.trees.size(); ++k) {
        column_of.emplace(q.trees[k], k);
        span_basis.push_back({trees::to_expression(q.trees[k]), 0});
    }
    q.tree_span = exactlin::GradedSpace(span_basis);

    std::vector<std::vector<Scalar>> rows;
    if (n >= 3) {
        const Generator both[] = {binary, ternary};
        const auto rel = relator(presentation);
        for (const auto& t : trees_over(presentation, n, both)) {
            auto verts = t.vertices();
            auto ternaries = std::count_if(verts.begin(), verts.end(), [](const auto& v) { return v.arity == 3; });
            if (ternaries != 1)
                continue;
            std::size_t at = std::find_if(verts.begin(), verts.end(), [](const auto& v) { return v.arity == 3; }) -
                             verts.begin();
            std::vector<Scalar> row(q.trees.size());
            for (const auto& [piece, c] : rel.terms()) {
                auto s = trees::substitute_vertex(t, at, piece);
                row[column_of.at(s.tree)] += c * s.sign;
            }
            rows.push_back(std::move(row));
        }
    }

    exactlin::Matrix m(rows.size(), q.trees.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < q.trees.size(); ++c)
            m(r, c) = rows[r][c];
    auto ech = exactlin::row_reduce(m);

    std::vector<bool> is_pivot(q.trees.size(), false);
    for (auto c : ech.pivot_columns)
        is_pivot[c] = true;
    std::vector<std::size_t> class_of(q.trees.size(), 0);
    std::vector<exactlin::BasisElement> classes;
    for (std::size_t c = 0; c < q.trees.size(); ++c) {
        if (is_pivot[c])
            continue;
        class_of[c] = classes.size();
        classes.push_back({span_basis[c].name, 0});
    }
    q.quotient = exactlin::GradedSpace(classes);
    q.projection = exactlin::GradedMap(q.tree_span, q.quotient, 0);
    for (std::size_t c = 0; c < q.trees.size(); ++c)
        if (!is_pivot[c])
            q.projection.add_to_entry(class_of[c], c, 1);
    // A pivot tree equals minus the free part of its reduced relation.
    for (std::size_t r = 0; r < ech.pivot_columns.size(); ++r) {
        std::size_t p = ech.pivot_columns[r];
        for (std::size_t c = 0; c < q.trees.size(); ++c)
            if (!is_pivot[c] && ech.reduced(r, c) != 0)
                q.projection.add_to_entry(class_of[c], p, -ech.reduced(r, c));
    }
    return q;
}

exactlin::SparseVector alpha_map(const QuotientSpace& q, const FreeElement& x)
{
    exactlin::VectorBuilder out;
    if (x.is_zero() || *x.degree() != 0)
        return out.take();
    if (*x.arity() != q.arity)
        throw Error(fmt::format("alpha: element of arity {} against a quotient of arity {}", *x.arity(), q.arity));
    for (const auto& [t, c] : x.terms()) {
        auto verts = t.vertices();
        if (std::any_of(verts.begin(), verts.end(), [](const auto& v) { return v.arity >= 3; }))
            continue;
        auto it = std::find(q.trees.begin(), q.trees.end(), t);
        if (it == q.trees.end())
            throw Error(fmt::format("alpha: tree {} is not a binary tree of the presentation", trees::to_expression(t)));
        out.add(q.projection.column(static_cast<exactlin::Index>(it - q.trees.begin())), c);
    }
    return out.take();
}

exactlin::SparseVector alpha_map(Presentation presentation, const FreeElement& x)
{
    if (x.is_zero())
        return {};
    return alpha_map(quotient_arity_space(presentation, *x.arity(), std::max(5, *x.arity())), x);
}

}  // namespace hoalg::operad
