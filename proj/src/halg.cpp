#include "hoalg/halg.hpp"

#include <fmt/format.h>

namespace hoalg::halg {

OperationFamily::OperationFamily(GradedSpace space_, GradedMap d_, std::map<int, GradedMap> ops_, int max_arity_)
    : space(std::move(space_)), d(std::move(d_)), ops(std::move(ops_)), max_arity(max_arity_)
{
    if (space.tensor_rank() != 1)
        throw Error("algebra: the underlying space must be a plain space");
    if (!(d.source() == space) || !(d.target() == space) || d.degree() != -1)
        throw Error("algebra: the differential must be a degree −1 map of the underlying space");
    if (max_arity < 1)
        throw Error("algebra: max arity must be at least 1");
    for (const auto& [n, op] : ops) {
        if (n < 2 || n > max_arity)
            throw Error(fmt::format("algebra: operation of arity {} outside 2..{}", n, max_arity));
        if (!(op.source() == GradedSpace::tensor_power(space, n)) || !(op.target() == space))
            throw Error(fmt::format("algebra: operation {} has the wrong source or target", n));
        if (op.degree() != n - 2)
            throw Error(fmt::format("algebra: operation {} has degree {}, expected {}", n, op.degree(), n - 2));
    }
}

GradedMap OperationFamily::operation(int n) const
{
    auto it = ops.find(n);
    if (it != ops.end())
        return it->second;
    return GradedMap(GradedSpace::tensor_power(space, n), space, n - 2);
}

bool AxiomReport::passed() const
{
    for (const auto& a : arities)
        if (!a.pass)
            return false;
    return true;
}

std::optional<int> AxiomReport::first_failure() const
{
    for (const auto& a : arities)
        if (!a.pass)
            return a.arity;
    return std::nullopt;
}

ArityResult residual_result(int arity, const GradedMap& residual)
{
    ArityResult r;
    r.arity = arity;
    r.pass = residual.is_zero();
    r.residual_entries = residual.nonzero_count();
    if (auto e = residual.first_nonzero())
        r.first = Residual{e->row, e->col, e->value, residual.target().name(e->row), residual.source().name(e->col)};
    return r;
}

namespace {

GradedMap bracket_impl(const OperationFamily& a, int n)
{
    auto mu = a.operation(n);
    auto out = compose(mu, exactlin::tensor_power_differential(a.d, n));
    out -= sign_power(n) * compose(a.d, mu);
    return out;
}

}  // namespace

GradedMap bracket_with_d(const OperationFamily& a, int n)
{
    if (n < 2 || n > a.max_arity)
        throw Error(fmt::format("bracket with ∂: arity {} outside 2..{}", n, a.max_arity));
    return bracket_impl(a, n);
}

GradedMap ainf_axiom_lhs(const AInfAlgebra& a, int n)
{
    GradedMap out(GradedSpace::tensor_power(a.space, n), a.space, n - 3);
    for (int j = 2; j <= n - 1; ++j) {
        int i = n + 1 - j;
        auto mu_j = a.operation(j);
        auto mu_i = a.operation(i);
        if (mu_i.is_zero() || mu_j.is_zero())
            continue;
        for (int s = 0; s <= n - j; ++s) {
            auto inner = exactlin::insert_map(a.space, s, mu_j, n - j - s);
            out += sign_power(j + s * (j + 1)) * compose(mu_i, inner);
        }
    }
    return out;
}

AxiomReport check_ainf(const AInfAlgebra& a) { return check_ainf(a, a.max_arity); }

AxiomReport check_ainf(const AInfAlgebra& a, int max_arity)
{
    AxiomReport report{"ainf", max_arity, {}};
    for (int n = 1; n <= max_arity; ++n) {
        if (n == 1) {
            report.arities.push_back(residual_result(1, compose(a.d, a.d)));
            continue;
        }
        report.arities.push_back(residual_result(n, ainf_axiom_lhs(a, n) - bracket_impl(a, n)));
    }
    return report;
}

GradedMap linf_axiom_lhs(const LInfAlgebra& l, int n)
{
    GradedMap out(GradedSpace::tensor_power(l.space, n), l.space, n - 3);
    for (int i = 2; i <= n - 1; ++i) {
        int j = n + 1 - i;
        auto l_i = l.operation(i);
        auto l_j = l.operation(j);
        if (l_i.is_zero() || l_j.is_zero())
            continue;
        auto outer = compose(l_j, exactlin::insert_map(l.space, 0, l_i, n - i));
        const std::vector<int> zeros(n, 0);
        for (const auto& u : trees::unshuffles(i, n)) {
            int sgn = trees::koszul_sign(u.sigma, zeros).signature;
            auto term = compose(outer, exactlin::permutation_map(l.space, u.sigma));
            out += (sgn * sign_power(i * (j - 1))) * term;
        }
    }
    return out;
}

std::optional<int> antisymmetry_violation(const LInfAlgebra& l, int n)
{
    auto op = l.operation(n);
    if (op.is_zero())
        return std::nullopt;
    for (int k = 1; k < n; ++k) {
        std::vector<int> tau(n);
        for (int m = 0; m < n; ++m)
            tau[m] = m + 1;
        std::swap(tau[k - 1], tau[k]);
        auto swapped = compose(op, exactlin::permutation_map(l.space, tau));
        if (!(swapped + op).is_zero())
            return k;
    }
    return std::nullopt;
}

AxiomReport check_linf(const LInfAlgebra& l) { return check_linf(l, l.max_arity); }

AxiomReport check_linf(const LInfAlgebra& l, int max_arity)
{
    AxiomReport report{"linf", max_arity, {}};
    for (int n = 1; n <= max_arity; ++n) {
        if (n == 1) {
            report.arities.push_back(residual_result(1, compose(l.d, l.d)));
            continue;
        }
        if (auto k = antisymmetry_violation(l, n)) {
            ArityResult r;
            r.arity = n;
            r.note = fmt::format("l{} is not antisymmetric in inputs {} and {}", n, *k, *k + 1);
            report.arities.push_back(std::move(r));
            continue;
        }
        auto residual = linf_axiom_lhs(l, n) - sign_power(n) * bracket_impl(l, n);
        report.arities.push_back(residual_result(n, residual));
    }
    return report;
}

// ---------------------------------------------------------------- action

namespace {

struct Partial {
    SparseVector value;
    int arg_degree = 0;
    int tree_degree = 0;
};

Partial evaluate_node(const std::vector<trees::Node>& nodes, std::size_t& pos, std::span<const Index> args,
                      std::size_t& next_arg, const OperationFamily& a)
{
    const auto& node = nodes[pos++];
    if (node.is_leaf()) {
        Index idx = args[next_arg++];
        return {{{idx, Scalar(1)}}, a.space.degree(idx), 0};
    }
    if (node.degree != node.arity - 2)
        throw Error(fmt::format("vertex {} has degree {}, the algebra's operation has degree {}",
                                trees::vertex_name(node), node.degree, node.arity - 2));

    Partial out;
    out.tree_degree = node.degree;
    SparseVector tensor{{0, Scalar(1)}};
    const Index dim = a.space.dim();
    long long sign_exp = 0;
    for (int k = 0; k < node.arity; ++k) {
        auto part = evaluate_node(nodes, pos, args, next_arg, a);
        sign_exp += static_cast<long long>(part.tree_degree) * out.arg_degree;
        out.arg_degree += part.arg_degree;
        out.tree_degree += part.tree_degree;
        exactlin::VectorBuilder next;
        for (const auto& [i, x] : tensor)
            for (const auto& [j, y] : part.value)
                next.add(i * dim + j, x * y);
        tensor = next.take();
    }
    auto op = a.ops.find(node.arity);
    if (op == a.ops.end() || tensor.empty())
        return out;
    out.value = exactlin::scaled(op->second.apply(tensor), sign_power(sign_exp));
    return out;
}

}  // namespace

SparseVector evaluate_action(const operad::FreeElement& x, const OperationFamily& a, std::span<const Index> args)
{
    exactlin::VectorBuilder out;
    if (x.is_zero())
        return out.take();
    if (static_cast<std::size_t>(*x.arity()) != args.size())
        throw Error(fmt::format("evaluate: element of arity {} given {} arguments", *x.arity(), args.size()));
    std::vector<int> degrees;
    for (auto idx : args)
        degrees.push_back(a.space.degree(idx));
    for (const auto& [tree, c] : x.terms()) {
        const auto& labels = tree.labels();
        std::vector<Index> permuted;
        for (int lbl : labels)
            permuted.push_back(args[lbl - 1]);
        int koszul = trees::koszul_sign(labels, degrees).koszul;
        std::size_t pos = 0;
        std::size_t next_arg = 0;
        auto part = evaluate_node(tree.nodes(), pos, permuted, next_arg, a);
        out.add(part.value, c * koszul);
    }
    return out.take();
}

GradedMap action_map(const operad::FreeElement& x, const OperationFamily& a)
{
    if (x.is_zero())
        throw Error("action map of the zero element has no arity");
    int n = *x.arity();
    auto power = GradedSpace::tensor_power(a.space, n);
    GradedMap out(power, a.space, *x.degree());
    for (Index col = 0; col < power.dim(); ++col) {
        auto digits = power.decode(col);
        std::vector<Index> args(digits.begin(), digits.end());
        auto v = evaluate_action(x, a, args);
        if (!v.empty())
            out.add_to_column(col, v);
    }
    return out;
}

}  // namespace hoalg::halg
