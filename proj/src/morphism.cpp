#include "hoalg/halg.hpp"

#include <fmt/format.h>

namespace hoalg::halg {

GradedMap AInfMorphism::component(int n) const
{
    auto it = components.find(n);
    if (it != components.end())
        return it->second;
    return GradedMap(GradedSpace::tensor_power(source.space, n), target.space, n - 1);
}

int rescaling_sign(int k) { return sign_power(static_cast<long long>(k - 1) * (k - 2) / 2); }

long long composition_sign_exponent(std::span<const int> parts)
{
    long long k = static_cast<long long>(parts.size());
    long long w = 0;
    for (long long l = 1; l < k; ++l)
        w += (k - l) * (parts[l - 1] - 1);
    return w;
}

namespace {

void compose_parts(int n, int k, std::vector<int>& prefix, std::vector<std::vector<int>>& out)
{
    if (k == 1) {
        prefix.push_back(n);
        out.push_back(prefix);
        prefix.pop_back();
        return;
    }
    for (int first = 1; first <= n - k + 1; ++first) {
        prefix.push_back(first);
        compose_parts(n - first, k - 1, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<std::vector<int>> compositions(int n, int k)
{
    std::vector<std::vector<int>> out;
    if (k < 1 || n < k)
        return out;
    std::vector<int> prefix;
    compose_parts(n, k, prefix, out);
    return out;
}

namespace {

// μ'_k ∘ Σ_{i_1+…+i_k=n} (−1)^w (f_{i_1} ⊗ … ⊗ f_{i_k}), with μ'_1 the given unary map.
GradedMap tree_sum(const GradedMap& unary, const std::map<int, GradedMap>& outer_ops,
                   const std::map<int, GradedMap>& inner, const GradedSpace& source, const GradedSpace& target, int n,
                   int degree, bool rescale)
{
    GradedMap out(GradedSpace::tensor_power(source, n), target, degree);
    for (int k = 1; k <= n; ++k) {
        const GradedMap* g = nullptr;
        if (k == 1) {
            g = &unary;
        } else {
            auto it = outer_ops.find(k);
            if (it == outer_ops.end())
                continue;
            g = &it->second;
        }
        if (g->is_zero())
            continue;
        for (const auto& parts : compositions(n, k)) {
            std::vector<GradedMap> factors;
            bool zero = false;
            for (int p : parts) {
                auto it = inner.find(p);
                if (it == inner.end() || it->second.is_zero()) {
                    zero = true;
                    break;
                }
                factors.push_back(it->second);
            }
            if (zero)
                continue;
            int sign = sign_power(composition_sign_exponent(parts)) * (rescale ? rescaling_sign(k) : 1);
            out += sign * compose(*g, exactlin::tensor_product(factors));
        }
    }
    return out;
}

}  // namespace

AxiomReport check_morphism(const AInfMorphism& f, int max_arity)
{
    AxiomReport report{"morphism", max_arity, {}};
    const auto& src = f.source;
    for (int n = 1; n <= max_arity; ++n) {
        GradedMap lhs(GradedSpace::tensor_power(src.space, n), f.target.space, n - 2);
        for (int s = 1; s <= n; ++s) {
            auto mu = s == 1 ? src.d : src.operation(s);
            if (mu.is_zero())
                continue;
            for (int r = 0; r + s <= n; ++r) {
                int t = n - s - r;
                auto fk = f.component(r + 1 + t);
                if (fk.is_zero())
                    continue;
                int sign = sign_power(r + s * t) * (s == 1 ? 1 : rescaling_sign(s));
                lhs += sign * compose(fk, exactlin::insert_map(src.space, r, mu, t));
            }
        }
        auto rhs = tree_sum(f.target.d, f.target.ops, f.components, src.space, f.target.space, n, n - 2, true);
        report.arities.push_back(residual_result(n, lhs - rhs));
    }
    return report;
}

AInfMorphism identity_morphism(const AInfAlgebra& a)
{
    return AInfMorphism{a, a, {{1, GradedMap::identity(a.space)}}};
}

AInfMorphism compose_morphisms(const AInfMorphism& g, const AInfMorphism& f)
{
    if (!(f.target.space == g.source.space))
        throw Error("compose morphisms: target of the first differs from source of the second");
    AInfMorphism out{f.source, g.target, {}};
    int limit = std::min(f.source.max_arity, g.target.max_arity);
    std::map<int, GradedMap> outer;
    for (const auto& [k, gk] : g.components)
        if (k >= 2)
            outer.emplace(k, gk);
    for (int n = 1; n <= limit; ++n) {
        auto comp = tree_sum(g.component(1), outer, f.components, f.source.space, g.target.space, n, n - 1, false);
        if (!comp.is_zero())
            out.components.emplace(n, std::move(comp));
    }
    return out;
}

}  // namespace hoalg::halg
