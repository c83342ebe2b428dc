#include "hoalg/transfer.hpp"

#include <fmt/format.h>

namespace hoalg::transfer {

using exactlin::GradedMap;
using exactlin::GradedSpace;

TransferResult transfer(const TransferProblem& problem)
{
    const auto& src = problem.source;
    const auto& c = problem.contraction;
    const int max_arity = problem.max_arity;
    if (max_arity < 1)
        throw Error("transfer: max arity must be at least 1");
    if (!(c.complex == src.space) || !(c.d == src.d))
        throw Error("transfer: the contraction is not on the source complex");
    auto check = exactlin::check_contraction(c);
    if (!check.all()) {
        std::string what;
        for (const auto& f : check.failures())
            what += (what.empty() ? "" : ", ") + f;
        throw Error(fmt::format("transfer: invalid contraction ({})", what));
    }
    auto axioms = halg::check_ainf(src, max_arity);
    if (auto n = axioms.first_failure())
        throw Error(fmt::format("transfer: the source fails the A(inf) axiom at n={}", *n));

    const auto& H = c.homology;
    std::map<int, GradedMap> phi{{1, c.i}};
    std::map<int, GradedMap> X;
    for (int n = 2; n <= max_arity; ++n) {
        GradedMap q(GradedSpace::tensor_power(H, n), src.space, n - 2);
        for (int k = 2; k <= n; ++k) {
            auto mu = src.ops.find(k);
            if (mu == src.ops.end() || mu->second.is_zero())
                continue;
            for (const auto& parts : halg::compositions(n, k)) {
                std::vector<GradedMap> factors;
                bool zero = false;
                for (int p : parts) {
                    if (phi.at(p).is_zero()) {
                        zero = true;
                        break;
                    }
                    factors.push_back(phi.at(p));
                }
                if (zero)
                    continue;
                int sign = sign_power(halg::composition_sign_exponent(parts)) * halg::rescaling_sign(k);
                q += sign * compose(mu->second, exactlin::tensor_product(factors));
            }
        }
        phi.emplace(n, Scalar(-1) * compose(c.h, q));
        auto xn = halg::rescaling_sign(n) * compose(c.p, q);
        if (!xn.is_zero())
            X.emplace(n, std::move(xn));
    }

    AInfAlgebra transferred(H, GradedMap(H, H, -1), std::move(X), max_arity);
    std::map<int, GradedMap> components;
    for (auto& [n, f] : phi)
        if (n == 1 || !f.is_zero())
            components.emplace(n, std::move(f));
    AInfMorphism morphism{transferred, src, std::move(components)};
    return {std::move(transferred), std::move(morphism)};
}

TransferResult transfer(const AInfAlgebra& source, int max_arity)
{
    return transfer(TransferProblem{source, exactlin::homology_with_contraction(source.space, source.d), max_arity});
}

TransferReport verify_transfer(const TransferResult& result, int ainf_arity, int morphism_arity)
{
    TransferReport report{halg::check_ainf(result.transferred, ainf_arity),
                          halg::check_morphism(result.morphism, morphism_arity), false};
    report.quasi_isomorphism = exactlin::induces_homology_isomorphism(result.morphism.component(1),
                                                                      result.transferred.d, result.morphism.target.d);
    return report;
}

}  // namespace hoalg::transfer
