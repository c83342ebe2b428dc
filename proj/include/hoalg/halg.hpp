#pragma once

// A(∞) and L(∞) structures on finite-dimensional complexes, their axiom
// checkers, evaluation of free-operad elements, and A(∞)-morphisms.
//
// Grading is homological: |∂| = −1, |μ_n| = |l_n| = n − 2 and a morphism
// component f_n has degree n − 1.

#include "hoalg/exactlin.hpp"
#include "hoalg/operad.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hoalg::halg {

using exactlin::GradedMap;
using exactlin::GradedSpace;
using exactlin::Index;
using exactlin::SparseVector;

/// A complex with operations ops[n]: space^{⊗n} → space for 2 ≤ n ≤ max_arity.
/// Missing arities are zero.
struct OperationFamily {
    GradedSpace space;
    GradedMap d;
    std::map<int, GradedMap> ops;
    int max_arity = 2;

    OperationFamily(GradedSpace space, GradedMap d, std::map<int, GradedMap> ops, int max_arity);

    /// ops[n] or the zero map of the right shape.
    GradedMap operation(int n) const;
    bool has_operation(int n) const { return ops.count(n) != 0; }
};

struct AInfAlgebra : OperationFamily {
    using OperationFamily::OperationFamily;
};

struct LInfAlgebra : OperationFamily {
    using OperationFamily::OperationFamily;
};

struct Residual {
    Index row = 0;
    Index col = 0;
    Scalar value;
    std::string row_name;
    std::string col_name;
};

struct ArityResult {
    int arity = 0;
    bool pass = false;
    std::size_t residual_entries = 0;
    std::optional<Residual> first;
    std::string note;  // set when a failure is not an axiom residual
};

struct AxiomReport {
    std::string check;
    int max_arity = 0;
    std::vector<ArityResult> arities;

    bool passed() const;
    std::optional<int> first_failure() const;
};

ArityResult residual_result(int arity, const GradedMap& residual);

/// [μ_n,∂] = μ_n ∘ ∂_{⊗n} − (−1)^n ∂ ∘ μ_n, where ∂_{⊗n} carries the
/// Koszul sign (−1)^{|a_1|+…+|a_{s−1}|} on its s-th summand.
GradedMap bracket_with_d(const OperationFamily& a, int n);

/// Σ_{i+j=n+1} Σ_s (−1)^{j+s(j+1)} μ_i ∘ (id^{⊗s} ⊗ μ_j ⊗ id^{⊗(n−j−s)}). The
/// Koszul part (−1)^{j(|a_1|+…+|a_s|)} of the sign comes from the tensor
/// product of maps.
GradedMap ainf_axiom_lhs(const AInfAlgebra& a, int n);

/// Per-arity report of LHS − [μ_n,∂]; n = 1 checks ∂∘∂ = 0.
AxiomReport check_ainf(const AInfAlgebra& a);
AxiomReport check_ainf(const AInfAlgebra& a, int max_arity);

/// Σ_{i+j=n+1} Σ_σ sgn(σ)(−1)^{i(j−1)} l_j ∘ (l_i ⊗ id^{⊗(n−i)}) ∘ P_σ over
/// (i, n−i)-unshuffles, where P_σ permutes tensor factors with the Koszul
/// sign, so that sgn(σ) times it realizes χ(σ).
GradedMap linf_axiom_lhs(const LInfAlgebra& l, int n);

/// Whether l_n ∘ P_τ = −l_n for every adjacent transposition τ. Returns the
/// first offending position k (τ = (k k+1), 1-based) or nullopt.
std::optional<int> antisymmetry_violation(const LInfAlgebra& l, int n);

/// Per-arity report of LHS − (−1)^n [l_n,∂], after the antisymmetry gate.
AxiomReport check_linf(const LInfAlgebra& l);
AxiomReport check_linf(const LInfAlgebra& l, int max_arity);

/// Value of a free-operad element on basis arguments args (indices into
/// the space). Each tree is evaluated bottom-up; a vertex applying μ to
/// subtrees T_1 … T_k on argument blocks X_1 … X_k picks up
/// (−1)^{Σ_k |T_k|·(|X_1|+…+|X_{k−1}|)}, and a leaf labelling λ contributes
/// the Koszul sign of moving a_1 … a_n into a_λ(1) … a_λ(n).
SparseVector evaluate_action(const operad::FreeElement& x, const OperationFamily& a, std::span<const Index> args);

/// evaluate_action on every basis tuple, as a map space^{⊗n} → space.
GradedMap action_map(const operad::FreeElement& x, const OperationFamily& a);

// -------------------------------------------------------------- morphisms

/// Components f_n: source^{⊗n} → target of degree n − 1. Missing ones are zero.
struct AInfMorphism {
    AInfAlgebra source;
    AInfAlgebra target;
    std::map<int, GradedMap> components;

    GradedMap component(int n) const;
};

/// c_k = (−1)^{(k−1)(k−2)/2}: the rescaling that turns these operations into
/// the bar-construction convention m_k = c_k μ_k.
int rescaling_sign(int k);

/// Σ_{l=1}^{k−1} (k−l)(i_l − 1) for a composition i_1 + … + i_k.
long long composition_sign_exponent(std::span<const int> parts);

/// All compositions of n into k positive parts, lexicographic.
std::vector<std::vector<int>> compositions(int n, int k);

/// For each n:
///   Σ_{r+s+t=n, s≥1} (−1)^{r+st} c_s f_{r+1+t} ∘ (id^{⊗r} ⊗ μ_s ⊗ id^{⊗t})
///     = Σ_k Σ_{i_1+…+i_k=n} (−1)^{Σ(k−l)(i_l−1)} c_k μ'_k ∘ (f_{i_1} ⊗ … ⊗ f_{i_k})
/// with μ_1 = ∂ and c_1 = 1. At n = 1 this says f_1 is a chain map.
AxiomReport check_morphism(const AInfMorphism& f, int max_arity);

AInfMorphism identity_morphism(const AInfAlgebra& a);

/// (g∘f)_n = Σ_k Σ_{i_1+…+i_k=n} (−1)^{Σ(k−l)(i_l−1)} g_k ∘ (f_{i_1} ⊗ … ⊗ f_{i_k}),
/// for n up to the smaller of the two algebras' max arity.
AInfMorphism compose_morphisms(const AInfMorphism& g, const AInfMorphism& f);

}  // namespace hoalg::halg
