#pragma once

// Homotopy transfer of an A(∞) structure along a contraction onto homology.

#include "hoalg/contraction.hpp"
#include "hoalg/halg.hpp"

#include <string>
#include <vector>

namespace hoalg::transfer {

using exactlin::Contraction;
using halg::AInfAlgebra;
using halg::AInfMorphism;

struct TransferProblem {
    AInfAlgebra source;
    Contraction contraction;  // on source.space with source.d
    int max_arity = 5;
};

struct TransferResult {
    AInfAlgebra transferred;  // on the homology, zero differential
    AInfMorphism morphism;    // transferred → source, f_1 = i
};

/// Builds, for n ≥ 2,
///   q_n = Σ_{k≥2} Σ_{p_1+…+p_k=n} (−1)^{Σ(k−l)(p_l−1)} c_k μ_k ∘ (φ_{p_1} ⊗ … ⊗ φ_{p_k})
/// with φ_1 = i and φ_n = −h∘q_n, then X_n = c_n p∘q_n and f_n = φ_n.
/// Unwinding the recursion gives the sum over planar trees with i on the
/// leaves, h on the internal edges and p (or −h) at the root; X_2 = p μ_2 (i⊗i).
/// Throws Error when the contraction is invalid, lacks the side conditions,
/// or the source fails its A(∞) axioms up to max_arity.
TransferResult transfer(const TransferProblem& problem);

/// Convenience: contraction from homology_with_contraction(source).
TransferResult transfer(const AInfAlgebra& source, int max_arity);

struct TransferReport {
    halg::AxiomReport ainf;
    halg::AxiomReport morphism;
    bool quasi_isomorphism = false;  // f_1 induces an isomorphism on homology

    bool passed() const { return ainf.passed() && morphism.passed() && quasi_isomorphism; }
};

TransferReport verify_transfer(const TransferResult& result, int ainf_arity, int morphism_arity);

}  // namespace hoalg::transfer
