#pragma once

#include "hoalg/exactlin.hpp"

#include <string>
#include <vector>

namespace hoalg::exactlin {

/// Deformation retract of a complex onto its homology:
///   p∘i = id,  d∘h + h∘d + i∘p = id,  h∘h = 0,  p∘h = 0,  h∘i = 0.
/// The homology carries the zero differential.
struct Contraction {
    GradedSpace complex;
    GradedMap d;
    GradedSpace homology;
    GradedMap p;  // complex → homology, degree 0
    GradedMap i;  // homology → complex, degree 0
    GradedMap h;  // complex → complex, degree +1
};

/// Homology of (space, d) together with a contraction onto it. Splittings
/// pivot on the first usable basis column, so the output is deterministic.
/// Throws Error if d has the wrong degree or d∘d ≠ 0.
Contraction homology_with_contraction(const GradedSpace& space, const GradedMap& d);

struct ContractionCheck {
    bool d_squared_zero = false;
    bool chain_maps = false;  // d∘i = 0 and p∘d = 0
    bool retraction = false;  // p∘i = id
    bool homotopy = false;    // d∘h + h∘d + i∘p = id
    bool h_squared_zero = false;
    bool p_h_zero = false;
    bool h_i_zero = false;

    bool all() const
    {
        return d_squared_zero && chain_maps && retraction && homotopy && h_squared_zero && p_h_zero && h_i_zero;
    }
    bool side_conditions() const { return h_squared_zero && p_h_zero && h_i_zero; }
    std::vector<std::string> failures() const;
};

ContractionCheck check_contraction(const Contraction& c);

/// Whether a degree-0 chain map f: (A, d_a) → (B, d_b) induces an
/// isomorphism on homology.
bool induces_homology_isomorphism(const GradedMap& f, const GradedMap& d_source, const GradedMap& d_target);

}  // namespace hoalg::exactlin
