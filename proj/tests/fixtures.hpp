#pragma once

// Small algebras shared by the unit and acceptance tests.

#include "hoalg/halg.hpp"

#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

namespace fixtures {

using hoalg::halg::AInfAlgebra;
using hoalg::halg::LInfAlgebra;

struct Product {
    std::string left;
    std::string right;
    std::string out;
    long coefficient = 1;
};

/// A dga from its multiplication table; unlisted products vanish.
AInfAlgebra dga(const std::vector<hoalg::exactlin::BasisElement>& basis,
                const std::vector<std::tuple<std::string, std::string, long>>& differential,
                const std::vector<Product>& products);

/// Classes a, b, c in degree da with ab = du, bc = dv, and
/// u·c = t, a·v = s·t. H = span{a, b, c, t}.
AInfAlgebra massey_dga(int da, long s);

/// Path algebra of the quiver 1→2→3→4→5 with arrows a, b, c, e in degree 0,
/// u1, u2, u3 in degree 1 and w1, w2 in degree 2,
/// d u1 = ab, d u2 = bc, d u3 = ce, d w1 = u1c − au2, d w2 = u2e − bu3.
/// Carries a nonvanishing quadruple Massey product ⟨a, b, c, e⟩.
AInfAlgebra quiver_dga();

/// The algebra with ∂ = 0 and one nonassociative product on {x, y}.
AInfAlgebra nonassociative();

/// so(3) with [x, y] = z, [y, z] = x, [z, x] = y.
LInfAlgebra so3();
/// so(3) ⊕ k[1] with l_3(x, y, z) = ⟨[x, y], z⟩ k.
LInfAlgebra string_lie2();
/// so(3) with [x, y] = z + x: antisymmetric, fails Jacobi.
LInfAlgebra broken_jacobi();
/// C ⊗ so(3) for the cdga C = span{x (deg 0), y (deg 1)}, x² = x, xy = y, dy = x.
LInfAlgebra dg_lie_tensor();

/// Random operations μ_2 … μ_max on a small graded space, seeded.
AInfAlgebra random_ainf(std::uint32_t seed, int max_arity);
/// Random antisymmetrized brackets l_2 … l_max, seeded.
LInfAlgebra random_linf(std::uint32_t seed, int max_arity);

}  // namespace fixtures
