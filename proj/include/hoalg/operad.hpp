#pragma once

// Free dg-operads on corolla generators: the A(∞) and L(∞) minimal models,
// their derivation differential, and the checks that certify them.

#include "hoalg/exactlin.hpp"
#include "hoalg/trees.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hoalg::operad {

using trees::DecoratedTree;
using trees::Generator;
using trees::Symmetry;

/// Exact linear combination of canonical trees, all with the same leaf
/// count and the same degree.
class FreeElement {
public:
    FreeElement() = default;

    /// Adds c·tree. The tree must be canonical.
    void add(const DecoratedTree& tree, const Scalar& c);
    /// Adds c·(sign·tree) for a tree produced by a tree operation.
    void add(const trees::SignedTree& t, const Scalar& c) { add(t.tree, c * t.sign); }

    const std::map<DecoratedTree, Scalar>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    Scalar coefficient(const DecoratedTree& t) const;

    std::optional<int> arity() const;
    std::optional<int> degree() const;

    FreeElement& operator+=(const FreeElement& other);
    FreeElement& operator-=(const FreeElement& other);
    FreeElement& operator*=(const Scalar& c);
    friend FreeElement operator*(const Scalar& c, FreeElement x) { return x *= c; }
    bool operator==(const FreeElement&) const = default;

private:
    std::map<DecoratedTree, Scalar> terms_;
};

FreeElement corolla_element(const Generator& g);

enum class Family { ainf, linf };

std::string to_string(Family f);
Family parse_family(const std::string& name);

/// (F(E), ∂) with ∂ given on generators and extended as a derivation.
class DgFreeOperad {
public:
    /// Generator ids must equal their position. Each ∂(g) must have g's
    /// leaf count and degree |g| − 1, or be zero.
    DgFreeOperad(std::string name, std::vector<Generator> generators, std::vector<FreeElement> differentials);

    const std::string& name() const { return name_; }
    const std::vector<Generator>& generators() const { return generators_; }
    const Generator& generator(int id) const;
    const FreeElement& differential(int id) const;
    int max_arity() const;

    /// Copy with ∂(generator id) replaced.
    DgFreeOperad with_differential(int id, FreeElement value) const;

private:
    std::string name_;
    std::vector<Generator> generators_;
    std::vector<FreeElement> differentials_;
};

/// Generators μ_n (planar) or l_n (antisymmetric) of arity n, degree n−2, id n−2.
Generator family_generator(Family f, int arity);

/// ∂μ_n = Σ_{i+j=n+1; i,j≥2} Σ_{s=0}^{n−j} (−1)^{j+s(j+1)} μ_i ∘_{s+1} μ_j.
FreeElement ainf_generator_diff(int n);

/// ∂l_n = (−1)^n Σ_{i+j=n+1; i,j≥2} Σ_σ χ(σ)(−1)^{i(j−1)} l_j(l_i(σ(1..i)), σ(i+1..n))
/// over (i, n−i)-unshuffles σ; leaves carry degree 0 so χ(σ) = sgn(σ).
FreeElement linf_generator_diff(int n);

FreeElement generator_diff(Family f, int n);

DgFreeOperad ainf_operad(int max_arity);
DgFreeOperad linf_operad(int max_arity);
DgFreeOperad family_operad(Family f, int max_arity);

/// Extends ∂ from generators to all of F(E). ∂ acts from the right, like the
/// commutator [μ,∂] = μ∂ − (−1)^{|μ|}∂μ in the endomorphism operad: on the
/// preorder word v_1 … v_m,
///   ∂(v_1 … v_m) = Σ_k (−1)^{|v_{k+1}| + … + |v_m|} v_1 … ∂(v_k) … v_m.
FreeElement extend_derivation(const DgFreeOperad& op, const FreeElement& x);

struct GeneratorResidual {
    int generator = 0;
    int arity = 0;
    FreeElement residual;  // ∂∂(generator)
    bool pass() const { return residual.is_zero(); }
};

struct DSquaredReport {
    std::string operad;
    int max_arity = 0;
    std::vector<GeneratorResidual> entries;
    bool passed() const;
    std::size_t residual_terms() const;
};

DSquaredReport check_d_squared(const DgFreeOperad& op, int max_arity);

/// True iff every tree of every ∂(generator) has at least two vertices.
bool is_minimal(const DgFreeOperad& op);

struct BettiNumber {
    int degree = 0;
    std::size_t dimension = 0;
    bool operator==(const BettiNumber&) const = default;
};

/// Trees of arity n over all generators of op (planar or leaf-labelled,
/// following the generators' symmetry), in enumeration order.
std::vector<DecoratedTree> arity_basis(const DgFreeOperad& op, int n);

/// Homology of the arity-n piece of op, one entry per degree that has trees.
std::vector<BettiNumber> arity_homology(const DgFreeOperad& op, int n);

// ------------------------------------------------------------- quotients

enum class Presentation { ass, lie };

/// Binary-tree span of arity n modulo the ideal generated by the
/// associativity (Ass) or Jacobi (Lie) relator.
struct QuotientSpace {
    Presentation presentation = Presentation::ass;
    int arity = 0;
    std::vector<DecoratedTree> trees;  // basis of the binary-tree span
    exactlin::GradedSpace tree_span;
    exactlin::GradedSpace quotient;  // named by representative trees
    exactlin::GradedMap projection{exactlin::GradedSpace(), exactlin::GradedSpace(), 0};  // tree_span → quotient

    std::size_t dim() const { return quotient.dim(); }
};

/// Relator placements are all trees with one ternary vertex and otherwise
/// binary vertices, with the relator substituted at the ternary vertex.
/// Throws Error when n exceeds cap.
QuotientSpace quotient_arity_space(Presentation presentation, int n, int cap = 5);

/// α: kills trees with a vertex of arity ≥ 3 and elements of nonzero
/// degree; sends binary trees to their class. Coordinates refer to
/// quotient_arity_space(presentation, arity of x).
exactlin::SparseVector alpha_map(Presentation presentation, const FreeElement& x);
exactlin::SparseVector alpha_map(const QuotientSpace& q, const FreeElement& x);

}  // namespace hoalg::operad
