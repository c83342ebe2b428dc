#pragma once

// Rooted trees for free operads.
//
// A tree is stored in preorder: each node is either a leaf or a vertex
// decorated by a generator. Leaf labels (left to right) record the action
// of the symmetric group; planar use keeps them the identity.
//
// Trees with odd-degree vertices are only defined up to sign once a vertex
// order is fixed. The basis element a DecoratedTree stands for is the one
// oriented by its preorder vertex word. Every operation that builds a tree
// from other trees therefore returns a sign alongside it: the Koszul sign of
// moving the vertices from the order they were produced in into preorder,
// times the signature picked up when children of antisymmetric vertices are
// sorted into canonical order (by smallest leaf label).

#include "hoalg/scalar.hpp"

#include <compare>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace hoalg::trees {

enum class Symmetry { planar, antisymmetric };

struct Generator {
    int id = 0;
    int arity = 2;
    int degree = 0;
    Symmetry symmetry = Symmetry::planar;
};

/// One preorder node. Leaves have generator == -1 and arity == 0.
struct Node {
    int generator = -1;
    int arity = 0;
    int degree = 0;
    Symmetry symmetry = Symmetry::planar;

    bool is_leaf() const { return generator < 0; }
    auto operator<=>(const Node&) const = default;
};

class DecoratedTree {
public:
    /// The trivial one-leaf tree (the operadic unit).
    DecoratedTree();
    /// Validates arities and that labels are a permutation of 1..leaf count.
    DecoratedTree(std::vector<Node> preorder, std::vector<int> labels);

    static DecoratedTree corolla(const Generator& g);

    const std::vector<Node>& nodes() const { return nodes_; }
    const std::vector<int>& labels() const { return labels_; }

    int leaf_count() const { return static_cast<int>(labels_.size()); }
    int vertex_count() const;
    int degree() const;
    /// Vertices in preorder.
    std::vector<Node> vertices() const;
    bool is_canonical() const;

    auto operator<=>(const DecoratedTree&) const = default;

private:
    std::vector<Node> nodes_;
    std::vector<int> labels_;
};

struct SignedTree {
    int sign = 1;
    DecoratedTree tree;
};

/// Sorts the children of antisymmetric vertices by smallest leaf label.
SignedTree canonical_form(const DecoratedTree& tree);

/// outer ∘_slot inner: inner replaces the leaf labelled `slot`. Labels are
/// re-indexed as for the symmetric operad partial composition. The sign is
/// (-1)^{|inner|·(degrees of outer vertices after that leaf)} times any
/// canonicalization sign.
SignedTree graft(const DecoratedTree& outer, int slot, const DecoratedTree& inner);

/// Replaces the vertex at preorder position `vertex` by `replacement`, whose
/// leaf labelled ℓ receives the subtree at input ℓ of the replaced vertex.
/// The produced word is: earlier vertices, the replacement's vertices, later
/// vertices.
SignedTree substitute_vertex(const DecoratedTree& tree, std::size_t vertex, const DecoratedTree& replacement);

/// All planar trees with n leaves whose vertices are decorated by the given
/// generators. Roots follow the generator order, child leaf counts run in
/// lexicographic order, and the leftmost subtree varies slowest.
std::vector<DecoratedTree> enumerate_trees(int n, std::span<const Generator> generators);
/// Planar generators of degree arity−2, one per arity.
std::vector<DecoratedTree> enumerate_trees(int n, const std::set<int>& arities);

/// Canonical leaf-labelled trees with n leaves over antisymmetric generators:
/// one per isomorphism class of (tree, leaf labelling).
std::vector<DecoratedTree> enumerate_labeled_trees(int n, std::span<const Generator> generators);

struct Unshuffle {
    std::vector<int> sigma;  // σ(1..n)
    int block = 0;           // i
};

/// (i, n−i)-unshuffles in lexicographic order of the first block.
std::vector<Unshuffle> unshuffles(int i, int n);

struct PermutationSigns {
    int signature = 1;  // sgn(σ)
    int koszul = 1;     // sign of rearranging graded a_1..a_n into a_σ(1)..a_σ(n)
    int chi = 1;        // signature * koszul
};

/// sigma holds σ(1..n) (1-based); degrees[k] is |a_{k+1}|.
PermutationSigns koszul_sign(std::span<const int> sigma, std::span<const int> degrees);

/// "m3", "l2", … (planar generators print as m, antisymmetric ones as l).
std::string vertex_name(const Node& n);
/// Nested notation, e.g. m2(m2(1,2),3).
std::string to_expression(const DecoratedTree& t);
/// Indented ASCII drawing, one node per line.
std::string pretty(const DecoratedTree& t);

}  // namespace hoalg::trees
