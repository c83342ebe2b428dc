#include "hoalg/trees.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

using namespace hoalg;
using namespace hoalg::trees;

namespace {

Generator planar(int arity, int degree, int id) { return {id, arity, degree, Symmetry::planar}; }
Generator lie(int arity, int id) { return {id, arity, arity - 2, Symmetry::antisymmetric}; }

long binomial(int n, int k)
{
    long r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

// Trees with leaves relabelled by τ: leaf labelled ℓ becomes τ(ℓ).
DecoratedTree relabel(const DecoratedTree& t, const std::vector<int>& tau)
{
    std::vector<int> labels;
    for (int l : t.labels())
        labels.push_back(tau[l - 1]);
    return DecoratedTree(t.nodes(), labels);
}

}  // namespace

TEST_SUITE("trees")
{
    TEST_CASE("binary planar trees are counted by Catalan numbers")
    {
        const Generator m2 = planar(2, 0, 0);
        const long catalan[] = {1, 1, 2, 5, 14, 42, 132};
        for (int n = 1; n <= 7; ++n)
            CHECK(enumerate_trees(n, std::span(&m2, 1)).size() == static_cast<std::size_t>(catalan[n - 1]));
    }

    TEST_CASE("planar trees with one generator per arity: little Schröder numbers")
    {
        const long schroeder[] = {1, 1, 3, 11, 45, 197, 903};
        for (int n = 1; n <= 7; ++n) {
            std::set<int> arities;
            for (int a = 2; a <= n; ++a)
                arities.insert(a);
            auto trees = enumerate_trees(n, arities);
            CHECK(trees.size() == static_cast<std::size_t>(schroeder[n - 1]));
            std::set<DecoratedTree> distinct(trees.begin(), trees.end());
            CHECK(distinct.size() == trees.size());
        }
    }

    TEST_CASE("arity-4 trees split as the cells of the pentagon")
    {
        auto trees = enumerate_trees(4, std::set<int>{2, 3, 4});
        std::map<int, int> by_vertices;
        for (const auto& t : trees)
            ++by_vertices[t.vertex_count()];
        CHECK(by_vertices[3] == 5);  // vertices of K_4
        CHECK(by_vertices[2] == 5);  // edges
        CHECK(by_vertices[1] == 1);  // the 2-cell
    }

    TEST_CASE("leaf-labelled binary trees: (2n−3)!! of them")
    {
        const Generator l2 = lie(2, 0);
        const long count[] = {1, 1, 3, 15, 105, 945};
        for (int n = 1; n <= 6; ++n) {
            auto trees = enumerate_labeled_trees(n, std::span(&l2, 1));
            CHECK(trees.size() == static_cast<std::size_t>(count[n - 1]));
            for (const auto& t : trees)
                CHECK(t.is_canonical());
        }
    }

    TEST_CASE("canonical form of an antisymmetric vertex picks up the signature")
    {
        DecoratedTree swapped({{0, 2, 0, Symmetry::antisymmetric}, {}, {}}, {2, 1});
        auto c = canonical_form(swapped);
        CHECK(c.sign == -1);
        CHECK(c.tree.labels() == std::vector<int>{1, 2});
        DecoratedTree l3({{1, 3, 1, Symmetry::antisymmetric}, {}, {}, {}}, {3, 1, 2});
        CHECK(canonical_form(l3).sign == 1);  // a 3-cycle is even
        DecoratedTree l3b({{1, 3, 1, Symmetry::antisymmetric}, {}, {}, {}}, {1, 3, 2});
        CHECK(canonical_form(l3b).sign == -1);
    }

    TEST_CASE("graft places the inner tree at the given leaf")
    {
        auto m2 = DecoratedTree::corolla(planar(2, 0, 0));
        auto left = graft(m2, 1, m2);
        auto right = graft(m2, 2, m2);
        CHECK(to_expression(left.tree) == "m2(m2(1,2),3)");
        CHECK(to_expression(right.tree) == "m2(1,m2(2,3))");
        CHECK(left.sign == 1);
        CHECK(right.sign == 1);
        // An odd inner vertex passing an odd outer vertex after the slot.
        auto m3 = DecoratedTree::corolla(planar(3, 1, 1));
        auto g = graft(graft(m2, 2, m3).tree, 1, m3);
        CHECK(to_expression(g.tree) == "m2(m3(1,2,3),m3(4,5,6))");
        CHECK(g.sign == -1);
    }

    TEST_CASE("sequential and parallel composition axioms")
    {
        // (x ∘_i y) ∘_{i+j−1} z = x ∘_i (y ∘_j z) and, for i < k,
        // (x ∘_i y) ∘_{k+|y|−1} z = (−1)^{|y||z|} (x ∘_k z) ∘_i y.
        std::vector<DecoratedTree> gens{DecoratedTree::corolla(planar(2, 0, 0)), DecoratedTree::corolla(planar(3, 1, 1)),
                                        DecoratedTree::corolla(planar(4, 2, 2))};
        for (const auto& x : gens)
            for (const auto& y : gens)
                for (const auto& z : gens) {
                    for (int i = 1; i <= x.leaf_count(); ++i) {
                        for (int j = 1; j <= y.leaf_count(); ++j) {
                            auto xy = graft(x, i, y);
                            auto lhs = graft(xy.tree, i + j - 1, z);
                            auto yz = graft(y, j, z);
                            auto rhs = graft(x, i, yz.tree);
                            CHECK(lhs.tree == rhs.tree);
                            CHECK(xy.sign * lhs.sign == yz.sign * rhs.sign);
                        }
                        for (int k = i + 1; k <= x.leaf_count(); ++k) {
                            auto xy = graft(x, i, y);
                            auto lhs = graft(xy.tree, k + y.leaf_count() - 1, z);
                            auto xz = graft(x, k, z);
                            auto rhs = graft(xz.tree, i, y);
                            CHECK(lhs.tree == rhs.tree);
                            CHECK(xy.sign * lhs.sign == sign_power(y.degree() * z.degree()) * xz.sign * rhs.sign);
                        }
                    }
                }
    }

    TEST_CASE("substituting a corolla by itself is the identity")
    {
        std::set<int> arities{2, 3, 4};
        auto trees = enumerate_trees(5, arities);
        for (const auto& t : trees) {
            auto verts = t.vertices();
            for (std::size_t v = 0; v < verts.size(); ++v) {
                Generator g{verts[v].generator, verts[v].arity, verts[v].degree, verts[v].symmetry};
                auto s = substitute_vertex(t, v, DecoratedTree::corolla(g));
                CHECK(s.tree == t);
                CHECK(s.sign == 1);
            }
        }
    }

    TEST_CASE("substitution agrees with grafting")
    {
        // Replacing the root m3 of m3(1,m2(2,3),4) by m2(m2(1,2),3) yields m2(m2(1,m2(2,3)),4).
        auto m2 = DecoratedTree::corolla(planar(2, 0, 0));
        auto m3 = DecoratedTree::corolla(planar(3, 1, 1));
        auto t = graft(m3, 2, m2);
        auto s = substitute_vertex(t.tree, 0, graft(m2, 1, m2).tree);
        CHECK(to_expression(s.tree) == "m2(m2(1,m2(2,3)),4)");
        CHECK(s.sign == 1);
    }

    TEST_CASE("unshuffles: complete, distinct, increasing on both blocks")
    {
        for (int n = 2; n <= 7; ++n)
            for (int i = 1; i < n; ++i) {
                auto us = unshuffles(i, n);
                CHECK(us.size() == static_cast<std::size_t>(binomial(n, i)));
                std::set<std::vector<int>> seen;
                for (const auto& u : us) {
                    CHECK(u.block == i);
                    CHECK(std::is_sorted(u.sigma.begin(), u.sigma.begin() + i));
                    CHECK(std::is_sorted(u.sigma.begin() + i, u.sigma.end()));
                    auto sorted = u.sigma;
                    std::sort(sorted.begin(), sorted.end());
                    std::vector<int> iota(n);
                    std::iota(iota.begin(), iota.end(), 1);
                    CHECK(sorted == iota);
                    seen.insert(u.sigma);
                }
                CHECK(seen.size() == us.size());
                CHECK(std::is_sorted(us.begin(), us.end(),
                                     [](const auto& a, const auto& b) { return a.sigma < b.sigma; }));
            }
    }

    TEST_CASE("Koszul and χ signs")
    {
        std::vector<int> swap{2, 1};
        std::vector<int> odd{1, 1};
        auto s = koszul_sign(swap, odd);
        CHECK(s.signature == -1);
        CHECK(s.koszul == -1);
        CHECK(s.chi == 1);
        std::vector<int> mixed{0, 1};
        CHECK(koszul_sign(swap, mixed).koszul == 1);
    }

    TEST_CASE("Koszul sign is a cocycle: χ(τ∘σ; a) = χ(τ; a)·χ(σ; a_τ)")
    {
        std::mt19937 rng(5);
        std::uniform_int_distribution<int> deg(-1, 2);
        for (int trial = 0; trial < 200; ++trial) {
            int n = 2 + trial % 4;
            std::vector<int> degrees(n);
            for (auto& d : degrees)
                d = deg(rng);
            std::vector<int> sigma(n), tau(n);
            std::iota(sigma.begin(), sigma.end(), 1);
            std::iota(tau.begin(), tau.end(), 1);
            std::shuffle(sigma.begin(), sigma.end(), rng);
            std::shuffle(tau.begin(), tau.end(), rng);
            std::vector<int> composite(n), moved(n);
            for (int k = 0; k < n; ++k) {
                composite[k] = tau[sigma[k] - 1];
                moved[k] = degrees[tau[k] - 1];
            }
            auto whole = koszul_sign(composite, degrees);
            auto first = koszul_sign(tau, degrees);
            auto second = koszul_sign(sigma, moved);
            CHECK(whole.koszul == first.koszul * second.koszul);
            CHECK(whole.signature == first.signature * second.signature);
            CHECK(whole.chi == first.chi * second.chi);
        }
    }

    TEST_CASE("canonical form is invariant under relabelling then sorting back")
    {
        const Generator gens[] = {lie(2, 0), lie(3, 1)};
        for (const auto& t : enumerate_labeled_trees(4, gens)) {
            std::vector<int> tau{2, 4, 1, 3};
            std::vector<int> inverse(4);
            for (int k = 0; k < 4; ++k)
                inverse[tau[k] - 1] = k + 1;
            auto there = canonical_form(relabel(t, tau));
            auto back = canonical_form(relabel(there.tree, inverse));
            CHECK(back.tree == t);
            CHECK(there.sign * back.sign == 1);
        }
    }

    TEST_CASE("printing")
    {
        auto m2 = DecoratedTree::corolla(planar(2, 0, 0));
        auto t = graft(m2, 1, m2).tree;
        CHECK(to_expression(t) == "m2(m2(1,2),3)");
        CHECK(pretty(t) == "m2\n+-- m2\n|   +-- 1\n|   `-- 2\n`-- 3\n");
        CHECK(vertex_name(Node{0, 2, 0, Symmetry::antisymmetric}) == "l2");
        CHECK(vertex_name(Node{5, 2, 0, Symmetry::planar}) == "m2_5");
        CHECK(to_expression(DecoratedTree()) == "1");
    }

    TEST_CASE("invalid trees are rejected")
    {
        CHECK_THROWS_AS(DecoratedTree({{0, 2, 0, Symmetry::planar}, {}}, {1}), Error);
        CHECK_THROWS_AS(DecoratedTree({{0, 2, 0, Symmetry::planar}, {}, {}}, {1, 1}), Error);
        CHECK_THROWS_AS(graft(DecoratedTree::corolla(planar(2, 0, 0)), 3, DecoratedTree()), Error);
    }
}
