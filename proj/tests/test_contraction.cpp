#include "hoalg/contraction.hpp"

#include "fixtures.hpp"

#include <doctest.h>

#include <random>

using namespace hoalg;
using namespace hoalg::exactlin;

namespace {

// Random complex C_2 → C_1 → C_0 with the given ranks, built so that d∘d = 0:
// d_1 is a random combination of rows annihilating the image of d_2.
std::pair<GradedSpace, GradedMap> random_complex(std::mt19937& rng, std::size_t n0, std::size_t n1, std::size_t n2)
{
    std::vector<BasisElement> basis;
    for (std::size_t k = 0; k < n0; ++k)
        basis.push_back({"p" + std::to_string(k), 0});
    for (std::size_t k = 0; k < n1; ++k)
        basis.push_back({"q" + std::to_string(k), 1});
    for (std::size_t k = 0; k < n2; ++k)
        basis.push_back({"r" + std::to_string(k), 2});
    GradedSpace space(basis);
    std::uniform_int_distribution<int> v(-2, 2);

    Matrix d2(n1, n2);
    for (std::size_t r = 0; r < n1; ++r)
        for (std::size_t c = 0; c < n2; ++c)
            d2(r, c) = v(rng);
    // Rows y with y·d2 = 0 are kernel vectors of the transpose.
    Matrix t(n2, n1);
    for (std::size_t r = 0; r < n1; ++r)
        for (std::size_t c = 0; c < n2; ++c)
            t(c, r) = d2(r, c);
    auto left = kernel_basis(t);
    Matrix d1(n0, n1);
    for (std::size_t r = 0; r < n0; ++r)
        for (const auto& y : left) {
            int coeff = v(rng);
            for (std::size_t c = 0; c < n1; ++c)
                d1(r, c) += coeff * y[c];
        }

    GradedMap d(space, space, -1);
    for (std::size_t r = 0; r < n0; ++r)
        for (std::size_t c = 0; c < n1; ++c)
            if (d1(r, c) != 0)
                d.add_to_entry(r, n0 + c, d1(r, c));
    for (std::size_t r = 0; r < n1; ++r)
        for (std::size_t c = 0; c < n2; ++c)
            if (d2(r, c) != 0)
                d.add_to_entry(n0 + r, n0 + n1 + c, d2(r, c));
    return {space, d};
}

}  // namespace

TEST_SUITE("contraction")
{
    TEST_CASE("Massey complex: homology classes and all contraction identities")
    {
        for (int da : {0, 1}) {
            auto a = fixtures::massey_dga(da, 1);
            auto c = homology_with_contraction(a.space, a.d);
            CHECK(c.homology.dim() == 4);
            std::vector<std::string> names;
            for (Index k = 0; k < c.homology.dim(); ++k)
                names.push_back(c.homology.name(k));
            CHECK(names == std::vector<std::string>{"a", "b", "c", "t"});
            auto check = check_contraction(c);
            CHECK(check.all());
            CHECK(check.failures().empty());
        }
    }

    TEST_CASE("random complexes: Betti numbers and contraction identities")
    {
        std::mt19937 rng(2024);
        for (int trial = 0; trial < 15; ++trial) {
            auto [space, d] = random_complex(rng, 3, 5, 3);
            REQUIRE(compose(d, d).is_zero());
            auto c = homology_with_contraction(space, d);
            CHECK(check_contraction(c).all());
            // Independent count: dim H_k = dim C_k − rank d_k − rank d_{k+1}.
            Matrix m1(3, 5);
            Matrix m2(5, 3);
            for (const auto& [col, v] : d.columns())
                for (const auto& [row, x] : v) {
                    if (col < 8)
                        m1(row, col - 3) = x;
                    else
                        m2(row - 3, col - 8) = x;
                }
            auto r1 = rank(m1);
            auto r2 = rank(m2);
            CHECK(c.homology.dim() == (3 - r1) + (5 - r1 - r2) + (3 - r2));
            CHECK(induces_homology_isomorphism(GradedMap::identity(space), d, d));
        }
    }

    TEST_CASE("homology names: a class represented by a basis vector keeps its name")
    {
        GradedSpace v({{"x", 0}, {"y", 0}, {"z", 1}});
        GradedMap d(v, v, -1);
        d.add_to_entry(0, 2, 1);
        d.add_to_entry(1, 2, 1);  // dz = x + y
        auto c = homology_with_contraction(v, d);
        REQUIRE(c.homology.dim() == 1);
        CHECK(c.homology.name(0) == "x");
        CHECK(check_contraction(c).all());
    }

    TEST_CASE("rejects d∘d ≠ 0 and wrong degrees")
    {
        GradedSpace v({{"x", 0}, {"y", 1}, {"z", 2}});
        GradedMap d(v, v, -1);
        d.add_to_entry(0, 1, 1);
        d.add_to_entry(1, 2, 1);
        CHECK_THROWS_AS(homology_with_contraction(v, d), Error);
        GradedMap up(v, v, 1);
        CHECK_THROWS_AS(homology_with_contraction(v, up), Error);
    }

    TEST_CASE("check_contraction detects corrupted data")
    {
        auto a = fixtures::massey_dga(0, 1);
        auto c = homology_with_contraction(a.space, a.d);
        auto bad = c;
        bad.h *= 2;
        auto check = check_contraction(bad);
        CHECK_FALSE(check.homotopy);
        CHECK_FALSE(check.all());
        // h + i∘x∘p keeps the homotopy identity but breaks h∘i = 0.
        auto side = c;
        GradedMap x(c.homology, c.homology, 1);
        x.add_to_entry(*c.homology.find("t"), *c.homology.find("a"), 1);
        side.h += compose(c.i, compose(x, c.p));
        auto s = check_contraction(side);
        CHECK(s.homotopy);
        CHECK_FALSE(s.h_i_zero);
        CHECK_FALSE(s.side_conditions());
    }

    TEST_CASE("quasi-isomorphism test")
    {
        auto a = fixtures::massey_dga(0, 1);
        GradedMap zero(a.space, a.space, 0);
        CHECK_FALSE(induces_homology_isomorphism(zero, a.d, a.d));
        CHECK(induces_homology_isomorphism(GradedMap::identity(a.space), a.d, a.d));
    }
}
