#include "fixtures.hpp"

#include "hoalg/trees.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

namespace fixtures {

using hoalg::Scalar;
using hoalg::exactlin::BasisElement;
using hoalg::exactlin::GradedMap;
using hoalg::exactlin::GradedSpace;
using hoalg::exactlin::Index;

namespace {

Index pair_index(const GradedSpace& space, std::size_t x, std::size_t y)
{
    auto sq = GradedSpace::tensor_power(space, 2);
    std::size_t digits[] = {x, y};
    return sq.encode(digits);
}

std::size_t at(const GradedSpace& space, const std::string& name) { return space.find(name).value(); }

// Bracket on so(3) ⊗ (a small cdga), given the cdga structure constants.
struct Cdga {
    std::vector<BasisElement> basis;
    std::map<std::pair<int, int>, std::pair<int, long>> product;  // (i, j) ↦ (k, coefficient)
    std::map<int, std::pair<int, long>> d;
};

const int so3_bracket[3][3][2] = {
    // [e_i, e_j] = coefficient · e_k, stored as {k, coefficient}; k = -1 for zero
    {{-1, 0}, {2, 1}, {1, -1}},
    {{2, -1}, {-1, 0}, {0, 1}},
    {{1, 1}, {0, -1}, {-1, 0}},
};

}  // namespace

AInfAlgebra dga(const std::vector<BasisElement>& basis, const std::vector<std::tuple<std::string, std::string, long>>& differential,
                const std::vector<Product>& products)
{
    GradedSpace space(basis);
    GradedMap d(space, space, -1);
    for (const auto& [from, to, c] : differential)
        d.add_to_entry(at(space, to), at(space, from), c);
    GradedMap m(GradedSpace::tensor_power(space, 2), space, 0);
    for (const auto& p : products)
        m.add_to_entry(at(space, p.out), pair_index(space, at(space, p.left), at(space, p.right)), p.coefficient);
    return AInfAlgebra(space, d, {{2, m}}, 2);
}

AInfAlgebra massey_dga(int da, long s)
{
    std::vector<BasisElement> basis{{"a", da},          {"b", da},          {"c", da},  {"ab", 2 * da},
                                    {"bc", 2 * da},     {"u", 2 * da + 1},  {"v", 2 * da + 1},
                                    {"t", 3 * da + 1}};
    std::vector<Product> products{{"a", "b", "ab"}, {"b", "c", "bc"}, {"u", "c", "t"}};
    if (s != 0)
        products.push_back({"a", "v", "t", s});
    return dga(basis, {{"u", "ab", 1}, {"v", "bc", 1}}, products);
}

AInfAlgebra quiver_dga()
{
    struct Arrow {
        std::string name;
        int from;
        int to;
        int degree;
        std::vector<std::pair<long, std::vector<std::string>>> d;
    };
    const std::vector<Arrow> arrows{
        {"a", 1, 2, 0, {}},
        {"b", 2, 3, 0, {}},
        {"c", 3, 4, 0, {}},
        {"e", 4, 5, 0, {}},
        {"u1", 1, 3, 1, {{1, {"a", "b"}}}},
        {"u2", 2, 4, 1, {{1, {"b", "c"}}}},
        {"u3", 3, 5, 1, {{1, {"c", "e"}}}},
        {"w1", 1, 4, 2, {{1, {"u1", "c"}}, {-1, {"a", "u2"}}}},
        {"w2", 2, 5, 2, {{1, {"u2", "e"}}, {-1, {"b", "u3"}}}},
    };
    std::map<std::string, const Arrow*> by_name;
    for (const auto& a : arrows)
        by_name[a.name] = &a;

    // Every path, as a word of arrows, in order of length.
    std::vector<std::vector<std::string>> paths;
    for (const auto& a : arrows)
        paths.push_back({a.name});
    for (std::size_t k = 0; k < paths.size(); ++k)
        for (const auto& a : arrows)
            if (by_name[paths[k].back()]->to == a.from) {
                auto p = paths[k];
                p.push_back(a.name);
                paths.push_back(p);
            }
    auto word_name = [](const std::vector<std::string>& w) {
        std::string s;
        for (const auto& x : w)
            s += (s.empty() ? "" : ".") + x;
        return s;
    };
    auto word_degree = [&](const std::vector<std::string>& w) {
        int deg = 0;
        for (const auto& x : w)
            deg += by_name[x]->degree;
        return deg;
    };
    std::vector<BasisElement> basis;
    std::map<std::vector<std::string>, std::size_t> index;
    for (const auto& p : paths) {
        index[p] = basis.size();
        basis.push_back({word_name(p), word_degree(p)});
    }
    GradedSpace space(basis);
    GradedMap d(space, space, -1);
    for (const auto& p : paths) {
        int prefix = 0;
        for (std::size_t m = 0; m < p.size(); ++m) {
            for (const auto& [c, replacement] : by_name[p[m]]->d) {
                std::vector<std::string> w(p.begin(), p.begin() + m);
                w.insert(w.end(), replacement.begin(), replacement.end());
                w.insert(w.end(), p.begin() + m + 1, p.end());
                d.add_to_entry(index.at(w), index.at(p), c * hoalg::sign_power(prefix));
            }
            prefix += by_name[p[m]]->degree;
        }
    }
    GradedMap mult(GradedSpace::tensor_power(space, 2), space, 0);
    for (const auto& x : paths)
        for (const auto& y : paths)
            if (by_name[x.back()]->to == by_name[y.front()]->from) {
                auto w = x;
                w.insert(w.end(), y.begin(), y.end());
                mult.add_to_entry(index.at(w), pair_index(space, index.at(x), index.at(y)), 1);
            }
    return AInfAlgebra(space, d, {{2, mult}}, 2);
}

AInfAlgebra nonassociative()
{
    // x·x = y, x·y = x, y·x = y
    return dga({{"x", 0}, {"y", 0}}, {}, {{"x", "x", "y"}, {"x", "y", "x"}, {"y", "x", "y"}});
}

namespace {

LInfAlgebra lie_from_cdga(const Cdga& cdga)
{
    const char* names[] = {"x", "y", "z"};
    std::vector<BasisElement> basis;
    for (const auto& c : cdga.basis)
        for (int g = 0; g < 3; ++g)
            basis.push_back({cdga.basis.size() == 1 ? std::string(names[g]) : c.name + "." + names[g], c.degree});
    GradedSpace space(basis);
    auto idx = [](int c, int g) { return static_cast<std::size_t>(3 * c + g); };
    GradedMap d(space, space, -1);
    for (const auto& [c, image] : cdga.d)
        for (int g = 0; g < 3; ++g)
            d.add_to_entry(idx(image.first, g), idx(c, g), image.second);
    GradedMap l2(GradedSpace::tensor_power(space, 2), space, 0);
    for (const auto& [ij, kc] : cdga.product)
        for (int g = 0; g < 3; ++g)
            for (int h = 0; h < 3; ++h) {
                int k = so3_bracket[g][h][0];
                if (k < 0)
                    continue;
                long coeff = kc.second * so3_bracket[g][h][1];
                l2.add_to_entry(idx(kc.first, k), pair_index(space, idx(ij.first, g), idx(ij.second, h)), coeff);
            }
    return LInfAlgebra(space, d, {{2, l2}}, 2);
}

}  // namespace

LInfAlgebra so3() { return lie_from_cdga(Cdga{{{"1", 0}}, {{{0, 0}, {0, 1}}}, {}}); }

LInfAlgebra broken_jacobi()
{
    // Any rescaling of the three so(3) brackets still satisfies Jacobi, so add an x-component to [x, y].
    auto g = so3();
    auto& l2 = g.ops.at(2);
    l2.add_to_entry(0, pair_index(g.space, 0, 1), 1);
    l2.add_to_entry(0, pair_index(g.space, 1, 0), -1);
    return g;
}

LInfAlgebra dg_lie_tensor()
{
    // x² = x, xy = yx = y, dy = x
    return lie_from_cdga(Cdga{{{"x", 0}, {"y", 1}}, {{{0, 0}, {0, 1}}, {{0, 1}, {1, 1}}, {{1, 0}, {1, 1}}}, {{1, {0, 1}}}});
}

LInfAlgebra string_lie2()
{
    auto g = so3();
    std::vector<BasisElement> basis = g.space.basis();
    basis.push_back({"k", 1});
    GradedSpace space(basis);
    GradedMap d(space, space, -1);
    GradedMap l2(GradedSpace::tensor_power(space, 2), space, 0);
    for (const auto& [col, v] : g.ops.at(2).columns()) {
        auto digits = g.ops.at(2).source().decode(col);
        for (const auto& [row, x] : v)
            l2.add_to_entry(row, pair_index(space, digits[0], digits[1]), x);
    }
    auto cube = GradedSpace::tensor_power(space, 3);
    GradedMap l3(cube, space, 1);
    std::vector<int> perm{0, 1, 2};
    do {
        // ⟨[e_p, e_q], e_r⟩ is the sign of (p, q, r) for the standard inner product.
        std::vector<int> one_based{perm[0] + 1, perm[1] + 1, perm[2] + 1};
        std::vector<int> zeros(3, 0);
        int sgn = hoalg::trees::koszul_sign(one_based, zeros).signature;
        std::size_t digits[] = {static_cast<std::size_t>(perm[0]), static_cast<std::size_t>(perm[1]),
                                static_cast<std::size_t>(perm[2])};
        l3.add_to_entry(3, cube.encode(digits), sgn);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return LInfAlgebra(space, d, {{2, l2}, {3, l3}}, 3);
}

namespace {

GradedSpace random_space()
{
    return GradedSpace({{"p", 0}, {"q", 0}, {"r", 1}, {"s", -1}});
}

GradedMap random_map(std::mt19937& rng, const GradedSpace& source, const GradedSpace& target, int degree)
{
    std::uniform_int_distribution<int> coin(0, 2);
    std::uniform_int_distribution<int> value(-2, 2);
    GradedMap m(source, target, degree);
    for (Index col = 0; col < source.dim(); ++col)
        for (Index row = 0; row < target.dim(); ++row)
            if (target.degree(row) == source.degree(col) + degree && coin(rng) == 0)
                m.add_to_entry(row, col, value(rng));
    return m;
}

}  // namespace

AInfAlgebra random_ainf(std::uint32_t seed, int max_arity)
{
    std::mt19937 rng(seed);
    auto space = random_space();
    auto d = random_map(rng, space, space, -1);
    std::map<int, GradedMap> ops;
    for (int n = 2; n <= max_arity; ++n)
        ops.emplace(n, random_map(rng, GradedSpace::tensor_power(space, n), space, n - 2));
    return AInfAlgebra(space, d, ops, max_arity);
}

LInfAlgebra random_linf(std::uint32_t seed, int max_arity)
{
    std::mt19937 rng(seed);
    auto space = random_space();
    auto d = random_map(rng, space, space, -1);
    std::map<int, GradedMap> ops;
    for (int n = 2; n <= max_arity; ++n) {
        auto f = random_map(rng, GradedSpace::tensor_power(space, n), space, n - 2);
        GradedMap l(f.source(), space, n - 2);
        std::vector<int> sigma(n);
        std::iota(sigma.begin(), sigma.end(), 1);
        const std::vector<int> zeros(n, 0);
        do {
            int sgn = hoalg::trees::koszul_sign(sigma, zeros).signature;
            l += sgn * compose(f, hoalg::exactlin::permutation_map(space, sigma));
        } while (std::next_permutation(sigma.begin(), sigma.end()));
        ops.emplace(n, std::move(l));
    }
    return LInfAlgebra(space, d, ops, max_arity);
}

}  // namespace fixtures
