#include "hoalg/trees.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <functional>
#include <numeric>

namespace hoalg::trees {

namespace {

bool odd(int degree) { return (degree & 1) != 0; }

// Explicit tree. A child >= 0 is a vertex index, a child < 0 is the leaf
// labelled -child. The order of `vertices` is the orientation word.
struct RawVertex {
    Node deco;
    std::vector<int> children;
};

struct RawTree {
    std::vector<RawVertex> vertices;
    int root = -1;  // a bare leaf when negative
};

RawTree to_raw(const DecoratedTree& t)
{
    RawTree raw;
    const auto& nodes = t.nodes();
    const auto& labels = t.labels();
    std::size_t pos = 0;
    std::size_t leaf = 0;
    std::function<int()> build = [&]() -> int {
        const Node& n = nodes[pos++];
        if (n.is_leaf())
            return -labels[leaf++];
        int me = static_cast<int>(raw.vertices.size());
        raw.vertices.push_back({n, {}});
        for (int k = 0; k < n.arity; ++k) {
            int child = build();
            raw.vertices[me].children.push_back(child);
        }
        return me;
    };
    raw.root = build();
    return raw;
}

SignedTree from_raw(RawTree raw)
{
    int sign = 1;
    std::vector<int> min_label(raw.vertices.size(), 0);
    std::function<int(int)> minimum = [&](int child) -> int {
        if (child < 0)
            return -child;
        int m = std::numeric_limits<int>::max();
        for (int c : raw.vertices[child].children)
            m = std::min(m, minimum(c));
        min_label[child] = m;
        return m;
    };
    minimum(raw.root);

    auto key = [&](int child) { return child < 0 ? -child : min_label[child]; };
    for (auto& v : raw.vertices) {
        if (v.deco.symmetry != Symmetry::antisymmetric)
            continue;
        std::vector<int> order(v.children.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) { return key(v.children[a]) < key(v.children[b]); });
        for (std::size_t a = 0; a < order.size(); ++a)
            for (std::size_t b = a + 1; b < order.size(); ++b)
                if (order[a] > order[b])
                    sign = -sign;
        std::vector<int> sorted;
        for (int k : order)
            sorted.push_back(v.children[k]);
        v.children = std::move(sorted);
    }

    std::vector<Node> nodes;
    std::vector<int> labels;
    std::vector<int> word;  // vertex indices in preorder
    std::function<void(int)> walk = [&](int child) {
        if (child < 0) {
            nodes.push_back(Node{});
            labels.push_back(-child);
            return;
        }
        word.push_back(child);
        nodes.push_back(raw.vertices[child].deco);
        for (int c : raw.vertices[child].children)
            walk(c);
    };
    walk(raw.root);

    // Koszul sign of moving the vertices from index order into preorder.
    for (std::size_t a = 0; a < word.size(); ++a)
        for (std::size_t b = a + 1; b < word.size(); ++b)
            if (word[a] > word[b] && odd(raw.vertices[word[a]].deco.degree) &&
                odd(raw.vertices[word[b]].deco.degree))
                sign = -sign;

    return {sign, DecoratedTree(std::move(nodes), std::move(labels))};
}

}  // namespace

// ------------------------------------------------------------------ tree

DecoratedTree::DecoratedTree() : nodes_{Node{}}, labels_{1} {}

DecoratedTree::DecoratedTree(std::vector<Node> preorder, std::vector<int> labels)
    : nodes_(std::move(preorder)), labels_(std::move(labels))
{
    // Each vertex of arity a consumes a subtrees; the sequence must close exactly.
    long open = 1;
    std::size_t leaves = 0;
    for (std::size_t k = 0; k < nodes_.size(); ++k) {
        if (open <= 0)
            throw Error("tree: trailing nodes after the root is complete");
        const auto& n = nodes_[k];
        if (n.is_leaf()) {
            if (n.arity != 0)
                throw Error("tree: leaf with nonzero arity");
            ++leaves;
            --open;
        } else {
            if (n.arity < 2)
                throw Error(fmt::format("tree: vertex of arity {} (must be at least 2)", n.arity));
            open += n.arity - 1;
        }
    }
    if (open != 0)
        throw Error("tree: preorder sequence is incomplete");
    if (labels_.size() != leaves)
        throw Error("tree: label count differs from leaf count");
    std::vector<bool> seen(leaves + 1, false);
    for (int l : labels_) {
        if (l < 1 || l > static_cast<int>(leaves) || seen[l])
            throw Error("tree: leaf labels are not a permutation");
        seen[l] = true;
    }
}

DecoratedTree DecoratedTree::corolla(const Generator& g)
{
    std::vector<Node> nodes{Node{g.id, g.arity, g.degree, g.symmetry}};
    std::vector<int> labels;
    for (int k = 1; k <= g.arity; ++k) {
        nodes.push_back(Node{});
        labels.push_back(k);
    }
    return DecoratedTree(std::move(nodes), std::move(labels));
}

int DecoratedTree::vertex_count() const
{
    return static_cast<int>(std::count_if(nodes_.begin(), nodes_.end(), [](const Node& n) { return !n.is_leaf(); }));
}

int DecoratedTree::degree() const
{
    int d = 0;
    for (const auto& n : nodes_)
        d += n.degree;
    return d;
}

std::vector<Node> DecoratedTree::vertices() const
{
    std::vector<Node> out;
    for (const auto& n : nodes_)
        if (!n.is_leaf())
            out.push_back(n);
    return out;
}

bool DecoratedTree::is_canonical() const
{
    auto c = canonical_form(*this);
    return c.sign == 1 && c.tree == *this;
}

SignedTree canonical_form(const DecoratedTree& tree) { return from_raw(to_raw(tree)); }

SignedTree graft(const DecoratedTree& outer, int slot, const DecoratedTree& inner)
{
    const int n_outer = outer.leaf_count();
    const int n_inner = inner.leaf_count();
    if (slot < 1 || slot > n_outer)
        throw Error(fmt::format("graft: slot {} outside 1..{}", slot, n_outer));

    RawTree a = to_raw(outer);
    RawTree b = to_raw(inner);
    const int offset = static_cast<int>(a.vertices.size());

    auto relabel_outer = [&](int child) -> int {
        if (child >= 0)
            return child;
        int l = -child;
        if (l == slot)
            return b.root >= 0 ? b.root + offset : -(slot + (-b.root) - 1);
        return l < slot ? child : -(l + n_inner - 1);
    };
    for (auto& v : a.vertices)
        for (auto& c : v.children)
            c = relabel_outer(c);
    a.root = relabel_outer(a.root);

    for (auto& v : b.vertices) {
        for (auto& c : v.children)
            c = c >= 0 ? c + offset : -(-c + slot - 1);
        a.vertices.push_back(std::move(v));
    }
    return from_raw(std::move(a));
}

SignedTree substitute_vertex(const DecoratedTree& tree, std::size_t vertex, const DecoratedTree& replacement)
{
    RawTree t = to_raw(tree);
    if (vertex >= t.vertices.size())
        throw Error("substitute_vertex: vertex index out of range");
    const auto& old = t.vertices[vertex];
    if (replacement.leaf_count() != old.deco.arity)
        throw Error("substitute_vertex: replacement arity differs from the vertex arity");
    RawTree r = to_raw(replacement);
    if (r.root < 0)
        throw Error("substitute_vertex: replacement must have a vertex");

    const int k = static_cast<int>(vertex);
    const int m = static_cast<int>(r.vertices.size());
    auto shift = [&](int child) -> int {
        if (child < 0)
            return child;
        if (child == k)
            return r.root + k;
        return child < k ? child : child + m - 1;
    };

    RawTree out;
    for (int v = 0; v < k; ++v) {
        out.vertices.push_back(t.vertices[v]);
        for (auto& c : out.vertices.back().children)
            c = shift(c);
    }
    for (auto& rv : r.vertices) {
        RawVertex nv{rv.deco, {}};
        for (int c : rv.children)
            nv.children.push_back(c >= 0 ? c + k : shift(old.children[-c - 1]));
        out.vertices.push_back(std::move(nv));
    }
    for (int v = k + 1; v < static_cast<int>(t.vertices.size()); ++v) {
        out.vertices.push_back(t.vertices[v]);
        for (auto& c : out.vertices.back().children)
            c = shift(c);
    }
    out.root = shift(t.root);
    return from_raw(std::move(out));
}

// ----------------------------------------------------------- enumeration

namespace {

void compositions(int n, int k, std::vector<int>& current, std::vector<std::vector<int>>& out)
{
    if (k == 0) {
        if (n == 0)
            out.push_back(current);
        return;
    }
    for (int first = 1; first <= n - (k - 1); ++first) {
        current.push_back(first);
        compositions(n - first, k - 1, current, out);
        current.pop_back();
    }
}

// Preorder node sequences of planar trees with n leaves.
std::vector<std::vector<Node>> planar_shapes(int n, std::span<const Generator> gens)
{
    if (n == 1)
        return {{Node{}}};
    std::vector<std::vector<Node>> out;
    for (const auto& g : gens) {
        if (g.arity > n)
            continue;
        std::vector<std::vector<int>> splits;
        std::vector<int> cur;
        compositions(n, g.arity, cur, splits);
        for (const auto& split : splits) {
            std::vector<std::vector<std::vector<Node>>> options;
            for (int part : split)
                options.push_back(planar_shapes(part, gens));
            std::vector<std::size_t> pick(split.size(), 0);
            bool empty = std::any_of(options.begin(), options.end(), [](const auto& o) { return o.empty(); });
            while (!empty) {
                std::vector<Node> seq{Node{g.id, g.arity, g.degree, g.symmetry}};
                for (std::size_t c = 0; c < split.size(); ++c)
                    seq.insert(seq.end(), options[c][pick[c]].begin(), options[c][pick[c]].end());
                out.push_back(std::move(seq));
                std::size_t c = split.size();
                while (c-- > 0) {
                    if (++pick[c] < options[c].size())
                        break;
                    pick[c] = 0;
                }
                if (c == static_cast<std::size_t>(-1))
                    break;
            }
        }
    }
    return out;
}

// Set partitions of `items` into exactly k blocks; blocks ordered by their
// smallest element, which is the canonical child order.
void set_partitions(const std::vector<int>& items, std::size_t next, std::size_t k,
                    std::vector<std::vector<int>>& blocks, std::vector<std::vector<std::vector<int>>>& out)
{
    if (next == items.size()) {
        if (blocks.size() == k)
            out.push_back(blocks);
        return;
    }
    if (blocks.size() + (items.size() - next) < k)
        return;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        blocks[b].push_back(items[next]);
        set_partitions(items, next + 1, k, blocks, out);
        blocks[b].pop_back();
    }
    if (blocks.size() < k) {
        blocks.push_back({items[next]});
        set_partitions(items, next + 1, k, blocks, out);
        blocks.pop_back();
    }
}

struct LabeledShape {
    std::vector<Node> nodes;
    std::vector<int> labels;
};

std::vector<LabeledShape> labeled_shapes(const std::vector<int>& leaves, std::span<const Generator> gens)
{
    if (leaves.size() == 1)
        return {{{Node{}}, {leaves.front()}}};
    std::vector<LabeledShape> out;
    for (const auto& g : gens) {
        if (g.arity > static_cast<int>(leaves.size()))
            continue;
        std::vector<std::vector<std::vector<int>>> parts;
        std::vector<std::vector<int>> blocks;
        set_partitions(leaves, 0, static_cast<std::size_t>(g.arity), blocks, parts);
        for (const auto& partition : parts) {
            std::vector<std::vector<LabeledShape>> options;
            for (const auto& block : partition)
                options.push_back(labeled_shapes(block, gens));
            if (std::any_of(options.begin(), options.end(), [](const auto& o) { return o.empty(); }))
                continue;
            std::vector<std::size_t> pick(partition.size(), 0);
            while (true) {
                LabeledShape s{{Node{g.id, g.arity, g.degree, g.symmetry}}, {}};
                for (std::size_t c = 0; c < partition.size(); ++c) {
                    const auto& o = options[c][pick[c]];
                    s.nodes.insert(s.nodes.end(), o.nodes.begin(), o.nodes.end());
                    s.labels.insert(s.labels.end(), o.labels.begin(), o.labels.end());
                }
                out.push_back(std::move(s));
                std::size_t c = partition.size();
                while (c-- > 0) {
                    if (++pick[c] < options[c].size())
                        break;
                    pick[c] = 0;
                }
                if (c == static_cast<std::size_t>(-1))
                    break;
            }
        }
    }
    return out;
}

}  // namespace

std::vector<DecoratedTree> enumerate_trees(int n, std::span<const Generator> generators)
{
    if (n < 1)
        throw Error("enumerate_trees: n must be positive");
    std::vector<int> identity(n);
    std::iota(identity.begin(), identity.end(), 1);
    std::vector<DecoratedTree> out;
    for (auto& shape : planar_shapes(n, generators))
        out.emplace_back(std::move(shape), identity);
    return out;
}

std::vector<DecoratedTree> enumerate_trees(int n, const std::set<int>& arities)
{
    std::vector<Generator> gens;
    for (int a : arities) {
        if (a < 2)
            throw Error("enumerate_trees: generator arities must be at least 2");
        gens.push_back({a - 2, a, a - 2, Symmetry::planar});
    }
    return enumerate_trees(n, gens);
}

std::vector<DecoratedTree> enumerate_labeled_trees(int n, std::span<const Generator> generators)
{
    if (n < 1)
        throw Error("enumerate_labeled_trees: n must be positive");
    for (const auto& g : generators)
        if (g.symmetry != Symmetry::antisymmetric)
            throw Error("enumerate_labeled_trees: generators must be antisymmetric");
    std::vector<int> leaves(n);
    std::iota(leaves.begin(), leaves.end(), 1);
    std::vector<DecoratedTree> out;
    for (auto& s : labeled_shapes(leaves, generators))
        out.emplace_back(std::move(s.nodes), std::move(s.labels));
    return out;
}

// ------------------------------------------------------------ signs

std::vector<Unshuffle> unshuffles(int i, int n)
{
    if (n < 2 || i < 1 || i > n - 1)
        throw Error(fmt::format("unshuffles: block size {} outside 1..{}", i, n - 1));
    std::vector<Unshuffle> out;
    std::vector<bool> choose(n, false);
    std::fill(choose.begin(), choose.begin() + i, true);
    // prev_permutation on a leading-true mask walks combinations lexicographically
    do {
        Unshuffle u{{}, i};
        for (int k = 0; k < n; ++k)
            if (choose[k])
                u.sigma.push_back(k + 1);
        for (int k = 0; k < n; ++k)
            if (!choose[k])
                u.sigma.push_back(k + 1);
        out.push_back(std::move(u));
    } while (std::prev_permutation(choose.begin(), choose.end()));
    return out;
}

PermutationSigns koszul_sign(std::span<const int> sigma, std::span<const int> degrees)
{
    if (sigma.size() != degrees.size())
        throw Error("koszul_sign: permutation and degree list differ in length");
    PermutationSigns s;
    for (std::size_t p = 0; p < sigma.size(); ++p)
        for (std::size_t q = p + 1; q < sigma.size(); ++q)
            if (sigma[p] > sigma[q]) {
                s.signature = -s.signature;
                if (odd(degrees[sigma[p] - 1]) && odd(degrees[sigma[q] - 1]))
                    s.koszul = -s.koszul;
            }
    s.chi = s.signature * s.koszul;
    return s;
}

// ------------------------------------------------------------ printing

std::string vertex_name(const Node& n)
{
    std::string base = fmt::format("{}{}", n.symmetry == Symmetry::planar ? "m" : "l", n.arity);
    if (n.generator != n.arity - 2)
        base += fmt::format("_{}", n.generator);
    return base;
}

std::string to_expression(const DecoratedTree& t)
{
    const auto& nodes = t.nodes();
    const auto& labels = t.labels();
    std::size_t pos = 0;
    std::size_t leaf = 0;
    std::function<std::string()> go = [&]() -> std::string {
        const Node& n = nodes[pos++];
        if (n.is_leaf())
            return std::to_string(labels[leaf++]);
        std::string s = vertex_name(n) + "(";
        for (int k = 0; k < n.arity; ++k) {
            if (k)
                s += ",";
            s += go();
        }
        return s + ")";
    };
    return go();
}

std::string pretty(const DecoratedTree& t)
{
    const auto& nodes = t.nodes();
    const auto& labels = t.labels();
    std::size_t pos = 0;
    std::size_t leaf = 0;
    std::string out;
    std::function<void(const std::string&, bool, bool)> go = [&](const std::string& prefix, bool last, bool root) {
        const Node& n = nodes[pos++];
        out += root ? "" : prefix + (last ? "`-- " : "+-- ");
        out += n.is_leaf() ? std::to_string(labels[leaf++]) : vertex_name(n);
        out += '\n';
        if (n.is_leaf())
            return;
        std::string child_prefix = root ? "" : prefix + (last ? "    " : "|   ");
        for (int k = 0; k < n.arity; ++k)
            go(child_prefix, k + 1 == n.arity, false);
    };
    go("", true, true);
    return out;
}

}  // namespace hoalg::trees
