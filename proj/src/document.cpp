#include "hoalg/document.hpp"

#include <fmt/format.h>

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace hoalg::document {

ParseError::ParseError(std::string source, int line, std::string field, const std::string& message)
    : Error(line > 0 ? fmt::format("{}:{}: {}: {}", source, line, field, message)
                     : fmt::format("{}: {}: {}", source, field, message)),
      source_(std::move(source)), line_(line), field_(std::move(field))
{
}

namespace {

std::string_view trim(std::string_view s)
{
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos)
        return {};
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_words(std::string_view s)
{
    std::vector<std::string> out;
    std::istringstream in{std::string(s)};
    std::string w;
    while (in >> w)
        out.push_back(w);
    return out;
}

bool parse_int(std::string_view s, int& out)
{
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && p == s.data() + s.size();
}

enum class Section { none, basis, differential, operation, target_basis, target_differential, target_operation, morphism };

struct Cursor {
    Section section = Section::none;
    int arity = 0;
    std::string field;
};

std::vector<Entry>* entry_list(AlgebraDocument& doc, const Cursor& c)
{
    switch (c.section) {
    case Section::differential:
        return &doc.differential;
    case Section::operation:
        return &doc.operations[c.arity];
    case Section::target_differential:
        return &doc.target_differential;
    case Section::target_operation:
        return &doc.target_operations[c.arity];
    case Section::morphism:
        return &doc.morphism[c.arity];
    default:
        return nullptr;
    }
}

Entry parse_entry(std::string_view body, const std::string& source, int line, const std::string& field)
{
    auto arrow = body.find("->");
    if (arrow == std::string_view::npos)
        throw ParseError(source, line, field, "expected 'inputs -> output : scalar'");
    auto colon = body.find(':', arrow);
    if (colon == std::string_view::npos)
        throw ParseError(source, line, field, "missing ': scalar' after the output");
    Entry e;
    e.line = line;
    e.inputs = split_words(body.substr(0, arrow));
    auto out = split_words(body.substr(arrow + 2, colon - arrow - 2));
    if (out.size() != 1)
        throw ParseError(source, line, field, "expected exactly one output name");
    e.output = out.front();
    auto scalar = trim(body.substr(colon + 1));
    try {
        e.value = parse_scalar(scalar);
    } catch (const Error& err) {
        throw ParseError(source, line, field, err.what());
    }
    return e;
}

std::string entry_text(const Entry& e)
{
    std::string ins;
    for (const auto& i : e.inputs)
        ins += i + " ";
    return fmt::format("  {}-> {} : {}\n", ins, e.output, to_string(e.value));
}

std::map<std::string, int> degree_table(const std::vector<exactlin::BasisElement>& basis, const std::string& source,
                                        const std::string& field)
{
    std::map<std::string, int> table;
    for (const auto& b : basis) {
        if (b.name.empty())
            throw ParseError(source, 0, field, "empty basis name");
        if (!table.emplace(b.name, b.degree).second)
            throw ParseError(source, 0, field, fmt::format("duplicate basis name '{}'", b.name));
    }
    return table;
}

// Checks one table of entries: input count, names and degree shift.
void validate_entries(const std::vector<Entry>& entries, int inputs, int shift, const std::map<std::string, int>& in_deg,
                      const std::map<std::string, int>& out_deg, const std::string& source, const std::string& field)
{
    std::set<std::pair<std::vector<std::string>, std::string>> seen;
    for (const auto& e : entries) {
        if (static_cast<int>(e.inputs.size()) != inputs)
            throw ParseError(source, e.line, field,
                             fmt::format("expected {} input(s), found {}", inputs, e.inputs.size()));
        int total = shift;
        for (const auto& name : e.inputs) {
            auto it = in_deg.find(name);
            if (it == in_deg.end())
                throw ParseError(source, e.line, field, fmt::format("unknown basis name '{}'", name));
            total += it->second;
        }
        auto out = out_deg.find(e.output);
        if (out == out_deg.end())
            throw ParseError(source, e.line, field, fmt::format("unknown basis name '{}'", e.output));
        if (out->second != total)
            throw ParseError(source, e.line, field,
                             fmt::format("output '{}' has degree {}, expected {}", e.output, out->second, total));
        if (e.value == 0)
            throw ParseError(source, e.line, field, "zero coefficients are not listed");
        if (!seen.emplace(e.inputs, e.output).second)
            throw ParseError(source, e.line, field, "duplicate entry");
    }
}

exactlin::GradedMap build_map(const std::vector<Entry>& entries, const exactlin::GradedSpace& base, int n,
                              const exactlin::GradedSpace& target, int degree)
{
    auto source = exactlin::GradedSpace::tensor_power(base, n);
    exactlin::GradedMap m(source, target, degree);
    for (const auto& e : entries) {
        std::vector<std::size_t> digits;
        for (const auto& name : e.inputs)
            digits.push_back(*base.find(name));
        m.add_to_entry(*target.find(e.output), source.encode(digits), e.value);
    }
    return m;
}

std::vector<Entry> entries_of(const exactlin::GradedMap& m)
{
    std::vector<Entry> out;
    for (const auto& [col, v] : m.columns()) {
        auto digits = m.source().decode(col);
        std::vector<std::string> inputs;
        for (std::size_t k = 0; k < digits.size(); ++k)
            inputs.push_back(m.source().factor(k).name(digits[k]));
        for (const auto& [row, x] : v)
            out.push_back({inputs, m.target().name(row), x, 0});
    }
    return out;
}

std::vector<exactlin::BasisElement> basis_of(const exactlin::GradedSpace& s)
{
    return s.dim() == 0 ? std::vector<exactlin::BasisElement>{} : s.basis();
}

}  // namespace

AlgebraDocument parse_document(std::string_view text, const std::string& source)
{
    AlgebraDocument doc;
    bool have_kind = false;
    bool have_arity = false;
    Cursor cur;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view raw = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string_view::npos)
            raw = raw.substr(0, hash);
        auto line = trim(raw);
        if (line.empty())
            continue;
        bool indented = raw.front() == ' ' || raw.front() == '\t';

        if (!indented) {
            auto colon = line.find(':');
            if (colon == std::string_view::npos)
                throw ParseError(source, line_no, "header", fmt::format("expected 'key:' or 'key: value', got '{}'", line));
            auto key = trim(line.substr(0, colon));
            auto value = trim(line.substr(colon + 1));
            auto words = split_words(key);
            cur = Cursor{};
            cur.field = std::string(key);
            if (key == "kind") {
                if (value != "ainf" && value != "linf")
                    throw ParseError(source, line_no, "kind", fmt::format("expected ainf or linf, got '{}'", value));
                doc.kind = std::string(value);
                have_kind = true;
            } else if (key == "max-arity") {
                if (!parse_int(value, doc.max_arity) || doc.max_arity < 1)
                    throw ParseError(source, line_no, "max-arity", fmt::format("expected a positive integer, got '{}'", value));
                have_arity = true;
            } else if (!value.empty()) {
                throw ParseError(source, line_no, cur.field, "section headers take no value on the same line");
            } else if (key == "basis") {
                cur.section = Section::basis;
            } else if (key == "differential") {
                cur.section = Section::differential;
            } else if (key == "target-basis") {
                cur.section = Section::target_basis;
            } else if (key == "target-differential") {
                cur.section = Section::target_differential;
            } else if (words.size() == 2 &&
                       (words[0] == "operation" || words[0] == "target-operation" || words[0] == "morphism")) {
                if (!parse_int(words[1], cur.arity) || cur.arity < 1)
                    throw ParseError(source, line_no, cur.field, fmt::format("bad arity '{}'", words[1]));
                if (have_arity && words[0] != "morphism" && (cur.arity < 2 || cur.arity > doc.max_arity))
                    throw ParseError(source, line_no, cur.field, fmt::format("arity outside 2..{}", doc.max_arity));
                cur.section = words[0] == "operation"          ? Section::operation
                              : words[0] == "target-operation" ? Section::target_operation
                                                               : Section::morphism;
                entry_list(doc, cur);  // an empty section still records the arity
            } else {
                throw ParseError(source, line_no, cur.field, "unknown section");
            }
            continue;
        }

        switch (cur.section) {
        case Section::none:
            throw ParseError(source, line_no, "entry", "indented line outside a section");
        case Section::basis:
        case Section::target_basis: {
            auto words = split_words(line);
            int degree = 0;
            if (words.size() != 2 || !parse_int(words[1], degree))
                throw ParseError(source, line_no, cur.field, "expected 'name degree'");
            if (words[0] == "->" || words[0].find(':') != std::string::npos)
                throw ParseError(source, line_no, cur.field, fmt::format("invalid basis name '{}'", words[0]));
            auto& list = cur.section == Section::basis ? doc.basis : doc.target_basis;
            for (const auto& b : list)
                if (b.name == words[0])
                    throw ParseError(source, line_no, cur.field, fmt::format("duplicate basis name '{}'", words[0]));
            list.push_back({words[0], degree});
            break;
        }
        default:
            entry_list(doc, cur)->push_back(parse_entry(line, source, line_no, cur.field));
        }
    }
    if (!have_kind)
        throw ParseError(source, 0, "kind", "missing 'kind:' line");
    if (!have_arity)
        throw ParseError(source, 0, "max-arity", "missing 'max-arity:' line");
    validate(doc, source);
    return doc;
}

void validate(const AlgebraDocument& doc, const std::string& source)
{
    if (doc.kind != "ainf" && doc.kind != "linf")
        throw ParseError(source, 0, "kind", fmt::format("expected ainf or linf, got '{}'", doc.kind));
    if (doc.max_arity < 1)
        throw ParseError(source, 0, "max-arity", "must be positive");
    auto deg = degree_table(doc.basis, source, "basis");
    validate_entries(doc.differential, 1, -1, deg, deg, source, "differential");
    for (const auto& [n, entries] : doc.operations) {
        auto field = fmt::format("operation {}", n);
        if (n < 2 || n > doc.max_arity)
            throw ParseError(source, entries.empty() ? 0 : entries.front().line, field,
                             fmt::format("arity outside 2..{}", doc.max_arity));
        validate_entries(entries, n, n - 2, deg, deg, source, field);
    }
    bool has_target = !doc.target_basis.empty() || !doc.target_differential.empty() ||
                      !doc.target_operations.empty() || !doc.morphism.empty();
    if (!has_target)
        return;
    if (doc.kind != "ainf")
        throw ParseError(source, 0, "morphism", "morphisms are only supported for ainf documents");
    if (doc.target_basis.empty())
        throw ParseError(source, 0, "target-basis", "a morphism needs a target basis");
    auto tdeg = degree_table(doc.target_basis, source, "target-basis");
    validate_entries(doc.target_differential, 1, -1, tdeg, tdeg, source, "target-differential");
    for (const auto& [n, entries] : doc.target_operations) {
        auto field = fmt::format("target-operation {}", n);
        if (n < 2 || n > doc.max_arity)
            throw ParseError(source, 0, field, fmt::format("arity outside 2..{}", doc.max_arity));
        validate_entries(entries, n, n - 2, tdeg, tdeg, source, field);
    }
    for (const auto& [n, entries] : doc.morphism) {
        auto field = fmt::format("morphism {}", n);
        if (n > doc.max_arity)
            throw ParseError(source, 0, field, fmt::format("arity outside 1..{}", doc.max_arity));
        validate_entries(entries, n, n - 1, deg, tdeg, source, field);
    }
}

std::string serialize_document(const AlgebraDocument& doc)
{
    std::string out = fmt::format("kind: {}\nmax-arity: {}\n", doc.kind, doc.max_arity);
    auto basis = [&](const char* header, const std::vector<exactlin::BasisElement>& b) {
        out += fmt::format("{}:\n", header);
        for (const auto& e : b)
            out += fmt::format("  {} {}\n", e.name, e.degree);
    };
    auto table = [&](const std::string& header, const std::vector<Entry>& entries) {
        out += header + ":\n";
        for (const auto& e : entries)
            out += entry_text(e);
    };
    basis("basis", doc.basis);
    table("differential", doc.differential);
    for (const auto& [n, entries] : doc.operations)
        table(fmt::format("operation {}", n), entries);
    if (!doc.target_basis.empty()) {
        basis("target-basis", doc.target_basis);
        table("target-differential", doc.target_differential);
        for (const auto& [n, entries] : doc.target_operations)
            table(fmt::format("target-operation {}", n), entries);
    }
    for (const auto& [n, entries] : doc.morphism)
        table(fmt::format("morphism {}", n), entries);
    return out;
}

AlgebraDocument load_document(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError(path, 0, "file", "cannot open");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_document(buf.str(), path);
}

void save_document(const AlgebraDocument& doc, const std::string& path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error(fmt::format("{}: cannot write", path));
    out << serialize_document(doc);
    if (!out)
        throw Error(fmt::format("{}: write failed", path));
}

namespace {

template <class Algebra>
Algebra to_algebra(const AlgebraDocument& doc, const char* kind)
{
    if (doc.kind != kind)
        throw Error(fmt::format("document kind is {}, expected {}", doc.kind, kind));
    validate(doc);
    exactlin::GradedSpace space(doc.basis);
    auto d = build_map(doc.differential, space, 1, space, -1);
    std::map<int, exactlin::GradedMap> ops;
    for (const auto& [n, entries] : doc.operations)
        ops.emplace(n, build_map(entries, space, n, space, n - 2));
    // A one-factor tensor power is the space itself, so d is already an endomorphism.
    return Algebra(space, std::move(d), std::move(ops), doc.max_arity);
}

}  // namespace

halg::AInfAlgebra to_ainf(const AlgebraDocument& doc) { return to_algebra<halg::AInfAlgebra>(doc, "ainf"); }
halg::LInfAlgebra to_linf(const AlgebraDocument& doc) { return to_algebra<halg::LInfAlgebra>(doc, "linf"); }

AlgebraDocument from_algebra(const halg::OperationFamily& a, const std::string& kind)
{
    AlgebraDocument doc;
    doc.kind = kind;
    doc.max_arity = a.max_arity;
    doc.basis = basis_of(a.space);
    doc.differential = entries_of(a.d);
    for (const auto& [n, op] : a.ops)
        if (!op.is_zero())
            doc.operations.emplace(n, entries_of(op));
    return doc;
}

AlgebraDocument from_transfer(const transfer::TransferResult& r)
{
    auto doc = from_algebra(r.transferred, "ainf");
    const auto& target = r.morphism.target;
    doc.target_basis = basis_of(target.space);
    doc.target_differential = entries_of(target.d);
    for (const auto& [n, op] : target.ops)
        if (!op.is_zero())
            doc.target_operations.emplace(n, entries_of(op));
    for (const auto& [n, f] : r.morphism.components)
        if (!f.is_zero())
            doc.morphism.emplace(n, entries_of(f));
    return doc;
}

halg::AInfMorphism to_morphism(const AlgebraDocument& doc)
{
    if (doc.target_basis.empty())
        throw Error("document has no morphism target");
    auto source = to_ainf(doc);
    AlgebraDocument target_doc;
    target_doc.kind = "ainf";
    target_doc.max_arity = doc.max_arity;
    target_doc.basis = doc.target_basis;
    target_doc.differential = doc.target_differential;
    target_doc.operations = doc.target_operations;
    auto target = to_ainf(target_doc);
    std::map<int, exactlin::GradedMap> components;
    for (const auto& [n, entries] : doc.morphism)
        components.emplace(n, build_map(entries, source.space, n, target.space, n - 1));
    return halg::AInfMorphism{std::move(source), std::move(target), std::move(components)};
}

}  // namespace hoalg::document
