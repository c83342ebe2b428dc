#pragma once

// Plain-text algebra documents. The grammar is in docs/FORMAT.md.

#include "hoalg/halg.hpp"
#include "hoalg/transfer.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace hoalg::document {

/// Parse or validation failure with its location.
class ParseError : public Error {
public:
    ParseError(std::string source, int line, std::string field, const std::string& message);

    const std::string& source() const { return source_; }
    int line() const { return line_; }
    const std::string& field() const { return field_; }

private:
    std::string source_;
    int line_;
    std::string field_;
};

struct Entry {
    std::vector<std::string> inputs;
    std::string output;
    Scalar value;
    int line = 0;  // 0 when not read from text

    bool operator==(const Entry& o) const { return inputs == o.inputs && output == o.output && value == o.value; }
};

struct AlgebraDocument {
    std::string kind = "ainf";  // ainf | linf
    int max_arity = 2;
    std::vector<exactlin::BasisElement> basis;
    std::vector<Entry> differential;
    std::map<int, std::vector<Entry>> operations;
    // Transfer output only: the complex the morphism lands in.
    std::vector<exactlin::BasisElement> target_basis;
    std::vector<Entry> target_differential;
    std::map<int, std::vector<Entry>> target_operations;
    std::map<int, std::vector<Entry>> morphism;

    bool operator==(const AlgebraDocument&) const = default;
};

/// Parses and validates. `source` names the input in diagnostics.
AlgebraDocument parse_document(std::string_view text, const std::string& source = "<input>");
std::string serialize_document(const AlgebraDocument& doc);

AlgebraDocument load_document(const std::string& path);
void save_document(const AlgebraDocument& doc, const std::string& path);

/// Checks names, arities and degree homogeneity. Throws ParseError.
void validate(const AlgebraDocument& doc, const std::string& source = "<input>");

halg::AInfAlgebra to_ainf(const AlgebraDocument& doc);
halg::LInfAlgebra to_linf(const AlgebraDocument& doc);

AlgebraDocument from_algebra(const halg::OperationFamily& a, const std::string& kind);
/// The transferred algebra, with the source complex as target and the
/// morphism components.
AlgebraDocument from_transfer(const transfer::TransferResult& r);

/// The morphism stored in a transfer document.
halg::AInfMorphism to_morphism(const AlgebraDocument& doc);

}  // namespace hoalg::document
