#include "hoalg/cli.hpp"

#include "hoalg/document.hpp"
#include "hoalg/operad.hpp"
#include "hoalg/transfer.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include <algorithm>
#include <optional>
#include <ostream>

namespace hoalg::cli {

namespace {

constexpr std::size_t shown_residual_trees = 5;

struct Options {
    std::string family = "ainf";
    int max_arity = 0;
    int arity = 0;
    std::optional<int> cap;
    std::string format = "text";
    std::string file;
    std::string out_file;
};

bool machine(const Options& o) { return o.format == "machine"; }

void require_cap(int requested, int default_cap, const std::optional<int>& cap, const std::string& what)
{
    int limit = cap.value_or(default_cap);
    if (requested > limit)
        throw Error(fmt::format("arity {} exceeds the cap {} for {}; pass --cap to raise it", requested, limit, what));
}

int family_cap(operad::Family f)
{
    Caps caps;
    return f == operad::Family::ainf ? caps.ainf : caps.linf;
}

std::string family_title(operad::Family f) { return f == operad::Family::ainf ? "A(inf)" : "L(inf)"; }

std::string signed_coefficient(const Scalar& c) { return c > 0 ? "+" + to_string(c) : to_string(c); }

std::string indent(const std::string& block, const std::string& prefix)
{
    std::string out;
    std::size_t pos = 0;
    while (pos < block.size()) {
        auto end = block.find('\n', pos);
        if (end == std::string::npos)
            end = block.size();
        out += prefix + block.substr(pos, end - pos) + "\n";
        pos = end + 1;
    }
    return out;
}

// ------------------------------------------------------------ subcommands

int check_dsq(const Options& o, std::ostream& out)
{
    auto family = operad::parse_family(o.family);
    require_cap(o.max_arity, family_cap(family), o.cap, o.family);
    if (o.max_arity < 2)
        throw Error("--max-arity must be at least 2");
    auto op = operad::family_operad(family, o.max_arity);
    auto report = operad::check_d_squared(op, o.max_arity);
    if (machine(o)) {
        for (const auto& e : report.entries)
            fmt::print(out, "dsq-{} {} {} {}\n", o.family, e.arity, e.pass() ? "pass" : "fail", e.residual.size());
    } else {
        fmt::print(out, "{} differential squared, generators up to arity {}\n", family_title(family), o.max_arity);
        for (const auto& e : report.entries) {
            auto name = trees::vertex_name(trees::DecoratedTree::corolla(op.generator(e.generator)).nodes().front());
            fmt::print(out, "  {:<4} arity {}  residual {} terms\n", name, e.arity, e.residual.size());
            std::size_t shown = 0;
            for (const auto& [t, c] : e.residual.terms()) {
                if (shown++ == shown_residual_trees)
                    break;
                fmt::print(out, "      {} {}\n", signed_coefficient(c), trees::to_expression(t));
            }
        }
        fmt::print(out, "{} generators, residual {}: {}\n", report.entries.size(), report.residual_terms(),
                   report.passed() ? "pass" : "FAIL");
    }
    return report.passed() ? ok : check_failed;
}

int diff_table(const Options& o, std::ostream& out)
{
    auto family = operad::parse_family(o.family);
    require_cap(o.arity, family_cap(family) + 1, o.cap, o.family);
    if (o.arity < 2)
        throw Error("--arity must be at least 2");
    auto gen = operad::family_generator(family, o.arity);
    auto name = trees::vertex_name(trees::DecoratedTree::corolla(gen).nodes().front());
    auto diff = operad::generator_diff(family, o.arity);
    if (machine(o)) {
        int k = 0;
        for (const auto& [t, c] : diff.terms())
            fmt::print(out, "term {} {} {}\n", ++k, signed_coefficient(c), trees::to_expression(t));
        return ok;
    }
    fmt::print(out, "d {} = sum of {} terms\n", name, diff.size());
    int k = 0;
    for (const auto& [t, c] : diff.terms()) {
        fmt::print(out, "\n[{}] {} {}\n", ++k, signed_coefficient(c), trees::to_expression(t));
        out << indent(trees::pretty(t), "    ");
    }
    return ok;
}

void print_axiom_report(const halg::AxiomReport& r, const std::string& name, const Options& o, std::ostream& out)
{
    for (const auto& a : r.arities) {
        if (machine(o)) {
            fmt::print(out, "{} {} {} {}\n", name, a.arity, a.pass ? "pass" : "fail", a.residual_entries);
            continue;
        }
        if (a.pass) {
            fmt::print(out, "  n={}  pass\n", a.arity);
        } else if (!a.note.empty()) {
            fmt::print(out, "  n={}  FAIL  {}\n", a.arity, a.note);
        } else {
            fmt::print(out, "  n={}  FAIL  {} residual entries, first at ({} <- {}) = {}\n", a.arity, a.residual_entries,
                       a.first->row_name, a.first->col_name, to_string(a.first->value));
        }
    }
}

int check_algebra(const Options& o, std::ostream& out)
{
    auto doc = document::load_document(o.file);
    int n = o.max_arity > 0 ? o.max_arity : doc.max_arity;
    Caps caps;
    require_cap(n, caps.algebra, o.cap, "algebra checks");
    halg::AxiomReport report;
    if (doc.kind == "ainf")
        report = halg::check_ainf(document::to_ainf(doc), n);
    else
        report = halg::check_linf(document::to_linf(doc), n);
    if (!machine(o))
        fmt::print(out, "{} axioms for {} up to n={}\n", doc.kind == "ainf" ? "A(inf)" : "L(inf)", o.file, n);
    print_axiom_report(report, doc.kind + "-axiom", o, out);
    if (!machine(o)) {
        if (auto f = report.first_failure())
            fmt::print(out, "FAIL: first failure at n={}\n", *f);
        else
            fmt::print(out, "pass: verified to order {}\n", n);
    }
    return report.passed() ? ok : check_failed;
}

int run_transfer(const Options& o, std::ostream& out)
{
    auto doc = document::load_document(o.file);
    int n = o.max_arity > 0 ? o.max_arity : 5;
    Caps caps;
    require_cap(n, caps.algebra, o.cap, "transfer");
    auto result = transfer::transfer(document::to_ainf(doc), n);
    auto report = transfer::verify_transfer(result, n, n);
    auto written = document::from_transfer(result);
    if (machine(o)) {
        print_axiom_report(report.ainf, "transfer-ainf", o, out);
        print_axiom_report(report.morphism, "transfer-morphism", o, out);
        fmt::print(out, "transfer-quasi-iso 1 {} 0\n", report.quasi_isomorphism ? "pass" : "fail");
    } else {
        fmt::print(out, "homology: {} classes\n", result.transferred.space.dim());
        fmt::print(out, "transferred A(inf) axioms up to n={}\n", n);
        print_axiom_report(report.ainf, "transfer-ainf", o, out);
        fmt::print(out, "morphism axioms up to n={}\n", n);
        print_axiom_report(report.morphism, "transfer-morphism", o, out);
        fmt::print(out, "f1 homology isomorphism: {}\n", report.quasi_isomorphism ? "pass" : "FAIL");
        fmt::print(out, "{}\n", report.passed() ? "pass" : "FAIL");
    }
    if (!o.out_file.empty())
        document::save_document(written, o.out_file);
    else if (!machine(o))
        out << "\n" << document::serialize_document(written);
    return report.passed() ? ok : check_failed;
}

int homology(const Options& o, std::ostream& out)
{
    auto family = operad::parse_family(o.family);
    Caps caps;
    require_cap(o.arity, caps.homology, o.cap, "homology");
    if (o.arity < 2)
        throw Error("--arity must be at least 2");
    auto betti = operad::arity_homology(operad::family_operad(family, o.arity), o.arity);
    if (!machine(o))
        fmt::print(out, "{} arity {} homology\n", family_title(family), o.arity);
    for (const auto& b : betti) {
        if (machine(o))
            fmt::print(out, "betti {} {} {}\n", o.arity, b.degree, b.dimension);
        else
            fmt::print(out, "  degree {}: {}\n", b.degree, b.dimension);
    }
    return ok;
}

int minimality(const Options& o, std::ostream& out)
{
    auto family = operad::parse_family(o.family);
    require_cap(o.max_arity, family_cap(family) + 1, o.cap, o.family);
    if (o.max_arity < 2)
        throw Error("--max-arity must be at least 2");
    auto op = operad::family_operad(family, o.max_arity);
    std::size_t indecomposable = 0;
    for (const auto& g : op.generators())
        for (const auto& [t, c] : op.differential(g.id).terms())
            if (t.vertex_count() < 2)
                ++indecomposable;
    bool minimal = operad::is_minimal(op);
    if (machine(o))
        fmt::print(out, "minimality {} {} {}\n", o.max_arity, minimal ? "pass" : "fail", indecomposable);
    else
        fmt::print(out, "{} up to arity {}: {}\n", family_title(family), o.max_arity,
                   minimal ? "minimal (every differential term is decomposable)" : "NOT minimal");
    return minimal ? ok : check_failed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Operadic homotopy algebra: A(inf)/L(inf) differentials, algebra checks, homotopy transfer", "hoalg"};
    app.require_subcommand(1);
    Options o;
    auto family_opt = [&](CLI::App* sub) {
        sub->add_option("--family", o.family, "ainf or linf")->check(CLI::IsMember({"ainf", "linf"}))->required();
    };
    auto format_opt = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "text or machine")->check(CLI::IsMember({"text", "machine"}));
    };
    auto cap_opt = [&](CLI::App* sub) { sub->add_option("--cap", o.cap, "raise the arity cap"); };

    auto* dsq = app.add_subcommand("check-dsq", "check that the generator differential squares to zero");
    family_opt(dsq);
    dsq->add_option("--max-arity", o.max_arity, "largest generator arity")->required();
    format_opt(dsq);
    cap_opt(dsq);

    auto* table = app.add_subcommand("diff-table", "list the terms of the differential of one generator");
    family_opt(table);
    table->add_option("--arity", o.arity, "generator arity")->required();
    format_opt(table);
    cap_opt(table);

    auto* algebra = app.add_subcommand("check-algebra", "check the A(inf) or L(inf) axioms of an algebra file");
    algebra->add_option("file", o.file, "algebra document")->required();
    algebra->add_option("--max-arity", o.max_arity, "check up to this arity (default: the file's max-arity)");
    format_opt(algebra);
    cap_opt(algebra);

    auto* xfer = app.add_subcommand("transfer", "transfer an A(inf) structure to homology and verify it");
    xfer->add_option("file", o.file, "algebra document")->required();
    xfer->add_option("--max-arity", o.max_arity, "largest transferred arity (default 5)");
    xfer->add_option("--out", o.out_file, "write the transferred algebra and morphism here");
    format_opt(xfer);
    cap_opt(xfer);

    auto* hom = app.add_subcommand("homology", "homology of one arity of the operad");
    family_opt(hom);
    hom->add_option("--arity", o.arity, "arity")->required();
    format_opt(hom);
    cap_opt(hom);

    auto* mini = app.add_subcommand("minimality", "check that every differential term is decomposable");
    family_opt(mini);
    mini->add_option("--max-arity", o.max_arity, "largest generator arity")->required();
    format_opt(mini);
    cap_opt(mini);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? ok : usage_error;
    }

    try {
        if (dsq->parsed())
            return check_dsq(o, out);
        if (table->parsed())
            return diff_table(o, out);
        if (algebra->parsed())
            return check_algebra(o, out);
        if (xfer->parsed())
            return run_transfer(o, out);
        if (hom->parsed())
            return homology(o, out);
        if (mini->parsed())
            return minimality(o, out);
    } catch (const Error& e) {
        fmt::print(err, "error: {}\n", e.what());
        return usage_error;
    }
    return usage_error;
}

}  // namespace hoalg::cli
