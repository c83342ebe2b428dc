#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hoalg::cli {

/// Exit statuses of run().
enum Status : int { ok = 0, check_failed = 1, usage_error = 2 };

/// Largest arities accepted without --cap.
struct Caps {
    int ainf = 6;
    int linf = 5;
    int homology = 5;
    int algebra = 6;
};

/// Runs one command line (without the program name). Reports go to out,
/// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hoalg::cli
