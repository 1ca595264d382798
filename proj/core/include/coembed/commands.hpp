#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace coembed {

enum class ReportStatus { ok, infeasible_within_bound, axiom_failure, error };

std::string to_string(ReportStatus status);

// 0 ok, 1 infeasible-within-bound or axiom-failure, 2 error.
int exit_code(ReportStatus status);

struct CommandResult {
    ReportStatus status = ReportStatus::ok;
    int exit_code = 0;
    // Rendered report (JSON or text, as requested).
    std::string output;
};

// args excludes the program name, e.g. {"demo", "usb2", "--output", "text"}.
CommandResult run_command(const std::vector<std::string>& args);

// Command-line entry point; writes the report to out and usage errors to err.
int run_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace coembed
