#include "report.hpp"

#include <sstream>

namespace coembed {

std::string to_string(ReportStatus status)
{
    switch (status) {
    case ReportStatus::ok:
        return "ok";
    case ReportStatus::infeasible_within_bound:
        return "infeasible-within-bound";
    case ReportStatus::axiom_failure:
        return "axiom-failure";
    case ReportStatus::error:
        return "error";
    }
    return "error";
}

int exit_code(ReportStatus status)
{
    switch (status) {
    case ReportStatus::ok:
        return 0;
    case ReportStatus::infeasible_within_bound:
    case ReportStatus::axiom_failure:
        return 1;
    case ReportStatus::error:
        return 2;
    }
    return 2;
}

namespace io {

namespace {

bool is_scalar(const Json& v) { return !v.is_object() && !v.is_array(); }

std::string scalar_text(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void render(std::ostringstream& out, const Json& v, int indent)
{
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    if (v.is_object()) {
        for (const auto& [key, child] : v.items()) {
            if (is_scalar(child)) {
                out << pad << key << ": " << scalar_text(child) << '\n';
            } else if (child.empty()) {
                out << pad << key << ": " << (child.is_array() ? "(none)" : "{}") << '\n';
            } else {
                out << pad << key << ":\n";
                render(out, child, indent + 1);
            }
        }
        return;
    }
    if (v.is_array()) {
        for (const auto& child : v) {
            if (is_scalar(child)) {
                out << pad << "- " << scalar_text(child) << '\n';
            } else {
                out << pad << "-\n";
                render(out, child, indent + 1);
            }
        }
        return;
    }
    out << pad << scalar_text(v) << '\n';
}

std::string command_line(const Report& report)
{
    std::string line = report.command;
    for (const auto& a : report.arguments) {
        line += " " + a;
    }
    return line;
}

} // namespace

Json report_json(const Report& report)
{
    Json out = Json::object();
    out["schema_version"] = schema_version;
    out["command"] = command_line(report);
    out["status"] = to_string(report.status);
    out["exact"] = true;
    out["payload"] = report.payload;
    return out;
}

std::string render_json(const Report& report) { return report_json(report).dump(2) + "\n"; }

std::string render_text(const Report& report)
{
    std::ostringstream out;
    out << "command: " << command_line(report) << '\n';
    out << "status: " << to_string(report.status) << '\n';
    render(out, report.payload, 0);
    return out.str();
}

} // namespace io

} // namespace coembed
