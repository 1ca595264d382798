#pragma once

#include "coembed/commands.hpp"

#include "input.hpp"

#include <string>
#include <vector>

namespace coembed::io {

inline constexpr int schema_version = 1;

struct Report {
    std::string command;
    std::vector<std::string> arguments;
    ReportStatus status = ReportStatus::ok;
    Json payload = Json::object();
};

Json report_json(const Report& report);
std::string render_json(const Report& report);
std::string render_text(const Report& report);

} // namespace coembed::io
