#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace coembed {

// Example inputs compiled into the library, keyed by demo name.
const std::vector<std::pair<std::string_view, std::string_view>>& fixture_sources();

std::optional<std::string_view> fixture_source(std::string_view name);
std::vector<std::string> fixture_names();

} // namespace coembed
