#pragma once

#include <string>

#include <json.hpp>

#include "nell/cli/commands.hpp"

namespace nell::cli {

nlohmann::json to_json(const CommandResult& r);
/// Inverse of to_json. Throws nlohmann::json exceptions on malformed input.
CommandResult from_json(const nlohmann::json& j);

std::string render_json(const CommandResult& r);
CommandResult parse_json(const std::string& text);

/// Human-readable form, one block per command.
std::string render_text(const CommandResult& r);

}  // namespace nell::cli
