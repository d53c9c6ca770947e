#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace cockcroft::cli {

using Json = nlohmann::ordered_json;

/// Outcome of one command. `exit_code` is 0 iff `status` is "ok".
struct CommandResult {
  std::string command;
  std::string status = "ok";
  Json payload = Json::object();
  int exit_code = 0;
  std::string diagnostic;  // written to stderr when nonempty
  std::string text;        // help output; printed instead of JSON when nonempty
  bool pretty = true;

  Json to_json() const;
  std::string render() const;
};

/// Dispatches a command line (program name excluded).
CommandResult run(const std::vector<std::string>& args);

}  // namespace cockcroft::cli
