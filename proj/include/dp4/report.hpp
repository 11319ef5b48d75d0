#pragma once

#include <optional>
#include <string>

#include "json.hpp"

namespace dp4 {

// Command results: text for humans, a stable JSON document, and the process
// exit code (0 success, 1 verification failure, 2 input error).
struct Report {
  int exit_code = 0;
  std::string text;
  nlohmann::json json;
};

Report cmd_classify(const std::optional<std::string>& field,
                    const std::optional<std::string>& profile);
Report cmd_group(const std::string& generators, const std::string& op,
                 const std::string& arg);
Report cmd_lines(const std::string& scenario_path);
Report cmd_surface(const std::string& name, bool verify);
Report cmd_traceform(const std::string& minpoly, const std::string& p,
                     const std::string& lambda);

}  // namespace dp4
