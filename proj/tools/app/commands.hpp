#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace commtrace::app {

// A fully parsed invocation. `name` is the subcommand path, e.g. "dim" or
// "verify fundamental"; unset optionals were not given on the command line.
struct Command {
  std::string name;
  std::optional<int> n;
  std::optional<int> m;
  std::optional<std::uint64_t> seed;
  std::optional<int> trials;
  std::optional<std::string> expr;
  std::optional<std::string> poly;
  std::optional<int> source;
  std::optional<int> target;
  std::vector<int> sources;
  std::vector<int> targets;
  bool allow_large = false;
  bool timing = false;
};

// Desk-scale guardrails, lifted by --allow-large.
inline constexpr int kMaxDeskN = 4;
inline constexpr int kMaxDeskM = 6;

struct Report {
  nlohmann::json command;  // echo of the invocation
  bool ok = false;
  nlohmann::json payload = nlohmann::json::object();
  std::optional<double> elapsed_ms;  // measured only with --timing
};

// Never throws for domain errors: they become a failed report whose payload holds
// {"error": message}.
Report run(const Command& command);

// Keys: "command", "elapsed_ms", "payload", "status" ("ok" | "fail"), sorted.
std::string render_json(const Report& report, bool pretty);

inline int exit_code(const Report& report) { return report.ok ? 0 : 1; }

// Full command-line entry point: parses argv, runs, prints JSON to `out`.
// Returns 0 iff the report status is ok; usage errors return 2.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace commtrace::app
