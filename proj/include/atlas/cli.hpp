#ifndef ATLAS_CLI_HPP
#define ATLAS_CLI_HPP

#include <optional>
#include <ostream>
#include <string>

namespace atlas::cli {

enum class Command { adm, classify, dl_data, compare, check };
enum class Format { text, json, csv, dot };

struct RunConfig {
  Command command = Command::adm;
  int g = 0;
  std::string level = "iwahori";  // iwahori | hyperspecial | comma-separated nodes
  Format format = Format::text;
  std::optional<std::string> out;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitInvalid = 2;
inline constexpr int kMaxGenus = 5;
inline constexpr int kMaxCheckGenus = 3;

std::optional<Command> parse_command(const std::string& name);
std::optional<Format> parse_format(const std::string& name);

// Writes the payload to config.out when set, else to `out`. The one-line
// summary goes to `out` when the payload went to a file or is text, and to
// `log` otherwise, so machine-readable stdout stays parseable.
int run(const RunConfig& config, std::ostream& out, std::ostream& log);

}  // namespace atlas::cli

#endif  // ATLAS_CLI_HPP
