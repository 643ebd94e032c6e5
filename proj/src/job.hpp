#pragma once
// Job documents (JSON or TOML) -> engines -> rendered output.

#include <cstdint>
#include <optional>
#include <string>

#include "json_io.hpp"

namespace bz::job {

enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kUsage = 2,
  kSchema = 3,
  kPrecondition = 4,
  kIntegrality = 5,
  kInternal = 6,
};

enum class Format { Text, Json };

struct JobSpec {
  std::string command;
  int N = 8;
  std::uint64_t seed = 1;
  Format format = Format::Text;
  io::json payload;  // the whole document
};

// Values given outside the document win over it; default_n is used when
// neither sets a truncation.
struct Overrides {
  std::optional<int> n;
  std::optional<std::uint64_t> seed;
  std::optional<Format> format;
  int default_n = 8;
};

struct Outcome {
  int exit_code = kOk;
  std::string output;  // stdout
  std::string error;   // one line, empty on success
};

const char* const* command_names();  // null terminated
// "schema error", "precondition failed", ... for an exit code
std::string error_kind(int code);

// TOML when the text does not start with '{' (after whitespace).
io::json parse_document(const std::string& text);
JobSpec make_job(const io::json& doc, const Overrides& o);
Outcome run(const JobSpec& job);
// parse + make_job + run with every failure turned into an exit code
Outcome run_text(const std::string& text, const Overrides& o);

}  // namespace bz::job
