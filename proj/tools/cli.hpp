#pragma once

#include "motif/serialize.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace motif::cli {

struct IntRange {
  int first = 0;
  int last = 0;

  friend bool operator==(const IntRange&, const IntRange&) = default;
};

/// "a..b" or "a".
IntRange parse_range(std::string_view text);

struct RunConfig {
  std::string command;
  std::string form;  // closedform: mod, iso, edgeconn, oddcycle, antihole
  std::string property;
  std::optional<IntRange> k;
  std::optional<IntRange> p;
  std::optional<IntRange> n;
  std::optional<int> q;
  std::vector<int> residues;
  std::optional<std::int64_t> m;
  std::optional<int> c;
  std::optional<int> threshold;
  std::string pattern;
  std::string graph;
  std::string basis;
  std::string output;
  std::string format = "json";
  std::uint64_t seed = 1;
  int threads = 0;  // 0: all available
  bool allow_k8 = false;
  std::string full = "auto";
  bool cliques = false;
  int vertices = 0;
  double density = 0.5;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

Json to_json(const RunConfig& config);
RunConfig run_config_from_json(const Json& j);

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rejects invalid flag combinations before any computation.
void validate(const RunConfig& config);

/// Runs the command and returns the rendered report.
std::string execute(const RunConfig& config);

enum ExitCode { kSuccess = 0, kUsage = 2, kPrecondition = 3, kInternal = 4 };

/// Full command line without the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace motif::cli
