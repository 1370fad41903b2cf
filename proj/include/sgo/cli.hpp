#pragma once

// The commands behind the sgo tool. Each returns a report with a JSON body,
// a plain-text rendering and the process exit code (0 hereditary / ok,
// 1 not hereditary / assertion failed / disagreement, 2 invalid input).

#include <optional>
#include <string>

#include "sgo/io.hpp"

namespace sgo {

inline constexpr int kReportFormatVersion = 1;

struct RunOptions {
  std::optional<std::string> place;  // label such as "(1+2i)"
  int d = 3;
  bool timings = false;
};

struct RunReport {
  Json json;
  std::string text;
  int exit_code = 0;
};

/// Directory holding the example fixtures (set at build time).
std::string fixture_dir();

RunReport cmd_check(const std::string& input, const RunOptions& opts = {});
RunReport cmd_picent(const std::string& input, const RunOptions& opts = {});
RunReport cmd_classify(const std::string& input, const RunOptions& opts = {});
RunReport cmd_oracle_check(const std::string& input, const RunOptions& opts = {});
/// name is nonbasic, outer or semiprime; reads its fixture from fixture_dir().
RunReport cmd_example(const std::string& name, const RunOptions& opts = {});

/// The S_d crossed product over d copies of a prime local order, S_d
/// permuting the copies.
GradedOrder permuted_copies(const ExponentMatrix& prime, int d, const MaximalIdeal& m);

/// Places examined by oracle-check: the given one, or every relevant place
/// plus the places over primes dividing |G|.
std::vector<MaximalIdeal> oracle_places(const GradedOrder& lambda);

}  // namespace sgo
