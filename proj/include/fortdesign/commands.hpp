#pragma once

// Subcommand implementations behind the fortdesign executable. Each returns
// the process exit code and writes only to the streams it is given.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fortdesign/designs.hpp"

namespace fortdesign::cli {

enum ExitCode : int {
  kExitOk = 0,          ///< design exists / check consistent
  kExitNegative = 1,    ///< no design / refuted / violations found
  kExitInputError = 2,  ///< malformed or invalid input
};

enum class OutputFormat { kText, kRecord };

/// Throws std::invalid_argument for anything but "text" or "record".
OutputFormat parse_output_format(const std::string& name);

int cmd_decide(std::istream& query, OutputFormat format, std::ostream& out, std::ostream& err);

struct VerifyOptions {
  std::vector<std::string> probes;  ///< concrete sets; generated from C when empty
  std::uint64_t cutoff = 50;
  /// Check ClassW(D) even when no design exists, to exhibit the refutation.
  bool refutation_demo = false;
  OutputFormat format = OutputFormat::kRecord;
};

int cmd_verify(std::istream& query, const VerifyOptions& options, std::ostream& out,
               std::ostream& err);

int cmd_crosscheck(const SweepOptions& options, OutputFormat format, std::ostream& out,
                   std::ostream& err);

struct BruteOptions {
  std::optional<std::uint32_t> t;  ///< overrides C_size from the instance
  int type = 2;
  OutputFormat format = OutputFormat::kRecord;
};

int cmd_brute(std::istream& instance, const BruteOptions& options, std::ostream& out,
              std::ostream& err);

}  // namespace fortdesign::cli
