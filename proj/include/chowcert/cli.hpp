#ifndef CHOWCERT_CLI_HPP
#define CHOWCERT_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string>

#include "chowcert/config.hpp"

namespace chowcert {

// exit codes: 0 computed (and certificate passed, where one is emitted),
// 1 certificate failed, 2 bad input, 3 invariants not stabilized
inline constexpr int exit_ok = 0;
inline constexpr int exit_certificate_failed = 1;
inline constexpr int exit_bad_input = 2;
inline constexpr int exit_not_stabilized = 3;

struct RunConfig {
  std::string command;  // contact, semistable, destabilize, multiplicity,
                        // certify, heights, search
  std::string theorem;  // certify only
  std::string input_path;
  std::optional<int> m_max;
  long height_bound = 3;
  unsigned weight_bound = 2;
  int jobs = 1;
};

/// Runs one command against a loaded configuration; the structured result
/// document goes to `out`, diagnostics to `err`.
int run_on(const RunConfig& config, const Json& input, std::ostream& out,
           std::ostream& err);

/// Loads config.input_path and runs.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

} // namespace chowcert

#endif
