#ifndef QTORIC_COMMANDS_HPP
#define QTORIC_COMMANDS_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "qtoric/cache.hpp"
#include "qtoric/fanfile.hpp"

namespace qtoric {

// Part of every cache key; bump when a payload layout changes.
inline constexpr int kCommandVersion = 1;

struct CommandOptions {
  std::string command;  // check | ifun | flowcheck | shift | mirror | qcheck
  std::string fan_path;
  BigRat cutoff = 6;
  std::optional<std::vector<BigRat>> omega;  // overrides the file's omega
  std::optional<Cocharacter> k, l;           // shift only
  bool connection = true;                    // mirror: also build C_i
  bool use_cache = true;
  bool timing = false;
  std::optional<std::filesystem::path> cache_dir;  // default: ReportCache::default_dir()
  Execution exec = Execution::parallel;
};

// exit_code: 0 all verdicts pass, 1 some verdict failed, 2 error.
struct CommandResult {
  Json report;
  int exit_code = 0;
  std::vector<std::string> warnings;
  bool cache_hit = false;
};

CommandResult run_command(const CommandOptions& opts);

// Payloads {"results": ..., "verdicts": {name: bool}} computed from an
// in-memory fan; run_command wraps them with the echo, hash and cache.
Json check_payload(const Fan& fan, const std::optional<std::vector<BigRat>>& omega);
Json ifun_payload(const ToricModel& model, const BigRat& cutoff, Execution exec);
Json flowcheck_payload(const ToricModel& model, const BigRat& cutoff, Execution exec);
Json shift_payload(const ToricModel& model, const Cocharacter& k,
                   const std::optional<Cocharacter>& l);
Json mirror_payload(const ToricModel& model, const BigRat& cutoff, bool connection,
                    Execution exec);
Json qcheck_payload(const ToricModel& model, const BigRat& cutoff, Execution exec);

// Recomputes up to `samples` randomly chosen I-function coefficients and
// compares them with an ifun payload. Seeded, so repeatable.
bool spot_check_ifun(const ToricModel& model, const Json& payload, std::size_t samples,
                     unsigned seed);

} // namespace qtoric

#endif
