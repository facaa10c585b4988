#pragma once

// Reproducible checks: each one recomputes a group-theoretic claim and
// returns a verdict with machine-readable evidence.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace tatlas {

struct ReproResult {
  std::string name;
  bool pass = false;
  nlohmann::ordered_json evidence;
};

enum class LiftBase { FixLine, QuotientLine };

ReproResult check_prop13_census();
/// Both lift paths are run and compared.
ReproResult check_lift49(LiftBase which);
ReproResult check_gl2f3_s4();
/// (p, n) with p^(n+1) <= 128.
ReproResult check_index_divisibility(std::uint64_t p, std::uint64_t n);
ReproResult check_quotient_obstructions();
ReproResult check_tables_1_2();

/// prop13, lift49-fixline, lift49-quotientline, gl2f3-s4, index-divisibility,
/// quotient-obstructions, tables.
const std::vector<std::string>& check_names();
/// Throws kInvalidArgument for an unknown name.
ReproResult run_check(std::string_view name);
/// Writes <dir>/<name>.json; throws kIoError.
void write_result(const ReproResult& result, const std::string& dir);

}  // namespace tatlas
