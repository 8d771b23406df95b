#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rectangulotope/polytope.hpp"

namespace rectangulotope {

enum class Check {
  three_way,
  zero_sum,
  submodularity,
  support_function,
  distinctness,
  oriented_skeleton,
  degree,
  minkowski_consistency,
};

std::string_view to_string(Check check);  // "three-way", "zero-sum", ...
Check parse_check(std::string_view name);  // throws std::invalid_argument
const std::vector<Check>& all_checks();

/// Comma-separated names; empty input selects every check.
std::vector<Check> parse_check_list(std::string_view list);

struct CheckResult {
  Check check = Check::three_way;
  bool passed = true;
  std::string counterexample;  // first failure, empty when passed
};

struct VerifyReport {
  int n = 0;
  FacetKind kind = FacetKind::weak;
  std::vector<CheckResult> results;

  bool ok() const;
  std::string to_text() const;
  std::string to_json() const;
};

/// Runs the selected checks exhaustively over S_n and the classes of `kind`.
/// Failures, including exceptions raised by the kernels, become report
/// entries. Work inside each check is spread over OpenMP threads; the
/// counterexample reported is always the first in enumeration order.
VerifyReport verify_realization(int n, FacetKind kind, std::span<const Check> checks = all_checks());

namespace serial {

VerifyReport verify_realization(int n, FacetKind kind, std::span<const Check> checks = all_checks());

}  // namespace serial

/// Rank of a set of integer vectors, computed modulo large primes. Never
/// exceeds the rational rank.
int integer_rank_lower_bound(const std::vector<std::vector<Coord>>& rows);

}  // namespace rectangulotope
