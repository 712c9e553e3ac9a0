#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace hochlat {

struct CheckResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;  // range covered and the first failure, if any
};

/// Largest n each criterion is evaluated at; ids 1..13.
std::size_t check_cap(int id);

/// Runs criterion `id` for every n in 1..min(n_max, check_cap(id)), plus
/// the fixed small examples the criterion names. Library errors count as
/// failures and are reported in `detail`.
CheckResult run_check(int id, std::size_t n_max);

/// All thirteen criteria in order.
std::vector<CheckResult> run_checks(std::size_t n_max);

/// Conjecture verdict for Shuf(n-1,1): true iff the G-triangle equals the
/// conjectured closed form.
bool g_conjecture_holds(std::size_t n);

}  // namespace hochlat
