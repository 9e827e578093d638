#pragma once

#include <chrono>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "invseq/core.hpp"

namespace invseq {

struct Counterexample {
  int n = 0;
  std::string input;
  std::string expected;
  std::string got;
};

struct CheckResult {
  std::string name;
  int n_min = 1;
  int n_max = 0;
  bool passed = true;
  std::optional<Counterexample> counterexample;  // present iff !passed
  std::string message;
  std::chrono::duration<double> elapsed{};
};

struct CheckInfo {
  std::string_view name;
  std::string_view summary;
  int default_max_n;
};

/// Registered checks in their fixed reporting order.
std::span<const CheckInfo> registered_checks();

/// Runs one check for n = 1..maxN (the check's default when omitted),
/// stopping at the first failing n with its lexicographically first
/// counterexample. Throws UnknownCheck and ResourceLimit.
CheckResult check(std::string_view name, std::optional<int> maxN = std::nullopt);

/// Every registered check, in registration order.
std::vector<CheckResult> check_all(std::optional<int> maxN = std::nullopt, bool parallel = false);

/// Smallest p in S_n (n <= maxN) with Des(p) != Asc(b_code(p)), if any. Not a
/// registered check: only the distributions are claimed to agree.
std::optional<Perm> bcode_pointwise_des_asc_mismatch(int maxN);

}  // namespace invseq
