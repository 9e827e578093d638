#pragma once

#include <vector>

#include "invseq/core.hpp"

namespace invseq {

/// e_i = |{j < i : p_j > p_i}|.
InvSeq lehmer(const Perm& p);
/// Inverse of the Lehmer code.
Perm lehmer_inv(const InvSeq& e);

struct LabeledInterval {
  int lo = 0;
  int hi = 0;
  int label = 0;

  bool contains(int x) const noexcept { return lo <= x && x <= hi; }
  bool operator==(const LabeledInterval&) const = default;
};

/// Ordered labeled intervals, highest interval first.
using Slice = std::vector<LabeledInterval>;

/// Intervals strictly decreasing and pairwise disjoint, labels strictly
/// increasing.
bool is_well_formed(const Slice& slice);

/// Slice U_i from U_{i-1} after placing `value`; `label` receives the label
/// of the interval that contained it. Throws InternalInvariant if no
/// interval contains `value`.
Slice next_slice(const Slice& slice, int value, int& label);

/// Slices U_0 .. U_{n-1}.
std::vector<Slice> b_code_slices(const Perm& p);

InvSeq b_code(const Perm& p);

inline constexpr int kBDecodeMaxN = 9;

/// The unique p with b_code(p) = e, by prefix-pruned exhaustive search.
/// Throws NoPreimage when there is none and ResourceLimit for n > 9.
Perm b_decode(const InvSeq& e);

}  // namespace invseq
