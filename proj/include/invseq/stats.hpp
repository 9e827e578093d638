#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "invseq/core.hpp"

namespace invseq {

// Position sets are sorted, 1-based. Dt is the sorted multiset of descent
// tops. Peaks, valleys and the special positions use e_0 = e_{n+1} = +inf.

std::vector<int> ascent_set(std::span<const int> w);
std::vector<int> descent_set(std::span<const int> w);
std::vector<int> descent_tops(std::span<const int> w);
int ascents(std::span<const int> w);
int descents(std::span<const int> w);

std::vector<int> peak_set(std::span<const int> e);
std::vector<int> valley_set(std::span<const int> e);
std::vector<int> special_fixed_set(std::span<const int> e);
std::vector<int> special_unfixed_set(std::span<const int> e);
std::vector<int> double_ascent_set(std::span<const int> w);
std::vector<int> left_to_right_maxima(std::span<const int> w);
std::vector<int> crucial_set(std::span<const int> e);

// Fixed / to-right / to-left positions. Only meaningful on I_n(100,210,201),
// where they partition [n]; computed by definition for any input.
struct MoveRoles {
  std::vector<int> fix;
  std::vector<int> tr;
  std::vector<int> tl;
};

MoveRoles move_roles(std::span<const int> e);

struct StatProfile {
  int n = 0;
  std::vector<int> asc;
  std::vector<int> des;
  std::vector<int> plateau;
  std::vector<int> dt;
  std::vector<int> pk;
  std::vector<int> va;
  std::vector<int> sf;
  std::vector<int> su;
  std::vector<int> double_asc;
  std::vector<int> l2r_max;
  std::vector<int> crucial;
  // Present only for members of I_n(100,210,201).
  std::optional<MoveRoles> roles;
};

StatProfile profile(const InvSeq& e);

/// asc(e) = tl(e) + va(e) + sf(e) - 1. Throws NotInClass outside
/// I_n(100,210,201) or for n = 0.
bool asc_expansion_check(const InvSeq& e);

/// No double ascents, and e_{n-1} >= e_n (vacuous for n = 1).
bool is_gamma_representative(std::span<const int> e);

/// |{e in class : asc(e) = k, e has no double ascents, e_{n-1} >= e_n}|.
/// Returns 0 for k > floor((n-1)/2).
std::uint64_t tilde_class_count(const ClassSpec& spec, int n, int k);

}  // namespace invseq
