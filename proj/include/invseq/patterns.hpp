#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "invseq/core.hpp"

namespace invseq {

/// True iff some subsequence of `w` is order isomorphic to `p`, ties
/// included: equal letters of p must match equal letters of w, and strict
/// comparisons must hold strictly in the same direction.
bool contains_word_pattern(std::span<const int> w, std::span<const int> p);

/// 0-based positions of the lexicographically first occurrence of `p`.
std::optional<std::vector<int>> find_word_pattern(std::span<const int> w,
                                                  std::span<const int> p);

/// Same as contains_word_pattern, restricted to occurrences that use the last
/// letter of `w`. This is the incremental test used for prefix pruning.
bool contains_word_pattern_at_end(std::span<const int> w, std::span<const int> p);

/// True iff no i<j<k has e_i r1 e_j, e_j r2 e_k and e_i r3 e_k.
bool avoids_relation_triple(std::span<const int> e, const RelationTriple& triple);

/// 0-based (i, j, k) of the lexicographically first violating triple.
std::optional<std::array<int, 3>> find_relation_triple(std::span<const int> e,
                                                       const RelationTriple& triple);

bool is_member(const ClassSpec& spec, std::span<const int> w);

/// Human-readable reason `w` is not in the class (pattern and 1-based
/// positions), or an empty string if it is a member.
std::string describe_violation(const ClassSpec& spec, std::span<const int> w);

/// Throws Error(NotInClass) naming the witness when `w` is not a member.
void require_member(const ClassSpec& spec, std::span<const int> w,
                    std::string_view context);

PrefixFilter prefix_filter(const ClassSpec& spec);

/// Members of an inversion-sequence class of length n, lexicographic order.
InvSeqRange class_members(const ClassSpec& spec, int n);
/// Members of a permutation class of length n, lexicographic order.
PermRange perm_class_members(const ClassSpec& spec, int n);

/// Number of members of length n in either universe.
std::uint64_t class_count(const ClassSpec& spec, int n);

// ---------------------------------------------------------------------------
// Named classes

struct ClassRegistryEntry {
  std::string name;
  ClassSpec spec;
  std::vector<ClassSpec> equivalents;
};

const std::vector<ClassRegistryEntry>& class_registry();
const ClassRegistryEntry* find_class(std::string_view name);

/// A registry name ("A", "BC", ...) or a class-spec string.
ClassSpec resolve_class(std::string_view text);

// Frequently used classes, by their word-pattern form.
namespace classes {
ClassSpec rise_domain();    // I_n(100,210,201) = (>,-,>)
ClassSpec rise_range();     // I_n(101,210,201) = (>,!=,>=)
ClassSpec alpha_domain();   // I_n(110,210)
ClassSpec alpha_range();    // I_n(100,210)
}  // namespace classes

struct IdentityMismatch {
  std::string entry;
  ClassSpec left;
  ClassSpec right;
  InvSeq witness;
  bool in_left = false;  // witness belongs to `left` but not `right`, or vice versa
};

struct IdentityReport {
  int n = 0;
  std::size_t comparisons = 0;
  std::vector<IdentityMismatch> mismatches;
  bool ok() const noexcept { return mismatches.empty(); }
};

/// Exhaustively compares every registry entry with each of its equivalent
/// specifications over I_n.
IdentityReport check_class_identities(int n);

}  // namespace invseq
