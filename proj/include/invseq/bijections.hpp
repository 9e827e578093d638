#pragma once

#include <utility>
#include <vector>

#include "invseq/core.hpp"

namespace invseq {

/// Prefix-maximum map I_n(110,210) -> I_n(100,210); preserves Asc.
InvSeq alpha(const InvSeq& e);
/// Suffix-minimum map I_n(100,210) -> I_n(110,210); inverse of alpha.
InvSeq beta(const InvSeq& t);

/// Left-to-right rewrite of every 101 occurrence into 100, on the current
/// sequence. I_n(100,210,201) -> I_n(101,210,201).
InvSeq psi(const InvSeq& e);
/// Right-to-left inverse of psi. I_n(101,210,201) -> I_n(100,210,201).
InvSeq psi_inv(const InvSeq& t);

enum class Direction { Left, Right };

const char* to_string(Direction d) noexcept;

struct MoveStep {
  int mover = 0;  // original 1-based position of the moving element
  Direction direction = Direction::Right;
  int from = 0;   // 1-based position in the sequence before this step
  int to = 0;     // 1-based landing position after this step
  int value_before = 0;
  int value_after = 0;
  std::vector<int> passed;  // values passed over, in travel order
};

struct MoveTrace {
  std::vector<MoveStep> steps;
  // states[0] is the input and states[k] the sequence after step k; filled
  // only when states were requested.
  std::vector<InvSeq> states;
};

/// One travel of the element at 1-based position i of e in I_n(100,210,201).
/// To-right elements move right gaining 1 per element passed and stop before
/// a strictly greater element (or at the end). To-left elements move left
/// losing 1 per element passed, stopping before an equal element or right
/// after passing a crucial element equal to the new value.
/// Throws NotInClass, NotMovable (i fixed), InvalidArgument (i out of range).
std::pair<InvSeq, MoveTrace> move(const InvSeq& e, int i, bool with_states = false);

/// The involution on I_n(100,210,201): fixed elements stay, to-right
/// elements move in increasing original position, then to-left elements move
/// in decreasing original position.
std::pair<InvSeq, MoveTrace> Gamma(const InvSeq& e, bool with_states = false);

/// psi(Gamma(e)). Complements asc and preserves Dt.
InvSeq gamma_map(const InvSeq& e);

/// Whether moving the elements originally at a and b commutes. Both must be
/// non-fixed and distinct.
bool commute_check(const InvSeq& e, int a, int b);

}  // namespace invseq
