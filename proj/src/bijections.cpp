#include "invseq/bijections.hpp"

#include <algorithm>
#include <set>

#include "invseq/fault.hpp"
#include "invseq/patterns.hpp"
#include "invseq/stats.hpp"

namespace invseq {

using fault::Fault;

InvSeq alpha(const InvSeq& e) {
  require_member(classes::alpha_domain(), e.view(), "alpha");
  const auto& w = e.entries();
  const std::size_t n = w.size();
  Word t(n);
  int prefix_max = 0;
  for (std::size_t j = 0; j < n; ++j) {
    prefix_max = std::max(prefix_max, w[j]);
    const bool repeats_later = std::find(w.begin() + j + 1, w.end(), w[j]) != w.end();
    t[j] = repeats_later ? prefix_max : w[j];
  }
  return InvSeq(std::move(t));
}

InvSeq beta(const InvSeq& t) {
  require_member(classes::alpha_range(), t.view(), "beta");
  const auto& w = t.entries();
  const std::size_t n = w.size();
  Word suffix_min(n + 1, 0);
  for (std::size_t j = n; j-- > 0;)
    suffix_min[j] = j + 1 == n ? w[j] : std::min(w[j], suffix_min[j + 1]);
  Word e(n);
  for (std::size_t j = 0; j < n; ++j) {
    const bool repeats_earlier = std::find(w.begin(), w.begin() + j, w[j]) != w.begin() + j;
    e[j] = repeats_earlier ? suffix_min[j] : w[j];
  }
  return InvSeq(std::move(e));
}

InvSeq psi(const InvSeq& e) {
  require_member(classes::rise_domain(), e.view(), "psi");
  Word w = e.entries();
  const int n = static_cast<int>(w.size());
  const int last = fault::is(Fault::PsiSkipLast) ? n - 1 : n;
  for (int i = 0; i < last; ++i) {
    // Values of the "0" over all 101 occurrences ending at i.
    std::set<int> zeros;
    for (int j = 0; j < i; ++j) {
      if (w[j] != w[i]) continue;
      for (int k = j + 1; k < i; ++k)
        if (w[k] < w[i]) zeros.insert(w[k]);
    }
    if (zeros.empty()) continue;
    if (zeros.size() != 1)
      throw Error(ErrorKind::InternalInvariant,
                  "psi: ambiguous 101 rewrite at position " + std::to_string(i + 1) +
                      " of " + render_word(w));
    w[i] = *zeros.begin() + (fault::is(Fault::PsiLowerValue) ? 1 : 0);
  }
  return InvSeq(std::move(w));
}

InvSeq psi_inv(const InvSeq& t) {
  require_member(classes::rise_range(), t.view(), "psi_inv");
  Word w = t.entries();
  const int n = static_cast<int>(w.size());
  for (int i = n - 1; i >= 0; --i) {
    int best = -1;
    for (int j = 0; j < i; ++j) {
      if (w[j] <= w[i] || w[j] <= best) continue;
      for (int k = j + 1; k < i; ++k)
        if (w[k] == w[i]) {
          best = w[j];
          break;
        }
    }
    if (best >= 0) w[i] = best - (fault::is(Fault::PsiInvRaiseValue) ? 1 : 0);
  }
  return InvSeq(std::move(w));
}

const char* to_string(Direction d) noexcept { return d == Direction::Left ? "left" : "right"; }

// ---------------------------------------------------------------------------

namespace {

struct Cell {
  int id;  // original 1-based position
  int value;
};

using Cells = std::vector<Cell>;

Cells to_cells(const InvSeq& e) {
  Cells cells;
  cells.reserve(e.size());
  for (std::size_t i = 0; i < e.size(); ++i)
    cells.push_back({static_cast<int>(i) + 1, e[i]});
  return cells;
}

Word values(const Cells& cells) {
  Word w;
  w.reserve(cells.size());
  for (const Cell& c : cells) w.push_back(c.value);
  return w;
}

int index_of(const Cells& cells, int id) {
  for (std::size_t i = 0; i < cells.size(); ++i)
    if (cells[i].id == id) return static_cast<int>(i);
  throw Error(ErrorKind::InternalInvariant, "lost track of element " + std::to_string(id));
}

bool crucial_at(const Cells& cells, int q) {
  return q >= 2 && cells[q].value == cells[q - 2].value &&
         cells[q - 2].value > cells[q - 1].value;
}

// Moves the element with the given id and records the step.
MoveStep travel(Cells& cells, int id, Direction dir) {
  const int start = index_of(cells, id);
  Cell mover = cells[start];
  cells.erase(cells.begin() + start);

  MoveStep step;
  step.mover = id;
  step.direction = dir;
  step.from = start + 1;
  step.value_before = mover.value;

  int v = mover.value;
  int q = start;  // insertion index into `cells`
  if (dir == Direction::Right) {
    const bool stop_on_equal = fault::is(Fault::MoveRightStop);
    while (q < static_cast<int>(cells.size())) {
      const int x = cells[q].value;
      if (x > v || (stop_on_equal && x == v)) break;
      step.passed.push_back(x);
      v += (fault::is(Fault::MoveRightGain) && step.passed.size() == 1) ? 2 : 1;
      ++q;
    }
  } else {
    const int equal_offset = fault::is(Fault::MoveLeftEqual) ? 1 : 0;
    const int crucial_offset = fault::is(Fault::MoveLeftCrucial) ? 1 : 0;
    while (q > 0) {
      const int x = cells[q - 1].value;
      if (x == v - equal_offset) break;
      step.passed.push_back(x);
      --v;
      --q;
      if (crucial_at(cells, q) && x == v + crucial_offset) break;
    }
  }
  if (v < 0 || v > q)
    throw Error(ErrorKind::InternalInvariant,
                "move of element " + std::to_string(id) + " left the inversion-sequence range");
  mover.value = v;
  cells.insert(cells.begin() + q, mover);
  step.to = q + 1;
  step.value_after = v;
  return step;
}

Direction direction_of(const MoveRoles& roles, int i) {
  if (std::binary_search(roles.tr.begin(), roles.tr.end(), i)) return Direction::Right;
  if (std::binary_search(roles.tl.begin(), roles.tl.end(), i)) return Direction::Left;
  throw Error(ErrorKind::NotMovable, "position " + std::to_string(i) + " is a fixed position");
}

void require_position(const InvSeq& e, int i) {
  if (i < 1 || i > static_cast<int>(e.size()))
    throw Error(ErrorKind::InvalidArgument,
                "position " + std::to_string(i) + " outside 1.." + std::to_string(e.size()));
}

}  // namespace

std::pair<InvSeq, MoveTrace> move(const InvSeq& e, int i, bool with_states) {
  require_member(classes::rise_domain(), e.view(), "move");
  require_position(e, i);
  const Direction dir = direction_of(move_roles(e.view()), i);
  Cells cells = to_cells(e);
  MoveTrace trace;
  trace.steps.push_back(travel(cells, i, dir));
  InvSeq out(values(cells));
  if (with_states) trace.states = {e, out};
  return {std::move(out), std::move(trace)};
}

std::pair<InvSeq, MoveTrace> Gamma(const InvSeq& e, bool with_states) {
  require_member(classes::rise_domain(), e.view(), "Gamma");
  const MoveRoles roles = move_roles(e.view());
  Cells cells = to_cells(e);
  MoveTrace trace;
  if (with_states) trace.states.push_back(e);

  auto run = [&](int id, Direction dir) {
    trace.steps.push_back(travel(cells, id, dir));
    if (with_states) trace.states.emplace_back(values(cells));
  };
  for (int id : roles.tr) run(id, Direction::Right);
  for (auto it = roles.tl.rbegin(); it != roles.tl.rend(); ++it) run(*it, Direction::Left);

  return {InvSeq(values(cells)), std::move(trace)};
}

InvSeq gamma_map(const InvSeq& e) { return psi(Gamma(e).first); }

bool commute_check(const InvSeq& e, int a, int b) {
  require_member(classes::rise_domain(), e.view(), "commute_check");
  require_position(e, a);
  require_position(e, b);
  if (a == b) throw Error(ErrorKind::InvalidArgument, "commute_check needs a != b");
  const MoveRoles roles = move_roles(e.view());
  const Direction da = direction_of(roles, a);
  const Direction db = direction_of(roles, b);

  Cells ab = to_cells(e);
  travel(ab, a, da);
  travel(ab, b, db);
  Cells ba = to_cells(e);
  travel(ba, b, db);
  travel(ba, a, da);
  return values(ab) == values(ba);
}

}  // namespace invseq
