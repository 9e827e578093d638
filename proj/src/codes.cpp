#include "invseq/codes.hpp"

#include <algorithm>
#include <functional>

#include "invseq/fault.hpp"

namespace invseq {

using fault::Fault;

InvSeq lehmer(const Perm& p) {
  const std::size_t n = p.size();
  Word e(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) e[i] += p[j] > p[i];
  return InvSeq(std::move(e));
}

// Insert from the right: position i takes the (e_i + 1)-th largest value
// among those not yet used by positions i+1..n... processed right to left.
Perm lehmer_inv(const InvSeq& e) {
  const std::size_t n = e.size();
  // Values available to positions 1..i, ascending.
  Word pool(n);
  for (std::size_t v = 0; v < n; ++v) pool[v] = static_cast<int>(v) + 1;
  Word p(n);
  for (std::size_t i = n; i-- > 0;) {
    // e_i earlier letters exceed p_i, so p_i is the (e_i+1)-th largest of the
    // i+1 values still available.
    const std::size_t rank = pool.size() - 1 - static_cast<std::size_t>(e[i]);
    p[i] = pool[rank];
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(rank));
  }
  return Perm(std::move(p));
}

// ---------------------------------------------------------------------------

bool is_well_formed(const Slice& slice) {
  for (std::size_t i = 0; i < slice.size(); ++i) {
    if (slice[i].lo > slice[i].hi) return false;
    if (i == 0) continue;
    if (!(slice[i].hi < slice[i - 1].lo)) return false;
    if (!(slice[i].label > slice[i - 1].label)) return false;
  }
  return true;
}

Slice next_slice(const Slice& u, int value, int& label) {
  const auto it = std::find_if(u.begin(), u.end(),
                               [&](const LabeledInterval& iv) { return iv.contains(value); });
  if (it == u.end())
    throw Error(ErrorKind::InternalInvariant,
                "b-code: value " + std::to_string(value) + " lies in no interval");
  const std::size_t v = static_cast<std::size_t>(it - u.begin());
  const LabeledInterval cur = *it;
  label = cur.label;

  // Interval and label columns are rebuilt separately; the label shifts are
  // where the four cases differ.
  std::vector<std::pair<int, int>> intervals;
  std::vector<int> labels;
  for (const auto& iv : u) labels.push_back(iv.label);
  const int last_plus_one = labels.back() + (fault::is(Fault::BCodeLabelShift) ? 0 : 1);

  const bool at_min = value == cur.lo;
  const bool at_max = value == cur.hi;
  const int high_lo = fault::is(Fault::BCodeHighPart) ? value : value + 1;
  const int low_hi = fault::is(Fault::BCodeLowPart) ? value : value - 1;

  for (std::size_t i = 0; i < u.size(); ++i) {
    if (i != v) {
      intervals.emplace_back(u[i].lo, u[i].hi);
      continue;
    }
    if (!at_max) intervals.emplace_back(high_lo, cur.hi);  // H
    if (!at_min) intervals.emplace_back(cur.lo, low_hi);   // J
  }

  if (!at_min && at_max) {
    // (.., J, I_{v+1}, ..): drop l_v, append l_k + 1.
    labels.erase(labels.begin() + static_cast<std::ptrdiff_t>(v));
    labels.push_back(last_plus_one);
  } else if (!at_min && !at_max) {
    // (.., H, J, I_{v+1}, ..): keep l_1..l_k, append l_k + 1.
    labels.push_back(last_plus_one);
  } else if (at_min && !at_max) {
    // (.., H, I_{v+1}, ..): only the last label grows.
    labels.back() = last_plus_one;
  } else {
    // I_v disappears: drop l_v, last label grows.
    labels.erase(labels.begin() + static_cast<std::ptrdiff_t>(v));
    if (!labels.empty()) labels.back() = last_plus_one;
  }

  if (labels.size() != intervals.size())
    throw Error(ErrorKind::InternalInvariant, "b-code: interval/label count mismatch");
  Slice out;
  out.reserve(intervals.size());
  for (std::size_t i = 0; i < intervals.size(); ++i)
    out.push_back({intervals[i].first, intervals[i].second, labels[i]});
  if (!is_well_formed(out))
    throw Error(ErrorKind::InternalInvariant, "b-code: malformed slice");
  return out;
}

std::vector<Slice> b_code_slices(const Perm& p) {
  const int n = static_cast<int>(p.size());
  std::vector<Slice> slices;
  slices.push_back(Slice{{0, n, 0}});
  int label = 0;
  for (int i = 0; i + 1 < n; ++i) slices.push_back(next_slice(slices.back(), p[i], label));
  return slices;
}

InvSeq b_code(const Perm& p) {
  const int n = static_cast<int>(p.size());
  Slice u{{0, n, 0}};
  Word b(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) u = next_slice(u, p[i], b[i]);
  return InvSeq(std::move(b));
}

Perm b_decode(const InvSeq& e) {
  const int n = static_cast<int>(e.size());
  if (n > kBDecodeMaxN) throw ResourceLimitError(n, kBDecodeMaxN);
  Word p(static_cast<std::size_t>(n));
  std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);

  std::function<bool(int, const Slice&)> search = [&](int i, const Slice& u) {
    if (i == n) return true;
    const auto it = std::find_if(u.begin(), u.end(),
                                 [&](const LabeledInterval& iv) { return iv.label == e[i]; });
    if (it == u.end()) return false;
    for (int x = std::max(it->lo, 1); x <= it->hi; ++x) {
      if (used[x]) continue;
      int label = 0;
      Slice next = next_slice(u, x, label);
      used[x] = 1;
      p[i] = x;
      if (search(i + 1, next)) return true;
      used[x] = 0;
    }
    return false;
  };

  if (!search(0, Slice{{0, n, 0}}))
    throw Error(ErrorKind::NoPreimage, "no permutation has b-code " + render_word(e.view()));
  return Perm(std::move(p));
}

}  // namespace invseq
