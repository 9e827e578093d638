#include "invseq/stats.hpp"

#include <algorithm>
#include <climits>

#include "invseq/patterns.hpp"

namespace invseq {

namespace {

constexpr int kInf = INT_MAX;

// 1-based access with the +inf sentinels at 0 and n+1. Indices below 0 are
// never requested by callers.
struct Sentinel {
  std::span<const int> e;
  int n() const noexcept { return static_cast<int>(e.size()); }
  int operator()(int i) const noexcept {
    if (i <= 0 || i > n()) return kInf;
    return e[static_cast<std::size_t>(i - 1)];
  }
};

bool contains(const std::vector<int>& sorted, int x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

}  // namespace

std::vector<int> ascent_set(std::span<const int> w) {
  std::vector<int> out;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] < w[i + 1]) out.push_back(static_cast<int>(i) + 1);
  return out;
}

std::vector<int> descent_set(std::span<const int> w) {
  std::vector<int> out;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] > w[i + 1]) out.push_back(static_cast<int>(i) + 1);
  return out;
}

std::vector<int> descent_tops(std::span<const int> w) {
  std::vector<int> out;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] > w[i + 1]) out.push_back(w[i]);
  std::sort(out.begin(), out.end());
  return out;
}

int ascents(std::span<const int> w) {
  int c = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) c += w[i] < w[i + 1];
  return c;
}

int descents(std::span<const int> w) {
  int c = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) c += w[i] > w[i + 1];
  return c;
}

std::vector<int> peak_set(std::span<const int> e) {
  const Sentinel s{e};
  std::vector<int> out;
  for (int i = 1; i <= s.n(); ++i)
    if (s(i - 1) < s(i) && s(i) >= s(i + 1)) out.push_back(i);
  return out;
}

std::vector<int> valley_set(std::span<const int> e) {
  const Sentinel s{e};
  std::vector<int> out;
  for (int i = 1; i <= s.n(); ++i)
    if (s(i - 1) >= s(i) && s(i) < s(i + 1)) out.push_back(i);
  return out;
}

// Sf and Su need e_{i-2}; position 1 is excluded, and position 2 can never
// qualify because e_0 = +inf differs from every finite e_2.
std::vector<int> special_fixed_set(std::span<const int> e) {
  const Sentinel s{e};
  std::vector<int> out;
  for (int i = 3; i <= s.n(); ++i)
    if (s(i - 1) < s(i - 2) && s(i - 2) == s(i) && s(i) != s(i + 1)) out.push_back(i);
  return out;
}

std::vector<int> special_unfixed_set(std::span<const int> e) {
  const Sentinel s{e};
  std::vector<int> out;
  for (int i = 3; i <= s.n(); ++i)
    if (s(i - 1) < s(i - 2) && s(i - 2) == s(i) && s(i) == s(i + 1)) out.push_back(i);
  return out;
}

std::vector<int> double_ascent_set(std::span<const int> w) {
  std::vector<int> out;
  for (std::size_t i = 0; i + 2 < w.size(); ++i)
    if (w[i] < w[i + 1] && w[i + 1] < w[i + 2]) out.push_back(static_cast<int>(i) + 1);
  return out;
}

std::vector<int> left_to_right_maxima(std::span<const int> w) {
  std::vector<int> out;
  int best = INT_MIN;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i == 0 || w[i] > best) out.push_back(static_cast<int>(i) + 1);
    best = std::max(best, w[i]);
  }
  return out;
}

std::vector<int> crucial_set(std::span<const int> e) {
  std::vector<int> out;
  for (std::size_t i = 2; i < e.size(); ++i)
    if (e[i] == e[i - 2] && e[i - 2] > e[i - 1]) out.push_back(static_cast<int>(i) + 1);
  return out;
}

MoveRoles move_roles(std::span<const int> e) {
  const Sentinel s{e};
  const auto pk = peak_set(e);
  const auto va = valley_set(e);
  const auto sf = special_fixed_set(e);
  const auto su = special_unfixed_set(e);

  MoveRoles r;
  for (int i = 1; i <= s.n(); ++i) {
    const bool fixed = (contains(pk, i) && !contains(su, i)) || contains(va, i) ||
                       contains(sf, i);
    if (fixed) {
      r.fix.push_back(i);
      continue;
    }
    const bool to_right = s(i - 1) == s(i) || (i == 1 && s.n() >= 2 && s(1) == 0 && s(2) == 0) ||
                          contains(su, i);
    if (to_right)
      r.tr.push_back(i);
    else if (s(i - 1) < s(i))
      r.tl.push_back(i);
  }
  return r;
}

StatProfile profile(const InvSeq& e) {
  const auto w = e.view();
  StatProfile p;
  p.n = static_cast<int>(w.size());
  p.asc = ascent_set(w);
  p.des = descent_set(w);
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] == w[i + 1]) p.plateau.push_back(static_cast<int>(i) + 1);
  p.dt = descent_tops(w);
  p.pk = peak_set(w);
  p.va = valley_set(w);
  p.sf = special_fixed_set(w);
  p.su = special_unfixed_set(w);
  p.double_asc = double_ascent_set(w);
  p.l2r_max = left_to_right_maxima(w);
  p.crucial = crucial_set(w);
  if (is_member(classes::rise_domain(), w)) p.roles = move_roles(w);
  return p;
}

bool asc_expansion_check(const InvSeq& e) {
  if (e.empty()) throw Error(ErrorKind::NotInClass, "asc expansion needs n >= 1");
  require_member(classes::rise_domain(), e.view(), "asc_expansion_check");
  const auto w = e.view();
  const auto roles = move_roles(w);
  const int rhs = static_cast<int>(roles.tl.size() + valley_set(w).size() +
                                   special_fixed_set(w).size()) - 1;
  return ascents(w) == rhs;
}

bool is_gamma_representative(std::span<const int> e) {
  const std::size_t n = e.size();
  if (!double_ascent_set(e).empty()) return false;
  return n <= 1 || e[n - 2] >= e[n - 1];
}

std::uint64_t tilde_class_count(const ClassSpec& spec, int n, int k) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "tilde_class_count needs n >= 1");
  if (k < 0 || k > (n - 1) / 2) return 0;
  std::uint64_t count = 0;
  for (const auto& e : class_members(spec, n))
    if (ascents(e.view()) == k && is_gamma_representative(e.view())) ++count;
  return count;
}

}  // namespace invseq
