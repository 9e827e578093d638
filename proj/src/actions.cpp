#include "invseq/actions.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "invseq/stats.hpp"

namespace invseq {

namespace {

std::size_t position_of(const Perm& p, int a) {
  if (a < 1 || a > static_cast<int>(p.size()))
    throw Error(ErrorKind::InvalidArgument,
                "letter " + std::to_string(a) + " outside 1.." + std::to_string(p.size()));
  const auto& w = p.images();
  return static_cast<std::size_t>(std::find(w.begin(), w.end(), a) - w.begin());
}

// Sentinel -inf is 0; letters are >= 1.
int at(const Word& w, std::ptrdiff_t i) {
  return i < 0 || i >= static_cast<std::ptrdiff_t>(w.size()) ? 0 : w[static_cast<std::size_t>(i)];
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

Perm foata_strehl(const Perm& p, int a) {
  const auto& w = p.images();
  const std::size_t i = position_of(p, a);
  std::size_t left = i;
  while (left > 0 && w[left - 1] > a) --left;
  std::size_t right = i + 1;
  while (right < w.size() && w[right] > a) ++right;

  Word out(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(left));
  out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(i) + 1,
             w.begin() + static_cast<std::ptrdiff_t>(right));
  out.push_back(a);
  out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(left),
             w.begin() + static_cast<std::ptrdiff_t>(i));
  out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(right), w.end());
  return Perm(std::move(out));
}

Perm mfs(const Perm& p, int a) {
  const auto i = static_cast<std::ptrdiff_t>(position_of(p, a));
  const int before = at(p.images(), i - 1);
  const int after = at(p.images(), i + 1);
  const bool double_rise = before < a && a < after;
  const bool double_fall = before > a && a > after;
  return double_rise || double_fall ? foata_strehl(p, a) : p;
}

bool is_orbit_representative(std::span<const int> p) {
  const std::size_t n = p.size();
  for (std::size_t i = 1; i + 1 < n; ++i)
    if (p[i - 1] > p[i] && p[i] > p[i + 1]) return false;
  return n < 2 || p[n - 2] < p[n - 1];
}

OrbitDecomposition mfs_orbits(std::span<const Perm> set) {
  OrbitDecomposition out;
  if (set.empty()) return out;
  const std::size_t n = set.front().size();

  std::map<Perm, std::size_t> index;
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (set[i].size() != n)
      throw Error(ErrorKind::InvalidArgument, "orbit input mixes permutation lengths");
    index.emplace(set[i], i);
  }

  UnionFind uf(set.size());
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (int a = 1; a <= static_cast<int>(n); ++a) {
      const Perm image = mfs(set[i], a);
      const auto it = index.find(image);
      if (it == index.end())
        throw Error(ErrorKind::NotInvariant,
                    "mfs with a=" + std::to_string(a) + " sends " + render_word(set[i].view()) +
                        " to " + render_word(image.view()) + ", outside the set");
      uf.unite(i, it->second);
    }
  }

  std::map<std::size_t, std::vector<Perm>> groups;
  for (std::size_t i = 0; i < set.size(); ++i) groups[uf.find(i)].push_back(set[i]);

  for (auto& [root, members] : groups) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    std::vector<const Perm*> reps;
    for (const Perm& m : members)
      if (is_orbit_representative(m.view())) reps.push_back(&m);
    if (reps.size() != 1)
      throw Error(ErrorKind::InternalInvariant,
                  "orbit of " + render_word(members.front().view()) + " has " +
                      std::to_string(reps.size()) + " representatives");
    out.orbits.push_back({*reps.front(), std::move(members)});
  }
  std::sort(out.orbits.begin(), out.orbits.end(),
            [](const Orbit& x, const Orbit& y) { return x.representative < y.representative; });
  return out;
}

std::vector<std::uint64_t> gamma_via_orbits(std::span<const Perm> set) {
  if (set.empty()) throw Error(ErrorKind::InvalidArgument, "gamma_via_orbits needs a nonempty set");
  const int n = static_cast<int>(set.front().size());
  std::vector<std::uint64_t> gamma(static_cast<std::size_t>(n > 0 ? (n - 1) / 2 + 1 : 1), 0);
  for (const Orbit& orbit : mfs_orbits(set).orbits) {
    const auto k = static_cast<std::size_t>(descents(orbit.representative.view()));
    if (k >= gamma.size()) gamma.resize(k + 1, 0);
    ++gamma[k];
  }
  return gamma;
}

}  // namespace invseq
