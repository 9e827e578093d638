#include "invseq/poly.hpp"

#include <algorithm>
#include <sstream>

#include "invseq/patterns.hpp"
#include "invseq/stats.hpp"

namespace invseq {

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::monomial(int k, Integer c) {
  std::vector<Integer> v(static_cast<std::size_t>(k) + 1, 0);
  v.back() = std::move(c);
  return IntPoly(std::move(v));
}

IntPoly IntPoly::gamma_basis(int k, int m) {
  // binomial row m shifted by k
  std::vector<Integer> v(static_cast<std::size_t>(k + m) + 1, 0);
  Integer c = 1;
  for (int i = 0; i <= m; ++i) {
    v[static_cast<std::size_t>(k + i)] = c;
    c = c * (m - i) / (i + 1);
  }
  return IntPoly(std::move(v));
}

Integer IntPoly::operator[](int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

Integer IntPoly::at_one() const {
  Integer s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> v(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPoly(std::move(v));
}

IntPoly operator*(const Integer& c, const IntPoly& p) {
  std::vector<Integer> v = p.coeffs_;
  for (auto& x : v) x *= c;
  return IntPoly(std::move(v));
}

std::string to_string(const IntPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= p.degree(); ++k) {
    const Integer c = p[k];
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    const Integer a = c < 0 ? Integer(-c) : c;
    if (k == 0 || a != 1) os << a;
    if (k >= 1) os << "t";
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

// ---------------------------------------------------------------------------

IntSeries::IntSeries(std::vector<Integer> coeffs, int order)
    : coeffs_(std::move(coeffs)), order_(order) {
  if (order < 0) throw Error(ErrorKind::InvalidArgument, "negative series order");
  coeffs_.resize(static_cast<std::size_t>(order) + 1, 0);
}

IntSeries::IntSeries(const IntPoly& p, int order) : IntSeries(p.coeffs(), order) {}

bool IntSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c == 0; });
}

void IntSeries::require_same_order(const IntSeries& o) const {
  if (o.order_ != order_)
    throw Error(ErrorKind::InvalidArgument, "series orders differ: " + std::to_string(order_) +
                                                " vs " + std::to_string(o.order_));
}

IntSeries IntSeries::inverse() const {
  const Integer& c0 = coeffs_[0];
  if (c0 != 1 && c0 != -1)
    throw Error(ErrorKind::InvalidArgument, "series inverse needs constant term +-1");
  std::vector<Integer> inv(coeffs_.size(), 0);
  inv[0] = c0;  // 1/c0 = c0 for c0 = +-1
  for (std::size_t m = 1; m < coeffs_.size(); ++m) {
    Integer s = 0;
    for (std::size_t i = 1; i <= m; ++i) s += coeffs_[i] * inv[m - i];
    inv[m] = -s * c0;
  }
  return IntSeries(std::move(inv), order_);
}

IntSeries& IntSeries::operator+=(const IntSeries& o) {
  require_same_order(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

IntSeries& IntSeries::operator-=(const IntSeries& o) {
  require_same_order(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

IntSeries operator*(const IntSeries& a, const IntSeries& b) {
  a.require_same_order(b);
  std::vector<Integer> v(a.coeffs_.size(), 0);
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; i + j < v.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntSeries(std::move(v), a.order_);
}

IntSeries operator*(const Integer& c, const IntSeries& s) {
  std::vector<Integer> v = s.coeffs_;
  for (auto& x : v) x *= c;
  return IntSeries(std::move(v), s.order_);
}

// ---------------------------------------------------------------------------

const char* to_string(Stat s) noexcept { return s == Stat::Asc ? "asc" : "des"; }

namespace {

template <class F>
void for_each_member(const ClassSpec& spec, int n, F&& f) {
  if (spec.universe == Universe::Permutations) {
    for (const Perm& p : perm_class_members(spec, n)) f(p.view());
  } else {
    for (const InvSeq& e : class_members(spec, n)) f(e.view());
  }
}

std::vector<int> stat_set(std::span<const int> w, Stat stat) {
  return stat == Stat::Asc ? ascent_set(w) : descent_set(w);
}

}  // namespace

IntPoly dist_poly(const ClassSpec& spec, int n, Stat stat) {
  std::vector<std::uint64_t> counts;
  for_each_member(spec, n, [&](std::span<const int> w) {
    const auto k = static_cast<std::size_t>(stat == Stat::Asc ? ascents(w) : descents(w));
    if (k >= counts.size()) counts.resize(k + 1, 0);
    ++counts[k];
  });
  return IntPoly(std::vector<Integer>(counts.begin(), counts.end()));
}

SetDist set_dist(const ClassSpec& spec, int n, Stat stat) {
  SetDist dist;
  for_each_member(spec, n, [&](std::span<const int> w) { ++dist[stat_set(w, stat)]; });
  return dist;
}

JointDist joint_dist(const ClassSpec& spec, int n) {
  if (spec.universe != Universe::InversionSequences)
    throw Error(ErrorKind::InvalidArgument, "joint (asc, Dt) distribution needs an inversion-sequence class");
  JointDist dist;
  for (const InvSeq& e : class_members(spec, n)) ++dist[{ascents(e.view()), descent_tops(e.view())}];
  return dist;
}

JointDist complement_asc(const JointDist& dist, int d) {
  JointDist out;
  for (const auto& [key, count] : dist) out[{d - key.first, key.second}] += count;
  return out;
}

// ---------------------------------------------------------------------------

bool is_symmetric(const IntPoly& h, int d) {
  if (h.degree() > d) return false;
  for (int i = 0; i <= d; ++i)
    if (h[i] != h[d - i]) return false;
  return true;
}

bool is_unimodal(const IntPoly& h) {
  int i = 0;
  const int d = h.degree();
  while (i < d && h[i] <= h[i + 1]) ++i;
  while (i < d && h[i] >= h[i + 1]) ++i;
  return i >= d;
}

std::vector<Integer> gamma_extract(const IntPoly& h, int d) {
  if (d < 0 || h.degree() > d)
    throw Error(ErrorKind::InvalidArgument,
                "degree of " + to_string(h) + " exceeds " + std::to_string(d));
  if (!is_symmetric(h, d))
    throw Error(ErrorKind::NotSymmetric,
                to_string(h) + " is not symmetric about " + std::to_string(d) + "/2");
  std::vector<Integer> gamma;
  IntPoly rest = h;
  for (int k = 0; 2 * k <= d; ++k) {
    gamma.push_back(rest[k]);
    rest -= gamma.back() * IntPoly::gamma_basis(k, d - 2 * k);
  }
  if (!rest.is_zero())
    throw Error(ErrorKind::InternalInvariant, "gamma peeling left residue " + to_string(rest));
  return gamma;
}

IntPoly gamma_expand(const std::vector<Integer>& gamma, int d) {
  IntPoly h;
  for (std::size_t k = 0; k < gamma.size(); ++k)
    h += gamma[k] * IntPoly::gamma_basis(static_cast<int>(k), d - 2 * static_cast<int>(k));
  return h;
}

std::optional<AsymmetryWitness> find_asymmetry_witness(const ClassSpec& spec, int maxN) {
  for (int n = 1; n <= maxN; ++n) {
    IntPoly h = dist_poly(spec, n, Stat::Asc);
    if (!is_symmetric(h, n - 1)) return AsymmetryWitness{n, std::move(h)};
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

namespace {

IntSeries counting_series(const ClassSpec& spec, int maxN) {
  require_within_limit(maxN);
  std::vector<Integer> a{1};
  for (int n = 1; n <= maxN; ++n) a.emplace_back(class_count(spec, n));
  return IntSeries(std::move(a), maxN);
}

IntSeries poly_series(std::vector<Integer> c, int order) { return IntSeries(IntPoly(std::move(c)), order); }

}  // namespace

IntSeries ms_series(int maxN) {
  return counting_series(ClassSpec::relation_triple(Relation::Greater, Relation::Any, Relation::Greater),
                         maxN);
}

IntSeries cubic_residual(int maxN) {
  const IntSeries a = ms_series(maxN);
  const IntSeries a2 = a * a;
  const IntSeries a3 = a2 * a;
  return poly_series({1, -1, 1}, maxN) * a3 + poly_series({-3, 1}, maxN) * a2 + Integer(3) * a -
         poly_series({1}, maxN);
}

const std::vector<Integer>& fine_reference() {
  static const std::vector<Integer> ref{1, 1, 2, 6, 21, 79, 311, 1265};
  return ref;
}

bool fine_series_check(int maxN) {
  const ClassSpec spec = ClassSpec::word_patterns({{2, 0, 1}, {2, 1, 0}, {1, 1, 0}, {1, 0, 1}, {1, 0, 0}});
  const IntSeries b = counting_series(spec, maxN);
  const IntSeries lhs = Integer(2) * b.inverse() - poly_series({1, 1}, maxN);
  const IntSeries sq = lhs * lhs;
  const IntSeries target = poly_series({1, -6, 5}, maxN);
  for (int m = 0; m <= maxN; ++m) {
    if (sq[m] == target[m]) continue;
    // sq[m] = -4 b_m + (terms in b_0..b_{m-1}), so the series pins b_m.
    const Integer expected = b[m] + (sq[m] - target[m]) / 4;
    throw MismatchError(m, expected.str(), b[m].str());
  }
  const auto& ref = fine_reference();
  for (int m = 0; m <= maxN && m < static_cast<int>(ref.size()); ++m)
    if (b[m] != ref[static_cast<std::size_t>(m)])
      throw MismatchError(m, ref[static_cast<std::size_t>(m)].str(), b[m].str());
  return true;
}

}  // namespace invseq
