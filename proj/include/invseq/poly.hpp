#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "invseq/core.hpp"

namespace invseq {

using Integer = boost::multiprecision::cpp_int;

/// Univariate polynomial with exact coefficients, index = exponent. Trailing
/// zeros are always trimmed, so the zero polynomial has no coefficients.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);

  static IntPoly monomial(int k, Integer c = 1);
  /// t^k (1+t)^m
  static IntPoly gamma_basis(int k, int m);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  Integer operator[](int k) const;
  const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
  Integer at_one() const;

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const Integer& c, const IntPoly& p);

  bool operator==(const IntPoly&) const = default;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

std::string to_string(const IntPoly& p);

/// Power series truncated after t^order. Arithmetic is exact modulo t^(order+1).
class IntSeries {
 public:
  IntSeries() = default;
  IntSeries(std::vector<Integer> coeffs, int order);
  IntSeries(const IntPoly& p, int order);

  int order() const noexcept { return order_; }
  const Integer& operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
  const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const;

  /// Multiplicative inverse; the constant term must be 1 or -1.
  IntSeries inverse() const;

  IntSeries& operator+=(const IntSeries& o);
  IntSeries& operator-=(const IntSeries& o);
  friend IntSeries operator+(IntSeries a, const IntSeries& b) { return a += b; }
  friend IntSeries operator-(IntSeries a, const IntSeries& b) { return a -= b; }
  friend IntSeries operator*(const IntSeries& a, const IntSeries& b);
  friend IntSeries operator*(const Integer& c, const IntSeries& s);

  bool operator==(const IntSeries&) const = default;

 private:
  void require_same_order(const IntSeries& o) const;
  std::vector<Integer> coeffs_;
  int order_ = 0;
};

// ---------------------------------------------------------------------------
// Distributions over a class

enum class Stat { Asc, Des };

const char* to_string(Stat s) noexcept;

/// Coefficient of t^k = number of members of length n with stat = k.
IntPoly dist_poly(const ClassSpec& spec, int n, Stat stat);

/// Set-valued distribution: sorted position set -> count.
using SetDist = std::map<std::vector<int>, std::uint64_t>;
SetDist set_dist(const ClassSpec& spec, int n, Stat stat);

/// (asc, sorted Dt) -> count over an inversion-sequence class.
using JointKey = std::pair<int, std::vector<int>>;
using JointDist = std::map<JointKey, std::uint64_t>;
JointDist joint_dist(const ClassSpec& spec, int n);

/// Replaces asc by d - asc in every key.
JointDist complement_asc(const JointDist& dist, int d);

// ---------------------------------------------------------------------------
// Symmetry, unimodality, gamma vectors

bool is_symmetric(const IntPoly& h, int d);
bool is_unimodal(const IntPoly& h);

/// Unique (gamma_0 .. gamma_{d/2}) with h = sum gamma_k t^k (1+t)^(d-2k).
/// Throws NotSymmetric when h is not symmetric about d/2 and
/// InvalidArgument when deg h > d.
std::vector<Integer> gamma_extract(const IntPoly& h, int d);
IntPoly gamma_expand(const std::vector<Integer>& gamma, int d);

struct AsymmetryWitness {
  int n = 0;
  IntPoly poly;
};

/// Smallest n <= maxN whose asc polynomial over the class is not symmetric
/// about (n-1)/2.
std::optional<AsymmetryWitness> find_asymmetry_witness(const ClassSpec& spec, int maxN);

// ---------------------------------------------------------------------------
// Generating-function checks

/// A(t) = sum |I_n(>,-,>)| t^n with a_0 = 1, n <= maxN.
IntSeries ms_series(int maxN);

/// (t^2 - t + 1) A^3 + (t - 3) A^2 + 3 A - 1, truncated after t^maxN.
IntSeries cubic_residual(int maxN);

/// 1, 1, 2, 6, 21, 79, 311, 1265
const std::vector<Integer>& fine_reference();

/// B(x) = sum |I_n(201,210,110,101,100)| x^n must satisfy
/// (2/B - 1 - x)^2 = 1 - 6x + 5x^2 through x^maxN, and agree with
/// fine_reference() where that is defined. Throws MismatchError naming the
/// first bad coefficient.
bool fine_series_check(int maxN);

}  // namespace invseq
