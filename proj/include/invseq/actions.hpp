#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "invseq/core.hpp"

namespace invseq {

/// Factor p = w1 w2 a w3 w4 where w2 and w3 are the maximal blocks of
/// letters > a on either side of a; returns w1 w3 a w2 w4.
Perm foata_strehl(const Perm& p, int a);

/// foata_strehl(p, a) when a sits at a double rise or double fall (with
/// p_0 = p_{n+1} = -inf), p otherwise.
Perm mfs(const Perm& p, int a);

/// No double descents and p_{n-1} < p_n (vacuous for n <= 1).
bool is_orbit_representative(std::span<const int> p);

struct Orbit {
  Perm representative;
  std::vector<Perm> members;  // sorted
};

struct OrbitDecomposition {
  std::vector<Orbit> orbits;  // ordered by representative
};

/// Orbits of the modified Foata-Strehl group on `set`. All members must have
/// the same length. Throws NotInvariant if some mfs(p, a) leaves the set and
/// InternalInvariant if an orbit does not have exactly one representative.
OrbitDecomposition mfs_orbits(std::span<const Perm> set);

/// gamma_k = number of orbit representatives with k descents.
std::vector<std::uint64_t> gamma_via_orbits(std::span<const Perm> set);

}  // namespace invseq
