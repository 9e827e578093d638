#include <algorithm>

#include "helpers.hpp"
#include "invseq/actions.hpp"
#include "invseq/patterns.hpp"
#include "invseq/poly.hpp"
#include "invseq/stats.hpp"

using namespace invseq;
using testing::error_kind;
using testing::perm;

namespace {

std::vector<Perm> all_of(const ClassSpec& spec, int n) {
  std::vector<Perm> v;
  for (Perm p : perm_class_members(spec, n)) v.push_back(std::move(p));
  return v;
}

std::vector<Perm> all_perms(int n) {
  std::vector<Perm> v;
  for (Perm p : gen_perms(n)) v.push_back(std::move(p));
  return v;
}

}  // namespace

TEST_CASE("foata-strehl example") {
  CHECK(foata_strehl(perm("4,6,8,3,2,5,7,1"), 3) == perm("3,4,6,8,2,5,7,1"));
  CHECK(mfs(perm("4,6,8,3,2,5,7,1"), 3) == perm("3,4,6,8,2,5,7,1"));
  CHECK(foata_strehl(perm("2,4,1,3"), 4) == perm("2,4,1,3"));
  // 4 is a peak of 2413 and 1 a valley: both fixed by the modified action
  CHECK(mfs(perm("2,4,1,3"), 4) == perm("2,4,1,3"));
  CHECK(mfs(perm("2,4,1,3"), 1) == perm("2,4,1,3"));
  CHECK(error_kind([] { mfs(perm("1,2"), 3); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("both actions are involutions") {
  for (int n = 1; n <= 6; ++n)
    for (const Perm& p : gen_perms(n))
      for (int a = 1; a <= n; ++a) {
        REQUIRE(foata_strehl(foata_strehl(p, a), a) == p);
        REQUIRE(mfs(mfs(p, a), a) == p);
      }
}

TEST_CASE("modified actions commute on S_5") {
  for (const Perm& p : gen_perms(5))
    for (int a = 1; a <= 5; ++a)
      for (int b = a + 1; b <= 5; ++b) REQUIRE(mfs(mfs(p, a), b) == mfs(mfs(p, b), a));
}

TEST_CASE("orbits of S_3") {
  const auto s3 = all_perms(3);
  const OrbitDecomposition d = mfs_orbits(s3);
  REQUIRE(d.orbits.size() == 3);
  std::vector<std::size_t> sizes;
  for (const Orbit& o : d.orbits) sizes.push_back(o.members.size());
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::size_t>{1, 1, 4});
  CHECK(gamma_via_orbits(s3) == std::vector<std::uint64_t>{1, 2});
  CHECK(dist_poly(ClassSpec::perm_patterns({}), 3, Stat::Des) == IntPoly({1, 4, 1}));
  const std::vector<Perm> id{Perm::identity(1)};
  CHECK(gamma_via_orbits(id) == std::vector<std::uint64_t>{1});
}

TEST_CASE("orbit gamma vectors match polynomial extraction") {
  for (const char* name : {"S-2134-2143", "S-24135"})
    for (int n = 1; n <= 7; ++n) {
      const ClassSpec& spec = find_class(name)->spec;
      const auto members = all_of(spec, n);
      const auto via_orbits = gamma_via_orbits(members);
      const auto via_poly = gamma_extract(dist_poly(spec, n, Stat::Des), n - 1);
      REQUIRE(via_orbits.size() == via_poly.size());
      for (std::size_t k = 0; k < via_poly.size(); ++k) CHECK(Integer(via_orbits[k]) == via_poly[k]);
    }
  const auto four = all_of(find_class("S-2134-2143")->spec, 4);
  CHECK(gamma_via_orbits(four) == std::vector<std::uint64_t>{1, 7});
}

TEST_CASE("each orbit has des distribution t^k (1+t)^(n-1-2k)") {
  for (int n = 1; n <= 6; ++n)
    for (const Orbit& o : mfs_orbits(all_perms(n)).orbits) {
      std::vector<Integer> counts;
      for (const Perm& m : o.members) {
        const auto d = static_cast<std::size_t>(descents(m.view()));
        if (d >= counts.size()) counts.resize(d + 1, 0);
        counts[d] += 1;
      }
      const int k = descents(o.representative.view());
      REQUIRE(IntPoly(counts) == IntPoly::gamma_basis(k, n - 1 - 2 * k));
    }
}

TEST_CASE("non-invariant sets are rejected") {
  const std::vector<Perm> s{perm("1,2,3")};
  CHECK(error_kind([&] { mfs_orbits(s); }) == ErrorKind::NotInvariant);
  const std::vector<Perm> mixed{perm("1"), perm("1,2")};
  CHECK(error_kind([&] { mfs_orbits(mixed); }) == ErrorKind::InvalidArgument);
}
