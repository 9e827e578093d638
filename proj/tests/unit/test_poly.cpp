#include "helpers.hpp"
#include "invseq/patterns.hpp"
#include "invseq/poly.hpp"
#include "invseq/stats.hpp"

using namespace invseq;
using testing::error_kind;

namespace {
const ClassSpec& named(const char* name) { return find_class(name)->spec; }
IntPoly poly(std::initializer_list<int> c) { return IntPoly(std::vector<Integer>(c.begin(), c.end())); }
std::vector<Integer> ints(std::initializer_list<int> c) { return std::vector<Integer>(c.begin(), c.end()); }
}  // namespace

TEST_CASE("polynomial basics") {
  CHECK(poly({1, 2, 0, 0}).degree() == 1);
  CHECK(IntPoly().is_zero());
  CHECK(poly({1, 1}) * poly({1, 1}) == poly({1, 2, 1}));
  CHECK(IntPoly::gamma_basis(1, 2) == poly({0, 1, 2, 1}));
  CHECK(to_string(poly({1, -4, 0, 1})) == "1 - 4t + t^3");
  CHECK(poly({1, 4, 1}).at_one() == 6);
}

TEST_CASE("symmetry and unimodality") {
  CHECK(is_symmetric(poly({1, 4, 1}), 2));
  CHECK(is_unimodal(poly({1, 4, 1})));
  CHECK_FALSE(is_symmetric(poly({1, 2}), 2));
  CHECK_FALSE(is_unimodal(poly({2, 1, 2})));
  CHECK(is_unimodal(IntPoly()));
}

TEST_CASE("gamma extraction") {
  CHECK(gamma_extract(poly({1, 4, 1}), 2) == ints({1, 2}));
  CHECK(gamma_extract(IntPoly::gamma_basis(0, 5), 5) == ints({1, 0, 0}));
  CHECK(error_kind([] { gamma_extract(poly({1, 2}), 2); }) == ErrorKind::NotSymmetric);
  CHECK(error_kind([] { gamma_extract(poly({1, 2, 1}), 1); }) == ErrorKind::InvalidArgument);
  const auto negative = gamma_extract(poly({1, 1, 1}), 2);
  CHECK(negative == ints({1, -1}));
  for (int d = 0; d <= 8; ++d) {
    std::vector<Integer> g;
    for (int k = 0; 2 * k <= d; ++k) g.emplace_back(3 * k - 2);
    CHECK(gamma_extract(gamma_expand(g, d), d) == g);
  }
}

TEST_CASE("distribution polynomials") {
  const ClassSpec c = ClassSpec::relation_triple(Relation::Greater, Relation::Any, Relation::Greater);
  CHECK(dist_poly(c, 3, Stat::Asc) == poly({1, 4, 1}));
  CHECK(dist_poly(c, 1, Stat::Asc) == poly({1}));
  CHECK(dist_poly(named("T"), 4, Stat::Asc) == poly({1, 11, 11, 1}));
  CHECK(dist_poly(named("T"), 5, Stat::Asc) == poly({1, 25, 64, 25, 1}));
  CHECK(dist_poly(named("BC"), 5, Stat::Asc) == poly({1, 20, 48, 20, 1}));
  CHECK(dist_poly(named("S-2134-2143"), 4, Stat::Des) == poly({1, 10, 10, 1}));
  CHECK(gamma_extract(dist_poly(named("T"), 5, Stat::Asc), 4) == ints({1, 21, 16}));
  for (const auto& entry : class_registry())
    for (int n = 1; n <= 7; ++n)
      REQUIRE(dist_poly(entry.spec, n, Stat::Asc).at_one() == Integer(class_count(entry.spec, n)));
}

TEST_CASE("joint distribution") {
  const ClassSpec c = ClassSpec::relation_triple(Relation::Greater, Relation::Any, Relation::Greater);
  const JointDist expected{{{0, {}}, 1}, {{1, {}}, 3}, {{1, {1}}, 1}, {{2, {}}, 1}};
  CHECK(joint_dist(c, 3) == expected);
  CHECK(joint_dist(c, 1) == JointDist{{{0, {}}, 1}});
  std::uint64_t total = 0;
  for (const auto& [k, v] : joint_dist(named("B"), 5)) total += v;
  CHECK(total == class_count(named("B"), 5));
  CHECK(error_kind([] { joint_dist(named("S-24135"), 3); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("set-valued distributions") {
  for (int n = 1; n <= 7; ++n) {
    CHECK(set_dist(named("A"), n, Stat::Asc) == set_dist(named("C"), n, Stat::Asc));
    CHECK(set_dist(named("S-2134-2143"), n, Stat::Des) == set_dist(named("BC"), n, Stat::Asc));
    CHECK(set_dist(named("S-24135"), n, Stat::Des) == set_dist(named("T"), n, Stat::Asc));
  }
}

TEST_CASE("asymmetric asc polynomials") {
  const auto ca = find_asymmetry_witness(named("CA"), 7);
  REQUIRE(ca);
  CHECK(ca->n == 4);
  CHECK(ca->poly == poly({1, 9, 11, 1}));
  const auto abc = find_asymmetry_witness(named("ABC"), 7);
  REQUIRE(abc);
  CHECK(abc->n == 4);
  CHECK(abc->poly == poly({1, 9, 10, 1}));
  CHECK_FALSE(find_asymmetry_witness(named("T"), 7));
  CHECK_FALSE(find_asymmetry_witness(named("BC"), 7));
}

TEST_CASE("series arithmetic") {
  const IntSeries a(ints({1, 2, 3}), 4);
  const IntSeries b(ints({1, -1}), 4);
  const IntSeries c(ints({0, 5, 0, 7}), 4);
  CHECK((a * b) * c == a * (b * c));
  CHECK(a * a.inverse() == IntSeries(ints({1}), 4));
  CHECK(error_kind([] { IntSeries(ints({2, 1}), 3).inverse(); }) == ErrorKind::InvalidArgument);
  CHECK(error_kind([&] { return a * IntSeries(ints({1}), 2); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("cubic functional equation") {
  for (int m = 0; m <= 10; ++m) CHECK(cubic_residual(m).is_zero());
  const IntSeries a = ms_series(10);
  CHECK(a[10] == 428882);
  CHECK(a[0] == 1);
}

TEST_CASE("fine transform") {
  CHECK(fine_series_check(7));
  CHECK(fine_series_check(11));
  CHECK(fine_reference().size() == 8);
}

TEST_CASE("resource limit on distributions") {
  const int saved = max_n();
  set_max_n(4);
  CHECK(error_kind([] { dist_poly(named("T"), 5, Stat::Asc); }) == ErrorKind::ResourceLimit);
  CHECK(error_kind([] { cubic_residual(5); }) == ErrorKind::ResourceLimit);
  set_max_n(saved);
}
