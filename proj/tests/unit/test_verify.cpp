#include <set>

#include "helpers.hpp"
#include "invseq/codes.hpp"
#include "invseq/fault.hpp"
#include "invseq/verify.hpp"

using namespace invseq;
using testing::error_kind;

TEST_CASE("registry") {
  std::set<std::string_view> names;
  for (const CheckInfo& c : registered_checks()) {
    CHECK(names.insert(c.name).second);
    CHECK(c.default_max_n >= 7);
  }
  for (const char* required :
       {"thm-1.2", "thm-1.3", "conj-1.1", "cor-1.4", "prop-1.5", "thm-1.6", "prop-2.2", "prop-2.3", "lemma-2.7",
        "lemma-2.8", "fact-star", "eq-ascexpand", "prop-3.1", "prop-3.2", "prop-3.7", "lemma-3.4", "lemma-3.8",
        "lemma-3.3", "oeis-a098746", "oeis-schroeder", "oeis-fine", "gf-cubic", "ms-equi"})
    CHECK(names.count(required) == 1);
}

TEST_CASE("every check passes at its default size") {
  for (const CheckResult& r : check_all()) {
    CAPTURE(r.name);
    CHECK(r.passed);
    CHECK_FALSE(r.counterexample);
  }
}

TEST_CASE("small and trivial runs") {
  for (const CheckResult& r : check_all(1)) CHECK(r.passed);
  const CheckResult r = check("oeis-a098746", 6);
  CHECK(r.passed);
  CHECK(r.n_min == 1);
  CHECK(r.n_max == 6);
}

TEST_CASE("parallel and sequential runs agree") {
  const auto a = check_all(5, false);
  const auto b = check_all(5, true);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].name == b[i].name);
    CHECK(a[i].passed == b[i].passed);
  }
}

TEST_CASE("errors") {
  CHECK(error_kind([] { check("nope"); }) == ErrorKind::UnknownCheck);
  CHECK(error_kind([] { check("thm-1.3", max_n() + 1); }) == ErrorKind::ResourceLimit);
}

TEST_CASE("failures carry the first counterexample") {
  fault::Scoped f(fault::Fault::PsiLowerValue);
  const CheckResult r = check("thm-1.3", 6);
  CHECK_FALSE(r.passed);
  REQUIRE(r.counterexample);
  CHECK(r.counterexample->n <= 5);
  CHECK(r.message.find("implementation bug") != std::string::npos);
  const CheckResult again = check("thm-1.3", 6);
  CHECK(again.counterexample->input == r.counterexample->input);
}

TEST_CASE("b-code sends Des to Asc pointwise on small S_n") {
  // only the set-distributions are claimed; pointwise agreement is observed up to n = 8
  CHECK_FALSE(bcode_pointwise_des_asc_mismatch(6));
}
