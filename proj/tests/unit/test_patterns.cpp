#include <algorithm>
#include <map>

#include "helpers.hpp"
#include "invseq/patterns.hpp"

using namespace invseq;
using testing::error_kind;
using testing::seq;

namespace {

// All length-|p| subsequences, compared by full order type.
bool naive_contains(std::span<const int> w, std::span<const int> p) {
  const std::size_t k = p.size();
  if (k > w.size()) return false;
  std::vector<bool> pick(w.size(), false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
  do {
    std::vector<int> sub;
    for (std::size_t i = 0; i < w.size(); ++i)
      if (pick[i]) sub.push_back(w[i]);
    bool same = true;
    for (std::size_t a = 0; a < k && same; ++a)
      for (std::size_t b = 0; b < k && same; ++b)
        same = (sub[a] < sub[b]) == (p[a] < p[b]) && (sub[a] == sub[b]) == (p[a] == p[b]);
    if (same) return true;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return false;
}

const ClassSpec& named(const char* name) { return find_class(name)->spec; }

}  // namespace

TEST_CASE("word patterns respect ties") {
  CHECK_FALSE(contains_word_pattern(Word{0, 1, 0, 2}, Word{1, 1, 0}));
  CHECK(contains_word_pattern(Word{0, 1, 1, 0}, Word{1, 1, 0}));
  CHECK_FALSE(contains_word_pattern(Word{0, 1, 2}, Word{0, 0}));
  CHECK(contains_word_pattern(Word{0, 1, 0, 2, 1}, Word{1, 0, 1}));
  const auto occ = find_word_pattern(Word{0, 1, 0, 2, 1}, Word{1, 0, 1});
  REQUIRE(occ);
  CHECK(*occ == std::vector<int>{1, 2, 4});
}

TEST_CASE("relation triples") {
  const RelationTriple a{Relation::GreaterEq, Relation::NotEqual, Relation::Greater};
  CHECK_FALSE(avoids_relation_triple(Word{0, 1, 1, 0}, a));
  CHECK(avoids_relation_triple(Word{0, 1, 0, 2}, a));
  const auto hit = find_relation_triple(Word{0, 1, 1, 0}, a);
  REQUIRE(hit);
  CHECK(*hit == std::array<int, 3>{1, 2, 3});
}

TEST_CASE("violation messages name the witness") {
  const std::string msg = describe_violation(named("A"), Word{0, 1, 1, 0});
  CHECK(msg.find("2") != std::string::npos);
  CHECK(describe_violation(named("A"), Word{0, 1, 0, 2}).empty());
  CHECK(error_kind([] { require_member(classes::rise_domain(), Word{0, 1, 0, 0}, "test"); }) ==
        ErrorKind::NotInClass);
}

TEST_CASE("containment agrees with subsequence enumeration on I_6") {
  std::vector<Pattern> patterns;
  for (const auto& entry : class_registry()) {
    if (entry.spec.universe != Universe::InversionSequences) continue;
    for (const ClassSpec& s : entry.equivalents) patterns.insert(patterns.end(), s.patterns.begin(), s.patterns.end());
    patterns.insert(patterns.end(), entry.spec.patterns.begin(), entry.spec.patterns.end());
  }
  std::sort(patterns.begin(), patterns.end());
  patterns.erase(std::unique(patterns.begin(), patterns.end()), patterns.end());
  REQUIRE(patterns.size() == 5);
  for (const InvSeq& e : gen_invseqs(6))
    for (const Pattern& p : patterns) REQUIRE(contains_word_pattern(e.view(), p) == naive_contains(e.view(), p));
}

TEST_CASE("relation triples equal their pattern forms up to n = 7") {
  for (int n = 1; n <= 7; ++n) {
    const IdentityReport r = check_class_identities(n);
    CHECK(r.comparisons > 0);
    CHECK(r.ok());
  }
}

TEST_CASE("class counts") {
  // reference values from tests/oracle/reference.py
  const std::map<std::string, std::vector<std::uint64_t>> expected{
      {"A", {1, 2, 6, 23, 102, 495, 2549}},   {"B", {1, 2, 6, 23, 102, 495, 2549}},
      {"C", {1, 2, 6, 23, 102, 495, 2549}},   {"BC", {1, 2, 6, 22, 90, 394, 1806}},
      {"AB", {1, 2, 6, 22, 90, 394, 1806}},   {"CA", {1, 2, 6, 22, 90, 394, 1806}},
      {"T", {1, 2, 6, 24, 116, 632, 3720}},   {"ABC", {1, 2, 6, 21, 79, 311, 1265}},
  };
  for (const auto& [name, counts] : expected)
    for (int n = 1; n <= 7; ++n) {
      CAPTURE(name);
      CAPTURE(n);
      CHECK(class_count(named(name.c_str()), n) == counts[static_cast<std::size_t>(n - 1)]);
    }
  CHECK(class_count(named("C"), 0) == 1);
}

TEST_CASE("members are lexicographic and pass the predicate") {
  for (const char* name : {"A", "B", "C", "T", "ABC"}) {
    std::vector<InvSeq> members;
    for (const InvSeq& e : class_members(named(name), 6)) members.push_back(e);
    CHECK(std::is_sorted(members.begin(), members.end()));
    std::size_t brute = 0;
    for (const InvSeq& e : gen_invseqs(6)) brute += is_member(named(name), e.view()) ? 1 : 0;
    CHECK(members.size() == brute);
  }
}

TEST_CASE("larger pattern sets give smaller classes") {
  const ClassSpec small = ClassSpec::word_patterns({{2, 0, 1}, {2, 1, 0}});
  const ClassSpec big = ClassSpec::word_patterns({{2, 0, 1}, {2, 1, 0}, {1, 0, 0}});
  for (int n = 1; n <= 7; ++n)
    for (const InvSeq& e : class_members(big, n)) REQUIRE(is_member(small, e.view()));
}

TEST_CASE("permutation classes") {
  CHECK(class_count(named("S-2134-2143"), 5) == 90);
  CHECK(class_count(named("S-2134-2143-3124"), 6) == 311);
  CHECK(class_count(named("S-24135"), 6) == 632);
  CHECK(class_count(named("S-4231-42513"), 6) == 495);
  CHECK(error_kind([] { class_members(named("S-24135"), 3); }) == ErrorKind::InvalidArgument);
  CHECK(error_kind([] { perm_class_members(named("A"), 3); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("registry lookup") {
  CHECK(resolve_class("BC") == named("BC"));
  CHECK(resolve_class("(>,-,>=)") == named("BC"));
  CHECK(find_class("nope") == nullptr);
  CHECK(error_kind([] { resolve_class("(>,-"); }) == ErrorKind::ParseError);
}
