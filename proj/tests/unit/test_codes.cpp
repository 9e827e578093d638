#include <set>

#include <algorithm>

#include "helpers.hpp"
#include "invseq/codes.hpp"
#include "invseq/patterns.hpp"
#include "invseq/stats.hpp"

using namespace invseq;
using testing::error_kind;
using testing::perm;
using testing::seq;

TEST_CASE("lehmer code") {
  CHECK(lehmer(perm("1,2,3,4")) == seq("0,0,0,0"));
  CHECK(lehmer(perm("4,3,2,1")) == seq("0,1,2,3"));
  CHECK(lehmer(perm("3,1,2")) == seq("0,1,1"));
  CHECK(lehmer_inv(seq("0,0,0")) == perm("1,2,3"));
  CHECK(lehmer_inv(seq("0,1,1")) == perm("3,1,2"));
  for (const InvSeq& e : gen_invseqs(7)) REQUIRE(lehmer(lehmer_inv(e)) == e);
  for (const Perm& p : gen_perms(7)) REQUIRE(descent_set(p.view()) == ascent_set(lehmer(p).view()));
}

TEST_CASE("b-code slices of 6132547") {
  const Perm p = perm("6,1,3,2,5,4,7");
  CHECK(b_code(p) == seq("0,1,1,2,1,4,0"));
  const std::vector<Slice> expected{
      {{0, 7, 0}},
      {{7, 7, 0}, {0, 5, 1}},
      {{7, 7, 0}, {2, 5, 1}, {0, 0, 2}},
      {{7, 7, 0}, {4, 5, 1}, {2, 2, 2}, {0, 0, 3}},
      {{7, 7, 0}, {4, 5, 1}, {0, 0, 4}},
      {{7, 7, 0}, {4, 4, 4}, {0, 0, 5}},
      {{7, 7, 0}, {0, 0, 6}},
  };
  CHECK(b_code_slices(p) == expected);
  CHECK(b_decode(seq("0,1,1,2,1,4,0")) == p);
}

TEST_CASE("b-code of the identity") {
  for (int n = 1; n <= 7; ++n) {
    const InvSeq b = b_code(Perm::identity(static_cast<std::size_t>(n)));
    CHECK(b[0] == 0);
    CHECK(b_decode(b) == Perm::identity(static_cast<std::size_t>(n)));
  }
}

TEST_CASE("b-code is injective with well-formed slices") {
  for (int n = 1; n <= 8; ++n) {
    std::set<InvSeq> seen;
    for (const Perm& p : gen_perms(n)) {
      const InvSeq b = b_code(p);
      REQUIRE(seen.insert(b).second);
      const auto slices = b_code_slices(p);
      for (std::size_t i = 0; i < slices.size(); ++i) {
        REQUIRE(is_well_formed(slices[i]));
        REQUIRE(slices[i].back().lo == 0);
        for (std::size_t v = 0; v + 1 < slices[i].size(); ++v)
          REQUIRE(std::find(b.entries().begin() + static_cast<std::ptrdiff_t>(i), b.entries().end(),
                            slices[i][v].label) != b.entries().end());
      }
    }
  }
}

TEST_CASE("b_decode round trip on S_7") {
  for (const Perm& p : gen_perms(7)) REQUIRE(b_decode(b_code(p)) == p);
}

TEST_CASE("b_decode errors") {
  std::set<InvSeq> image;
  for (const Perm& p : gen_perms(4)) image.insert(b_code(p));
  int missing = 0;
  for (const InvSeq& e : gen_invseqs(4))
    if (!image.count(e)) {
      ++missing;
      CHECK(error_kind([&] { b_decode(e); }) == ErrorKind::NoPreimage);
    }
  CHECK(missing == 0);  // n! codes fill I_n
  CHECK(error_kind([] { b_decode(InvSeq(Word(10, 0))); }) == ErrorKind::ResourceLimit);
}

TEST_CASE("code images") {
  const ClassSpec& bc = find_class("BC")->spec;
  const ClassSpec& abc = find_class("ABC")->spec;
  const ClassSpec& t = find_class("T")->spec;
  for (int n = 1; n <= 7; ++n) {
    std::set<InvSeq> a, b, c;
    for (const Perm& p : perm_class_members(find_class("S-2134-2143")->spec, n)) a.insert(lehmer(p));
    for (const Perm& p : perm_class_members(find_class("S-2134-2143-3124")->spec, n)) b.insert(lehmer(p));
    for (const Perm& p : perm_class_members(find_class("S-24135")->spec, n)) c.insert(b_code(p));
    std::set<InvSeq> ea, eb, ec;
    for (const InvSeq& e : class_members(bc, n)) ea.insert(e);
    for (const InvSeq& e : class_members(abc, n)) eb.insert(e);
    for (const InvSeq& e : class_members(t, n)) ec.insert(e);
    CHECK(a == ea);
    CHECK(b == eb);
    CHECK(c == ec);
  }
}
