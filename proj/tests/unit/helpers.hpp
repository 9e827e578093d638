#pragma once

#include <string>
#include <vector>

#include <doctest.h>

#include "invseq/core.hpp"
#include "invseq/error.hpp"

namespace testing {

inline invseq::InvSeq seq(const std::string& text) { return invseq::InvSeq(invseq::parse_word(text)); }
inline invseq::Perm perm(const std::string& text) { return invseq::Perm(invseq::parse_word(text)); }
inline std::vector<int> ints(std::initializer_list<int> v) { return v; }

template <class F>
invseq::ErrorKind error_kind(F&& f) {
  try {
    f();
  } catch (const invseq::Error& e) {
    return e.kind();
  }
  FAIL("expected an invseq::Error");
  return invseq::ErrorKind::InternalInvariant;
}

}  // namespace testing
