#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <functional>
#include <iterator>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "invseq/error.hpp"

namespace invseq {

// Raw integer word. Storage is 0-indexed; anything that reports positions
// to a user converts to 1-based.
using Word = std::vector<int>;

enum class Universe { InversionSequences, Permutations };

/// Inversion sequence e_1..e_n with 0 <= e_i <= i-1.
class InvSeq {
 public:
  static constexpr Universe universe = Universe::InversionSequences;

  InvSeq() = default;

  /// Validating constructor; throws OutOfRangeError on the first bad entry.
  explicit InvSeq(Word entries);

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  int operator[](std::size_t i) const noexcept { return entries_[i]; }
  const Word& entries() const noexcept { return entries_; }
  std::span<const int> view() const noexcept { return entries_; }

  auto operator<=>(const InvSeq&) const = default;

 private:
  template <class T>
  friend class SearchRange;
  struct Unchecked {};
  InvSeq(Word entries, Unchecked) : entries_(std::move(entries)) {}

  Word entries_;
};

/// Permutation of [n]; images are 1-based values.
class Perm {
 public:
  static constexpr Universe universe = Universe::Permutations;

  Perm() = default;

  /// Throws Error(InvalidArgument) unless the images are a rearrangement of 1..n.
  explicit Perm(Word images);

  static Perm identity(std::size_t n);

  std::size_t size() const noexcept { return images_.size(); }
  int operator[](std::size_t i) const noexcept { return images_[i]; }
  const Word& images() const noexcept { return images_; }
  std::span<const int> view() const noexcept { return images_; }

  auto operator<=>(const Perm&) const = default;

 private:
  template <class T>
  friend class SearchRange;
  struct Unchecked {};
  Perm(Word images, Unchecked) : images_(std::move(images)) {}

  Word images_;
};

InvSeq validate_invseq(Word entries);
Perm validate_perm(Word images);

bool is_invseq(std::span<const int> w) noexcept;

// ---------------------------------------------------------------------------
// Class specifications

enum class Relation { Less, Greater, LessEq, GreaterEq, Equal, NotEqual, Any };

constexpr bool holds(Relation r, int a, int b) noexcept {
  switch (r) {
    case Relation::Less: return a < b;
    case Relation::Greater: return a > b;
    case Relation::LessEq: return a <= b;
    case Relation::GreaterEq: return a >= b;
    case Relation::Equal: return a == b;
    case Relation::NotEqual: return a != b;
    case Relation::Any: return true;
  }
  return false;
}

std::string_view to_string(Relation r) noexcept;

using RelationTriple = std::array<Relation, 3>;
using Pattern = Word;

struct ClassSpec {
  enum class Kind { RelationTriple, WordPatterns };

  Kind kind = Kind::WordPatterns;
  RelationTriple triple{Relation::Any, Relation::Any, Relation::Any};
  std::vector<Pattern> patterns;
  Universe universe = Universe::InversionSequences;

  static ClassSpec relation_triple(Relation r1, Relation r2, Relation r3);
  static ClassSpec word_patterns(std::vector<Pattern> ps);
  static ClassSpec perm_patterns(std::vector<Pattern> ps);

  bool operator==(const ClassSpec&) const = default;
};

/// Grammar:
///   triple   := "(" rel "," rel "," rel ")"   rel in { < > <= >= = != - }
///   words    := digits ("," digits)*
///   perms    := "perm:" digits ("," digits)*
/// Whitespace is not accepted. Throws ParseError with the offending token.
ClassSpec parse_class_spec(std::string_view text);
std::string render(const ClassSpec& spec);

/// Comma-separated decimal values, e.g. "0,0,2,0". Empty text is the empty word.
Word parse_word(std::string_view text);
std::string render_word(std::span<const int> w, char sep = ',');

// ---------------------------------------------------------------------------
// Resource limit

inline constexpr int kDefaultMaxN = 12;

/// Current enumeration ceiling. Initialized from INVSEQ_MAX_N when set.
int max_n();
void set_max_n(int n);
void require_within_limit(int n);

// ---------------------------------------------------------------------------
// Lazy lexicographic generation

/// Judges whether the last entry of `prefix` keeps it admissible. Only the
/// newest entry needs examining; earlier entries were accepted already.
using PrefixFilter = std::function<bool(std::span<const int> prefix)>;

/// Single-pass, lexicographically ordered enumeration of inversion sequences
/// or permutations of length n, optionally pruned by a prefix filter. The
/// filter must be prefix-hereditary (true for every pattern-avoidance class),
/// in which case the output equals the filtered full stream.
template <class T>
class SearchRange {
 public:
  class iterator {
   public:
    using value_type = T;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;

    iterator() = default;

    const T& operator*() const noexcept { return current_; }
    const T* operator->() const noexcept { return &current_; }
    iterator& operator++() {
      advance();
      return *this;
    }
    void operator++(int) { advance(); }
    bool operator==(std::default_sentinel_t) const noexcept { return done_; }

   private:
    friend class SearchRange;
    explicit iterator(const SearchRange* range);
    void advance();
    bool seek(int pos, int value);
    Word& word() noexcept;

    const SearchRange* range_ = nullptr;
    T current_;
    std::vector<char> used_;
    bool done_ = true;
  };

  SearchRange(int n, PrefixFilter filter = {});

  iterator begin() const { return iterator(this); }
  std::default_sentinel_t end() const noexcept { return {}; }
  int length() const noexcept { return n_; }

 private:
  int n_;
  PrefixFilter filter_;
};

using InvSeqRange = SearchRange<InvSeq>;
using PermRange = SearchRange<Perm>;

/// All n! inversion sequences in lexicographic order. Throws ResourceLimitError.
InvSeqRange gen_invseqs(int n);
/// All n! permutations in lexicographic order. Throws ResourceLimitError.
PermRange gen_perms(int n);

// ---------------------------------------------------------------------------

template <class T>
SearchRange<T>::SearchRange(int n, PrefixFilter filter)
    : n_(n), filter_(std::move(filter)) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "negative length");
  require_within_limit(n);
}

template <class T>
Word& SearchRange<T>::iterator::word() noexcept {
  if constexpr (T::universe == Universe::InversionSequences)
    return current_.entries_;
  else
    return current_.images_;
}

template <class T>
SearchRange<T>::iterator::iterator(const SearchRange* range) : range_(range) {
  const int n = range_->n_;
  word().assign(static_cast<std::size_t>(n), 0);
  used_.assign(static_cast<std::size_t>(n) + 2, 0);
  if (n == 0) {
    done_ = range_->filter_ && !range_->filter_(std::span<const int>{});
    return;
  }
  const int lo = T::universe == Universe::InversionSequences ? 0 : 1;
  done_ = !seek(0, lo);
}

template <class T>
void SearchRange<T>::iterator::advance() {
  const int n = range_->n_;
  if (done_) return;
  if (n == 0) {
    done_ = true;
    return;
  }
  Word& w = word();
  const int last = n - 1;
  if constexpr (T::universe == Universe::Permutations) used_[w[last]] = 0;
  done_ = !seek(last, w[last] + 1);
}

// Depth-first search for the next admissible full word, starting by trying
// `value` at `pos`. Entries left of `pos` are already admissible.
template <class T>
bool SearchRange<T>::iterator::seek(int pos, int value) {
  constexpr bool perm = T::universe == Universe::Permutations;
  const int n = range_->n_;
  const auto& filter = range_->filter_;
  Word& w = word();
  int v = value;
  while (true) {
    const int hi = perm ? n : pos;
    bool placed = false;
    for (; v <= hi; ++v) {
      if (perm && used_[v]) continue;
      w[pos] = v;
      if (!filter ||
          filter(std::span<const int>(w.data(), static_cast<std::size_t>(pos) + 1))) {
        placed = true;
        break;
      }
    }
    if (placed) {
      if (perm) used_[v] = 1;
      if (pos == n - 1) return true;
      ++pos;
      v = perm ? 1 : 0;
      continue;
    }
    if (pos == 0) return false;
    --pos;
    if (perm) used_[w[pos]] = 0;
    v = w[pos] + 1;
  }
}

}  // namespace invseq
