#include "invseq/core.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <mutex>

namespace invseq {

InvSeq::InvSeq(Word entries) : entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto bound = static_cast<long long>(i);
    if (entries_[i] < 0 || entries_[i] > bound)
      throw OutOfRangeError(i + 1, entries_[i], bound);
  }
}

Perm::Perm(Word images) : images_(std::move(images)) {
  const std::size_t n = images_.size();
  std::vector<char> seen(n + 1, 0);
  for (int v : images_) {
    if (v < 1 || static_cast<std::size_t>(v) > n || seen[v])
      throw Error(ErrorKind::InvalidArgument,
                  "not a permutation of 1.." + std::to_string(n) + ": " +
                      render_word(images_));
    seen[v] = 1;
  }
}

Perm Perm::identity(std::size_t n) {
  Word w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = static_cast<int>(i) + 1;
  return Perm(std::move(w), Unchecked{});
}

InvSeq validate_invseq(Word entries) { return InvSeq(std::move(entries)); }
Perm validate_perm(Word images) { return Perm(std::move(images)); }

bool is_invseq(std::span<const int> w) noexcept {
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] < 0 || w[i] > static_cast<int>(i)) return false;
  return true;
}

// ---------------------------------------------------------------------------

std::string_view to_string(Relation r) noexcept {
  switch (r) {
    case Relation::Less: return "<";
    case Relation::Greater: return ">";
    case Relation::LessEq: return "<=";
    case Relation::GreaterEq: return ">=";
    case Relation::Equal: return "=";
    case Relation::NotEqual: return "!=";
    case Relation::Any: return "-";
  }
  return "?";
}

ClassSpec ClassSpec::relation_triple(Relation r1, Relation r2, Relation r3) {
  ClassSpec s;
  s.kind = Kind::RelationTriple;
  s.triple = {r1, r2, r3};
  s.universe = Universe::InversionSequences;
  return s;
}

ClassSpec ClassSpec::word_patterns(std::vector<Pattern> ps) {
  ClassSpec s;
  s.kind = Kind::WordPatterns;
  s.patterns = std::move(ps);
  s.universe = Universe::InversionSequences;
  return s;
}

ClassSpec ClassSpec::perm_patterns(std::vector<Pattern> ps) {
  ClassSpec s = word_patterns(std::move(ps));
  s.universe = Universe::Permutations;
  return s;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ClassSpec parse() {
    if (text_.empty()) fail(0, "", "empty class specification");
    if (text_.front() == '(') return parse_triple();
    constexpr std::string_view perm_prefix = "perm:";
    if (text_.starts_with(perm_prefix)) {
      pos_ = perm_prefix.size();
      return ClassSpec::perm_patterns(parse_patterns(Universe::Permutations));
    }
    return ClassSpec::word_patterns(parse_patterns(Universe::InversionSequences));
  }

 private:
  [[noreturn]] void fail(std::size_t at, std::string_view token,
                         const std::string& message) const {
    throw ParseError(at, std::string(token), message);
  }

  std::string_view token_at(std::size_t at) const {
    if (at >= text_.size()) return "<end>";
    std::size_t end = at;
    while (end < text_.size() && text_[end] != ',' && text_[end] != ')') ++end;
    if (end == at) ++end;
    return text_.substr(at, end - at);
  }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c)
      fail(pos_, token_at(pos_), std::string("expected '") + c + "'");
    ++pos_;
  }

  Relation parse_relation() {
    static constexpr std::array<std::pair<std::string_view, Relation>, 7> kRels{{
        {"<=", Relation::LessEq},
        {">=", Relation::GreaterEq},
        {"!=", Relation::NotEqual},
        {"<", Relation::Less},
        {">", Relation::Greater},
        {"=", Relation::Equal},
        {"-", Relation::Any},
    }};
    const std::string_view tok = token_at(pos_);
    for (const auto& [sym, rel] : kRels) {
      if (tok == sym) {
        pos_ += sym.size();
        return rel;
      }
    }
    fail(pos_, tok, "unknown relation");
  }

  ClassSpec parse_triple() {
    expect('(');
    Relation r1 = parse_relation();
    expect(',');
    Relation r2 = parse_relation();
    expect(',');
    Relation r3 = parse_relation();
    expect(')');
    if (pos_ != text_.size()) fail(pos_, token_at(pos_), "trailing input");
    return ClassSpec::relation_triple(r1, r2, r3);
  }

  std::vector<Pattern> parse_patterns(Universe universe) {
    std::vector<Pattern> out;
    while (true) {
      const std::size_t start = pos_;
      Pattern p;
      while (pos_ < text_.size() && text_[pos_] != ',') {
        const char c = text_[pos_];
        if (c < '0' || c > '9') fail(pos_, token_at(pos_), "expected a digit");
        p.push_back(c - '0');
        ++pos_;
      }
      if (p.empty()) fail(start, token_at(start), "empty pattern");
      validate_pattern(p, universe, start);
      out.push_back(std::move(p));
      if (pos_ == text_.size()) break;
      ++pos_;  // ','
    }
    return out;
  }

  void validate_pattern(const Pattern& p, Universe universe,
                        std::size_t start) const {
    Word sorted = p;
    std::sort(sorted.begin(), sorted.end());
    if (universe == Universe::Permutations) {
      for (std::size_t i = 0; i < sorted.size(); ++i)
        if (sorted[i] != static_cast<int>(i) + 1)
          fail(start, token_at(start), "permutation pattern must use 1..k once each");
    } else {
      sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
      for (std::size_t i = 0; i < sorted.size(); ++i)
        if (sorted[i] != static_cast<int>(i))
          fail(start, token_at(start), "word pattern values must form {0,...,m}");
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ClassSpec parse_class_spec(std::string_view text) { return Parser(text).parse(); }

std::string render(const ClassSpec& spec) {
  std::string out;
  if (spec.kind == ClassSpec::Kind::RelationTriple) {
    out = "(";
    for (std::size_t i = 0; i < 3; ++i) {
      if (i) out += ',';
      out += to_string(spec.triple[i]);
    }
    out += ')';
    return out;
  }
  if (spec.universe == Universe::Permutations) out = "perm:";
  for (std::size_t i = 0; i < spec.patterns.size(); ++i) {
    if (i) out += ',';
    for (int v : spec.patterns[i]) out += static_cast<char>('0' + v);
  }
  return out;
}

Word parse_word(std::string_view text) {
  Word out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view tok = text.substr(pos, end - pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
      throw ParseError(pos, std::string(tok), "expected a decimal value");
    out.push_back(value);
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

std::string render_word(std::span<const int> w, char sep) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i && sep) out += sep;
    out += std::to_string(w[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

int initial_max_n() {
  if (const char* env = std::getenv("INVSEQ_MAX_N")) {
    int v = 0;
    const std::string_view s(env);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec == std::errc{} && ptr == s.data() + s.size() && v >= 0) return v;
  }
  return kDefaultMaxN;
}

std::atomic<int>& limit_slot() {
  static std::atomic<int> slot{initial_max_n()};
  return slot;
}

}  // namespace

int max_n() { return limit_slot().load(std::memory_order_relaxed); }

void set_max_n(int n) { limit_slot().store(n, std::memory_order_relaxed); }

void require_within_limit(int n) {
  const int limit = max_n();
  if (n > limit) throw ResourceLimitError(n, limit);
}

InvSeqRange gen_invseqs(int n) {
  require_within_limit(n);
  return InvSeqRange(n);
}

PermRange gen_perms(int n) {
  require_within_limit(n);
  return PermRange(n);
}

}  // namespace invseq
