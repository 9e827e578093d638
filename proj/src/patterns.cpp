#include "invseq/patterns.hpp"

#include <algorithm>

namespace invseq {

namespace {

constexpr int sign(int d) noexcept { return (d > 0) - (d < 0); }

// Depth-first occurrence search. `chosen` holds indices of w matched to
// p[0..depth). When `last_fixed` is set, the final letter of p must land on
// the final letter of w.
bool match(std::span<const int> w, std::span<const int> p, std::vector<int>& chosen,
           std::size_t depth, int from, bool last_fixed) {
  const std::size_t k = p.size();
  if (depth == k) return true;
  const int n = static_cast<int>(w.size());
  const int remaining = static_cast<int>(k - depth);
  int lo = from;
  int hi = n - remaining;
  if (last_fixed) {
    if (depth + 1 == k) {
      lo = std::max(lo, n - 1);
      hi = n - 1;
    } else {
      hi = std::min(hi, n - 1 - (remaining - 1));
    }
  }
  for (int i = lo; i <= hi; ++i) {
    bool ok = true;
    for (std::size_t s = 0; s < depth && ok; ++s)
      ok = sign(w[i] - w[chosen[s]]) == sign(p[depth] - p[s]);
    if (!ok) continue;
    chosen[depth] = i;
    if (match(w, p, chosen, depth + 1, i + 1, last_fixed)) return true;
  }
  return false;
}

std::string positions_1based(std::span<const int> idx) {
  std::string out;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(idx[i] + 1);
  }
  return out;
}

}  // namespace

bool contains_word_pattern(std::span<const int> w, std::span<const int> p) {
  return find_word_pattern(w, p).has_value();
}

std::optional<std::vector<int>> find_word_pattern(std::span<const int> w,
                                                  std::span<const int> p) {
  if (p.size() > w.size()) return std::nullopt;
  std::vector<int> chosen(p.size());
  if (match(w, p, chosen, 0, 0, false)) return chosen;
  return std::nullopt;
}

bool contains_word_pattern_at_end(std::span<const int> w, std::span<const int> p) {
  if (p.empty() || p.size() > w.size()) return false;
  std::vector<int> chosen(p.size());
  return match(w, p, chosen, 0, 0, true);
}

bool avoids_relation_triple(std::span<const int> e, const RelationTriple& triple) {
  return !find_relation_triple(e, triple).has_value();
}

std::optional<std::array<int, 3>> find_relation_triple(std::span<const int> e,
                                                       const RelationTriple& t) {
  const int n = static_cast<int>(e.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (!holds(t[0], e[i], e[j])) continue;
      for (int k = j + 1; k < n; ++k)
        if (holds(t[1], e[j], e[k]) && holds(t[2], e[i], e[k]))
          return std::array<int, 3>{i, j, k};
    }
  return std::nullopt;
}

namespace {

bool triple_at_end(std::span<const int> e, const RelationTriple& t) {
  const int k = static_cast<int>(e.size()) - 1;
  for (int i = 0; i < k; ++i) {
    if (!holds(t[2], e[i], e[k])) continue;
    for (int j = i + 1; j < k; ++j)
      if (holds(t[0], e[i], e[j]) && holds(t[1], e[j], e[k])) return true;
  }
  return false;
}

}  // namespace

bool is_member(const ClassSpec& spec, std::span<const int> w) {
  if (spec.kind == ClassSpec::Kind::RelationTriple)
    return avoids_relation_triple(w, spec.triple);
  return std::none_of(spec.patterns.begin(), spec.patterns.end(),
                      [&](const Pattern& p) { return contains_word_pattern(w, p); });
}

std::string describe_violation(const ClassSpec& spec, std::span<const int> w) {
  if (spec.kind == ClassSpec::Kind::RelationTriple) {
    if (auto hit = find_relation_triple(w, spec.triple))
      return "relation triple " + render(spec) + " realized at positions " +
             positions_1based(*hit) + " of " + render_word(w);
    return {};
  }
  for (const Pattern& p : spec.patterns)
    if (auto hit = find_word_pattern(w, p))
      return "pattern " + render_word(p, '\0') + " occurs at positions " +
             positions_1based(*hit) + " of " + render_word(w);
  return {};
}

void require_member(const ClassSpec& spec, std::span<const int> w,
                    std::string_view context) {
  const std::string why = describe_violation(spec, w);
  if (!why.empty())
    throw Error(ErrorKind::NotInClass, std::string(context) + ": input not in " +
                                           render(spec) + "; " + why);
}

PrefixFilter prefix_filter(const ClassSpec& spec) {
  if (spec.kind == ClassSpec::Kind::RelationTriple) {
    return [t = spec.triple](std::span<const int> prefix) {
      return !triple_at_end(prefix, t);
    };
  }
  return [ps = spec.patterns](std::span<const int> prefix) {
    return std::none_of(ps.begin(), ps.end(), [&](const Pattern& p) {
      return contains_word_pattern_at_end(prefix, p);
    });
  };
}

InvSeqRange class_members(const ClassSpec& spec, int n) {
  if (spec.universe != Universe::InversionSequences)
    throw Error(ErrorKind::InvalidArgument,
                "class " + render(spec) + " is a permutation class");
  require_within_limit(n);
  return InvSeqRange(n, prefix_filter(spec));
}

PermRange perm_class_members(const ClassSpec& spec, int n) {
  if (spec.universe != Universe::Permutations)
    throw Error(ErrorKind::InvalidArgument,
                "class " + render(spec) + " is an inversion-sequence class");
  require_within_limit(n);
  return PermRange(n, prefix_filter(spec));
}

std::uint64_t class_count(const ClassSpec& spec, int n) {
  std::uint64_t count = 0;
  if (spec.universe == Universe::Permutations) {
    for (const auto& p : perm_class_members(spec, n)) {
      (void)p;
      ++count;
    }
  } else {
    for (const auto& e : class_members(spec, n)) {
      (void)e;
      ++count;
    }
  }
  return count;
}

// ---------------------------------------------------------------------------

namespace {

ClassSpec words(std::initializer_list<const char*> ps, bool perm = false) {
  std::vector<Pattern> out;
  for (const char* s : ps) {
    Pattern p;
    for (const char* c = s; *c; ++c) p.push_back(*c - '0');
    out.push_back(std::move(p));
  }
  return perm ? ClassSpec::perm_patterns(std::move(out))
              : ClassSpec::word_patterns(std::move(out));
}

using R = Relation;

std::vector<ClassRegistryEntry> build_registry() {
  std::vector<ClassRegistryEntry> r;
  auto triple = ClassSpec::relation_triple;
  r.push_back({"A", triple(R::GreaterEq, R::NotEqual, R::Greater), {words({"201", "210", "110"})}});
  r.push_back({"B", triple(R::Greater, R::NotEqual, R::GreaterEq), {words({"201", "210", "101"})}});
  r.push_back({"C", triple(R::Greater, R::Any, R::Greater), {words({"201", "210", "100"})}});
  r.push_back({"T", triple(R::Greater, R::NotEqual, R::Greater), {words({"201", "210"})}});
  r.push_back({"AB", triple(R::GreaterEq, R::NotEqual, R::GreaterEq),
               {words({"201", "210", "110", "101"})}});
  r.push_back({"BC", triple(R::Greater, R::Any, R::GreaterEq),
               {words({"201", "210", "100", "101"})}});
  r.push_back({"CA", triple(R::GreaterEq, R::Any, R::Greater),
               {words({"201", "210", "110", "100"})}});
  r.push_back({"ABC", words({"201", "210", "110", "101", "100"}), {}});
  r.push_back({"alpha-domain", triple(R::GreaterEq, R::Greater, R::Any), {words({"110", "210"})}});
  r.push_back({"alpha-range", triple(R::Greater, R::GreaterEq, R::Any), {words({"100", "210"})}});
  r.push_back({"S-2134-2143", words({"2134", "2143"}, true), {}});
  r.push_back({"S-2134-2143-3124", words({"2134", "2143", "3124"}, true), {}});
  r.push_back({"S-24135", words({"24135", "24153", "42135", "42153"}, true), {}});
  r.push_back({"S-4231-42513", words({"4231", "42513"}, true), {}});
  return r;
}

}  // namespace

const std::vector<ClassRegistryEntry>& class_registry() {
  static const std::vector<ClassRegistryEntry> registry = build_registry();
  return registry;
}

const ClassRegistryEntry* find_class(std::string_view name) {
  for (const auto& entry : class_registry())
    if (entry.name == name) return &entry;
  return nullptr;
}

ClassSpec resolve_class(std::string_view text) {
  if (const auto* entry = find_class(text)) return entry->spec;
  return parse_class_spec(text);
}

namespace classes {
ClassSpec rise_domain() { return words({"100", "210", "201"}); }
ClassSpec rise_range() { return words({"101", "210", "201"}); }
ClassSpec alpha_domain() { return words({"110", "210"}); }
ClassSpec alpha_range() { return words({"100", "210"}); }
}  // namespace classes

IdentityReport check_class_identities(int n) {
  IdentityReport report;
  report.n = n;
  for (const auto& entry : class_registry()) {
    if (entry.spec.universe != Universe::InversionSequences) continue;
    for (const auto& other : entry.equivalents) {
      ++report.comparisons;
      for (const auto& e : gen_invseqs(n)) {
        const bool a = is_member(entry.spec, e.view());
        const bool b = is_member(other, e.view());
        if (a != b) {
          report.mismatches.push_back({entry.name, entry.spec, other, e, a});
          break;
        }
      }
    }
  }
  return report;
}

}  // namespace invseq
