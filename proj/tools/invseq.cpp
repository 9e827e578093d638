// invseq: counting, enumeration, bijections, traces, gamma vectors and the
// verification harness from the command line.

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "invseq/actions.hpp"
#include "invseq/bijections.hpp"
#include "invseq/codes.hpp"
#include "invseq/patterns.hpp"
#include "invseq/poly.hpp"
#include "invseq/serialize.hpp"
#include "invseq/stats.hpp"
#include "invseq/verify.hpp"

using namespace invseq;

namespace {

enum Exit { kOk = 0, kFinding = 1, kUsage = 2, kLimit = 3 };

enum class Format { Table, Json, Csv };

struct Options {
  std::string class_text;
  std::string n_text;
  std::string input;
  std::string input_perm;
  std::string format = "table";
  std::string via = "poly";
  std::string bijection;
  std::string stat = "asc";
  std::vector<std::string> theorems;
  int max_n = 0;
  bool with_stats = false;
  bool json = false;
  bool timing = false;
  bool parallel = false;
};

Format format_of(const Options& o) {
  if (o.json || o.format == "json") return Format::Json;
  if (o.format == "csv") return Format::Csv;
  return Format::Table;
}

std::pair<int, int> parse_range(const std::string& text) {
  auto to_int = [&](const std::string& s) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw ParseError(0, text, "expected N or A..B");
    return std::stoi(s);
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int n = to_int(text);
    return {n, n};
  }
  const int a = to_int(text.substr(0, dots));
  const int b = to_int(text.substr(dots + 2));
  if (a > b) throw ParseError(dots, text, "empty range");
  return {a, b};
}

int single_n(const Options& o) {
  const auto [a, b] = parse_range(o.n_text);
  if (a != b) throw ParseError(0, o.n_text, "a single n is expected here");
  return a;
}

std::string row(std::span<const int> w) { return render_word(w); }

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

// ---------------------------------------------------------------------------

int cmd_count(const Options& o) {
  const ClassSpec spec = resolve_class(o.class_text);
  const auto [a, b] = parse_range(o.n_text);
  require_within_limit(b);
  std::vector<std::pair<int, std::uint64_t>> rows;
  for (int n = a; n <= b; ++n) rows.emplace_back(n, class_count(spec, n));

  switch (format_of(o)) {
    case Format::Json: {
      Json out{{"class", render(spec)}, {"counts", Json::array()}};
      for (auto [n, c] : rows) out["counts"].push_back({{"n", n}, {"count", c}});
      print_json(out);
      break;
    }
    case Format::Csv:
      std::cout << "n,count\n";
      for (auto [n, c] : rows) std::cout << n << "," << c << "\n";
      break;
    case Format::Table:
      std::cout << "class " << render(spec) << "\n" << std::setw(4) << "n" << "  count\n";
      for (auto [n, c] : rows) std::cout << std::setw(4) << n << "  " << c << "\n";
      break;
  }
  return kOk;
}

int cmd_enumerate(const Options& o) {
  const ClassSpec spec = resolve_class(o.class_text);
  const int n = single_n(o);
  const Format fmt = format_of(o);
  Json out = Json::array();
  auto emit = [&](std::span<const int> w, const InvSeq* e) {
    if (fmt == Format::Json) {
      if (o.with_stats && e) out.push_back({{"word", Word(w.begin(), w.end())}, {"stats", to_json(profile(*e))}});
      else out.push_back(Word(w.begin(), w.end()));
    } else if (fmt == Format::Csv) {
      std::cout << '"' << row(w) << '"';
      if (o.with_stats) std::cout << "," << ascents(w) << "," << descents(w);
      std::cout << "\n";
    } else {
      std::cout << row(w);
      if (o.with_stats) std::cout << "  asc=" << ascents(w) << " des=" << descents(w);
      std::cout << "\n";
    }
  };
  if (fmt == Format::Csv) std::cout << (o.with_stats ? "word,asc,des\n" : "word\n");
  if (spec.universe == Universe::Permutations) {
    for (const Perm& p : perm_class_members(spec, n)) emit(p.view(), nullptr);
  } else {
    for (const InvSeq& e : class_members(spec, n)) emit(e.view(), &e);
  }
  if (fmt == Format::Json) print_json(out);
  return kOk;
}

void print_profile(const char* label, const InvSeq& e) {
  const StatProfile p = profile(e);
  auto set = [](const std::vector<int>& v) { return "{" + render_word(v) + "}"; };
  std::cout << label << " " << row(e.view()) << "\n"
            << "  Asc " << set(p.asc) << "  Des " << set(p.des) << "  Dt " << set(p.dt) << "\n"
            << "  Pk " << set(p.pk) << "  Va " << set(p.va) << "  Sf " << set(p.sf) << "  Su " << set(p.su) << "\n";
  if (p.roles)
    std::cout << "  Fix " << set(p.roles->fix) << "  Tr " << set(p.roles->tr) << "  Tl " << set(p.roles->tl)
              << "\n";
}

int cmd_map(const Options& o) {
  const std::string& b = o.bijection;
  const bool from_perm = b == "lehmer" || b == "bcode";
  if (from_perm == o.input_perm.empty())
    throw Error(ErrorKind::InvalidArgument,
                from_perm ? "--bijection " + b + " takes --input-perm" : "--bijection " + b + " takes --input");

  std::string out_text;
  std::optional<InvSeq> in_seq;
  std::optional<InvSeq> out_seq;
  if (from_perm) {
    const Perm p(parse_word(o.input_perm));
    out_seq = b == "lehmer" ? lehmer(p) : b_code(p);
    out_text = row(out_seq->view());
  } else {
    in_seq = InvSeq(parse_word(o.input));
    const InvSeq& e = *in_seq;
    if (b == "alpha") out_seq = alpha(e);
    else if (b == "beta") out_seq = beta(e);
    else if (b == "psi") out_seq = psi(e);
    else if (b == "psi-inv") out_seq = psi_inv(e);
    else if (b == "Gamma") out_seq = Gamma(e).first;
    else if (b == "gamma") out_seq = gamma_map(e);
    else if (b == "lehmer-inv") out_text = row(lehmer_inv(e).view());
    else if (b == "bcode-inv") out_text = row(b_decode(e).view());
    else throw Error(ErrorKind::InvalidArgument, "unknown bijection '" + b + "'");
    if (out_seq) out_text = row(out_seq->view());
  }

  if (format_of(o) == Format::Json) {
    Json out{{"bijection", b}, {"input", from_perm ? o.input_perm : o.input}, {"output", out_text}};
    if (o.with_stats) {
      if (in_seq) out["inputStats"] = to_json(profile(*in_seq));
      if (out_seq) out["outputStats"] = to_json(profile(*out_seq));
    }
    print_json(out);
  } else {
    std::cout << out_text << "\n";
    if (o.with_stats) {
      if (in_seq) print_profile("input ", *in_seq);
      if (out_seq) print_profile("output", *out_seq);
    }
  }
  return kOk;
}

int cmd_trace(const Options& o) {
  const InvSeq e(parse_word(o.input));
  const auto [image, trace] = Gamma(e, true);
  const InvSeq final_row = psi(image);
  if (format_of(o) == Format::Json) {
    Json out = to_json(trace);
    out["input"] = e.entries();
    out["Gamma"] = image.entries();
    out["gamma"] = final_row.entries();
    print_json(out);
    return kOk;
  }
  int width = 1;
  for (const InvSeq& s : trace.states)
    for (int v : s.entries()) width = std::max(width, static_cast<int>(std::to_string(v).size()));
  auto line = [&](const std::string& label, const InvSeq& s) {
    std::cout << std::left << std::setw(22) << label << std::right;
    for (int v : s.entries()) std::cout << " " << std::setw(width) << v;
    std::cout << "\n";
  };
  line("e", trace.states.front());
  for (std::size_t k = 0; k < trace.steps.size(); ++k) {
    const MoveStep& s = trace.steps[k];
    std::ostringstream label;
    label << "M" << s.mover << " " << (s.direction == Direction::Right ? "->" : "<-") << " " << s.from << ">"
          << s.to << " (" << s.value_before << ">" << s.value_after << ")";
    line(label.str(), trace.states[k + 1]);
  }
  line("Psi", final_row);
  return kOk;
}

int cmd_verify(const Options& o) {
  std::vector<CheckResult> results;
  const std::optional<int> max_n = o.max_n > 0 ? std::optional<int>(o.max_n) : std::nullopt;
  if (o.theorems.empty()) {
    results = check_all(max_n, o.parallel);
  } else {
    for (const auto& name : o.theorems) results.push_back(check(name, max_n));
  }
  const bool ok = std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });

  switch (format_of(o)) {
    case Format::Json: {
      Json out{{"ok", ok}, {"checks", Json::array()}};
      for (const auto& r : results) out["checks"].push_back(to_json(r, o.timing));
      print_json(out);
      break;
    }
    case Format::Csv:
      std::cout << "name,n_min,n_max,status,input,expected,got\n";
      for (const auto& r : results) {
        std::cout << r.name << "," << r.n_min << "," << r.n_max << "," << (r.passed ? "pass" : "fail");
        if (r.counterexample)
          std::cout << ",\"" << r.counterexample->input << "\",\"" << r.counterexample->expected << "\",\""
                    << r.counterexample->got << "\"";
        else
          std::cout << ",,,";
        std::cout << "\n";
      }
      break;
    case Format::Table:
      for (const auto& r : results) {
        std::cout << std::left << std::setw(18) << r.name << std::right << (r.passed ? "pass" : "FAIL") << "  n=" << r.n_min
                  << ".." << r.n_max;
        if (o.timing) std::cout << "  " << std::fixed << std::setprecision(3) << r.elapsed.count() << "s";
        std::cout << "\n";
        if (const auto& c = r.counterexample)
          std::cout << "    n=" << c->n << " input " << c->input << "\n    expected " << c->expected
                    << "\n    got      " << c->got << "\n    " << r.message << "\n";
      }
      std::cout << (ok ? "all checks passed" : "some checks failed") << "\n";
      break;
  }
  return ok ? kOk : kFinding;
}

int cmd_gamma(const Options& o) {
  const ClassSpec spec = resolve_class(o.class_text);
  const int n = single_n(o);
  require_within_limit(n);
  const bool perms = spec.universe == Universe::Permutations;
  if (o.via != "poly" && o.via != "orbits")
    throw Error(ErrorKind::InvalidArgument, "--via must be poly or orbits");
  if (o.via == "orbits" && !perms)
    throw Error(ErrorKind::InvalidArgument, "--via orbits needs a permutation class (perm:...)");
  const Stat stat = perms ? Stat::Des : Stat::Asc;
  const IntPoly h = dist_poly(spec, n, stat);
  const Format fmt = format_of(o);

  std::vector<Integer> gamma;
  try {
    if (o.via == "orbits") {
      std::vector<Perm> members;
      for (Perm p : perm_class_members(spec, n)) members.push_back(std::move(p));
      for (auto g : gamma_via_orbits(members)) gamma.emplace_back(g);
    } else {
      gamma = gamma_extract(h, std::max(n - 1, 0));
    }
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotSymmetric && e.kind() != ErrorKind::NotInvariant) throw;
    if (fmt == Format::Json) {
      Json out{{"class", render(spec)}, {"n", n}, {"stat", to_string(stat)}, {"poly", to_json(h)},
               {"finding", to_string(e.kind())}, {"message", e.what()}};
      print_json(out);
    } else {
      std::cout << "class " << render(spec) << "  n=" << n << "\n"
                << to_string(stat) << " polynomial: " << to_string(h) << "\n"
                << "finding: " << to_string(e.kind()) << ": " << e.what() << "\n";
    }
    return kFinding;
  }
  const bool nonneg = std::all_of(gamma.begin(), gamma.end(), [](const Integer& x) { return x >= 0; });
  const bool sym = is_symmetric(h, std::max(n - 1, 0));
  const bool uni = is_unimodal(h);
  if (fmt == Format::Json) {
    print_json(Json{{"class", render(spec)}, {"n", n}, {"via", o.via}, {"stat", to_string(stat)},
                    {"poly", to_json(h)}, {"gamma", to_json(gamma)}, {"nonnegative", nonneg},
                    {"symmetric", sym}, {"unimodal", uni}});
  } else {
    std::cout << "class " << render(spec) << "  n=" << n << "  via " << o.via << "\n"
              << to_string(stat) << " polynomial: " << to_string(h) << "\n"
              << "gamma: (";
    for (std::size_t i = 0; i < gamma.size(); ++i) std::cout << (i ? "," : "") << gamma[i];
    std::cout << ")\n"
              << "nonnegative: " << (nonneg ? "yes" : "no") << "  symmetric: " << (sym ? "yes" : "no")
              << "  unimodal: " << (uni ? "yes" : "no") << "\n";
  }
  return nonneg ? kOk : kFinding;
}

int cmd_poly(const Options& o) {
  const ClassSpec spec = resolve_class(o.class_text);
  const auto [a, b] = parse_range(o.n_text);
  require_within_limit(b);
  if (o.stat != "asc" && o.stat != "des") throw Error(ErrorKind::InvalidArgument, "--stat must be asc or des");
  const Stat stat = o.stat == "asc" ? Stat::Asc : Stat::Des;
  const Format fmt = format_of(o);
  Json out = Json::array();
  if (fmt == Format::Csv) std::cout << "n,coefficients,symmetric,unimodal\n";
  for (int n = a; n <= b; ++n) {
    const IntPoly h = dist_poly(spec, n, stat);
    const bool sym = is_symmetric(h, std::max(n - 1, 0));
    const bool uni = is_unimodal(h);
    std::string coeffs;
    for (int k = 0; k <= h.degree(); ++k) coeffs += (k ? "," : "") + h[k].str();
    if (fmt == Format::Json)
      out.push_back({{"n", n}, {"poly", to_json(h)}, {"symmetric", sym}, {"unimodal", uni}});
    else if (fmt == Format::Csv)
      std::cout << n << ",\"" << coeffs << "\"," << sym << "," << uni << "\n";
    else
      std::cout << std::setw(3) << n << "  " << to_string(h) << "  [" << (sym ? "symmetric" : "not symmetric")
                << ", " << (uni ? "unimodal" : "not unimodal") << "]\n";
  }
  if (fmt == Format::Json) print_json(Json{{"class", render(spec)}, {"stat", o.stat}, {"polys", out}});
  return kOk;
}

int exit_code_for(const std::exception& e) {
  const auto* err = dynamic_cast<const Error*>(&e);
  if (!err) return kFinding;
  switch (err->kind()) {
    case ErrorKind::ResourceLimit: return kLimit;
    case ErrorKind::ParseError:
    case ErrorKind::OutOfRange:
    case ErrorKind::NotInClass:
    case ErrorKind::NotMovable:
    case ErrorKind::UnknownCheck:
    case ErrorKind::InvalidArgument:
    case ErrorKind::NoPreimage: return kUsage;
    default: return kFinding;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pattern-avoiding inversion sequences: counting, bijections and verification", "invseq"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "JSON output, including errors");
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"table", "json", "csv"}));

  auto* count = app.add_subcommand("count", "Class sizes for each n");
  count->add_option("--class", o.class_text, "Registry name or class spec")->required();
  count->add_option("--n", o.n_text, "n or a..b")->required();

  auto* enumerate = app.add_subcommand("enumerate", "List class members in lexicographic order");
  enumerate->add_option("--class", o.class_text)->required();
  enumerate->add_option("--n", o.n_text)->required();
  enumerate->add_flag("--with-stats", o.with_stats);

  auto* map = app.add_subcommand("map", "Apply a bijection or code");
  map->add_option("--bijection", o.bijection)
      ->required()
      ->check(CLI::IsMember({"alpha", "beta", "psi", "psi-inv", "Gamma", "gamma", "lehmer", "lehmer-inv", "bcode",
                             "bcode-inv"}));
  map->add_option("--input", o.input, "Inversion sequence, 0-based values");
  map->add_option("--input-perm", o.input_perm, "Permutation, 1-based values");
  map->add_flag("--with-stats", o.with_stats);

  auto* trace = app.add_subcommand("trace", "Every intermediate sequence of Gamma, then psi");
  trace->add_option("--input", o.input)->required();

  auto* verify = app.add_subcommand("verify", "Run registered checks");
  verify->add_option("--theorem", o.theorems, "Check name (repeatable); default all");
  verify->add_option("--max-n", o.max_n, "Largest n to check");
  verify->add_flag("--timing", o.timing, "Report elapsed time per check");
  verify->add_flag("--parallel", o.parallel, "Run checks concurrently");

  auto* gamma = app.add_subcommand("gamma", "Gamma vector of the asc (or des) polynomial");
  gamma->add_option("--class", o.class_text)->required();
  gamma->add_option("--n", o.n_text)->required();
  gamma->add_option("--via", o.via)->check(CLI::IsMember({"poly", "orbits"}));

  auto* poly = app.add_subcommand("poly", "Distribution polynomials");
  poly->add_option("--class", o.class_text)->required();
  poly->add_option("--n", o.n_text)->required();
  poly->add_option("--stat", o.stat)->check(CLI::IsMember({"asc", "des"}));

  const bool json_requested = std::any_of(argv + 1, argv + argc, [](const char* a) {
    return std::string(a) == "--json" || std::string(a) == "--format=json";
  });
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    if (json_requested) {
      print_json(Json{{"error", "UsageError"}, {"message", e.what()}});
      return kUsage;
    }
    app.exit(e);
    return kUsage;
  }

  try {
    if (*count) return cmd_count(o);
    if (*enumerate) return cmd_enumerate(o);
    if (*map) return cmd_map(o);
    if (*trace) return cmd_trace(o);
    if (*verify) return cmd_verify(o);
    if (*gamma) return cmd_gamma(o);
    if (*poly) return cmd_poly(o);
  } catch (const std::exception& e) {
    if (format_of(o) == Format::Json) print_json(error_json(e));
    else std::cerr << "invseq: " << e.what() << "\n";
    return exit_code_for(e);
  }
  return kUsage;
}
