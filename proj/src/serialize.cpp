#include "invseq/serialize.hpp"

namespace invseq {

namespace {

Json roles_field(const std::optional<MoveRoles>& roles, const std::vector<int> MoveRoles::*field) {
  if (!roles) return nullptr;
  return (*roles).*field;
}

}  // namespace

Json to_json(const StatProfile& p) {
  return Json{
      {"n", p.n},
      {"asc", p.asc},
      {"des", p.des},
      {"plateau", p.plateau},
      {"dt", p.dt},
      {"pk", p.pk},
      {"va", p.va},
      {"sf", p.sf},
      {"su", p.su},
      {"doubleAsc", p.double_asc},
      {"leftToRightMax", p.l2r_max},
      {"crucial", p.crucial},
      {"fix", roles_field(p.roles, &MoveRoles::fix)},
      {"tr", roles_field(p.roles, &MoveRoles::tr)},
      {"tl", roles_field(p.roles, &MoveRoles::tl)},
  };
}

Json to_json(const MoveTrace& trace) {
  Json steps = Json::array();
  for (const MoveStep& s : trace.steps)
    steps.push_back({{"mover", s.mover},
                     {"direction", to_string(s.direction)},
                     {"from", s.from},
                     {"to", s.to},
                     {"valueBefore", s.value_before},
                     {"valueAfter", s.value_after}});
  Json out{{"steps", std::move(steps)}};
  if (!trace.states.empty()) {
    Json states = Json::array();
    for (const InvSeq& e : trace.states) states.push_back(e.entries());
    out["states"] = std::move(states);
  }
  return out;
}

Json to_json(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(x);
  return x.str();
}

Json to_json(const std::vector<Integer>& v) {
  Json out = Json::array();
  for (const Integer& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const IntPoly& p) { return to_json(p.coeffs()); }

Json to_json(const SetDist& d) {
  Json out = Json::array();
  for (const auto& [key, count] : d) out.push_back({{"key", key}, {"count", count}});
  return out;
}

Json to_json(const JointDist& d) {
  Json out = Json::array();
  for (const auto& [key, count] : d)
    out.push_back({{"key", {{"asc", key.first}, {"dt", key.second}}}, {"count", count}});
  return out;
}

Json to_json(const CheckResult& r, bool with_timing) {
  Json out{{"name", r.name},
           {"nRange", {r.n_min, r.n_max}},
           {"status", r.passed ? "pass" : "fail"},
           {"message", r.message}};
  if (with_timing) out["elapsedSeconds"] = r.elapsed.count();
  if (r.counterexample) {
    const Counterexample& c = *r.counterexample;
    out["counterexample"] = {{"n", c.n}, {"input", c.input}, {"expected", c.expected}, {"got", c.got}};
  } else {
    out["counterexample"] = nullptr;
  }
  return out;
}

Json error_json(const std::exception& e) {
  Json out;
  if (const auto* err = dynamic_cast<const Error*>(&e)) {
    out["error"] = to_string(err->kind());
  } else {
    out["error"] = "Error";
  }
  out["message"] = e.what();
  if (const auto* p = dynamic_cast<const ParseError*>(&e)) {
    out["position"] = p->position();
    out["token"] = p->token();
  } else if (const auto* r = dynamic_cast<const ResourceLimitError*>(&e)) {
    out["requested"] = r->requested();
    out["limit"] = r->limit();
  } else if (const auto* o = dynamic_cast<const OutOfRangeError*>(&e)) {
    out["position"] = o->position();
    out["value"] = o->value();
    out["bound"] = o->bound();
  } else if (const auto* m = dynamic_cast<const MismatchError*>(&e)) {
    out["n"] = m->n();
    out["expected"] = m->expected();
    out["got"] = m->got();
  }
  return out;
}

}  // namespace invseq
