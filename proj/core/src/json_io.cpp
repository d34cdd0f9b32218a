#include "diophant/json_io.hpp"

#include "diophant/error.hpp"

namespace diophant::json_io {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(ErrorCode::DomainError, std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::size_t size_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
    fail(ErrorCode::DomainError, std::string("field \"") + key + "\" must be a nonnegative integer");
  }
  return v.get<std::size_t>();
}

std::vector<std::size_t> index_list(const json& j, const char* what) {
  if (!j.is_array()) fail(ErrorCode::DomainError, std::string(what) + " must be an array");
  std::vector<std::size_t> out;
  for (const auto& v : j) {
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
      fail(ErrorCode::DomainError, std::string(what) + " entries must be nonnegative integers");
    }
    out.push_back(v.get<std::size_t>());
  }
  return out;
}

Mask bool_list(const json& j, const char* what) {
  if (!j.is_array()) fail(ErrorCode::DomainError, std::string(what) + " must be an array");
  Mask out;
  for (const auto& v : j) {
    if (!v.is_boolean()) fail(ErrorCode::DomainError, std::string(what) + " entries must be booleans");
    out.push_back(v.get<bool>());
  }
  return out;
}

template <std::size_t N>
json named_values(const std::array<std::string, N>& names, const std::array<RingElement, N>& values) {
  json out = json::object();
  for (std::size_t i = 0; i < N; ++i) out[names[i]] = element_to_json(values[i]);
  return out;
}

}  // namespace

json ring_to_json(const RingDescriptor& ring) {
  switch (ring.kind()) {
    case RingKind::RationalIntegers: return "Z";
    case RingKind::GaussianIntegers: return "gauss";
    case RingKind::QuadReal: return json{{"quad", ring.radicand()}};
  }
  return "Z";
}

RingDescriptor ring_from_json(const json& j) {
  if (j.is_string()) {
    const auto tag = j.get<std::string>();
    if (tag == "Z") return RingDescriptor::integers();
    if (tag == "gauss") return RingDescriptor::gaussian();
    fail(ErrorCode::DomainError, "unknown ring tag \"" + tag + "\"");
  }
  if (j.is_object() && j.contains("quad") && j.at("quad").is_number_integer()) {
    return RingDescriptor::quadratic(j.at("quad").get<std::int64_t>());
  }
  fail(ErrorCode::DomainError, "ring must be \"Z\", \"gauss\" or {\"quad\": d}");
}

json bigint_to_json(const BigInt& v) {
  if (fits_int64(v)) return v.get_si();
  return to_string(v);
}

BigInt bigint_from_json(const json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return BigInt(std::to_string(j.get<std::uint64_t>()));
    return BigInt(std::to_string(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    BigInt v;
    if (v.set_str(j.get<std::string>(), 10) != 0) fail(ErrorCode::DomainError, "malformed integer string");
    return v;
  }
  fail(ErrorCode::DomainError, "expected an integer");
}

json element_to_json(const RingElement& x) { return json::array({bigint_to_json(x.a()), bigint_to_json(x.b())}); }

RingElement element_from_json(const json& j, RingDescriptor ring) {
  if (j.is_array() && j.size() == 2) return RingElement(ring, bigint_from_json(j[0]), bigint_from_json(j[1]));
  if (j.is_number_integer() || j.is_string()) return RingElement(ring, bigint_from_json(j));
  fail(ErrorCode::DomainError, "ring element must be [a, b]");
}

json assignment_to_json(const Assignment& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(element_to_json(v));
  return out;
}

Assignment assignment_from_json(const json& j, RingDescriptor ring) {
  if (!j.is_array()) fail(ErrorCode::DomainError, "point must be an array of ring elements");
  Assignment out;
  for (const auto& v : j) out.push_back(element_from_json(v, ring));
  return out;
}

json polynomial_to_json(const Polynomial& p) {
  json terms = json::array();
  for (const auto& t : p.terms()) terms.push_back({{"c", element_to_json(t.coeff)}, {"e", t.exponents}});
  return {{"ring", ring_to_json(p.ring())}, {"arity", p.arity()}, {"terms", terms}};
}

Polynomial polynomial_from_json(const json& j) {
  const RingDescriptor ring = ring_from_json(field(j, "ring"));
  const std::size_t arity = size_field(j, "arity");
  const json& terms = field(j, "terms");
  if (!terms.is_array()) fail(ErrorCode::DomainError, "terms must be an array");
  std::vector<Term> out;
  for (const auto& t : terms) {
    Exponents e;
    for (auto v : index_list(field(t, "e"), "exponents")) {
      if (v > UINT32_MAX) fail(ErrorCode::DomainError, "exponent too large");
      e.push_back(static_cast<std::uint32_t>(v));
    }
    if (e.size() != arity) fail(ErrorCode::ArityMismatch, "exponent vector length differs from arity");
    out.push_back({element_from_json(field(t, "c"), ring), std::move(e)});
  }
  return Polynomial::from_terms(ring, arity, std::move(out));
}

json set_to_json(const DiophantineSet& s) {
  return {{"ring", ring_to_json(s.ring())},
          {"domain", s.domain() == SetDomain::Naturals ? "N" : "Z"},
          {"params", s.params()},
          {"aux", s.aux()},
          {"q", polynomial_to_json(s.q())}};
}

DiophantineSet set_from_json(const json& j) {
  const RingDescriptor ring = ring_from_json(field(j, "ring"));
  const std::string domain_tag = field(j, "domain").is_string() ? j.at("domain").get<std::string>() : "";
  if (domain_tag != "N" && domain_tag != "Z") fail(ErrorCode::DomainError, "domain must be \"N\" or \"Z\"");
  const std::size_t params = size_field(j, "params");
  const std::size_t aux = size_field(j, "aux");
  Polynomial q = polynomial_from_json(field(j, "q"));
  if (!(q.ring() == ring)) fail(ErrorCode::RingMismatch, "polynomial ring differs from set ring");
  if (q.arity() != params + aux) fail(ErrorCode::ArityMismatch, "q arity must equal params + aux");
  return DiophantineSet(ring, params, aux, {std::move(q)},
                        domain_tag == "N" ? SetDomain::Naturals : SetDomain::Integers);
}

json tristate_to_json(const TriState& s) {
  json out{{"state", state_name(s)}};
  if (const auto* m = std::get_if<Member>(&s)) out["witness"] = assignment_to_json(m->witness);
  if (const auto* u = std::get_if<Unknown>(&s)) out["radius"] = u->radius;
  return out;
}

json sigma_witness_to_json(const SigmaWitness& w) {
  return {{"d", w.d}, {"n", w.n}, {"values", named_values(sigma_names(), w.values)}};
}

json gauss_witness_to_json(const GaussWitness& w) {
  return {{"n", w.n}, {"values", named_values(gauss_names(), w.values)}};
}

GaussWitness gauss_witness_from_json(const json& j) {
  GaussWitness w;
  w.n = static_cast<std::uint64_t>(size_field(j, "n"));
  const json& values = field(j, "values");
  for (std::size_t i = 0; i < kGaussArity; ++i) {
    w.values[i] = element_from_json(field(values, gauss_names()[i].c_str()), RingDescriptor::gaussian());
  }
  return w;
}

json gauss_report_to_json(const GaussReport& r) {
  return {{"holds", r.holds}, {"equations", r.equations}, {"failing", r.failing}};
}

json system_to_json(const FormalSystem& sys) {
  json subst = json::array();
  for (std::size_t phi = 0; phi < sys.formulas; ++phi) {
    json row = json::array();
    for (std::size_t n = 0; n < sys.names; ++n) row.push_back(sys.apply(phi, n));
    subst.push_back(row);
  }
  return {{"formulas", sys.formulas},
          {"sentences", sys.sentences},
          {"names", sys.names},
          {"naming", sys.naming},
          {"subst", subst}};
}

FormalSystem system_from_json(const json& j) {
  FormalSystem sys;
  sys.formulas = size_field(j, "formulas");
  sys.names = size_field(j, "names");
  sys.sentences = bool_list(field(j, "sentences"), "sentences");
  sys.naming = index_list(field(j, "naming"), "naming");
  const json& rows = field(j, "subst");
  if (!rows.is_array() || rows.size() != sys.formulas) fail(ErrorCode::DomainError, "subst needs one row per formula");
  for (const auto& row : rows) {
    auto r = index_list(row, "subst row");
    if (r.size() != sys.names) fail(ErrorCode::DomainError, "subst rows need one entry per name");
    sys.subst.insert(sys.subst.end(), r.begin(), r.end());
  }
  sys.validate();
  return sys;
}

json function2_to_json(const FiniteFunction2& g) {
  json rows = json::array();
  for (std::size_t s = 0; s < g.domain_size; ++s) {
    json row = json::array();
    for (std::size_t t = 0; t < g.domain_size; ++t) row.push_back(g.at(s, t));
    rows.push_back(row);
  }
  return {{"T", g.domain_size}, {"Y", g.codomain_size}, {"table", rows}};
}

FiniteFunction2 function2_from_json(const json& j) {
  FiniteFunction2 g;
  g.domain_size = size_field(j, "T");
  g.codomain_size = size_field(j, "Y");
  const json& rows = field(j, "table");
  if (!rows.is_array() || rows.size() != g.domain_size) fail(ErrorCode::DomainError, "table needs |T| rows");
  for (const auto& row : rows) {
    auto r = index_list(row, "table row");
    if (r.size() != g.domain_size) fail(ErrorCode::DomainError, "table rows need |T| entries");
    g.table.insert(g.table.end(), r.begin(), r.end());
  }
  g.validate();
  return g;
}

}  // namespace diophant::json_io
