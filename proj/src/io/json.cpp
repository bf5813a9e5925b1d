#include "kmforge/io/json.hpp"

#include "kmforge/error.hpp"

namespace kmforge::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::InvalidInput, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::int64_t int_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (v.is_number_integer()) return v.get<std::int64_t>();
  if (v.is_string()) {
    try {
      std::size_t used = 0;
      auto n = std::stoll(v.get<std::string>(), &used);
      if (used == v.get<std::string>().size()) return n;
    } catch (const std::exception&) {
    }
  }
  bad(std::string("field '") + key + "' is not an integer");
}

std::string string_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_string()) bad(std::string("field '") + key + "' is not a string");
  return v.get<std::string>();
}

Rational parse_rational(const std::string& s) {
  try {
    Rational r(s, 10);
    if (r.get_den() == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    bad("not a rational: '" + s + "'");
  }
}

AlgebraPtr algebra_of(const json& j, const AlgebraPtr& fallback) {
  if (j.is_object() && j.contains("algebra")) return builtin_algebra(string_field(j, "algebra"));
  if (fallback) return fallback;
  bad("missing field 'algebra'");
}

json named_or_matrix(const FiniteAutomorphism& a) {
  if (auto name = name_of(a)) return {{"algebra", a.algebra()->name()}, {"catalog", *name}};
  return to_json(a);
}

}  // namespace

json to_json(const Rational& r) { return r.get_str(); }

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) bad("rational must be a decimal string");
  return parse_rational(j.get<std::string>());
}

json to_json(const CyclotomicNumber& x) {
  json coords = json::array();
  if (x.is_rational()) {
    const Rational r = x.to_rational();
    coords.push_back({r.get_num().get_str(), r.get_den().get_str()});
    return {{"level", 1}, {"coords", coords}};
  }
  for (const auto& c : x.coords()) coords.push_back({c.get_num().get_str(), c.get_den().get_str()});
  return {{"level", x.level()}, {"coords", coords}};
}

CyclotomicNumber cyclotomic_from_json(const json& j) {
  const std::int64_t level = int_field(j, "level");
  if (level <= 0 || level > static_cast<std::int64_t>(kMaxLevel)) bad("level out of range");
  const json& coords = field(j, "coords");
  if (!coords.is_array()) bad("coords must be an array");
  const auto& f = CyclotomicField::get(static_cast<std::uint32_t>(level));
  if (coords.size() != f->degree()) bad("coords length differs from the field degree");
  std::vector<Rational> out;
  for (const auto& c : coords) {
    if (c.is_array() && c.size() == 2 && c[0].is_string() && c[1].is_string())
      out.push_back(parse_rational(c[0].get<std::string>() + "/" + c[1].get<std::string>()));
    else
      out.push_back(rational_from_json(c));
  }
  return CyclotomicNumber(static_cast<std::uint32_t>(level), std::move(out));
}

json to_json(const AlgebraElement& x) {
  json coords = json::array();
  for (const auto& c : x.coords()) coords.push_back(to_json(c));
  return {{"algebra", x.algebra()->name()}, {"coords", coords}};
}

AlgebraElement element_from_json(const json& j, const AlgebraPtr& algebra) {
  const AlgebraPtr g = algebra_of(j, algebra);
  if (algebra && g->name() != algebra->name()) throw Error(ErrorCode::AlgebraMismatch, "element of another algebra");
  const json& coords = field(j, "coords");
  if (!coords.is_array() || coords.size() != g->dim()) bad("element needs " + std::to_string(g->dim()) + " coords");
  Vector v;
  for (const auto& c : coords) v.push_back(cyclotomic_from_json(c));
  return AlgebraElement(g, std::move(v));
}

json to_json(const FiniteAutomorphism& a) {
  json m = json::array();
  const Matrix& mat = a.matrix();
  for (std::size_t r = 0; r < mat.rows(); ++r)
    for (std::size_t c = 0; c < mat.cols(); ++c) m.push_back(to_json(mat(r, c)));
  json out{{"algebra", a.algebra()->name()}, {"matrix", m}, {"antilinear", a.antilinear()}};
  if (auto name = name_of(a)) out["catalog"] = *name;
  return out;
}

FiniteAutomorphism automorphism_from_json(const json& j, const AlgebraPtr& fallback) {
  const AlgebraPtr g = algebra_of(j, fallback);
  if (j.contains("catalog") && !j.contains("matrix")) return named_automorphism(g, string_field(j, "catalog"));
  const json& m = field(j, "matrix");
  const std::size_t d = g->dim();
  std::vector<json> entries;
  if (m.is_array())
    for (const auto& row : m) {
      if (row.is_array())
        for (const auto& x : row) entries.push_back(x);
      else
        entries.push_back(row);
    }
  if (entries.size() != d * d) bad("matrix needs " + std::to_string(d * d) + " entries");
  Matrix mat(d, d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) mat(r, c) = cyclotomic_from_json(entries[r * d + c]);
  const bool antilinear = j.contains("antilinear") && j.at("antilinear").get<bool>();
  FiniteAutomorphism a(g, std::move(mat), antilinear);
  if (!check_automorphism(a)) bad("matrix is not an automorphism");
  return a;
}

json to_json(const LieAlgebraTable& table) {
  json constants = json::array();
  const std::size_t d = table.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      for (const auto& term : table.bracket_terms(i, j))
        constants.push_back({{"i", i}, {"j", j}, {"k", term.index}, {"c", to_json(term.coefficient)}});
  json killing = json::array();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) killing.push_back(to_json(table.killing(i, j)));
  return {{"name", table.name()},
          {"dim", d},
          {"base_field", table.base_field() == BaseField::Complex ? "C" : "R"},
          {"compact", table.compact()},
          {"basis", table.basis_names()},
          {"structure_constants", constants},
          {"killing", killing}};
}

json to_json(const ContextPtr& ctx) {
  return {{"algebra", ctx->algebra()->name()},
          {"sigma", named_or_matrix(ctx->sigma())},
          {"D", ctx->denominator()},
          {"level", ctx->level()}};
}

ContextPtr context_from_json(const json& j, std::uint32_t level_override) {
  const AlgebraPtr g = algebra_of(j, nullptr);
  FiniteAutomorphism sigma =
      j.contains("sigma") ? automorphism_from_json(j.at("sigma"), g) : FiniteAutomorphism::identity(g);
  const std::int64_t D = j.contains("D") ? int_field(j, "D") : 0;
  std::int64_t level = j.contains("level") ? int_field(j, "level") : 0;
  if (level_override) level = level_override;
  if (D < 0 || level < 0) bad("negative D or level");
  return TwistContext::make(sigma, static_cast<std::uint32_t>(D), static_cast<std::uint32_t>(level));
}

json to_json(const LoopElement& u) {
  json terms = json::array();
  for (const auto& [k, x] : u.terms()) terms.push_back({{"k", k}, {"coeff", to_json(x)}});
  return {{"context", to_json(u.context())}, {"terms", terms}};
}

LoopElement loop_from_json(const json& j, std::uint32_t level_override) {
  auto ctx = context_from_json(field(j, "context"), level_override);
  LoopElement u(ctx);
  const json& terms = field(j, "terms");
  if (!terms.is_array()) bad("terms must be an array");
  for (const auto& t : terms) u.add_term(int_field(t, "k"), element_from_json(field(t, "coeff"), ctx->algebra()));
  if (!validate(u)) bad("loop violates the twist condition");
  return u;
}

json to_json(const AffineElement& x) { return {{"loop", to_json(x.loop)}, {"c", to_json(x.c)}, {"d", to_json(x.d)}}; }

AffineElement affine_from_json(const json& j, std::uint32_t level_override) {
  return {loop_from_json(field(j, "loop"), level_override), cyclotomic_from_json(field(j, "c")),
          cyclotomic_from_json(field(j, "d"))};
}

json to_json(const StandardAutomorphism& phi) {
  json out{{"source", to_json(phi.source())},
           {"target", to_json(phi.target())},
           {"epsilon", phi.epsilon()},
           {"shift", to_json(phi.shift())},
           {"phi0", named_or_matrix(phi.phi0())}};
  if (phi.curve()) out["curve"] = {{"generator", to_json(phi.curve()->generator())}};
  return out;
}

StandardAutomorphism standard_from_json(const json& j, std::uint32_t level_override) {
  auto source = context_from_json(field(j, "source"), level_override);
  auto target = j.contains("target") ? context_from_json(j.at("target"), level_override) : source;
  const std::int64_t eps = j.contains("epsilon") ? int_field(j, "epsilon") : 1;
  const Rational shift = j.contains("shift") ? rational_from_json(j.at("shift")) : Rational(0);
  auto phi0 = automorphism_from_json(field(j, "phi0"), source->algebra());
  std::optional<ExpCurveData> curve;
  if (j.contains("curve"))
    curve = make_exp_curve(element_from_json(field(j.at("curve"), "generator"), source->algebra()));
  return StandardAutomorphism(source, target, static_cast<int>(eps), shift, phi0, std::move(curve));
}

json to_json(const Invariant& inv) {
  if (const auto* f = std::get_if<FirstKindInvariant>(&inv))
    return {{"kind", "first"},
            {"algebra", f->rho.algebra()->name()},
            {"q", f->q},
            {"p", f->p},
            {"rho", f->rho_id},
            {"beta", f->beta_class}};
  const auto& s = std::get<SecondKindInvariant>(inv);
  return {{"kind", "second"},
          {"algebra", s.phi_plus.algebra()->name()},
          {"phi_plus", named_or_matrix(s.phi_plus)},
          {"phi_minus", named_or_matrix(s.phi_minus)}};
}

Invariant invariant_from_json(const json& j, const AlgebraPtr& algebra) {
  const AlgebraPtr g = algebra_of(j, algebra);
  const std::string kind = string_field(j, "kind");
  if (kind == "first") {
    FirstKindInvariant inv;
    const std::int64_t q = int_field(j, "q");
    if (q <= 0) bad("q must be positive");
    inv.q = static_cast<std::uint32_t>(q);
    inv.p = int_field(j, "p");
    inv.rho_id = string_field(j, "rho");
    inv.rho = catalog_entry(g, inv.rho_id).rho;
    inv.beta_class = string_field(j, "beta");
    return inv;
  }
  if (kind == "second")
    return SecondKindInvariant{automorphism_from_json(field(j, "phi_plus"), g),
                               automorphism_from_json(field(j, "phi_minus"), g)};
  bad("invariant kind must be 'first' or 'second'");
}

json to_json(const InvolutionDescriptor& d) {
  return {{"kind", kind_name(d.kind)},
          {"label", d.label},
          {"invariant", to_json(d.invariant)},
          {"twist", named_or_matrix(d.twist)},
          {"D", d.psi.source()->denominator()},
          {"psi", to_json(d.psi)}};
}

json to_json(const RealFormDescriptor& d) {
  return {{"kind", kind_name(d.kind)},
          {"label", d.label},
          {"invariant", to_json(d.invariant)},
          {"twist", named_or_matrix(d.context()->sigma())},
          {"D", d.context()->denominator()},
          {"theta", to_json(d.theta)},
          {"type", d.theta.epsilon() == 1 ? "almost compact" : "almost split"},
          {"hat", d.hat_adjoin}};
}

json to_json(const CheckReport& r, std::size_t max_witnesses) {
  json w = json::array();
  for (std::size_t i = 0; i < r.witnesses.size() && i < max_witnesses; ++i) w.push_back(r.witnesses[i]);
  return {{"pass", r.pass}, {"checks", r.checks}, {"witnesses", w}};
}

json error_body(const std::string& code, const std::string& message) {
  return {{"error", {{"code", code}, {"message", message}}}};
}

}  // namespace kmforge::io
