// kmforge: command-line front end.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "kmforge/error.hpp"
#include "kmforge/io/json.hpp"
#include "kmforge/verify/suites.hpp"

using namespace kmforge;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kFailed = 1, kInputError = 2, kCatalogMiss = 3 };

struct Options {
  std::string out;
  std::string algebra = "sl2C";
  std::string positional_algebra;
  std::string kind;
  std::string sigma = "id";
  std::uint32_t denominator = 0;
  std::int64_t n = 3;
  std::uint32_t bound = kDefaultOrderBound;
  std::uint64_t seed = 1;
  std::uint32_t trials = 100;
  std::uint32_t q = 0;
  std::string r;
  std::string input;
  std::string input2;
  std::string suite;
  std::uint32_t level = 0;
};

json read_json(const std::string& path) {
  std::stringstream buf;
  if (path.empty() || path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::InvalidInput, "cannot read '" + path + "'");
    buf << in.rdbuf();
  }
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::InvalidInput, std::string("malformed JSON: ") + e.what());
  }
}

void emit(const Options& o, const json& j) {
  const std::string text = j.dump(2) + "\n";
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(o.out);
  if (!out) throw Error(ErrorCode::InvalidInput, "cannot write '" + o.out + "'");
  out << text;
}

std::uint32_t env_level() {
  const char* v = std::getenv("KMFORGE_LEVEL");
  if (!v || !*v) return 0;
  try {
    std::size_t used = 0;
    const long n = std::stol(v, &used);
    if (used == std::string(v).size() && n > 0 && n % 4 == 0) return static_cast<std::uint32_t>(n);
  } catch (const std::exception&) {
  }
  throw Error(ErrorCode::InvalidInput, "KMFORGE_LEVEL must be a positive multiple of 4");
}

std::string algebra_name(const Options& o) { return o.positional_algebra.empty() ? o.algebra : o.positional_algebra; }

json order_json(std::optional<std::uint32_t> n) { return n ? json(*n) : json("unbounded"); }

Invariant invariant_of(const json& j, const Options& o) {
  if (j.contains("kind")) return io::invariant_from_json(j, nullptr);
  auto phi = io::standard_from_json(j, o.level);
  std::uint32_t q = o.q;
  if (!q && j.contains("order") && j.at("order").is_number_unsigned()) q = j.at("order").get<std::uint32_t>();
  if (!q) {
    auto n = standard_order(phi, o.bound);
    if (!n) throw Error(ErrorCode::NotFiniteOrder, "no finite order up to " + std::to_string(o.bound));
    q = *n;
  }
  if (phi.epsilon() == 1) return extract_invariant_first(phi, q);
  return extract_invariant_second(phi, q);
}

int cmd_algebra_list(const Options& o) {
  emit(o, builtin_algebra_names());
  return kOk;
}

int cmd_algebra_show(const Options& o) {
  auto g = builtin_algebra(algebra_name(o));
  json j = io::to_json(*g);
  try {
    j["automorphisms"] = automorphism_names(g);
  } catch (const Error&) {
    j["automorphisms"] = json::array();
  }
  emit(o, j);
  return kOk;
}

int cmd_invariant(const Options& o) {
  emit(o, io::to_json(invariant_of(read_json(o.input), o)));
  return kOk;
}

int cmd_realize(const Options& o) {
  const json in = read_json(o.input);
  auto inv = io::invariant_from_json(in, builtin_algebra(in.value("algebra", algebra_name(o))));
  Realization real = std::holds_alternative<FirstKindInvariant>(inv)
                         ? [&] {
                             const auto& f = std::get<FirstKindInvariant>(inv);
                             return realize_first(f.p, f.rho, component_representative(f.rho, f.beta_class), f.q);
                           }()
                         : [&] {
                             const auto& s = std::get<SecondKindInvariant>(inv);
                             return realize_second(s.phi_plus, s.phi_minus);
                           }();
  json j = io::to_json(real.phi);
  j["order"] = order_json(standard_order(real.phi, o.bound));
  emit(o, j);
  return kOk;
}

int cmd_order(const Options& o) {
  auto phi = io::standard_from_json(read_json(o.input), o.level);
  std::optional<std::uint32_t> n;
  if (!o.r.empty()) {
    n = standard_order(ScaledStandard{phi, io::rational_from_json(json(o.r))}, o.bound);
  } else {
    n = standard_order(phi, o.bound);
  }
  emit(o, {{"order", order_json(n)}, {"bound", o.bound}});
  return kOk;
}

int cmd_equivalent(const Options& o) {
  auto a = invariant_of(read_json(o.input), o);
  auto b = invariant_of(read_json(o.input2), o);
  emit(o, {{"equivalent", invariants_equal(a, b)}, {"left", io::to_json(a)}, {"right", io::to_json(b)}});
  return kOk;
}

int cmd_classify(const Options& o, bool realforms) {
  auto g = builtin_algebra(algebra_name(o));
  json out = json::array();
  if (realforms) {
    for (const auto& f : enumerate_real_forms(g))
      if (o.kind.empty() || kind_name(f.kind) == o.kind) out.push_back(io::to_json(f));
  } else {
    std::vector<FormKind> kinds{FormKind::OneA, FormKind::OneB, FormKind::Two};
    if (!o.kind.empty()) kinds = {parse_kind(o.kind)};
    for (FormKind k : kinds)
      for (const auto& inv : enumerate_involutions(g, k)) out.push_back(io::to_json(inv));
  }
  emit(o, out);
  return kOk;
}

int cmd_verify(const Options& o) {
  SuiteConfig c;
  c.algebra = algebra_name(o);
  c.sigma = o.sigma;
  c.denominator = o.denominator;
  c.level = o.level;
  c.n = o.n;
  c.trials = o.trials;
  c.seed = o.seed;
  c.q = o.q;
  c.bound = o.bound;
  auto report = run_suite(o.suite, c);
  emit(o, to_json(report, c));
  return report.pass() ? kOk : kFailed;
}

int exit_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::CatalogMiss:
    case ErrorCode::ClassifierUnavailable:
      return kCatalogMiss;
    default:
      return kInputError;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Twisted loop algebras, affine Kac-Moody algebras, their automorphisms and real forms"};
  app.require_subcommand(1);
  Options o;
  std::function<int()> action;
  app.add_option("--out", o.out, "Write JSON output to this file");

  auto* algebra = app.add_subcommand("algebra", "Built-in algebras");
  algebra->require_subcommand(1);
  algebra->add_subcommand("list", "List built-in algebras")->callback([&] { action = [&] { return cmd_algebra_list(o); }; });
  auto* show = algebra->add_subcommand("show", "Structure constants and Killing form");
  show->add_option("name", o.positional_algebra, "Algebra name");
  show->add_option("--algebra", o.algebra, "Algebra name");
  show->callback([&] { action = [&] { return cmd_algebra_show(o); }; });

  auto* autom = app.add_subcommand("auto", "Standard automorphisms and their invariants");
  autom->require_subcommand(1);
  auto* inv = autom->add_subcommand("invariant", "Invariant of an automorphism read as JSON");
  inv->add_option("input", o.input, "JSON file, '-' for stdin");
  inv->add_option("--q", o.q, "Order (default: the 'order' field, else computed)");
  inv->add_option("--bound", o.bound, "Order bound");
  inv->callback([&] { action = [&] { return cmd_invariant(o); }; });
  auto* realize = autom->add_subcommand("realize", "Representative automorphism of an invariant");
  realize->add_option("input", o.input, "JSON file, '-' for stdin");
  realize->add_option("--algebra", o.algebra, "Algebra when the input names none");
  realize->add_option("--bound", o.bound, "Order bound");
  realize->callback([&] { action = [&] { return cmd_realize(o); }; });
  auto* order = autom->add_subcommand("order", "Order of an automorphism");
  order->add_option("input", o.input, "JSON file, '-' for stdin");
  order->add_option("--bound", o.bound, "Order bound");
  order->add_option("--r", o.r, "Compose with tau_r first (positive rational)");
  order->callback([&] { action = [&] { return cmd_order(o); }; });
  auto* equiv = autom->add_subcommand("equivalent", "Compare two invariants or automorphisms");
  equiv->add_option("left", o.input, "JSON file")->required();
  equiv->add_option("right", o.input2, "JSON file")->required();
  equiv->add_option("--bound", o.bound, "Order bound");
  equiv->callback([&] { action = [&] { return cmd_equivalent(o); }; });

  auto* classify = app.add_subcommand("classify", "Involution and real form lists");
  classify->require_subcommand(1);
  for (const bool realforms : {false, true}) {
    auto* sub = classify->add_subcommand(realforms ? "realforms" : "involutions",
                                         realforms ? "Real forms with invariants" : "Involutions with invariants");
    sub->add_option("name", o.positional_algebra, "Algebra name");
    sub->add_option("--algebra", o.algebra, "Algebra name");
    sub->add_option("--kind", o.kind, "Restrict to one kind")->check(CLI::IsMember({"compact", "1a", "1b", "2"}));
    sub->callback([&o, &action, realforms] { action = [&o, realforms] { return cmd_classify(o, realforms); }; });
  }

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", o.suite, "Suite")->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--algebra", o.algebra, "Algebra name");
  verify->add_option("--sigma", o.sigma, "Twist for jacobi and cocycle (catalog name)");
  verify->add_option("--D", o.denominator, "Exponent denominator (0: order of sigma)");
  verify->add_option("--N", o.n, "Truncation degree")->check(CLI::NonNegativeNumber);
  verify->add_option("--trials", o.trials, "Random trials");
  verify->add_option("--seed", o.seed, "Random seed");
  verify->add_option("--q", o.q, "Single order for roundtrip");
  verify->add_option("--bound", o.bound, "Order bound");
  verify->callback([&] { action = [&] { return cmd_verify(o); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cout << io::error_body("InvalidInput", e.what()).dump(2) << "\n";
    return kInputError;
  }

  try {
    o.level = env_level();
    return action();
  } catch (const Error& e) {
    std::cout << io::error_body(std::string(error_name(e.code())), e.what()).dump(2) << "\n";
    return exit_for(e.code());
  } catch (const json::exception& e) {
    std::cout << io::error_body("InvalidInput", e.what()).dump(2) << "\n";
    return kInputError;
  }
}
