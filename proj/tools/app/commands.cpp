#include "commands.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <functional>
#include <map>
#include <ostream>
#include <stdexcept>

#include "commtrace/combinat.hpp"
#include "commtrace/maps.hpp"
#include "commtrace/rings.hpp"
#include "commtrace/text.hpp"
#include "commtrace/traceinv.hpp"
#include "commtrace/verify.hpp"

namespace commtrace::app {

using nlohmann::json;

namespace {

// Integral rationals (and big integers) that fit in 64 bits become JSON numbers;
// everything else is the exact "p/q" string.
json rational_json(const Rational& r) {
  if (is_integer(r) && r.get_num().fits_slong_p()) return r.get_num().get_si();
  return to_string(r);
}

json bigint_json(const BigInt& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

json echo(const Command& c) {
  json out = {{"name", c.name}};
  if (c.n) out["n"] = *c.n;
  if (c.m) out["m"] = *c.m;
  if (c.seed) out["seed"] = *c.seed;
  if (c.trials) out["trials"] = *c.trials;
  if (c.expr) out["expr"] = *c.expr;
  if (c.poly) out["poly"] = *c.poly;
  if (c.source) out["source"] = *c.source;
  if (c.target) out["target"] = *c.target;
  if (!c.sources.empty()) out["sources"] = c.sources;
  if (!c.targets.empty()) out["targets"] = c.targets;
  if (c.allow_large) out["allow_large"] = true;
  return out;
}

// Thrown for invocation problems caught before any computation.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

int require_n(const Command& c) {
  if (!c.n) throw UsageError("--n is required");
  if (*c.n < 1) throw UsageError("--n must be positive");
  if (*c.n > kMaxDeskN && !c.allow_large)
    throw UsageError("--n above " + std::to_string(kMaxDeskN) + " needs --allow-large");
  return *c.n;
}

int require_m(const Command& c) {
  if (!c.m) throw UsageError("--m is required");
  if (*c.m < 1) throw UsageError("--m must be positive");
  if (*c.m > kMaxDeskM && !c.allow_large)
    throw UsageError("--m above " + std::to_string(kMaxDeskM) + " needs --allow-large");
  return *c.m;
}

// m taken from --m when given, else from the largest copy index in use.
int m_for(const Command& c, int used) {
  if (c.m) return require_m(c);
  const int m = std::max(used, 1);
  if (m > kMaxDeskM && !c.allow_large)
    throw UsageError("expression uses more than " + std::to_string(kMaxDeskM) +
                     " copies; pass --allow-large");
  return m;
}

const std::string& require_text(const std::optional<std::string>& value, const char* flag) {
  if (!value) throw UsageError(std::string(flag) + " is required");
  return *value;
}

int max_copy(const Polynomial& p) {
  int out = 0;
  for (const auto& [monomial, c] : p.terms())
    for (const auto& [v, e] : monomial.factors()) out = std::max(out, v.copy());
  return out;
}

struct Outcome {
  bool ok = true;
  json payload;
};

Outcome cmd_dim(const Command& c) {
  const int n = require_n(c);
  const int m = require_m(c);
  json partitions = json::array();
  for (const auto& p : enumerate_set_partitions(m, n)) partitions.push_back(to_string(p));
  return {true, {{"dimension", bigint_json(multilinear_dim(n, m))}, {"partitions", partitions}}};
}

Outcome cmd_tbasis(const Command& c) {
  const int n = require_n(c);
  const int m = require_m(c);
  json basis = json::array();
  for (const auto& p : enumerate_set_partitions(m, n)) {
    const auto f = canonical_function(p, n);
    basis.push_back({{"partition", to_string(p)},
                     {"t", to_string(t_lambda(p))},
                     {"word", std::vector<int>(f.letters().begin(), f.letters().end())}});
  }
  return {true, {{"dimension", bigint_json(multilinear_dim(n, m))}, {"basis", basis}}};
}

Outcome cmd_restrict(const Command& c) {
  const int n = require_n(c);
  const auto e = parse_expression(require_text(c.expr, "--expr"));
  const RingConfig cfg(n, m_for(c, e.max_index()));
  const auto image = eval_diagonal(e, cfg);
  return {true,
          {{"expression", to_string(e)},
           {"polynomial", to_string(image)},
           {"sn_invariant", is_sn_invariant(image, cfg)}}};
}

Outcome cmd_reduce(const Command& c) {
  const int n = require_n(c);
  const auto e = parse_expression(require_text(c.expr, "--expr"));
  const RingConfig cfg(n, m_for(c, e.max_index()));
  const auto check = verify_reduction(e, cfg);
  return {check.ok(),
          {{"input", to_string(e)},
           {"output", to_string(check.output)},
           {"terms", check.output_terms},
           {"max_factors", check.max_factors},
           {"verified", check.agrees}}};
}

Outcome cmd_express(const Command& c) {
  const int n = require_n(c);
  Polynomial target(Family::Diagonal);
  int used = 0;
  if (c.expr) {
    const auto e = parse_expression(*c.expr);
    used = e.max_index();
    target = eval_diagonal(e, RingConfig(n, m_for(c, used)));
  } else if (c.poly) {
    target = parse_polynomial(*c.poly, Family::Diagonal);
    used = max_copy(target);
  } else {
    throw UsageError("one of --expr or --poly is required");
  }
  const RingConfig cfg(n, m_for(c, used));
  const auto coefficients = express_in_t_basis(target, cfg);
  json out = json::object();
  Polynomial rebuilt(Family::Diagonal);
  for (const auto& [lambda, coeff] : coefficients) {
    out[to_string(lambda)] = rational_json(coeff);
    rebuilt += eval_diagonal(t_lambda(lambda), cfg).scaled(coeff);
  }
  const Polynomial residual = target - rebuilt;
  return {residual.is_zero(), {{"coefficients", out}, {"residual", to_string(residual)}}};
}

Outcome cmd_verify_fundamental(const Command& c) {
  const auto check = verify_fundamental(require_n(c));
  return {check.ok(),
          {{"n", check.n},
           {"terms", check.terms},
           {"variables", check.variables},
           {"residual_terms", check.residual_terms},
           {"zero", check.ok()}}};
}

Outcome cmd_verify_isomorphism(const Command& c) {
  const RingConfig cfg(require_n(c), require_m(c));
  const auto check = verify_isomorphism(cfg);
  return {check.ok(),
          {{"dimension", bigint_json(check.dimension)},
           {"basis_size", check.basis_size},
           {"rank", check.rank},
           {"invariant", check.invariant},
           {"unitriangular", check.unitriangular},
           {"expansion_exact", check.expansion_exact},
           {"roundtrip", check.roundtrip},
           {"failures", check.failures}}};
}

Outcome cmd_verify_dmap(const Command& c) {
  const RingConfig cfg(require_n(c), require_m(c));
  const int trials = c.trials.value_or(100);
  if (trials < 0) throw UsageError("--trials must be nonnegative");
  const auto report = check_multiplicative(trials, c.seed.value_or(1), cfg);
  json verdicts = json::array();
  std::size_t passed = 0;
  for (const auto& t : report.trials) {
    passed += t.passed() ? 1 : 0;
    verdicts.push_back({{"trial", t.index},
                        {"a", to_string(t.a)},
                        {"b", to_string(t.b)},
                        {"h", to_string(t.h)},
                        {"multiplicative", t.multiplicative},
                        {"invariant", t.invariant},
                        {"homogeneous", t.homogeneous},
                        {"passed", t.passed()}});
  }
  return {report.all_passed(),
          {{"trials", report.trials.size()}, {"passed", passed}, {"verdicts", verdicts}}};
}

Outcome cmd_verify_roby(const Command& c) {
  const RingConfig cfg(require_n(c), require_m(c));
  const auto check = verify_roby(cfg);
  return {check.ok(),
          {{"monomials", check.monomials}, {"tuples", check.tuples}, {"failures", check.failures}}};
}

Outcome cmd_verify_collapse(const Command& c) {
  const RingConfig cfg(require_n(c), require_m(c));
  const auto check = verify_commutative_collapse(cfg);
  return {check.ok(), {{"permutations", check.permutations}, {"failures", check.failures}}};
}

Polynomial require_poly(const Command& c) {
  return parse_polynomial(require_text(c.poly, "--poly"), Family::Diagonal);
}

Outcome cmd_polarize(const Command& c) {
  const int n = require_n(c);
  const auto p = require_poly(c);
  if (!c.source) throw UsageError("--source is required");
  if (c.targets.empty()) throw UsageError("--targets is required");
  int used = std::max(max_copy(p), *c.source);
  for (int t : c.targets) used = std::max(used, t);
  const RingConfig cfg(n, m_for(c, used));
  const auto out = polarize(p, *c.source, c.targets, cfg);
  return {true, {{"input", to_string(p)}, {"output", to_string(out)}}};
}

Outcome cmd_restitute(const Command& c) {
  const int n = require_n(c);
  const auto p = require_poly(c);
  if (!c.target) throw UsageError("--target is required");
  if (c.sources.empty()) throw UsageError("--sources is required");
  const RingConfig cfg(n, m_for(c, std::max(max_copy(p), *c.target)));
  const auto out = restitute(p, c.sources, *c.target, cfg);
  return {true, {{"input", to_string(p)}, {"output", to_string(out)}}};
}

const std::map<std::string, std::function<Outcome(const Command&)>>& dispatch_table() {
  static const std::map<std::string, std::function<Outcome(const Command&)>> table = {
      {"dim", cmd_dim},
      {"tbasis", cmd_tbasis},
      {"restrict", cmd_restrict},
      {"reduce", cmd_reduce},
      {"express", cmd_express},
      {"verify fundamental", cmd_verify_fundamental},
      {"verify isomorphism", cmd_verify_isomorphism},
      {"verify dmap", cmd_verify_dmap},
      {"verify roby", cmd_verify_roby},
      {"verify collapse", cmd_verify_collapse},
      {"polarize", cmd_polarize},
      {"restitute", cmd_restitute},
  };
  return table;
}

}  // namespace

Report run(const Command& command) {
  Report report;
  report.command = echo(command);
  const auto start = std::chrono::steady_clock::now();
  try {
    const auto& table = dispatch_table();
    auto it = table.find(command.name);
    if (it == table.end()) throw UsageError("unknown command '" + command.name + "'");
    auto outcome = it->second(command);
    report.ok = outcome.ok;
    report.payload = std::move(outcome.payload);
  } catch (const std::exception& e) {
    report.ok = false;
    report.payload = {{"error", e.what()}};
  }
  if (command.timing)
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string render_json(const Report& report, bool pretty) {
  json out = {{"status", report.ok ? "ok" : "fail"},
              {"command", report.command},
              {"payload", report.payload},
              {"elapsed_ms", report.elapsed_ms ? json(*report.elapsed_ms) : json(nullptr)}};
  return out.dump(pretty ? 2 : -1) + "\n";
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App cli{"Exact trace-invariant workbench for commuting matrices"};
  cli.require_subcommand(1);
  Command command;
  bool pretty = false;

  auto common = [&](CLI::App* sub) {
    sub->add_flag("--pretty", pretty, "Indent the JSON output");
    sub->add_flag("--timing", command.timing, "Record elapsed_ms");
    sub->add_flag("--allow-large", command.allow_large, "Lift the n <= 4, m <= 6 guardrails");
  };
  auto add_n = [&](CLI::App* sub) { sub->add_option("--n", command.n, "Matrix size"); };
  auto add_m = [&](CLI::App* sub) { sub->add_option("--m", command.m, "Number of copies"); };
  auto add_expr = [&](CLI::App* sub) {
    sub->add_option("--expr", command.expr, "Trace expression, e.g. \"tr(X1)*tr(X2) - tr(X1*X2)\"");
  };
  auto add_poly = [&](CLI::App* sub) {
    sub->add_option("--poly", command.poly, "Polynomial, e.g. \"x[1,1]^2 + 2*x[1,2]\"");
  };
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& path,
                  const std::string& help) {
    auto* sub = parent->add_subcommand(name, help);
    sub->callback([&command, path] { command.name = path; });
    common(sub);
    return sub;
  };

  auto* dim = leaf(&cli, "dim", "dim", "Dimension and partition list of the multilinear slice");
  add_n(dim);
  add_m(dim);
  auto* tbasis = leaf(&cli, "tbasis", "tbasis", "The t_Lambda basis with canonical words");
  add_n(tbasis);
  add_m(tbasis);
  auto* restrict_cmd = leaf(&cli, "restrict", "restrict", "Evaluate a trace expression on diagonal matrices");
  add_n(restrict_cmd);
  add_m(restrict_cmd);
  add_expr(restrict_cmd);
  auto* reduce = leaf(&cli, "reduce", "reduce", "Rewrite to at most n trace factors per term");
  add_n(reduce);
  add_m(reduce);
  add_expr(reduce);
  auto* express = leaf(&cli, "express", "express", "Coefficients in the t_Lambda basis");
  add_n(express);
  add_m(express);
  add_expr(express);
  add_poly(express);

  auto* verify = cli.add_subcommand("verify", "Exact verification suites");
  verify->require_subcommand(1);
  auto* fundamental = leaf(verify, "fundamental", "verify fundamental", "Alternating S_{n+1} identity vanishes");
  add_n(fundamental);
  auto* iso = leaf(verify, "isomorphism", "verify isomorphism", "Multilinear slice isomorphism");
  add_n(iso);
  add_m(iso);
  auto* dmap = leaf(verify, "dmap", "verify dmap", "Multiplicativity of the determinant map");
  add_n(dmap);
  add_m(dmap);
  dmap->add_option("--trials", command.trials, "Number of random pairs (default 100)");
  dmap->add_option("--seed", command.seed, "Seed for std::mt19937_64 (default 1)");
  auto* roby = leaf(verify, "roby", "verify roby", "Polarized D equals the symmetrized tensor");
  add_n(roby);
  add_m(roby);
  auto* collapse = leaf(verify, "collapse", "verify collapse", "phi_sigma collapses to t on diagonal matrices");
  add_n(collapse);
  add_m(collapse);

  auto* pol = leaf(&cli, "polarize", "polarize", "Full polarization of one copy");
  add_n(pol);
  add_m(pol);
  add_poly(pol);
  pol->add_option("--source", command.source, "Copy index to polarize");
  pol->add_option("--targets", command.targets, "Fresh copy indices")->delimiter(',');
  auto* rest = leaf(&cli, "restitute", "restitute", "Identify copies (inverse of polarize up to k!)");
  add_n(rest);
  add_m(rest);
  add_poly(rest);
  rest->add_option("--sources", command.sources, "Copy indices to merge")->delimiter(',');
  rest->add_option("--target", command.target, "Copy index to merge into");

  try {
    cli.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = cli.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  const Report report = run(command);
  out << render_json(report, pretty);
  return exit_code(report);
}

}  // namespace commtrace::app
