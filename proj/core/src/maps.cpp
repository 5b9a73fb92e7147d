#include "commtrace/maps.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "commtrace/combinat.hpp"
#include "commtrace/rings.hpp"

namespace commtrace {

namespace {

void require_abstract(const Polynomial& a, const RingConfig& cfg) {
  if (a.family() != Family::Abstract)
    throw std::invalid_argument("the map D is defined on abstract-family polynomials");
  check_variables(a, cfg);
}

// a(x[1,j], ..., x[m,j]).
Polynomial at_coordinate(const Polynomial& a, int j) {
  return rename_variables(a, Family::Diagonal, [j](Variable v) -> std::optional<Variable> {
    return Variable::diagonal(v.copy(), j);
  });
}

// Coefficient of t_1 ... t_k in prod_r (sum_l t_l options[r][l]). Partial products
// are indexed by the set of markers already used; a marker used twice never reaches
// the full set, so those terms are dropped on the spot.
Polynomial marker_coefficient(const std::vector<std::vector<Polynomial>>& options, Family family) {
  const std::size_t k = options.size();
  std::map<std::uint32_t, Polynomial> partial;
  partial.emplace(0u, Polynomial(family, Rational(1)));
  for (const auto& row : options) {
    std::map<std::uint32_t, Polynomial> next;
    for (const auto& [used, value] : partial)
      for (std::size_t l = 0; l < k; ++l) {
        const std::uint32_t bit = 1u << l;
        if ((used & bit) || row[l].is_zero()) continue;
        auto [it, inserted] = next.try_emplace(used | bit, family);
        it->second += value * row[l];
      }
    partial = std::move(next);
  }
  const std::uint32_t full = k == 0 ? 0u : (1u << k) - 1;
  auto it = partial.find(full);
  return it == partial.end() ? Polynomial(family) : it->second;
}

void require_arity(std::span<const Polynomial> args, const RingConfig& cfg) {
  if (static_cast<int>(args.size()) != cfg.n())
    throw std::invalid_argument("expected exactly n=" + std::to_string(cfg.n()) +
                                " arguments, got " + std::to_string(args.size()));
  for (const auto& a : args) require_abstract(a, cfg);
}

}  // namespace

Polynomial D_of(const Polynomial& a, const RingConfig& cfg) {
  require_abstract(a, cfg);
  Polynomial out(Family::Diagonal, Rational(1));
  for (int j = 1; j <= cfg.n(); ++j) out *= at_coordinate(a, j);
  return out;
}

Polynomial polarized_D(std::span<const Polynomial> args, const RingConfig& cfg) {
  require_arity(args, cfg);
  if (cfg.n() > 31) throw std::invalid_argument("polarized_D supports n <= 31");
  // Row j of D(t_1 a_1 + ... + t_n a_n) is sum_i t_i a_i(x[., j]).
  std::vector<std::vector<Polynomial>> options;
  for (int j = 1; j <= cfg.n(); ++j) {
    auto& row = options.emplace_back();
    for (const auto& a : args) row.push_back(at_coordinate(a, j));
  }
  return marker_coefficient(options, Family::Diagonal);
}

Polynomial sym_tensor_element(std::span<const Polynomial> args, const RingConfig& cfg) {
  require_arity(args, cfg);
  Polynomial out(Family::Diagonal);
  for (const auto& sigma : enumerate_permutations(cfg.n())) {
    Polynomial term(Family::Diagonal, Rational(1));
    for (int j = 1; j <= cfg.n(); ++j) term *= at_coordinate(args[sigma(j) - 1], j);
    out += term;
  }
  return out;
}

Polynomial polarize(const Polynomial& p, int source, std::span<const int> targets,
                    const RingConfig& cfg) {
  check_variables(p, cfg);
  const std::size_t k = targets.size();
  if (k == 0) throw std::invalid_argument("polarize needs at least one target copy");
  if (k > 31) throw std::invalid_argument("polarize supports at most 31 targets");
  if (source < 1 || source > cfg.m())
    throw std::out_of_range("source copy " + std::to_string(source) + " outside 1.." +
                            std::to_string(cfg.m()));
  std::set<int> used_copies;
  for (const auto& [m, c] : p.terms())
    for (const auto& [v, e] : m.factors()) used_copies.insert(v.copy());
  std::set<int> seen;
  for (int t : targets) {
    if (t < 1 || t > cfg.m())
      throw std::out_of_range("target copy " + std::to_string(t) + " outside 1.." +
                              std::to_string(cfg.m()));
    if (t == source || !seen.insert(t).second || used_copies.count(t))
      throw std::invalid_argument("target copy " + std::to_string(t) + " collides");
  }

  Polynomial out(p.family());
  for (const auto& [m, c] : p.terms()) {
    if (m.degree_in_copy(source) != k)
      throw std::invalid_argument("polynomial is not homogeneous of degree " + std::to_string(k) +
                                  " in copy " + std::to_string(source));
    std::vector<Monomial::Factor> rest;
    std::vector<std::vector<Polynomial>> options;
    for (const auto& [v, e] : m.factors()) {
      if (v.copy() != source) {
        rest.emplace_back(v, e);
        continue;
      }
      for (std::uint32_t r = 0; r < e; ++r) {
        auto& row = options.emplace_back();
        for (int t : targets) row.emplace_back(v.with_copy(t));
      }
    }
    out += Polynomial(p.family(), Monomial::from_factors(std::move(rest)), c) *
           marker_coefficient(options, p.family());
  }
  return out;
}

Polynomial restitute(const Polynomial& p, std::span<const int> sources, int target,
                     const RingConfig& cfg) {
  check_variables(p, cfg);
  if (target < 1 || target > cfg.m())
    throw std::out_of_range("target copy " + std::to_string(target) + " outside 1.." +
                            std::to_string(cfg.m()));
  const std::set<int> source_set(sources.begin(), sources.end());
  for (const auto& [m, c] : p.terms())
    for (int s : source_set)
      if (m.degree_in_copy(s) != 1)
        throw std::invalid_argument("polynomial is not multilinear in source copy " + std::to_string(s));
  return rename_variables(p, p.family(), [&](Variable v) -> std::optional<Variable> {
    return source_set.count(v.copy()) ? v.with_copy(target) : v;
  });
}

// ---------------------------------------------------------------------------
// Randomized multiplicativity check

std::int64_t PolyGenerator::uniform(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(engine_() % span);
}

namespace {

template <typename DegreeFn>
Polynomial random_abstract(PolyGenerator& gen, int m, int max_terms, int max_coeff, DegreeFn&& next_degree) {
  const auto terms = gen.uniform(1, max_terms);
  std::vector<Polynomial::Term> out;
  for (std::int64_t t = 0; t < terms; ++t) {
    std::int64_t coeff = 0;
    while (coeff == 0) coeff = gen.uniform(-max_coeff, max_coeff);
    const std::int64_t degree = next_degree();
    std::vector<Monomial::Factor> factors;
    for (std::int64_t d = 0; d < degree; ++d)
      factors.emplace_back(Variable::abstract(static_cast<int>(gen.uniform(1, m))), 1u);
    out.emplace_back(Monomial::from_factors(std::move(factors)), Rational(coeff));
  }
  return Polynomial::from_terms(Family::Abstract, std::move(out));
}

}  // namespace

Polynomial PolyGenerator::abstract_poly(int m, int max_degree, int max_terms, int max_coeff) {
  return random_abstract(*this, m, max_terms, max_coeff, [&] { return uniform(0, max_degree); });
}

Polynomial PolyGenerator::homogeneous_abstract_poly(int m, int degree, int max_terms, int max_coeff) {
  return random_abstract(*this, m, max_terms, max_coeff, [degree] { return std::int64_t{degree}; });
}

bool MultiplicativityReport::all_passed() const {
  return std::all_of(trials.begin(), trials.end(), [](const auto& t) { return t.passed(); });
}

namespace {

std::optional<std::uint32_t> homogeneous_degree(const Polynomial& p) {
  if (p.is_zero()) return std::nullopt;
  const auto d = p.terms().front().first.degree();
  return p.is_homogeneous(d) ? std::optional(d) : std::nullopt;
}

}  // namespace

MultiplicativityReport check_multiplicative(int trials, std::uint64_t seed, const RingConfig& cfg) {
  PolyGenerator gen(seed);
  MultiplicativityReport report;
  for (int index = 0; index < trials; ++index) {
    MultiplicativityTrial trial;
    trial.index = index;
    trial.a = gen.abstract_poly(cfg.m());
    trial.b = gen.abstract_poly(cfg.m());
    trial.h = gen.homogeneous_abstract_poly(cfg.m(), static_cast<int>(gen.uniform(0, 3)));
    const Polynomial ab = trial.a * trial.b;
    const Polynomial da = D_of(trial.a, cfg);
    const Polynomial db = D_of(trial.b, cfg);
    const Polynomial dab = D_of(ab, cfg);
    trial.multiplicative = dab == da * db;
    trial.invariant = is_sn_invariant(da, cfg) && is_sn_invariant(db, cfg) && is_sn_invariant(dab, cfg);
    trial.homogeneous = true;
    for (const Polynomial* x : std::initializer_list<const Polynomial*>{&trial.h, &trial.a, &trial.b, &ab}) {
      if (auto d = homogeneous_degree(*x)) {
        const Polynomial dx = D_of(*x, cfg);
        trial.homogeneous = trial.homogeneous && dx.is_homogeneous(*d * cfg.n());
      }
    }
    report.trials.push_back(std::move(trial));
  }
  return report;
}

}  // namespace commtrace
