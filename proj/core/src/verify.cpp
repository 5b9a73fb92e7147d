#include "commtrace/verify.hpp"

#include <algorithm>
#include <functional>

#include "commtrace/combinat.hpp"
#include "commtrace/maps.hpp"
#include "commtrace/rings.hpp"

namespace commtrace {

FundamentalCheck verify_fundamental(int n) {
  const RingConfig cfg(n, n + 1);
  const auto identity = fundamental_sum(n);
  FundamentalCheck out;
  out.n = n;
  out.terms = identity.terms().size();
  out.variables = static_cast<std::size_t>(n + 1) * n * n;
  out.residual_terms = eval_generic(identity, cfg).size();
  return out;
}

ReductionCheck verify_reduction(const TraceExpression& e, const RingConfig& cfg) {
  ReductionCheck out;
  out.input_terms = e.terms().size();
  out.output = reduce_traces(e, cfg.n());
  out.output_terms = out.output.terms().size();
  out.max_factors = out.output.max_factors();
  out.bounded = out.max_factors <= static_cast<std::size_t>(cfg.n());
  out.agrees = eval_generic(e, cfg) == eval_generic(out.output, cfg);
  return out;
}

bool IsomorphismCheck::ok() const {
  return failures.empty() && invariant && unitriangular && expansion_exact && roundtrip &&
         BigInt(static_cast<unsigned long>(rank)) == dimension &&
         BigInt(static_cast<unsigned long>(basis_size)) == dimension;
}

namespace {

Monomial canonical_monomial(const SetPartition& lambda, int n) {
  const auto f = canonical_function(lambda, n);
  std::vector<Monomial::Factor> factors;
  for (int j = 1; j <= f.length(); ++j) factors.emplace_back(Variable::diagonal(j, f(j)), 1u);
  return Monomial::from_factors(std::move(factors));
}

}  // namespace

IsomorphismCheck verify_isomorphism(const RingConfig& cfg) {
  IsomorphismCheck out;
  out.dimension = multilinear_dim(cfg.n(), cfg.m());
  const auto basis = enumerate_set_partitions(cfg.m(), cfg.n());
  out.basis_size = basis.size();

  std::vector<Polynomial> images;
  for (const auto& lambda : basis) {
    const auto name = to_string(lambda);
    const Polynomial image = eval_diagonal(t_lambda(lambda), cfg);
    images.push_back(image);
    if (!is_sn_invariant(image, cfg)) {
      out.invariant = false;
      out.failures.push_back("pi(t" + name + ") is not S_n-invariant");
    }

    // Orbit coordinates read at the canonical monomials f_Lambda'.
    for (const auto& other : basis) {
      const Rational c = image.coefficient(canonical_monomial(other, cfg.n()));
      const Rational expected = lambda.refines(other) ? Rational(1) : Rational(0);
      if (c != expected) {
        out.unitriangular = false;
        out.failures.push_back("coefficient of m" + to_string(other) + " in pi(t" + name +
                               ") is " + to_string(c));
      }
    }

    const auto expansion = coarsening_expansion(lambda, cfg);
    Polynomial expanded(Family::Diagonal);
    for (const auto& coarser : expansion) expanded += orbit_sum(coarser, cfg);
    if (expansion.empty() || expansion.front() != lambda || expanded != image) {
      out.expansion_exact = false;
      out.failures.push_back("coarsening expansion of t" + name + " does not match");
    }
  }
  out.rank = rank(images);

  for (const auto& lambda : basis) {
    const Polynomial target = orbit_sum(lambda, cfg);
    try {
      const auto coefficients = express_in_t_basis(target, cfg);
      Polynomial rebuilt(Family::Diagonal);
      for (const auto& [mu, c] : coefficients)
        rebuilt += eval_diagonal(t_lambda(mu), cfg).scaled(c);
      if (rebuilt != target) {
        out.roundtrip = false;
        out.failures.push_back("roundtrip of m" + to_string(lambda) + " leaves a residual");
      }
    } catch (const std::exception& e) {
      out.roundtrip = false;
      out.failures.push_back("express m" + to_string(lambda) + ": " + e.what());
    }
  }
  return out;
}

CollapseCheck verify_commutative_collapse(const RingConfig& cfg) {
  CollapseCheck out;
  for (const auto& sigma : enumerate_permutations(cfg.m())) {
    ++out.permutations;
    const auto lhs = eval_diagonal(phi_sigma(sigma), cfg);
    const auto rhs = eval_diagonal(t_lambda(cycle_partition(sigma)), cfg);
    if (lhs != rhs) out.failures.push_back("sigma = " + to_string(sigma));
  }
  return out;
}

RobyCheck verify_roby(const RingConfig& cfg, int max_degree) {
  // Monomials of degree <= max_degree in x[1..m] as nondecreasing index sequences.
  std::vector<Polynomial> monomials;
  std::vector<int> indices;
  std::function<void(int, int)> grow = [&](int from, int remaining) {
    std::vector<Monomial::Factor> factors;
    for (int i : indices) factors.emplace_back(Variable::abstract(i), 1u);
    monomials.emplace_back(Family::Abstract, Monomial::from_factors(std::move(factors)), Rational(1));
    if (remaining == 0) return;
    for (int i = from; i <= cfg.m(); ++i) {
      indices.push_back(i);
      grow(i, remaining - 1);
      indices.pop_back();
    }
  };
  grow(1, max_degree);

  RobyCheck out;
  out.monomials = monomials.size();
  std::vector<std::size_t> choice(cfg.n(), 0);
  while (true) {
    std::vector<Polynomial> args;
    for (auto c : choice) args.push_back(monomials[c]);
    ++out.tuples;
    if (polarized_D(args, cfg) != sym_tensor_element(args, cfg)) {
      std::string name;
      for (const auto& a : args) name += (name.empty() ? "" : ", ") + to_string(a);
      out.failures.push_back("(" + name + ")");
    }
    std::size_t pos = 0;
    while (pos < choice.size() && ++choice[pos] == monomials.size()) choice[pos++] = 0;
    if (pos == choice.size()) break;
  }
  return out;
}

}  // namespace commtrace
