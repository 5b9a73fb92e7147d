#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "commtrace/config.hpp"
#include "commtrace/rational.hpp"
#include "commtrace/traceinv.hpp"

namespace commtrace {

// Exact symbolic checks of the structural identities, shared by the CLI and the
// acceptance suite. None of them throw on a failed identity; they report it.

struct FundamentalCheck {
  int n = 0;
  std::size_t terms = 0;          // (n+1)! alternating terms
  std::size_t variables = 0;      // (n+1) n^2 generic entries
  std::size_t residual_terms = 0; // terms of the expanded polynomial; 0 when it vanishes
  bool ok() const { return residual_terms == 0; }
};

// Expands fundamental_sum(n) over n x n generic matrices.
FundamentalCheck verify_fundamental(int n);

struct ReductionCheck {
  std::size_t input_terms = 0;
  std::size_t output_terms = 0;
  std::size_t max_factors = 0;  // over the output terms
  bool bounded = false;         // max_factors <= n
  bool agrees = false;          // eval_generic(input) == eval_generic(output)
  TraceExpression output;
  bool ok() const { return bounded && agrees; }
};

ReductionCheck verify_reduction(const TraceExpression& e, const RingConfig& cfg);

// The multilinear slice of the invariant isomorphism at (n, m).
struct IsomorphismCheck {
  BigInt dimension;               // sum_{k<=n} S(m, k)
  std::size_t basis_size = 0;     // partitions of [m] with at most n blocks
  std::size_t rank = 0;           // rank of {pi(t_Lambda)}
  bool invariant = true;          // every pi(t_Lambda) is S_n-invariant
  bool unitriangular = true;      // orbit coordinates: 1 on Lambda, zero off its coarsenings
  bool expansion_exact = true;    // pi(t_Lambda) == sum of orbit sums over coarsening_expansion
  bool roundtrip = true;          // express_in_t_basis reproduces every orbit sum
  std::vector<std::string> failures;
  bool ok() const;
};

IsomorphismCheck verify_isomorphism(const RingConfig& cfg);

// eval_diagonal(phi_sigma) == eval_diagonal(t_{cycle partition}) over S_m.
struct CollapseCheck {
  std::size_t permutations = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

CollapseCheck verify_commutative_collapse(const RingConfig& cfg);

// polarized_D == sym_tensor_element over every ordered n-tuple of monomials in
// x[1..m] of degree <= max_degree.
struct RobyCheck {
  std::size_t monomials = 0;
  std::size_t tuples = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

RobyCheck verify_roby(const RingConfig& cfg, int max_degree = 2);

}  // namespace commtrace
