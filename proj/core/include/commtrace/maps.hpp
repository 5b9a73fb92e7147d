#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "commtrace/config.hpp"
#include "commtrace/polynomial.hpp"

namespace commtrace {

// D(a) = det a(xi_1, ..., xi_m), computed in the diagonal model:
//   D(a) = prod_{j=1..n} a(x[1,j], ..., x[m,j]).
// `a` must be an abstract-family polynomial in x[1..m]; throws std::invalid_argument
// or std::out_of_range otherwise.
Polynomial D_of(const Polynomial& a, const RingConfig& cfg);

// Coefficient of t_1 ... t_n in D(t_1 a_1 + ... + t_n a_n), obtained by expanding the
// product over coordinates with formal markers. Requires exactly n arguments.
Polynomial polarized_D(std::span<const Polynomial> args, const RingConfig& cfg);

// sum_{sigma in S_n} prod_j a_{sigma(j)}(x[., j]): the symmetrization of
// a_1 (x) ... (x) a_n with tensor slot j read on coordinate j. Requires exactly n
// arguments.
Polynomial sym_tensor_element(std::span<const Polynomial> args, const RingConfig& cfg);

// Full polarization of p in copy `source` onto the copies in `targets`:
// substitute t_1 X_{c_1} + ... + t_k X_{c_k} for copy `source` and take the
// coefficient of t_1 ... t_k. Works in every family.
// Throws std::invalid_argument if p is not homogeneous of degree k = targets.size()
// in `source`, or if a target repeats, equals `source` or already occurs in p.
Polynomial polarize(const Polynomial& p, int source, std::span<const int> targets,
                    const RingConfig& cfg);

// Substitutes copy `target` for every copy in `sources`. Throws
// std::invalid_argument unless p has degree exactly 1 in each source copy.
Polynomial restitute(const Polynomial& p, std::span<const int> sources, int target,
                     const RingConfig& cfg);

// Seeded random generation for the multiplicativity driver. The engine is
// std::mt19937_64 (fully specified by its recurrence); integers in [lo, hi] are
// drawn as lo + engine() % (hi - lo + 1).
class PolyGenerator {
 public:
  explicit PolyGenerator(std::uint64_t seed) : engine_(seed) {}

  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

  // 1..max_terms terms, each with total degree 0..max_degree in x[1..m] and a nonzero
  // integer coefficient in [-max_coeff, max_coeff].
  Polynomial abstract_poly(int m, int max_degree = 3, int max_terms = 5, int max_coeff = 9);

  // Same, with every term of exactly the given degree.
  Polynomial homogeneous_abstract_poly(int m, int degree, int max_terms = 5, int max_coeff = 9);

 private:
  std::mt19937_64 engine_;
};

struct MultiplicativityTrial {
  int index = 0;
  Polynomial a{Family::Abstract};
  Polynomial b{Family::Abstract};
  Polynomial h{Family::Abstract};  // homogeneous sample, degree 0..3
  bool multiplicative = false;  // D(ab) == D(a) D(b)
  bool invariant = false;       // D(a), D(b), D(ab) are S_n-invariant
  bool homogeneous = false;     // D(h) homogeneous of degree n*deg(h), likewise a, b, ab when homogeneous
  bool passed() const { return multiplicative && invariant && homogeneous; }
};

struct MultiplicativityReport {
  std::vector<MultiplicativityTrial> trials;
  bool all_passed() const;
};

// `trials` random pairs (plus one homogeneous sample each) from PolyGenerator(seed)
// with the default bounds.
MultiplicativityReport check_multiplicative(int trials, std::uint64_t seed, const RingConfig& cfg);

}  // namespace commtrace
