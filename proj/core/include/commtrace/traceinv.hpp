#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "commtrace/combinat.hpp"
#include "commtrace/config.hpp"
#include "commtrace/polynomial.hpp"

namespace commtrace {

// tr(X_{i_1} ... X_{i_h}), stored as its lexicographically least rotation so that
// cyclically equivalent words compare equal.
class TraceWord {
 public:
  // Throws std::invalid_argument for an empty word or an index < 1.
  explicit TraceWord(std::vector<int> letters);

  std::span<const int> letters() const { return letters_; }
  int length() const { return static_cast<int>(letters_.size()); }

  // Concatenation followed by re-normalization.
  TraceWord operator+(const TraceWord& rhs) const;

  auto operator<=>(const TraceWord&) const = default;

 private:
  std::vector<int> letters_;
};

// A product of trace factors (a multiset of words), kept sorted. The empty product is 1.
class TraceProduct {
 public:
  TraceProduct() = default;
  explicit TraceProduct(std::vector<TraceWord> factors);

  std::span<const TraceWord> factors() const { return factors_; }
  std::size_t num_factors() const { return factors_.size(); }

  TraceProduct operator*(const TraceProduct& rhs) const;

  auto operator<=>(const TraceProduct&) const = default;

 private:
  std::vector<TraceWord> factors_;
};

// Term order: more factors first, then lexicographic on the sorted factor list.
struct TraceProductOrder {
  bool operator()(const TraceProduct& a, const TraceProduct& b) const {
    if (a.num_factors() != b.num_factors()) return a.num_factors() > b.num_factors();
    return a < b;
  }
};

// Formal rational-linear combination of trace products.
class TraceExpression {
 public:
  using Terms = std::map<TraceProduct, Rational, TraceProductOrder>;

  TraceExpression() = default;
  explicit TraceExpression(TraceProduct product, const Rational& coefficient = 1);
  static TraceExpression constant(const Rational& value);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const TraceProduct& product, const Rational& coefficient);

  // No copy index occurs twice within any single term.
  bool is_multilinear() const;
  // Every term uses each index of 1..m exactly once.
  bool is_multilinear_in(int m) const;
  int max_index() const;
  std::size_t max_factors() const;

  TraceExpression operator-() const;
  TraceExpression scaled(const Rational& factor) const;
  TraceExpression& operator+=(const TraceExpression& rhs);
  TraceExpression& operator-=(const TraceExpression& rhs);

  friend TraceExpression operator+(TraceExpression a, const TraceExpression& b) { return a += b; }
  friend TraceExpression operator-(TraceExpression a, const TraceExpression& b) { return a -= b; }
  friend TraceExpression operator*(const TraceExpression& a, const TraceExpression& b);

  bool operator==(const TraceExpression&) const = default;

 private:
  Terms terms_;
};

// "tr(X1*X2)".
std::string to_string(const TraceWord& w);
// "tr(X1*X2)*tr(X3)"; the empty product renders as "1".
std::string to_string(const TraceProduct& p);
// "3/2*tr(X1*X2)*tr(X3) - tr(X1*X3*X2)"; zero renders as "0".
std::string to_string(const TraceExpression& e);

// phi_sigma: one trace factor per cycle, cycle (i_1 ... i_h) -> tr(X_{i_1} ... X_{i_h}).
TraceExpression phi_sigma(const Permutation& sigma);

// tr_S = tr(prod_{i in S} X_i), indices in increasing order. Throws
// std::invalid_argument for an empty set.
TraceExpression tr_S(std::span<const int> indices);

// t_Lambda = prod over blocks of tr_S.
TraceExpression t_lambda(const SetPartition& partition);

// Realizes e in R_{n,m}: each word becomes the trace of the corresponding product of
// generic matrices. Indices beyond m throw std::out_of_range.
Polynomial eval_generic(const TraceExpression& e, const RingConfig& cfg);

// Realizes e in B_{n,m}: tr(X_{i_1} ... X_{i_h}) -> sum_j prod_t x[i_t, j].
// Agrees with restrict(eval_generic(e, cfg), cfg).
Polynomial eval_diagonal(const TraceExpression& e, const RingConfig& cfg);

// sum over sigma in S_{n+1} of sign(sigma) * phi_sigma; vanishes on n x n matrices.
TraceExpression fundamental_sum(int n);

// Rewrites e so that every term has at most n trace factors, by repeatedly replacing
// the first n+1 factors w_1 ... w_{n+1} of an offending term with
//   - sum_{sigma != 1} sign(sigma) phi_sigma(w_1, ..., w_{n+1}),
// each w_i treated as one letter. Throws std::invalid_argument unless e is
// multilinear.
TraceExpression reduce_traces(const TraceExpression& e, int n);

// The coarsenings Lambda' of Lambda with at most n blocks; pi(t_Lambda) is the sum of
// their orbit sums, each with coefficient 1. Lambda itself comes first.
std::vector<SetPartition> coarsening_expansion(const SetPartition& partition, const RingConfig& cfg);

using TBasisCoefficients = std::map<SetPartition, Rational>;

// Writes a multilinear S_n-invariant p in B_{n,m} as sum_Lambda c_Lambda pi(t_Lambda),
// peeling off the finest orbit present until the residual is zero.
// Throws std::invalid_argument if p is not multilinear in copies 1..m,
// std::domain_error if p is not S_n-invariant, and std::logic_error if the residual
// does not vanish.
TBasisCoefficients express_in_t_basis(const Polynomial& p, const RingConfig& cfg);

// Dimension of the multilinear S_n-invariants of m vectors: sum_{k<=min(n,m)} S(m,k).
BigInt multilinear_dim(int n, int m);

}  // namespace commtrace
