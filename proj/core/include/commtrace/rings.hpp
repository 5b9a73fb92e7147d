#pragma once

#include <vector>

#include "commtrace/combinat.hpp"
#include "commtrace/config.hpp"
#include "commtrace/polynomial.hpp"

namespace commtrace {

// Square matrix with polynomial entries, all of one family.
class PolyMatrix {
 public:
  // n x n zero matrix.
  PolyMatrix(int n, Family family);

  int size() const { return n_; }
  Family family() const { return family_; }

  // 1-based.
  const Polynomial& at(int row, int col) const { return entries_[index(row, col)]; }
  Polynomial& at(int row, int col) { return entries_[index(row, col)]; }

  bool is_diagonal() const;

  bool operator==(const PolyMatrix&) const = default;

 private:
  std::size_t index(int row, int col) const;

  int n_;
  Family family_;
  std::vector<Polynomial> entries_;
};

// X_i = (x[i;h,k]). Throws std::out_of_range unless 1 <= i <= m.
PolyMatrix generic_matrix(int copy, const RingConfig& cfg);

// diag(x[i,1], ..., x[i,n]).
PolyMatrix diagonal_matrix(int copy, const RingConfig& cfg);

// Size or family mismatch throws std::invalid_argument.
PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b);
Polynomial trace(const PolyMatrix& a);
// Leibniz expansion.
Polynomial det(const PolyMatrix& a);

// The restriction map pi: x[i;h,h] -> x[i,h], off-diagonal entries -> 0.
// Throws std::invalid_argument for a non-generic input and std::out_of_range for a
// variable outside cfg.
Polynomial restrict(const Polynomial& p, const RingConfig& cfg);

// Relabels the coordinate of every x[i,j] to x[i,w(j)]. Requires a diagonal-family
// polynomial whose coordinates lie in 1..w.size().
Polynomial sn_act(const Permutation& w, const Polynomial& p);

// sn_act(w, p) == p for every w in S_n.
bool is_sn_invariant(const Polynomial& p, const RingConfig& cfg);

// The multilinear orbit sum m_Lambda: sum over all words g : [m] -> [n] whose fiber
// partition is Lambda of prod_j x[j, g(j)]. Throws std::invalid_argument when Lambda
// has more than n blocks, std::out_of_range when its ground set exceeds m.
Polynomial orbit_sum(const SetPartition& partition, const RingConfig& cfg);

// Throws std::out_of_range if some variable of p falls outside cfg.
void check_variables(const Polynomial& p, const RingConfig& cfg);

}  // namespace commtrace
