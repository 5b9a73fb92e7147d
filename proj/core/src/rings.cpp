#include "commtrace/rings.hpp"

#include <numeric>
#include <stdexcept>

namespace commtrace {

PolyMatrix::PolyMatrix(int n, Family family)
    : n_(n), family_(family), entries_(static_cast<std::size_t>(n) * n, Polynomial(family)) {
  if (n < 1) throw std::invalid_argument("matrix size must be positive");
}

std::size_t PolyMatrix::index(int row, int col) const {
  if (row < 1 || row > n_ || col < 1 || col > n_)
    throw std::out_of_range("matrix index (" + std::to_string(row) + "," + std::to_string(col) +
                            ") out of range");
  return static_cast<std::size_t>(row - 1) * n_ + (col - 1);
}

bool PolyMatrix::is_diagonal() const {
  for (int h = 1; h <= n_; ++h)
    for (int k = 1; k <= n_; ++k)
      if (h != k && !at(h, k).is_zero()) return false;
  return true;
}

namespace {

void check_copy(int copy, const RingConfig& cfg) {
  if (copy < 1 || copy > cfg.m())
    throw std::out_of_range("copy index " + std::to_string(copy) + " outside 1.." +
                            std::to_string(cfg.m()));
}

void check_compatible(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.size() != b.size()) throw std::invalid_argument("matrix size mismatch");
  if (a.family() != b.family()) throw std::invalid_argument("matrix family mismatch");
}

}  // namespace

PolyMatrix generic_matrix(int copy, const RingConfig& cfg) {
  check_copy(copy, cfg);
  PolyMatrix out(cfg.n(), Family::Generic);
  for (int h = 1; h <= cfg.n(); ++h)
    for (int k = 1; k <= cfg.n(); ++k) out.at(h, k) = Polynomial(Variable::generic(copy, h, k));
  return out;
}

PolyMatrix diagonal_matrix(int copy, const RingConfig& cfg) {
  check_copy(copy, cfg);
  PolyMatrix out(cfg.n(), Family::Diagonal);
  for (int j = 1; j <= cfg.n(); ++j) out.at(j, j) = Polynomial(Variable::diagonal(copy, j));
  return out;
}

PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b) {
  check_compatible(a, b);
  const int n = a.size();
  PolyMatrix out(n, a.family());
  for (int h = 1; h <= n; ++h)
    for (int k = 1; k <= n; ++k) {
      Polynomial sum(a.family());
      for (int l = 1; l <= n; ++l) {
        if (a.at(h, l).is_zero() || b.at(l, k).is_zero()) continue;
        sum += a.at(h, l) * b.at(l, k);
      }
      out.at(h, k) = std::move(sum);
    }
  return out;
}

Polynomial trace(const PolyMatrix& a) {
  Polynomial sum(a.family());
  for (int h = 1; h <= a.size(); ++h) sum += a.at(h, h);
  return sum;
}

Polynomial det(const PolyMatrix& a) {
  Polynomial sum(a.family());
  for (const auto& sigma : enumerate_permutations(a.size())) {
    Polynomial term(a.family(), Rational(sigma.sign()));
    for (int h = 1; h <= a.size() && !term.is_zero(); ++h) term *= a.at(h, sigma(h));
    sum += term;
  }
  return sum;
}

void check_variables(const Polynomial& p, const RingConfig& cfg) {
  for (const auto& [m, c] : p.terms())
    for (const auto& [v, e] : m.factors()) check_in_config(v, cfg);
}

Polynomial restrict(const Polynomial& p, const RingConfig& cfg) {
  if (p.family() != Family::Generic)
    throw std::invalid_argument("restrict expects a generic-matrix polynomial");
  check_variables(p, cfg);
  return rename_variables(p, Family::Diagonal, [](Variable v) -> std::optional<Variable> {
    if (v.row() != v.col()) return std::nullopt;
    return Variable::diagonal(v.copy(), v.row());
  });
}

Polynomial sn_act(const Permutation& w, const Polynomial& p) {
  if (p.family() != Family::Diagonal)
    throw std::invalid_argument("the S_n action is defined on diagonal-family polynomials");
  return rename_variables(p, Family::Diagonal, [&w](Variable v) -> std::optional<Variable> {
    if (v.coord() > w.size())
      throw std::out_of_range("coordinate of " + to_string(v) + " exceeds permutation degree");
    return Variable::diagonal(v.copy(), w(v.coord()));
  });
}

bool is_sn_invariant(const Polynomial& p, const RingConfig& cfg) {
  if (p.family() != Family::Diagonal)
    throw std::invalid_argument("is_sn_invariant expects a diagonal-family polynomial");
  check_variables(p, cfg);
  const int n = cfg.n();
  if (n == 1) return true;
  // S_n is generated by the transposition (1 2) and the n-cycle (1 2 ... n).
  std::vector<int> swap(n);
  std::iota(swap.begin(), swap.end(), 1);
  std::swap(swap[0], swap[1]);
  std::vector<int> rotate(n);
  for (int j = 0; j < n; ++j) rotate[j] = (j + 1) % n + 1;
  return sn_act(Permutation(swap), p) == p && sn_act(Permutation(rotate), p) == p;
}

Polynomial orbit_sum(const SetPartition& partition, const RingConfig& cfg) {
  const int k = partition.num_blocks();
  if (k > cfg.n())
    throw std::invalid_argument("partition " + to_string(partition) + " has more than n=" +
                                std::to_string(cfg.n()) + " blocks");
  if (partition.ground_size() > cfg.m())
    throw std::out_of_range("partition " + to_string(partition) + " exceeds m=" +
                            std::to_string(cfg.m()));
  // Words with fiber partition exactly Lambda are the injective labelings of its blocks.
  std::vector<Polynomial::Term> terms;
  std::vector<int> labels(k, 0);
  std::vector<bool> used(cfg.n() + 1, false);
  auto emit = [&] {
    std::vector<Monomial::Factor> factors;
    for (int b = 0; b < k; ++b)
      for (int j : partition.blocks()[b]) factors.emplace_back(Variable::diagonal(j, labels[b]), 1u);
    terms.emplace_back(Monomial::from_factors(std::move(factors)), Rational(1));
  };
  auto assign = [&](auto& self, int b) -> void {
    if (b == k) {
      emit();
      return;
    }
    for (int v = 1; v <= cfg.n(); ++v) {
      if (used[v]) continue;
      used[v] = true;
      labels[b] = v;
      self(self, b + 1);
      used[v] = false;
    }
  };
  assign(assign, 0);
  return Polynomial::from_terms(Family::Diagonal, std::move(terms));
}

}  // namespace commtrace
