#include "commtrace/traceinv.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "commtrace/rings.hpp"

namespace commtrace {

// ---------------------------------------------------------------------------
// Words, products, expressions

TraceWord::TraceWord(std::vector<int> letters) {
  if (letters.empty()) throw std::invalid_argument("empty trace word");
  for (int i : letters)
    if (i < 1) throw std::invalid_argument("matrix index must be positive, got " + std::to_string(i));
  const std::size_t h = letters.size();
  std::size_t best = 0;
  for (std::size_t r = 1; r < h; ++r) {
    for (std::size_t t = 0; t < h; ++t) {
      const int a = letters[(r + t) % h];
      const int b = letters[(best + t) % h];
      if (a != b) {
        if (a < b) best = r;
        break;
      }
    }
  }
  std::rotate(letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(best), letters.end());
  letters_ = std::move(letters);
}

TraceWord TraceWord::operator+(const TraceWord& rhs) const {
  std::vector<int> letters = letters_;
  letters.insert(letters.end(), rhs.letters_.begin(), rhs.letters_.end());
  return TraceWord(std::move(letters));
}

TraceProduct::TraceProduct(std::vector<TraceWord> factors) : factors_(std::move(factors)) {
  std::sort(factors_.begin(), factors_.end());
}

TraceProduct TraceProduct::operator*(const TraceProduct& rhs) const {
  std::vector<TraceWord> merged;
  merged.reserve(factors_.size() + rhs.factors_.size());
  std::merge(factors_.begin(), factors_.end(), rhs.factors_.begin(), rhs.factors_.end(),
             std::back_inserter(merged));
  TraceProduct out;
  out.factors_ = std::move(merged);
  return out;
}

TraceExpression::TraceExpression(TraceProduct product, const Rational& coefficient) {
  add_term(product, coefficient);
}

TraceExpression TraceExpression::constant(const Rational& value) {
  return TraceExpression(TraceProduct(), value);
}

void TraceExpression::add_term(const TraceProduct& product, const Rational& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(product, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

namespace {

bool product_is_multilinear(const TraceProduct& p) {
  std::set<int> seen;
  for (const auto& w : p.factors())
    for (int i : w.letters())
      if (!seen.insert(i).second) return false;
  return true;
}

}  // namespace

bool TraceExpression::is_multilinear() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return product_is_multilinear(t.first); });
}

bool TraceExpression::is_multilinear_in(int m) const {
  for (const auto& [p, c] : terms_) {
    std::vector<int> count(m + 1, 0);
    for (const auto& w : p.factors())
      for (int i : w.letters()) {
        if (i > m || ++count[i] > 1) return false;
      }
    if (std::count(count.begin() + 1, count.end(), 1) != m) return false;
  }
  return true;
}

int TraceExpression::max_index() const {
  int out = 0;
  for (const auto& [p, c] : terms_)
    for (const auto& w : p.factors())
      for (int i : w.letters()) out = std::max(out, i);
  return out;
}

std::size_t TraceExpression::max_factors() const {
  std::size_t out = 0;
  for (const auto& [p, c] : terms_) out = std::max(out, p.num_factors());
  return out;
}

TraceExpression TraceExpression::operator-() const { return scaled(-1); }

TraceExpression TraceExpression::scaled(const Rational& factor) const {
  TraceExpression out;
  if (factor == 0) return out;
  out.terms_ = terms_;
  for (auto& [p, c] : out.terms_) c *= factor;
  return out;
}

TraceExpression& TraceExpression::operator+=(const TraceExpression& rhs) {
  if (this == &rhs) return *this = scaled(2);
  for (const auto& [p, c] : rhs.terms_) add_term(p, c);
  return *this;
}

TraceExpression& TraceExpression::operator-=(const TraceExpression& rhs) {
  if (this == &rhs) return *this = TraceExpression();
  for (const auto& [p, c] : rhs.terms_) add_term(p, -c);
  return *this;
}

TraceExpression operator*(const TraceExpression& a, const TraceExpression& b) {
  TraceExpression out;
  for (const auto& [pa, ca] : a.terms())
    for (const auto& [pb, cb] : b.terms()) out.add_term(pa * pb, ca * cb);
  return out;
}

std::string to_string(const TraceWord& w) {
  std::string out = "tr(";
  for (int i = 0; i < w.length(); ++i) {
    if (i > 0) out += '*';
    out += "X" + std::to_string(w.letters()[i]);
  }
  return out + ")";
}

std::string to_string(const TraceProduct& p) {
  if (p.num_factors() == 0) return "1";
  std::string out;
  for (const auto& w : p.factors()) {
    if (!out.empty()) out += '*';
    out += to_string(w);
  }
  return out;
}

std::string to_string(const TraceExpression& e) {
  if (e.is_zero()) return "0";
  std::string out;
  for (const auto& [p, c] : e.terms()) {
    const bool negative = c < 0;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    const Rational magnitude = abs(c);
    if (p.num_factors() == 0) {
      out += to_string(magnitude);
    } else {
      if (magnitude != 1) out += to_string(magnitude) + "*";
      out += to_string(p);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Constructions

TraceExpression phi_sigma(const Permutation& sigma) {
  std::vector<TraceWord> factors;
  for (const auto& cycle : sigma.cycles()) factors.emplace_back(cycle);
  return TraceExpression(TraceProduct(std::move(factors)));
}

TraceExpression tr_S(std::span<const int> indices) {
  if (indices.empty()) throw std::invalid_argument("tr_S of an empty set");
  std::vector<int> sorted(indices.begin(), indices.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("tr_S index set has repeated elements");
  return TraceExpression(TraceProduct({TraceWord(std::move(sorted))}));
}

TraceExpression t_lambda(const SetPartition& partition) {
  std::vector<TraceWord> factors;
  for (const auto& block : partition.blocks()) factors.emplace_back(block);
  return TraceExpression(TraceProduct(std::move(factors)));
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

void check_indices(const TraceExpression& e, const RingConfig& cfg) {
  if (e.max_index() > cfg.m())
    throw std::out_of_range("trace expression uses X" + std::to_string(e.max_index()) +
                            " but m=" + std::to_string(cfg.m()));
}

template <typename WordValue>
Polynomial evaluate(const TraceExpression& e, Family family, WordValue&& word_value) {
  std::map<TraceWord, Polynomial> cache;
  Polynomial total(family);
  for (const auto& [product, c] : e.terms()) {
    Polynomial term(family, c);
    for (const auto& w : product.factors()) {
      auto it = cache.find(w);
      if (it == cache.end()) it = cache.emplace(w, word_value(w)).first;
      term *= it->second;
    }
    total += term;
  }
  return total;
}

}  // namespace

Polynomial eval_generic(const TraceExpression& e, const RingConfig& cfg) {
  check_indices(e, cfg);
  std::map<int, PolyMatrix> matrices;
  auto matrix = [&](int i) -> const PolyMatrix& {
    auto it = matrices.find(i);
    if (it == matrices.end()) it = matrices.emplace(i, generic_matrix(i, cfg)).first;
    return it->second;
  };
  return evaluate(e, Family::Generic, [&](const TraceWord& w) {
    PolyMatrix product = matrix(w.letters()[0]);
    for (int t = 1; t < w.length(); ++t) product = mat_mul(product, matrix(w.letters()[t]));
    return trace(product);
  });
}

Polynomial eval_diagonal(const TraceExpression& e, const RingConfig& cfg) {
  check_indices(e, cfg);
  return evaluate(e, Family::Diagonal, [&](const TraceWord& w) {
    std::vector<Polynomial::Term> terms;
    for (int j = 1; j <= cfg.n(); ++j) {
      std::vector<Monomial::Factor> factors;
      for (int i : w.letters()) factors.emplace_back(Variable::diagonal(i, j), 1u);
      terms.emplace_back(Monomial::from_factors(std::move(factors)), Rational(1));
    }
    return Polynomial::from_terms(Family::Diagonal, std::move(terms));
  });
}

// ---------------------------------------------------------------------------
// Identities and reduction

TraceExpression fundamental_sum(int n) {
  if (n < 1) throw std::invalid_argument("fundamental_sum needs n >= 1");
  TraceExpression out;
  for (const auto& sigma : enumerate_permutations(n + 1))
    out += phi_sigma(sigma).scaled(sigma.sign());
  return out;
}

TraceExpression reduce_traces(const TraceExpression& e, int n) {
  if (n < 1) throw std::invalid_argument("reduce_traces needs n >= 1");
  if (!e.is_multilinear())
    throw std::invalid_argument("reduce_traces expects a multilinear trace expression");
  const auto nontrivial = [&] {
    std::vector<Permutation> out;
    for (auto& sigma : enumerate_permutations(n + 1))
      if (!sigma.is_identity()) out.push_back(std::move(sigma));
    return out;
  }();

  TraceExpression done;
  TraceExpression pending = e;
  while (!pending.is_zero()) {
    TraceExpression next;
    for (const auto& [product, c] : pending.terms()) {
      if (product.num_factors() <= static_cast<std::size_t>(n)) {
        done.add_term(product, c);
        continue;
      }
      const auto factors = product.factors();
      const std::vector<TraceWord> letters(factors.begin(), factors.begin() + n + 1);
      const TraceProduct rest(std::vector<TraceWord>(factors.begin() + n + 1, factors.end()));
      // tr(w_1)...tr(w_{n+1}) = - sum_{sigma != 1} sign(sigma) phi_sigma(w_1, ..., w_{n+1})
      for (const auto& sigma : nontrivial) {
        std::vector<TraceWord> spliced;
        for (const auto& cycle : sigma.cycles()) {
          TraceWord word = letters[cycle[0] - 1];
          for (std::size_t t = 1; t < cycle.size(); ++t) word = word + letters[cycle[t] - 1];
          spliced.push_back(std::move(word));
        }
        next.add_term(TraceProduct(std::move(spliced)) * rest, -c * sigma.sign());
      }
    }
    pending = std::move(next);
  }
  return done;
}

// ---------------------------------------------------------------------------
// The multilinear slice of B_{n,m}

std::vector<SetPartition> coarsening_expansion(const SetPartition& partition, const RingConfig& cfg) {
  if (partition.num_blocks() > cfg.n())
    throw std::invalid_argument("partition " + to_string(partition) + " has more than n=" +
                                std::to_string(cfg.n()) + " blocks");
  if (partition.ground_size() > cfg.m())
    throw std::out_of_range("partition " + to_string(partition) + " exceeds m=" +
                            std::to_string(cfg.m()));
  auto out = coarsenings(partition);
  std::erase_if(out, [&](const SetPartition& p) { return p.num_blocks() > cfg.n(); });
  return out;
}

namespace {

// Word g with g(j) = coordinate of copy j, for a monomial known to be multilinear in 1..m.
FunctionWord word_of(const Monomial& monomial, const RingConfig& cfg) {
  std::vector<int> letters(cfg.m(), 0);
  for (const auto& [v, e] : monomial.factors()) letters[v.copy() - 1] = v.coord();
  return FunctionWord(std::move(letters), cfg.n());
}

Monomial monomial_of(const FunctionWord& word) {
  std::vector<Monomial::Factor> factors;
  for (int j = 1; j <= word.length(); ++j) factors.emplace_back(Variable::diagonal(j, word(j)), 1u);
  return Monomial::from_factors(std::move(factors));
}

void require_multilinear(const Polynomial& p, const RingConfig& cfg) {
  for (const auto& [monomial, c] : p.terms()) {
    bool ok = monomial.degree() == static_cast<std::uint32_t>(cfg.m());
    for (int i = 1; ok && i <= cfg.m(); ++i) ok = monomial.degree_in_copy(i) == 1;
    if (!ok)
      throw std::invalid_argument("monomial " + to_string(monomial) +
                                  " is not multilinear in copies 1.." + std::to_string(cfg.m()));
  }
}

}  // namespace

TBasisCoefficients express_in_t_basis(const Polynomial& p, const RingConfig& cfg) {
  if (p.family() != Family::Diagonal)
    throw std::invalid_argument("express_in_t_basis expects a diagonal-family polynomial");
  check_variables(p, cfg);
  require_multilinear(p, cfg);
  if (!is_sn_invariant(p, cfg)) throw std::domain_error("polynomial is not S_n-invariant");

  TBasisCoefficients out;
  Polynomial residual = p;
  // Each step removes the finest orbit present and only touches coarser ones, so the
  // number of steps is bounded by the number of orbits.
  const BigInt max_steps = multilinear_dim(cfg.n(), cfg.m());
  BigInt steps = 0;
  while (!residual.is_zero()) {
    if (steps++ > max_steps)
      throw std::logic_error("t-basis peeling did not terminate; residual " + to_string(residual));
    std::optional<SetPartition> finest;
    for (const auto& [monomial, c] : residual.terms()) {
      auto lambda = fiber_partition(word_of(monomial, cfg));
      if (!finest || lambda.num_blocks() > finest->num_blocks() ||
          (lambda.num_blocks() == finest->num_blocks() && lambda < *finest))
        finest = std::move(lambda);
    }
    const Rational c = residual.coefficient(monomial_of(canonical_function(*finest, cfg.n())));
    if (c == 0) throw std::logic_error("t-basis peeling found an orbit with inconsistent coefficients");
    out[*finest] += c;
    residual -= eval_diagonal(t_lambda(*finest), cfg).scaled(c);
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

BigInt multilinear_dim(int n, int m) {
  BigInt total = 0;
  for (int k = 1; k <= std::min(n, m); ++k) total += stirling2(m, k);
  return total;
}

}  // namespace commtrace
