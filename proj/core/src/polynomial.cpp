#include "commtrace/polynomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace commtrace {

RingConfig::RingConfig(int n, int m) : n_(n), m_(m) {
  if (n < 1 || m < 1)
    throw std::invalid_argument("ring configuration needs n >= 1 and m >= 1 (got n=" +
                                std::to_string(n) + ", m=" + std::to_string(m) + ")");
}

std::string_view family_name(Family family) {
  switch (family) {
    case Family::Generic: return "generic";
    case Family::Diagonal: return "diagonal";
    case Family::Abstract: return "abstract";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Variable

namespace {

constexpr int kMaxIndex = 0xffff;

void check_index(int value, const char* what) {
  if (value < 1 || value > kMaxIndex)
    throw std::out_of_range(std::string(what) + " index " + std::to_string(value) +
                            " out of range");
}

}  // namespace

Variable Variable::pack(Family family, int copy, int a, int b) {
  return Variable((static_cast<std::uint64_t>(family) << 48) |
                  (static_cast<std::uint64_t>(copy) << 32) |
                  (static_cast<std::uint64_t>(a) << 16) | static_cast<std::uint64_t>(b));
}

Variable Variable::generic(int copy, int row, int col) {
  check_index(copy, "copy");
  check_index(row, "row");
  check_index(col, "column");
  return pack(Family::Generic, copy, row, col);
}

Variable Variable::diagonal(int copy, int coord) {
  check_index(copy, "copy");
  check_index(coord, "coordinate");
  return pack(Family::Diagonal, copy, coord, 0);
}

Variable Variable::abstract(int copy) {
  check_index(copy, "copy");
  return pack(Family::Abstract, copy, 0, 0);
}

Variable Variable::generic(int copy, int row, int col, const RingConfig& cfg) {
  const auto v = generic(copy, row, col);
  check_in_config(v, cfg);
  return v;
}

Variable Variable::diagonal(int copy, int coord, const RingConfig& cfg) {
  const auto v = diagonal(copy, coord);
  check_in_config(v, cfg);
  return v;
}

Variable Variable::abstract(int copy, const RingConfig& cfg) {
  const auto v = abstract(copy);
  check_in_config(v, cfg);
  return v;
}

Variable Variable::with_copy(int copy) const {
  check_index(copy, "copy");
  return pack(family(), copy, row(), col());
}

void check_in_config(Variable v, const RingConfig& cfg) {
  bool ok = v.copy() <= cfg.m();
  switch (v.family()) {
    case Family::Generic: ok = ok && v.row() <= cfg.n() && v.col() <= cfg.n(); break;
    case Family::Diagonal: ok = ok && v.coord() <= cfg.n(); break;
    case Family::Abstract: break;
  }
  if (!ok)
    throw std::out_of_range("variable " + to_string(v) + " outside configuration n=" +
                            std::to_string(cfg.n()) + ", m=" + std::to_string(cfg.m()));
}

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(Variable v, std::uint32_t exponent) {
  if (exponent > 0) {
    factors_.emplace_back(v, exponent);
    degree_ = exponent;
  }
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) { return a.first < b.first; });
  Monomial out;
  for (const auto& [v, e] : factors) {
    if (e == 0) continue;
    if (!out.factors_.empty() && out.factors_.back().first == v)
      out.factors_.back().second += e;
    else
      out.factors_.emplace_back(v, e);
    out.degree_ += e;
  }
  return out;
}

std::uint32_t Monomial::exponent(Variable v) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                             [](const Factor& f, Variable x) { return f.first < x; });
  return it != factors_.end() && it->first == v ? it->second : 0;
}

std::uint32_t Monomial::degree_in_copy(int copy) const {
  std::uint32_t d = 0;
  for (const auto& [v, e] : factors_)
    if (v.copy() == copy) d += e;
  return d;
}

Monomial Monomial::operator*(const Monomial& rhs) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + rhs.factors_.size());
  auto a = factors_.begin();
  auto b = rhs.factors_.begin();
  while (a != factors_.end() && b != rhs.factors_.end()) {
    if (a->first < b->first) {
      out.factors_.push_back(*a++);
    } else if (b->first < a->first) {
      out.factors_.push_back(*b++);
    } else {
      out.factors_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  out.factors_.insert(out.factors_.end(), a, factors_.end());
  out.factors_.insert(out.factors_.end(), b, rhs.factors_.end());
  out.degree_ = degree_ + rhs.degree_;
  return out;
}

std::strong_ordering Monomial::operator<=>(const Monomial& rhs) const {
  if (degree_ != rhs.degree_) return degree_ <=> rhs.degree_;
  auto a = factors_.begin();
  auto b = rhs.factors_.begin();
  for (; a != factors_.end() && b != rhs.factors_.end(); ++a, ++b) {
    // The side holding the smaller variable has a positive exponent where the
    // other has zero, at the most significant differing position.
    if (a->first != b->first)
      return a->first < b->first ? std::strong_ordering::greater : std::strong_ordering::less;
    if (a->second != b->second) return a->second <=> b->second;
  }
  if (a != factors_.end()) return std::strong_ordering::greater;
  if (b != rhs.factors_.end()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

std::size_t Monomial::hash() const {
  std::uint64_t h = 0x9e3779b97f4a7c15ull;
  for (const auto& [v, e] : factors_) {
    h ^= v.key() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h ^= e + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

// ---------------------------------------------------------------------------
// Polynomial

namespace {

bool term_greater(const Polynomial::Term& a, const Polynomial::Term& b) {
  return a.first > b.first;
}

void check_family(const Monomial& m, Family family) {
  for (const auto& [v, e] : m.factors())
    if (v.family() != family)
      throw std::invalid_argument("variable " + to_string(v) + " does not belong to the " +
                                  std::string(family_name(family)) + " family");
}

}  // namespace

Polynomial::Polynomial(Family family) : family_(family) {}

Polynomial::Polynomial(Family family, const Rational& constant) : family_(family) {
  if (constant != 0) terms_.emplace_back(Monomial(), constant);
}

Polynomial::Polynomial(Variable v) : family_(v.family()) {
  terms_.emplace_back(Monomial(v), Rational(1));
}

Polynomial::Polynomial(Family family, Monomial monomial, const Rational& coefficient)
    : family_(family) {
  check_family(monomial, family);
  if (coefficient != 0) terms_.emplace_back(std::move(monomial), coefficient);
}

Polynomial Polynomial::from_terms(Family family, std::vector<Term> terms) {
  for (const auto& t : terms) check_family(t.first, family);
  std::sort(terms.begin(), terms.end(), term_greater);
  std::vector<Term> merged;
  merged.reserve(terms.size());
  for (auto& t : terms) {
    if (!merged.empty() && merged.back().first == t.first)
      merged.back().second += t.second;
    else
      merged.push_back(std::move(t));
  }
  std::erase_if(merged, [](const Term& t) { return t.second == 0; });
  return Polynomial(family, std::move(merged), true);
}

Rational Polynomial::coefficient(const Monomial& monomial) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), monomial,
                             [](const Term& t, const Monomial& m) { return t.first > m; });
  return it != terms_.end() && it->first == monomial ? it->second : Rational(0);
}

bool Polynomial::is_homogeneous(std::uint32_t degree) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [degree](const Term& t) { return t.first.degree() == degree; });
}

Polynomial Polynomial::operator-() const {
  auto out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

Polynomial Polynomial::scaled(const Rational& factor) const {
  if (factor == 0) return Polynomial(family_);
  auto out = *this;
  for (auto& t : out.terms_) t.second *= factor;
  return out;
}

void Polynomial::require_same_family(const Polynomial& rhs) const {
  if (family_ != rhs.family_)
    throw std::invalid_argument("polynomial family mismatch: " +
                                std::string(family_name(family_)) + " vs " +
                                std::string(family_name(rhs.family_)));
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  require_same_family(rhs);
  if (rhs.terms_.empty()) return *this;
  if (this == &rhs) return *this = scaled(2);
  std::vector<Term> merged;
  merged.reserve(terms_.size() + rhs.terms_.size());
  auto a = terms_.begin();
  auto b = rhs.terms_.begin();
  while (a != terms_.end() && b != rhs.terms_.end()) {
    const auto cmp = a->first <=> b->first;
    if (cmp > 0) {
      merged.push_back(std::move(*a++));
    } else if (cmp < 0) {
      merged.push_back(*b++);
    } else {
      Rational c = a->second + b->second;
      if (c != 0) merged.emplace_back(std::move(a->first), std::move(c));
      ++a;
      ++b;
    }
  }
  std::move(a, terms_.end(), std::back_inserter(merged));
  merged.insert(merged.end(), b, rhs.terms_.end());
  terms_ = std::move(merged);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) { return *this += -rhs; }

Polynomial& Polynomial::operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  lhs.require_same_family(rhs);
  if (lhs.is_zero() || rhs.is_zero()) return Polynomial(lhs.family_);
  const auto& small = lhs.size() <= rhs.size() ? lhs : rhs;
  const auto& large = lhs.size() <= rhs.size() ? rhs : lhs;
  if (small.size() == 1) {
    // Multiplying by one term preserves the order, so no re-sort is needed.
    const auto& [m, c] = small.terms_.front();
    std::vector<Polynomial::Term> out;
    out.reserve(large.size());
    for (const auto& [lm, lc] : large.terms_) out.emplace_back(lm * m, lc * c);
    return Polynomial(lhs.family_, std::move(out), true);
  }
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(lhs.size() * rhs.size());
  for (const auto& [am, ac] : lhs.terms_)
    for (const auto& [bm, bc] : rhs.terms_) acc[am * bm] += ac * bc;
  std::vector<Polynomial::Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) out.emplace_back(m, std::move(c));
  std::sort(out.begin(), out.end(), term_greater);
  return Polynomial(lhs.family_, std::move(out), true);
}

Polynomial poly_add(const Polynomial& p, const Polynomial& q) { return p + q; }

Polynomial poly_mul(const Polynomial& p, const Polynomial& q) { return p * q; }

Polynomial pow(const Polynomial& p, unsigned exponent) {
  Polynomial result(p.family(), Rational(1));
  Polynomial base = p;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

Rational poly_eval(const Polynomial& p, const Assignment& assignment) {
  Rational total = 0;
  for (const auto& [m, c] : p.terms()) {
    Rational value = c;
    for (const auto& [v, e] : m.factors()) {
      auto it = assignment.find(v);
      if (it == assignment.end())
        throw std::out_of_range("unassigned variable " + to_string(v));
      for (std::uint32_t k = 0; k < e; ++k) value *= it->second;
    }
    total += value;
  }
  return total;
}

Monomial leading_monomial(const Polynomial& p) {
  if (p.is_zero()) throw std::domain_error("leading monomial of the zero polynomial");
  return p.terms().front().first;
}

Polynomial rename_variables(const Polynomial& p, Family target,
                            const std::function<std::optional<Variable>(Variable)>& rename) {
  std::vector<Polynomial::Term> terms;
  terms.reserve(p.size());
  for (const auto& [m, c] : p.terms()) {
    std::vector<Monomial::Factor> factors;
    factors.reserve(m.factors().size());
    bool vanishes = false;
    for (const auto& [v, e] : m.factors()) {
      auto image = rename(v);
      if (!image) {
        vanishes = true;
        break;
      }
      factors.emplace_back(*image, e);
    }
    if (!vanishes) terms.emplace_back(Monomial::from_factors(std::move(factors)), c);
  }
  return Polynomial::from_terms(target, std::move(terms));
}

Polynomial substitute(const Polynomial& p, Family target,
                      const std::function<Polynomial(Variable)>& image) {
  std::map<Variable, Polynomial> cache;
  Polynomial total(target);
  for (const auto& [m, c] : p.terms()) {
    Polynomial term(target, c);
    for (const auto& [v, e] : m.factors()) {
      auto it = cache.find(v);
      if (it == cache.end()) it = cache.emplace(v, image(v)).first;
      term *= pow(it->second, e);
    }
    total += term;
  }
  return total;
}

std::size_t rank(std::span<const Polynomial> polys) {
  // Echelon basis keyed by distinct leading monomials.
  std::map<Monomial, Polynomial> basis;
  for (Polynomial p : polys) {
    while (!p.is_zero()) {
      const auto& [lead, coeff] = p.terms().front();
      auto it = basis.find(lead);
      if (it == basis.end()) {
        const Monomial key = lead;
        basis.emplace(key, std::move(p));
        break;
      }
      p -= it->second.scaled(coeff / it->second.terms().front().second);
    }
  }
  return basis.size();
}

std::string to_string(Variable v) {
  const auto i = std::to_string(v.copy());
  switch (v.family()) {
    case Family::Generic:
      return "x[" + i + ";" + std::to_string(v.row()) + "," + std::to_string(v.col()) + "]";
    case Family::Diagonal: return "x[" + i + "," + std::to_string(v.coord()) + "]";
    case Family::Abstract: return "x[" + i + "]";
  }
  return "?";
}

std::string to_string(const Monomial& m) {
  if (m.is_one()) return "1";
  std::string out;
  for (const auto& [v, e] : m.factors()) {
    if (!out.empty()) out += '*';
    out += to_string(v);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = c < 0;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    const Rational magnitude = abs(c);
    if (m.is_one()) {
      out += to_string(magnitude);
    } else {
      if (magnitude != 1) out += to_string(magnitude) + "*";
      out += to_string(m);
    }
  }
  return out;
}

}  // namespace commtrace
