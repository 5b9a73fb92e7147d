#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "commtrace/config.hpp"
#include "commtrace/rational.hpp"

namespace commtrace {

// The three disjoint variable families. The enumerator values are the family ranks
// used by the variable order.
enum class Family : std::uint8_t { Generic = 0, Diagonal = 1, Abstract = 2 };

std::string_view family_name(Family family);

// A single indeterminate:
//   Generic  x[i;h,k]  entry (h,k) of the i-th generic matrix
//   Diagonal x[i,j]    j-th coordinate of the i-th vector (diagonal matrix)
//   Abstract x[i]      i-th abstract commuting variable
//
// Variables are ordered by family rank, then copy index, then the remaining
// indices, all ascending. The order is realized by a packed 64-bit key.
class Variable {
 public:
  // Index arguments are 1-based; out-of-range indices throw std::out_of_range.
  static Variable generic(int copy, int row, int col);
  static Variable diagonal(int copy, int coord);
  static Variable abstract(int copy);

  // Same, additionally checked against the ambient configuration.
  static Variable generic(int copy, int row, int col, const RingConfig& cfg);
  static Variable diagonal(int copy, int coord, const RingConfig& cfg);
  static Variable abstract(int copy, const RingConfig& cfg);

  Family family() const { return static_cast<Family>(key_ >> 48); }
  int copy() const { return static_cast<int>((key_ >> 32) & 0xffff); }
  // Generic: row/col. Diagonal: coord() == row(). Abstract: both zero.
  int row() const { return static_cast<int>((key_ >> 16) & 0xffff); }
  int col() const { return static_cast<int>(key_ & 0xffff); }
  int coord() const { return row(); }

  // Same variable with a different copy index.
  Variable with_copy(int copy) const;

  std::uint64_t key() const { return key_; }

  auto operator<=>(const Variable&) const = default;

 private:
  explicit Variable(std::uint64_t key) : key_(key) {}
  static Variable pack(Family family, int copy, int a, int b);

  std::uint64_t key_;
};

// Throws std::out_of_range if the variable's indices fall outside cfg.
void check_in_config(Variable v, const RingConfig& cfg);

// Product of variables with positive exponents, stored sorted by variable.
//
// Comparison (operator<=>) is the graded lexicographic order: higher total degree is
// larger; ties compare exponent vectors lexicographically with the smallest variable
// most significant. The order is total and compatible with multiplication.
class Monomial {
 public:
  using Factor = std::pair<Variable, std::uint32_t>;

  Monomial() = default;
  explicit Monomial(Variable v, std::uint32_t exponent = 1);

  // Sorts, merges repeated variables and drops zero exponents.
  static Monomial from_factors(std::vector<Factor> factors);

  std::span<const Factor> factors() const { return factors_; }
  std::uint32_t degree() const { return degree_; }
  bool is_one() const { return factors_.empty(); }
  std::uint32_t exponent(Variable v) const;
  // Sum of exponents over variables of the given copy index.
  std::uint32_t degree_in_copy(int copy) const;

  Monomial operator*(const Monomial& rhs) const;

  bool operator==(const Monomial& rhs) const { return factors_ == rhs.factors_; }
  std::strong_ordering operator<=>(const Monomial& rhs) const;

  std::size_t hash() const;

 private:
  std::vector<Factor> factors_;
  std::uint32_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

// Sparse polynomial with exact rational coefficients over a single variable family.
// Terms are kept sorted by decreasing monomial order with no zero coefficients, so
// equality is structural and terms().front() is the leading term.
class Polynomial {
 public:
  using Term = std::pair<Monomial, Rational>;

  explicit Polynomial(Family family);  // zero
  Polynomial(Family family, const Rational& constant);
  explicit Polynomial(Variable v);
  Polynomial(Family family, Monomial monomial, const Rational& coefficient);

  // Combines like terms and drops zeros. Throws std::invalid_argument if a
  // variable belongs to a different family.
  static Polynomial from_terms(Family family, std::vector<Term> terms);

  Family family() const { return family_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::span<const Term> terms() const { return terms_; }
  Rational coefficient(const Monomial& monomial) const;
  // Every term has the given total degree (true for zero).
  bool is_homogeneous(std::uint32_t degree) const;

  Polynomial operator-() const;
  Polynomial scaled(const Rational& factor) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);

  bool operator==(const Polynomial& rhs) const = default;

 private:
  Polynomial(Family family, std::vector<Term> sorted_terms, bool)
      : family_(family), terms_(std::move(sorted_terms)) {}

  void require_same_family(const Polynomial& rhs) const;

  Family family_;
  std::vector<Term> terms_;
};

// Named forms of the ring operations; family mismatch throws std::invalid_argument.
Polynomial poly_add(const Polynomial& p, const Polynomial& q);
Polynomial poly_mul(const Polynomial& p, const Polynomial& q);
Polynomial pow(const Polynomial& p, unsigned exponent);

using Assignment = std::map<Variable, Rational>;

// Throws std::out_of_range naming the first unassigned variable.
Rational poly_eval(const Polynomial& p, const Assignment& assignment);

// Throws std::domain_error for the zero polynomial.
Monomial leading_monomial(const Polynomial& p);

// Renames variables one by one into `target`; nullopt sends the variable to zero.
Polynomial rename_variables(const Polynomial& p, Family target,
                            const std::function<std::optional<Variable>(Variable)>& rename);

// Replaces each variable by a polynomial of the `target` family.
Polynomial substitute(const Polynomial& p, Family target,
                      const std::function<Polynomial(Variable)>& image);

// Dimension of the rational span of the given polynomials (exact Gaussian
// elimination on leading monomials). All inputs must share a family.
std::size_t rank(std::span<const Polynomial> polys);

std::string to_string(Variable v);
std::string to_string(const Monomial& m);
// Canonical rendering, leading term first: "2*x[1,1]*x[2,2] - 1/3".
std::string to_string(const Polynomial& p);

}  // namespace commtrace
