#include "commtrace/text.hpp"

#include <cctype>
#include <vector>

namespace commtrace {

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error(message + " at position " + std::to_string(position)), position_(position) {}

namespace {

// Hand-written recursive descent over the raw text; whitespace is skipped between tokens.
class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  bool accept(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  BigInt integer() {
    if (!at_digit()) fail("expected an integer");
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return BigInt(std::string(text_.substr(start, pos_ - start)), 10);
  }

  int index() {
    const std::size_t start = position();
    const BigInt value = integer();
    if (value < 1 || value > 0xffff) throw ParseError("index must lie in 1..65535", start);
    return static_cast<int>(value.get_si());
  }

  Rational rational() {
    const std::size_t start = position();
    BigInt num = integer();
    BigInt den = 1;
    if (accept('/')) den = integer();
    if (den == 0) throw ParseError("zero denominator", start);
    Rational r(num, den);
    r.canonicalize();
    return r;
  }

  std::size_t position() {
    skip_space();
    return pos_;
  }

  [[noreturn]] void fail(const std::string& message) { throw ParseError(message, position()); }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

// Shared skeleton: ['-'] term (('+'|'-') term)*, with an optional leading rational
// coefficient in each term. `accumulate_term` receives the signed coefficient and
// consumes the '*'-separated factor list when one follows.
template <typename Accumulate>
void parse_sum(Cursor& in, Accumulate&& accumulate_term) {
  bool negative = in.accept('-');
  while (true) {
    Rational coefficient = 1;
    bool need_factor = true;
    if (in.at_digit()) {
      coefficient = in.rational();
      need_factor = in.accept('*');
    }
    accumulate_term(negative ? Rational(-coefficient) : coefficient, need_factor);
    if (in.accept('+'))
      negative = false;
    else if (in.accept('-'))
      negative = true;
    else
      break;
  }
  if (!in.at_end()) in.fail("unexpected character");
}

TraceWord parse_word(Cursor& in) {
  in.expect('(');
  std::vector<int> letters;
  do {
    if (!in.accept('X')) in.fail("expected a matrix 'X<index>'");
    letters.push_back(in.index());
  } while (in.accept('*'));
  in.expect(')');
  return TraceWord(std::move(letters));
}

}  // namespace

TraceExpression parse_expression(std::string_view text) {
  Cursor in(text);
  TraceExpression out;
  parse_sum(in, [&](const Rational& coefficient, bool need_factor) {
    std::vector<TraceWord> factors;
    if (need_factor) {
      do {
        if (!in.accept("tr")) in.fail("expected 'tr('");
        factors.push_back(parse_word(in));
      } while (in.accept('*'));
    }
    out.add_term(TraceProduct(std::move(factors)), coefficient);
  });
  return out;
}

namespace {

Variable parse_variable(Cursor& in) {
  if (!in.accept('x')) in.fail("expected a variable 'x[...]'");
  in.expect('[');
  const int copy = in.index();
  Variable v = Variable::abstract(copy);
  if (in.accept(';')) {
    const int row = in.index();
    in.expect(',');
    v = Variable::generic(copy, row, in.index());
  } else if (in.accept(',')) {
    v = Variable::diagonal(copy, in.index());
  }
  in.expect(']');
  return v;
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, std::optional<Family> constant_family) {
  Cursor in(text);
  std::optional<Family> family;
  std::vector<Polynomial::Term> terms;
  parse_sum(in, [&](const Rational& coefficient, bool need_factor) {
    std::vector<Monomial::Factor> factors;
    if (need_factor) {
      do {
        const std::size_t start = in.position();
        const Variable v = parse_variable(in);
        if (family && *family != v.family())
          throw ParseError("variable " + to_string(v) + " mixes families", start);
        family = v.family();
        std::uint32_t exponent = 1;
        if (in.accept('^')) {
          const std::size_t at = in.position();
          const BigInt e = in.integer();
          if (e < 1 || e > 1000) throw ParseError("exponent must lie in 1..1000", at);
          exponent = static_cast<std::uint32_t>(e.get_ui());
        }
        factors.emplace_back(v, exponent);
      } while (in.accept('*'));
    }
    terms.emplace_back(Monomial::from_factors(std::move(factors)), coefficient);
  });
  return Polynomial::from_terms(family.value_or(constant_family.value_or(Family::Abstract)),
                                std::move(terms));
}

}  // namespace commtrace
