#pragma once

#include "orbi/numeric.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace orbi {

/// Exponent vector of a monomial; length equals the polynomial arity.
using Exponents = std::vector<std::uint32_t>;

/// Graded lexicographic order in declared variable order: lower total degree
/// first, ties broken lexicographically with earlier variables weighing more.
struct GrlexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Canonical form is an invariant: no zero coefficients are stored and all
/// exponent vectors have length arity(). Two polynomials are equal iff their
/// term maps are equal. Values are immutable in spirit: every operation
/// returns a fresh canonical polynomial.
class ExactPoly {
 public:
  using TermMap = std::map<Exponents, Rational, GrlexLess>;

  explicit ExactPoly(std::size_t arity = 0) : arity_(arity) {}

  static ExactPoly constant(std::size_t arity, Rational value);
  static ExactPoly variable(std::size_t arity, std::size_t index);
  static ExactPoly monomial(std::size_t arity, Exponents exponents, Rational coefficient);

  std::size_t arity() const { return arity_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Value of a constant polynomial; 0 for the zero polynomial.
  Rational constant_value() const;
  std::uint32_t total_degree() const;
  std::uint32_t degree_in(std::size_t variable) const;
  /// Leading term under grlex. Precondition: not zero.
  const std::pair<const Exponents, Rational>& leading_term() const;

  ExactPoly operator-() const;
  friend ExactPoly operator+(const ExactPoly& a, const ExactPoly& b);
  friend ExactPoly operator-(const ExactPoly& a, const ExactPoly& b);
  friend ExactPoly operator*(const ExactPoly& a, const ExactPoly& b);
  ExactPoly scaled(const Rational& factor) const;

  bool operator==(const ExactPoly&) const = default;

  /// Renders the polynomial in the scenario grammar (explicit '*', '^' with
  /// integer exponents), terms in decreasing grlex order. Round-trips through
  /// the polynomial parser.
  std::string to_string(std::span<const std::string> variables) const;

  /// Adds coefficient * x^exponents, dropping the term if it cancels.
  void add_term(const Exponents& exponents, const Rational& coefficient);

 private:
  std::size_t arity_;
  TermMap terms_;
};

/// base^exponent; exponent 0 gives the constant 1.
ExactPoly poly_pow(const ExactPoly& base, std::uint32_t exponent);

/// Quotient q with g = q*p, or nullopt when p does not divide g exactly.
/// Multivariate division by the single divisor p under grlex; a single
/// polynomial generates its own Groebner basis, so a zero remainder is
/// equivalent to divisibility. Throws std::invalid_argument if p is zero or
/// the arities differ.
std::optional<ExactPoly> exact_divide(const ExactPoly& g, const ExactPoly& p);

/// Largest k with p^k | g, by repeated exact division; infinity iff g = 0.
/// Throws std::invalid_argument if p is constant. Callers assert p
/// irreducible; the function itself only needs p nonconstant.
ExtendedInt vanishing_order(const ExactPoly& g, const ExactPoly& p);

/// g with variable i replaced by images[i], fully expanded. All images must
/// share one arity, which becomes the arity of the result.
ExactPoly substitute(const ExactPoly& g, std::span<const ExactPoly> images);

/// Formal partial derivative. Throws std::invalid_argument on a bad index.
ExactPoly partial_derivative(const ExactPoly& g, std::size_t variable);

}  // namespace orbi
