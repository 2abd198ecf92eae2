#include "orbi/poly.hpp"

#include <algorithm>
#include <sstream>

namespace orbi {

namespace {

std::uint32_t degree_of(const Exponents& e) {
  std::uint32_t d = 0;
  for (auto x : e) d += x;
  return d;
}

void check_same_arity(const ExactPoly& a, const ExactPoly& b, const char* op) {
  if (a.arity() != b.arity())
    throw std::invalid_argument(std::string(op) + ": arity mismatch (" +
                                std::to_string(a.arity()) + " vs " + std::to_string(b.arity()) +
                                ")");
}

}  // namespace

bool GrlexLess::operator()(const Exponents& a, const Exponents& b) const {
  std::uint32_t da = degree_of(a);
  std::uint32_t db = degree_of(b);
  if (da != db) return da < db;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

ExactPoly ExactPoly::constant(std::size_t arity, Rational value) {
  ExactPoly p(arity);
  p.add_term(Exponents(arity, 0), value);
  return p;
}

ExactPoly ExactPoly::variable(std::size_t arity, std::size_t index) {
  if (index >= arity) throw std::invalid_argument("variable index out of range");
  Exponents e(arity, 0);
  e[index] = 1;
  return monomial(arity, std::move(e), Rational(1));
}

ExactPoly ExactPoly::monomial(std::size_t arity, Exponents exponents, Rational coefficient) {
  if (exponents.size() != arity) throw std::invalid_argument("monomial exponent length != arity");
  ExactPoly p(arity);
  p.add_term(exponents, coefficient);
  return p;
}

bool ExactPoly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && degree_of(terms_.begin()->first) == 0;
}

Rational ExactPoly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) throw std::logic_error("constant_value on nonconstant polynomial");
  return terms_.begin()->second;
}

std::uint32_t ExactPoly::total_degree() const {
  if (terms_.empty()) return 0;
  return degree_of(terms_.rbegin()->first);
}

std::uint32_t ExactPoly::degree_in(std::size_t variable) const {
  if (variable >= arity_) throw std::invalid_argument("degree_in: index out of range");
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[variable]);
  return d;
}

const std::pair<const Exponents, Rational>& ExactPoly::leading_term() const {
  if (terms_.empty()) throw std::logic_error("leading_term of zero polynomial");
  return *terms_.rbegin();
}

void ExactPoly::add_term(const Exponents& exponents, const Rational& coefficient) {
  if (exponents.size() != arity_) throw std::invalid_argument("term exponent length != arity");
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.emplace(exponents, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

ExactPoly ExactPoly::operator-() const {
  ExactPoly out(arity_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

ExactPoly operator+(const ExactPoly& a, const ExactPoly& b) {
  check_same_arity(a, b, "add");
  ExactPoly out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e, c);
  return out;
}

ExactPoly operator-(const ExactPoly& a, const ExactPoly& b) {
  check_same_arity(a, b, "subtract");
  ExactPoly out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e, -c);
  return out;
}

ExactPoly operator*(const ExactPoly& a, const ExactPoly& b) {
  check_same_arity(a, b, "multiply");
  ExactPoly out(a.arity());
  Exponents e(a.arity());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

ExactPoly ExactPoly::scaled(const Rational& factor) const {
  ExactPoly out(arity_);
  if (factor == 0) return out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, c * factor);
  return out;
}

std::string ExactPoly::to_string(std::span<const std::string> variables) const {
  if (variables.size() != arity_) throw std::invalid_argument("to_string: wrong variable count");
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational abs_c = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    std::vector<std::string> factors;
    if (abs_c != 1 || degree_of(e) == 0) factors.push_back(rational_to_string(abs_c));
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      std::string f = variables[i];
      if (e[i] > 1) f += "^" + std::to_string(e[i]);
      factors.push_back(std::move(f));
    }
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i > 0) out << "*";
      out << factors[i];
    }
  }
  return out.str();
}

ExactPoly poly_pow(const ExactPoly& base, std::uint32_t exponent) {
  ExactPoly result = ExactPoly::constant(base.arity(), Rational(1));
  ExactPoly square = base;
  std::uint32_t e = exponent;
  while (e > 0) {
    if (e & 1u) result = result * square;
    e >>= 1u;
    if (e > 0) square = square * square;
  }
  return result;
}

std::optional<ExactPoly> exact_divide(const ExactPoly& g, const ExactPoly& p) {
  check_same_arity(g, p, "exact_divide");
  if (p.is_zero()) throw std::invalid_argument("exact_divide by zero polynomial");
  ExactPoly quotient(g.arity());
  ExactPoly rest = g;
  const auto& [lp_exp, lp_coeff] = p.leading_term();
  while (!rest.is_zero()) {
    const auto& [lr_exp, lr_coeff] = rest.leading_term();
    Exponents q_exp(lr_exp.size());
    for (std::size_t i = 0; i < lr_exp.size(); ++i) {
      // A leading term not divisible by LT(p) would go to the remainder and
      // can never be cancelled later, so divisibility fails right here.
      if (lr_exp[i] < lp_exp[i]) return std::nullopt;
      q_exp[i] = lr_exp[i] - lp_exp[i];
    }
    ExactPoly t = ExactPoly::monomial(g.arity(), std::move(q_exp), lr_coeff / lp_coeff);
    quotient = quotient + t;
    rest = rest - t * p;
  }
  return quotient;
}

ExtendedInt vanishing_order(const ExactPoly& g, const ExactPoly& p) {
  if (p.is_constant()) throw std::invalid_argument("vanishing_order along a constant");
  if (g.is_zero()) return ExtendedInt::infinity();
  std::int64_t order = 0;
  ExactPoly rest = g;
  while (true) {
    auto q = exact_divide(rest, p);
    if (!q) return ExtendedInt(order);
    rest = std::move(*q);
    ++order;
  }
}

ExactPoly substitute(const ExactPoly& g, std::span<const ExactPoly> images) {
  if (images.size() != g.arity()) throw std::invalid_argument("substitute: arity mismatch");
  if (images.empty()) return g;  // arity-0 polynomial is a constant already
  std::size_t target_arity = images[0].arity();
  for (const auto& image : images) {
    if (image.arity() != target_arity)
      throw std::invalid_argument("substitute: images have mixed arities");
  }
  // Per-variable power cache up to the largest exponent used.
  std::vector<std::vector<ExactPoly>> powers(images.size());
  for (std::size_t i = 0; i < images.size(); ++i)
    powers[i].push_back(ExactPoly::constant(target_arity, Rational(1)));
  ExactPoly result(target_arity);
  for (const auto& [e, c] : g.terms()) {
    ExactPoly term = ExactPoly::constant(target_arity, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      while (powers[i].size() <= e[i]) powers[i].push_back(powers[i].back() * images[i]);
      term = term * powers[i][e[i]];
    }
    result = result + term;
  }
  return result;
}

ExactPoly partial_derivative(const ExactPoly& g, std::size_t variable) {
  if (variable >= g.arity()) throw std::invalid_argument("partial_derivative: index out of range");
  ExactPoly out(g.arity());
  for (const auto& [e, c] : g.terms()) {
    if (e[variable] == 0) continue;
    Exponents d = e;
    d[variable] -= 1;
    out.add_term(d, c * Rational(e[variable]));
  }
  return out;
}

}  // namespace orbi
