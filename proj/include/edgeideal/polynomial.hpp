#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "edgeideal/graph.hpp"

namespace edgeideal {

/// Power product of vertex variables. Exponents are positive; the empty
/// product is 1.
class Monomial {
 public:
  using Factor = std::pair<VertexId, std::uint32_t>;

  Monomial() = default;
  /// Merges repeated variables; zero exponents are rejected.
  explicit Monomial(std::vector<Factor> factors);
  static Monomial variable(const VertexId& v, std::uint32_t exponent = 1);
  static Monomial edge(const Edge& e);

  /// Sorted by variable.
  const std::vector<Factor>& factors() const noexcept { return factors_; }
  std::uint32_t exponent(const VertexId& v) const;
  std::uint64_t degree() const;
  bool is_one() const noexcept { return factors_.empty(); }
  bool is_squarefree() const;

  /// Squarefree part.
  Monomial radical() const;
  /// `this` divides `other`.
  bool divides(const Monomial& other) const;
  /// other / this, when `this` divides `other`.
  std::optional<Monomial> quotient_of(const Monomial& other) const;
  Monomial pow(std::uint32_t k) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Factor> factors_;
};

/// m1 divides m2.
bool divides(const Monomial& m1, const Monomial& m2);

std::string to_string(const Monomial& m);

/// Sparse polynomial with int64 coefficients. Terms are kept in monomial
/// order with no zero coefficients; overflow throws ArithmeticOverflow.
class Polynomial {
 public:
  using Terms = std::map<Monomial, std::int64_t>;

  Polynomial() = default;
  Polynomial(Monomial m, std::int64_t coefficient = 1);  // NOLINT(google-explicit-constructor)
  explicit Polynomial(Terms terms);
  static Polynomial constant(std::int64_t c);

  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Exactly one term.
  bool is_term() const noexcept { return terms_.size() == 1; }
  std::int64_t coefficient(const Monomial& m) const;

  Polynomial pow(std::uint32_t k) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(const Polynomial& a);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void add_term(const Monomial& m, std::int64_t c);
  Terms terms_;
};

std::string to_string(const Polynomial& p);

/// Sum of the edge monomials of `edges`.
Polynomial edge_sum(const std::vector<Edge>& edges);

}  // namespace edgeideal
