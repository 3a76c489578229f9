#include "edgeideal/polynomial.hpp"

#include <algorithm>

#include "edgeideal/error.hpp"

namespace edgeideal {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("coefficient addition overflows");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("coefficient product overflows");
  return r;
}

std::uint32_t checked_exp(std::uint64_t e) {
  if (e > 0xffffffffu) throw ArithmeticOverflow("exponent overflows");
  return static_cast<std::uint32_t>(e);
}

}  // namespace

Monomial::Monomial(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end());
  for (auto& [v, e] : factors) {
    if (e == 0) throw InvalidArgument("zero exponent for " + v.label());
    if (!factors_.empty() && factors_.back().first == v) {
      factors_.back().second = checked_exp(std::uint64_t{factors_.back().second} + e);
    } else {
      factors_.emplace_back(v, e);
    }
  }
}

Monomial Monomial::variable(const VertexId& v, std::uint32_t exponent) {
  return Monomial({{v, exponent}});
}

Monomial Monomial::edge(const Edge& e) { return Monomial({{e.u, 1}, {e.v, 1}}); }

std::uint32_t Monomial::exponent(const VertexId& v) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                             [](const Factor& f, const VertexId& x) { return f.first < x; });
  return it != factors_.end() && it->first == v ? it->second : 0;
}

std::uint64_t Monomial::degree() const {
  std::uint64_t d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

bool Monomial::is_squarefree() const {
  return std::all_of(factors_.begin(), factors_.end(), [](const Factor& f) { return f.second == 1; });
}

Monomial Monomial::radical() const {
  Monomial r;
  for (const auto& f : factors_) r.factors_.emplace_back(f.first, 1);
  return r;
}

bool Monomial::divides(const Monomial& other) const {
  auto it = other.factors_.begin();
  for (const auto& [v, e] : factors_) {
    while (it != other.factors_.end() && it->first < v) ++it;
    if (it == other.factors_.end() || it->first != v || it->second < e) return false;
  }
  return true;
}

std::optional<Monomial> Monomial::quotient_of(const Monomial& other) const {
  if (!divides(other)) return std::nullopt;
  Monomial q;
  for (const auto& [v, e] : other.factors_) {
    std::uint32_t d = e - exponent(v);
    if (d) q.factors_.emplace_back(v, d);
  }
  return q;
}

Monomial Monomial::pow(std::uint32_t k) const {
  if (k == 0) return {};
  Monomial r;
  for (const auto& [v, e] : factors_) r.factors_.emplace_back(v, checked_exp(std::uint64_t{e} * k));
  return r;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  auto i = a.factors_.begin(), j = b.factors_.begin();
  while (i != a.factors_.end() || j != b.factors_.end()) {
    if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
      r.factors_.push_back(*i++);
    } else if (i == a.factors_.end() || j->first < i->first) {
      r.factors_.push_back(*j++);
    } else {
      r.factors_.emplace_back(i->first, checked_exp(std::uint64_t{i->second} + j->second));
      ++i;
      ++j;
    }
  }
  return r;
}

bool divides(const Monomial& m1, const Monomial& m2) { return m1.divides(m2); }

std::string to_string(const Monomial& m) {
  if (m.is_one()) return "1";
  std::string s;
  for (const auto& [v, e] : m.factors()) {
    if (!s.empty()) s += "*";
    s += v.label();
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

Polynomial::Polynomial(Monomial m, std::int64_t coefficient) {
  if (coefficient != 0) terms_.emplace(std::move(m), coefficient);
}

Polynomial::Polynomial(Terms terms) {
  for (const auto& [m, c] : terms) add_term(m, c);
}

Polynomial Polynomial::constant(std::int64_t c) { return Polynomial(Monomial{}, c); }

std::int64_t Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

void Polynomial::add_term(const Monomial& m, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (inserted) return;
  it->second = checked_add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, checked_mul(c, -1));
  return *this;
}

Polynomial operator-(const Polynomial& a) { return Polynomial() - a; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, checked_mul(ca, cb));
  }
  return r;
}

Polynomial Polynomial::pow(std::uint32_t k) const {
  Polynomial result = constant(1), base = *this;
  while (k) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (const auto& [m, c] : p.terms()) {
    std::uint64_t mag = c < 0 ? 0 - static_cast<std::uint64_t>(c) : static_cast<std::uint64_t>(c);
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    if (mag != 1 || m.is_one()) {
      s += std::to_string(mag);
      if (!m.is_one()) s += "*";
    }
    if (!m.is_one()) s += to_string(m);
  }
  return s;
}

Polynomial edge_sum(const std::vector<Edge>& edges) {
  Polynomial p;
  for (const auto& e : edges) p += Polynomial(Monomial::edge(e));
  return p;
}

}  // namespace edgeideal
