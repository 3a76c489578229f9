#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "edgeideal/graph.hpp"
#include "edgeideal/polynomial.hpp"

namespace edgeideal {

/// Candidate generators of I(G) up to radical.
struct GeneratorSet {
  Graph graph;
  std::vector<Polynomial> polys;
};

/// Every term of every polynomial is divisible by an edge monomial of the
/// graph, so the generated ideal lies in I(G).
bool terms_in_edge_ideal(const GeneratorSet& gs);

/// References index the element list: the generators first, then the
/// elements established by each step in order.
struct Summand {
  Polynomial coefficient;
  std::size_t ref = 0;
  friend bool operator==(const Summand&, const Summand&) = default;
};

/// ρ (single ±1 term) divides μν where μ ± ν is the sum element.
/// Establishes μ then ν, in monomial order.
struct SVStep {
  std::size_t rho_ref = 0;
  std::size_t sum_ref = 0;
  friend bool operator==(const SVStep&, const SVStep&) = default;
};

/// Removes from the target every term divisible by one of the subtracted
/// single-term elements; exactly one ±1 term must remain. Establishes it.
struct LinearStep {
  std::size_t target_ref = 0;
  std::vector<std::size_t> subtract_refs;
  friend bool operator==(const LinearStep&, const LinearStep&) = default;
};

/// target^k = Σ coefficient·element exactly. Establishes target.
struct PowerStep {
  Monomial target;
  std::uint32_t k = 1;
  std::vector<Summand> combination;
  friend bool operator==(const PowerStep&, const PowerStep&) = default;
};

using Step = std::variant<SVStep, LinearStep, PowerStep>;

struct Certificate {
  std::vector<Step> steps;
  friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// Highest power a PowerStep may use.
inline constexpr std::uint32_t kMaxPower = 64;

struct Verdict {
  bool ok = false;
  /// Index of the first failing step; empty when the failure is in the
  /// containment or coverage check, or on success.
  std::optional<std::size_t> failed_step;
  std::string reason;
  /// Monomials known to lie in the radical, in the order established.
  std::vector<Monomial> established;
};

/// OK iff every generator term lies in I(G), every step checks by exact
/// integer arithmetic, and every edge monomial ends up established; together
/// these prove that the generators generate I(G) up to radical.
Verdict verify_certificate(const GeneratorSet& gs, const Certificate& cert);

/// Elements a step appends, or the reason it fails, given the current
/// element list.
struct StepOutcome {
  std::vector<Polynomial> established;
  std::string error;
  bool ok() const { return error.empty(); }
};
StepOutcome apply_step(const std::vector<Polynomial>& elements, const Step& step);

/// Incrementally records a certificate while tracking the element list.
/// Every method checks its step and throws Error if it does not apply, which
/// signals a construction bug.
class CertificateBuilder {
 public:
  explicit CertificateBuilder(GeneratorSet gs);

  const GeneratorSet& generators() const noexcept { return gs_; }
  const std::vector<Polynomial>& elements() const noexcept { return elements_; }
  const Certificate& certificate() const noexcept { return cert_; }

  /// Index of an element equal to ±m, if any.
  std::optional<std::size_t> find(const Monomial& m) const;
  /// Same, throwing when m is not established.
  std::size_t ref(const Monomial& m) const;
  /// Index of an established single-term element dividing m, if any.
  std::optional<std::size_t> find_divisor(const Monomial& m) const;

  /// Each returns the index of the first element it establishes.
  std::size_t add(const Step& step);
  std::size_t sv(std::size_t rho_ref, std::size_t sum_ref);
  std::size_t linear(std::size_t target_ref, std::vector<std::size_t> subtract_refs);
  std::size_t power(Monomial target, std::uint32_t k, std::vector<Summand> combination);

  /// Establishes the radical of the term μ of E = Σ c·element, whose
  /// coefficient must be ±1, given that μτ is divisible by an established
  /// monomial for every other term τ of E. Emits one PowerStep.
  std::size_t isolate(const std::vector<Summand>& expression, const Monomial& mu);

  /// Repeatedly extracts terms of the generators: a lone term left after
  /// removing established ones is taken by a LinearStep, a pair whose
  /// product an established monomial divides by an SVStep, and otherwise a
  /// term all of whose products with the remaining terms are covered by
  /// isolate. Only the generators listed in `only` are used when given.
  /// Stops at a fixed point; returns whether every edge monomial is
  /// established.
  bool saturate(const std::optional<std::vector<std::size_t>>& only = std::nullopt);

  /// All edge monomials of the graph are established.
  bool complete() const;

  /// Replays `other` steps into this builder, mapping its generators to
  /// elements here via `generator_map`. Returns the map for all of
  /// `other`'s elements.
  std::vector<std::size_t> replay(const Certificate& other, std::size_t other_generators,
                                  std::vector<std::size_t> generator_map);

 private:
  GeneratorSet gs_;
  std::vector<Polynomial> elements_;
  Certificate cert_;
};

/// Stable JSON record holding the generators and the steps.
std::string certificate_to_json(const GeneratorSet& gs, const Certificate& cert);

struct CertificateFile {
  std::optional<Graph> graph;
  std::vector<Polynomial> polys;
  Certificate cert;
};

/// Inverse of certificate_to_json; throws InvalidArgument on malformed input.
CertificateFile certificate_from_json(const std::string& text);

}  // namespace edgeideal
