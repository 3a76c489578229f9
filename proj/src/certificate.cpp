#include "edgeideal/certificate.hpp"

#include <algorithm>
#include <map>

#include "edgeideal/error.hpp"
#include "json.hpp"

namespace edgeideal {

namespace {

// The monomial of a single-term element with coefficient ±1.
std::optional<Monomial> unit_term(const Polynomial& p) {
  if (!p.is_term()) return std::nullopt;
  const auto& [m, c] = *p.terms().begin();
  if (c != 1 && c != -1) return std::nullopt;
  return m;
}

std::string describe(const Polynomial& p) { return "'" + to_string(p) + "'"; }

bool valid_ref(const std::vector<Polynomial>& elements, std::size_t ref) {
  return ref < elements.size();
}

}  // namespace

bool terms_in_edge_ideal(const GeneratorSet& gs) {
  std::vector<Monomial> edges;
  for (const auto& e : gs.graph.edges()) edges.push_back(Monomial::edge(e));
  for (const auto& p : gs.polys) {
    if (p.is_zero()) return false;
    for (const auto& [m, c] : p.terms()) {
      if (std::none_of(edges.begin(), edges.end(), [&](const Monomial& e) { return e.divides(m); })) {
        return false;
      }
    }
  }
  return true;
}

StepOutcome apply_step(const std::vector<Polynomial>& elements, const Step& step) {
  StepOutcome out;
  if (const auto* sv = std::get_if<SVStep>(&step)) {
    if (!valid_ref(elements, sv->rho_ref) || !valid_ref(elements, sv->sum_ref)) {
      out.error = "reference out of range";
      return out;
    }
    auto rho = unit_term(elements[sv->rho_ref]);
    if (!rho) {
      out.error = "rho " + describe(elements[sv->rho_ref]) + " is not a single ±1 term";
      return out;
    }
    const Polynomial& sum = elements[sv->sum_ref];
    if (sum.size() != 2) {
      out.error = "sum " + describe(sum) + " does not have two terms";
      return out;
    }
    auto it = sum.terms().begin();
    const auto& [mu, cm] = *it++;
    const auto& [nu, cn] = *it;
    if ((cm != 1 && cm != -1) || (cn != 1 && cn != -1)) {
      out.error = "sum " + describe(sum) + " has a coefficient other than ±1";
      return out;
    }
    if (!rho->divides(mu * nu)) {
      out.error = to_string(*rho) + " does not divide " + to_string(mu * nu);
      return out;
    }
    out.established = {Polynomial(mu), Polynomial(nu)};
    return out;
  }
  if (const auto* lin = std::get_if<LinearStep>(&step)) {
    if (!valid_ref(elements, lin->target_ref)) {
      out.error = "reference out of range";
      return out;
    }
    Polynomial rest = elements[lin->target_ref];
    for (std::size_t r : lin->subtract_refs) {
      if (!valid_ref(elements, r)) {
        out.error = "reference out of range";
        return out;
      }
      auto m = unit_term(elements[r]);
      if (!m) {
        out.error = "subtracted element " + describe(elements[r]) + " is not a single ±1 term";
        return out;
      }
      Polynomial removed;
      for (const auto& [t, c] : rest.terms()) {
        if (m->divides(t)) removed += Polynomial(t, c);
      }
      if (removed.is_zero()) {
        out.error = to_string(*m) + " divides no remaining term of " + describe(rest);
        return out;
      }
      rest -= removed;
    }
    auto left = unit_term(rest);
    if (!left) {
      out.error = "remainder " + describe(rest) + " is not a single ±1 term";
      return out;
    }
    out.established = {Polynomial(*left)};
    return out;
  }
  const auto& pw = std::get<PowerStep>(step);
  if (pw.k == 0 || pw.k > kMaxPower) {
    out.error = "power " + std::to_string(pw.k) + " outside 1.." + std::to_string(kMaxPower);
    return out;
  }
  Polynomial total;
  for (const auto& s : pw.combination) {
    if (!valid_ref(elements, s.ref)) {
      out.error = "reference out of range";
      return out;
    }
    total += s.coefficient * elements[s.ref];
  }
  Polynomial lhs(pw.target.pow(pw.k));
  if (total != lhs) {
    out.error = "combination gives " + describe(total) + ", not " + describe(lhs);
    return out;
  }
  out.established = {Polynomial(pw.target)};
  return out;
}

Verdict verify_certificate(const GeneratorSet& gs, const Certificate& cert) {
  Verdict v;
  if (!terms_in_edge_ideal(gs)) {
    v.reason = "some generator term is not divisible by an edge monomial";
    return v;
  }
  std::vector<Polynomial> elements = gs.polys;
  auto note = [&](const Polynomial& p) {
    if (auto m = unit_term(p)) v.established.push_back(*m);
  };
  for (const auto& p : elements) note(p);
  for (std::size_t i = 0; i < cert.steps.size(); ++i) {
    StepOutcome o;
    try {
      o = apply_step(elements, cert.steps[i]);
    } catch (const ArithmeticOverflow& e) {
      o.error = e.what();
    }
    if (!o.ok()) {
      v.failed_step = i;
      v.reason = "step " + std::to_string(i) + ": " + o.error;
      return v;
    }
    for (auto& p : o.established) {
      note(p);
      elements.push_back(std::move(p));
    }
  }
  std::vector<Monomial> known = v.established;
  std::sort(known.begin(), known.end());
  for (const auto& e : gs.graph.edges()) {
    if (!std::binary_search(known.begin(), known.end(), Monomial::edge(e))) {
      v.reason = "edge " + to_string(e) + " is never established";
      return v;
    }
  }
  v.ok = true;
  return v;
}

CertificateBuilder::CertificateBuilder(GeneratorSet gs) : gs_(std::move(gs)), elements_(gs_.polys) {
  if (!terms_in_edge_ideal(gs_)) throw InvalidArgument("generator term outside the edge ideal");
}

std::optional<std::size_t> CertificateBuilder::find(const Monomial& m) const {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    auto t = unit_term(elements_[i]);
    if (t && *t == m) return i;
  }
  return std::nullopt;
}

std::size_t CertificateBuilder::ref(const Monomial& m) const {
  auto r = find(m);
  if (!r) throw Error("monomial " + to_string(m) + " is not established");
  return *r;
}

std::optional<std::size_t> CertificateBuilder::find_divisor(const Monomial& m) const {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    auto t = unit_term(elements_[i]);
    if (t && t->divides(m)) return i;
  }
  return std::nullopt;
}

std::size_t CertificateBuilder::add(const Step& step) {
  StepOutcome o = apply_step(elements_, step);
  if (!o.ok()) throw Error("certificate construction failed: " + o.error);
  std::size_t first = elements_.size();
  for (auto& p : o.established) elements_.push_back(std::move(p));
  cert_.steps.push_back(step);
  return first;
}

std::size_t CertificateBuilder::sv(std::size_t rho_ref, std::size_t sum_ref) {
  return add(SVStep{rho_ref, sum_ref});
}

std::size_t CertificateBuilder::linear(std::size_t target_ref, std::vector<std::size_t> subtract_refs) {
  return add(LinearStep{target_ref, std::move(subtract_refs)});
}

std::size_t CertificateBuilder::power(Monomial target, std::uint32_t k,
                                      std::vector<Summand> combination) {
  return add(PowerStep{std::move(target), k, std::move(combination)});
}

std::size_t CertificateBuilder::isolate(const std::vector<Summand>& expression, const Monomial& mu) {
  Polynomial e;
  for (const auto& s : expression) e += s.coefficient * elements_.at(s.ref);
  const std::int64_t alpha = e.coefficient(mu);
  if (alpha != 1 && alpha != -1) throw Error("isolated term " + to_string(mu) + " lacks a ±1 coefficient");
  // μ² = αμ·E − Σ αβ (μτ/ρ) ρ over the other terms βτ.
  std::map<std::size_t, Polynomial> combo;
  const Polynomial amu(mu, alpha);
  for (const auto& s : expression) combo[s.ref] += amu * s.coefficient;
  for (const auto& [tau, beta] : e.terms()) {
    if (tau == mu) continue;
    Monomial prod = mu * tau;
    auto r = find_divisor(prod);
    if (!r) throw Error("no established monomial divides " + to_string(prod));
    auto rho = unit_term(elements_[*r]);
    Monomial q = *rho->quotient_of(prod);
    combo[*r] -= Polynomial(q, alpha * beta * elements_[*r].coefficient(*rho));
  }
  Monomial target = mu.radical();
  std::uint32_t top = 0;
  for (const auto& f : mu.factors()) top = std::max(top, f.second);
  const std::uint32_t k = 2 * top;
  Polynomial w(*(mu * mu).quotient_of(target.pow(k)));
  std::vector<Summand> combination;
  for (auto& [ref, c] : combo) {
    if (!c.is_zero()) combination.push_back({w * c, ref});
  }
  return power(target, k, std::move(combination));
}

bool CertificateBuilder::complete() const {
  for (const auto& e : gs_.graph.edges()) {
    if (!find(Monomial::edge(e))) return false;
  }
  return true;
}

bool CertificateBuilder::saturate(const std::optional<std::vector<std::size_t>>& only) {
  std::vector<std::size_t> pool;
  if (only) {
    pool = *only;
  } else {
    for (std::size_t g = 0; g < gs_.polys.size(); ++g) pool.push_back(g);
  }
  struct Residual {
    std::size_t g;
    Polynomial rest;
    std::vector<Summand> expression;
    std::vector<std::size_t> removers;
  };
  auto residual = [&](std::size_t g) {
    Residual out{g, {}, {{Polynomial::constant(1), g}}, {}};
    const Polynomial p = elements_[g];
    for (const auto& [t, c] : p.terms()) {
      if (auto r = find_divisor(t)) {
        Monomial rho = *unit_term(elements_[*r]);
        out.expression.push_back({Polynomial(*rho.quotient_of(t), -c * elements_[*r].coefficient(rho)), *r});
        if (std::find(out.removers.begin(), out.removers.end(), *r) == out.removers.end()) {
          out.removers.push_back(*r);
        }
      } else {
        out.rest += Polynomial(t, c);
      }
    }
    return out;
  };
  auto unit_binomial = [](const Polynomial& p) {
    return p.size() == 2 && std::all_of(p.terms().begin(), p.terms().end(),
                                        [](const auto& t) { return t.second == 1 || t.second == -1; });
  };
  bool progress = true;
  while (progress && !complete()) {
    progress = false;
    std::vector<Residual> open;
    for (std::size_t g : pool) {
      Residual res = residual(g);
      if (res.rest.is_zero()) continue;
      const Polynomial& rest = res.rest;
      if (rest.size() == 1) {
        if (!unit_term(rest) || res.removers.empty()) continue;
        linear(g, res.removers);
        progress = true;
        break;
      }
      if (res.removers.empty() && unit_binomial(rest)) {
        auto it = rest.terms().begin();
        if (auto r = find_divisor(it->first * std::next(it)->first)) {
          sv(*r, g);
          progress = true;
          break;
        }
      }
      for (const auto& [mu, c] : rest.terms()) {
        if (c != 1 && c != -1) continue;
        bool covered = std::all_of(rest.terms().begin(), rest.terms().end(), [&](const auto& t) {
          return t.first == mu || find_divisor(mu * t.first).has_value();
        });
        if (covered) {
          isolate(res.expression, mu);
          progress = true;
          break;
        }
      }
      if (progress) break;
      if (unit_binomial(rest)) open.push_back(std::move(res));
    }
    if (progress) continue;
    // Two residual binomials a·p + b·q and c·mu + d·t with q | mu·t:
    // c·mu·R2 − c·d·b·beta·R1 = mu² − c·d·a·b·beta·p for beta = mu·t / q.
    for (const Residual& r1 : open) {
      for (const Residual& r2 : open) {
        if (progress) break;
        if (r1.g == r2.g) continue;
        for (const auto& [mu, c] : r2.rest.terms()) {
          if (progress) break;
          const auto& [t, d] = *std::find_if(r2.rest.terms().begin(), r2.rest.terms().end(),
                                             [&](const auto& e) { return e.first != mu; });
          for (const auto& [q, b] : r1.rest.terms()) {
            const auto& [pm, a] = *std::find_if(r1.rest.terms().begin(), r1.rest.terms().end(),
                                                [&](const auto& e) { return e.first != q; });
            auto beta = q.quotient_of(mu * t);
            if (!beta) continue;
            Monomial left = *beta * pm;
            auto rho_ref = find_divisor(left);
            if (!rho_ref) continue;
            Monomial rho = *unit_term(elements_[*rho_ref]);
            std::vector<Summand> combination;
            for (const auto& s : r2.expression) combination.push_back({s.coefficient * Polynomial(mu, c), s.ref});
            for (const auto& s : r1.expression) {
              combination.push_back({s.coefficient * Polynomial(*beta, -c * d * b), s.ref});
            }
            combination.push_back({Polynomial(*rho.quotient_of(left), c * d * a * b * elements_[*rho_ref].coefficient(rho)),
                                   *rho_ref});
            power(mu, 2, std::move(combination));
            progress = true;
            break;
          }
        }
      }
    }
  }
  return complete();
}

std::vector<std::size_t> CertificateBuilder::replay(const Certificate& other,
                                                    std::size_t other_generators,
                                                    std::vector<std::size_t> generator_map) {
  if (generator_map.size() != other_generators) throw InvalidArgument("generator map size mismatch");
  std::vector<std::size_t> map = std::move(generator_map);
  auto m = [&](std::size_t r) {
    if (r >= map.size()) throw InvalidArgument("replayed reference out of range");
    return map[r];
  };
  for (const auto& step : other.steps) {
    Step s = step;
    std::size_t produced = 1;
    if (auto* sv = std::get_if<SVStep>(&s)) {
      sv->rho_ref = m(sv->rho_ref);
      sv->sum_ref = m(sv->sum_ref);
      produced = 2;
    } else if (auto* lin = std::get_if<LinearStep>(&s)) {
      lin->target_ref = m(lin->target_ref);
      for (auto& r : lin->subtract_refs) r = m(r);
    } else {
      for (auto& t : std::get<PowerStep>(s).combination) t.ref = m(t.ref);
    }
    std::size_t first = add(s);
    for (std::size_t i = 0; i < produced; ++i) map.push_back(first + i);
  }
  return map;
}

namespace {

using nlohmann::json;

json monomial_json(const Monomial& m) {
  json a = json::array();
  for (const auto& [v, e] : m.factors()) a.push_back(json::array({v.label(), e}));
  return a;
}

json poly_json(const Polynomial& p) {
  json a = json::array();
  for (const auto& [m, c] : p.terms()) a.push_back({{"coeff", c}, {"monomial", monomial_json(m)}});
  return a;
}

Monomial monomial_list(const json& j) {
  if (!j.is_array()) throw InvalidArgument("monomial must be a list");
  std::vector<Monomial::Factor> f;
  for (const auto& x : j) {
    if (!x.is_array() || x.size() != 2) throw InvalidArgument("factor must be [variable, exponent]");
    f.emplace_back(VertexId(x.at(0).get<std::string>()), x.at(1).get<std::uint32_t>());
  }
  return Monomial(std::move(f));
}

Polynomial poly_from(const json& j) {
  if (!j.is_array()) throw InvalidArgument("polynomial must be a list of terms");
  Polynomial p;
  for (const auto& t : j) {
    std::int64_t c = t.at("coeff").get<std::int64_t>();
    if (c == 0) throw InvalidArgument("zero coefficient");
    Monomial m = monomial_list(t.at("monomial"));
    if (p.coefficient(m) != 0) throw InvalidArgument("repeated monomial " + to_string(m));
    p += Polynomial(m, c);
  }
  return p;
}

}  // namespace

std::string certificate_to_json(const GeneratorSet& gs, const Certificate& cert) {
  json j;
  j["format"] = "edgeideal-certificate";
  j["version"] = 1;
  json edges = json::array();
  for (const auto& e : gs.graph.edges()) edges.push_back(json::array({e.u.label(), e.v.label()}));
  json isolated = json::array();
  for (const auto& v : gs.graph.vertices()) {
    if (gs.graph.degree(v) == 0) isolated.push_back(v.label());
  }
  j["graph"] = {{"edges", edges}, {"isolated", isolated}};
  json polys = json::array();
  for (const auto& p : gs.polys) polys.push_back(poly_json(p));
  j["generators"] = polys;
  json steps = json::array();
  for (const auto& step : cert.steps) {
    if (const auto* sv = std::get_if<SVStep>(&step)) {
      steps.push_back({{"kind", "sv"}, {"rho", sv->rho_ref}, {"sum", sv->sum_ref}});
    } else if (const auto* lin = std::get_if<LinearStep>(&step)) {
      steps.push_back({{"kind", "linear"}, {"target", lin->target_ref}, {"subtract", lin->subtract_refs}});
    } else {
      const auto& pw = std::get<PowerStep>(step);
      json combo = json::array();
      for (const auto& s : pw.combination) combo.push_back({{"coeff", poly_json(s.coefficient)}, {"ref", s.ref}});
      steps.push_back({{"kind", "power"}, {"target", monomial_json(pw.target)}, {"k", pw.k}, {"combination", combo}});
    }
  }
  j["steps"] = steps;
  return j.dump(1);
}

CertificateFile certificate_from_json(const std::string& text) {
  CertificateFile f;
  try {
    json j = json::parse(text);
    if (j.value("format", "") != "edgeideal-certificate") throw InvalidArgument("not a certificate record");
    if (j.contains("graph")) {
      std::vector<Edge> edges;
      for (const auto& e : j["graph"].at("edges")) edges.emplace_back(e.at(0).get<std::string>(), e.at(1).get<std::string>());
      std::vector<VertexId> isolated;
      for (const auto& v : j["graph"].value("isolated", json::array())) isolated.emplace_back(v.get<std::string>());
      f.graph = Graph::from_edges(std::span<const Edge>(edges), std::span<const VertexId>(isolated));
    }
    for (const auto& p : j.at("generators")) f.polys.push_back(poly_from(p));
    for (const auto& s : j.at("steps")) {
      std::string kind = s.at("kind").get<std::string>();
      if (kind == "sv") {
        f.cert.steps.push_back(SVStep{s.at("rho").get<std::size_t>(), s.at("sum").get<std::size_t>()});
      } else if (kind == "linear") {
        f.cert.steps.push_back(LinearStep{s.at("target").get<std::size_t>(),
                                          s.at("subtract").get<std::vector<std::size_t>>()});
      } else if (kind == "power") {
        PowerStep pw;
        pw.target = monomial_list(s.at("target"));
        pw.k = s.at("k").get<std::uint32_t>();
        for (const auto& c : s.at("combination")) {
          pw.combination.push_back({poly_from(c.at("coeff")), c.at("ref").get<std::size_t>()});
        }
        f.cert.steps.push_back(std::move(pw));
      } else {
        throw InvalidArgument("unknown step kind '" + kind + "'");
      }
    }
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed certificate: ") + e.what());
  }
  return f;
}

}  // namespace edgeideal
