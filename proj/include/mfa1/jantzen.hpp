#pragma once

// The Jantzen p-sum formula as a virtual combination of Weyl characters,
// Weyl-module irreducibility certification, and a composition-series solver
// for the regimes where the sum determines the factors outright.

#include "mfa1/charalg.hpp"

#include <map>
#include <optional>

namespace mfa1 {

// Reflect mu+rho to the dominant chamber.  Sign 0 when mu+rho meets a wall
// (the associated Weyl character vanishes); otherwise (-1)^length together
// with the dominant weight w(mu+rho) - rho.
inline std::pair<int, Weight> dot_reflect(const RootSystem& rs, const Weight& mu) {
  auto [dom, parity] = dominant_rep(rs, mu + rs.rho);
  for (int i = 0; i < rs.rank(); ++i)
    if (dom[i] == 0) return {0, Weight::zero(rs.rank())};
  return {parity ? -1 : 1, dom - rs.rho};
}

struct JsfSum {
  Weight lambda;
  Int p = 0;
  std::map<Weight, Int> terms;  // dominant mu -> coefficient of chi(mu)

  bool empty() const { return terms.empty(); }
};

inline Int p_valuation(Int n, Int p) {
  Int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

// Sum over positive roots alpha and multiples 0 < mp < <lambda+rho, alpha^vee>
// of nu_p(mp) * chi(lambda - (<lambda+rho,alpha^vee> - mp) alpha), with every
// chi routed through dot_reflect and collected on dominant support.
inline JsfSum jsf_sum(const RootSystem& rs, const Weight& lambda, Int p) {
  if (!lambda.dominant()) throw not_dominant("jsf_sum: " + lambda.str());
  JsfSum out;
  out.lambda = lambda;
  out.p = p;
  Weight lr = lambda + rs.rho;
  for (const auto& alpha : rs.positive) {
    Int pair = rs.pairing(lr, alpha);
    for (Int mp = p; mp < pair; mp += p) {
      Weight mu = lambda - (pair - mp) * alpha.fw;
      auto [sign, dom] = dot_reflect(rs, mu);
      if (sign == 0) continue;
      Int coeff = sign * p_valuation(mp, p);
      auto it = out.terms.emplace(dom, 0).first;
      it->second += coeff;
      if (it->second == 0) out.terms.erase(it);
    }
  }
  return out;
}

inline bool is_weyl_irreducible(const RootSystem& rs, const Weight& lambda, Int p) {
  return jsf_sum(rs, lambda, p).empty();
}

// Composition factors of a Weyl module, as highest weight -> multiplicity.
struct CompSeries {
  std::map<Weight, Int> factors;
};

// Memoised solver for a fixed (root system, prime).  The Jantzen sum is
// rewritten in the irreducible-character basis by recursion on lower Weyl
// modules; when every collected coefficient is 0 or 1 the factor multiset of
// the radical is determined exactly.  Any coefficient >= 2 leaves the layer
// distribution ambiguous and the solver refuses rather than guessing.
class WeylSolver {
 public:
  WeylSolver(const RootSystem& rs, Int p) : rs_(rs), p_(p) {}

  const RootSystem& system() const { return rs_; }
  Int prime() const { return p_; }

  std::optional<CompSeries> solve(const Weight& lambda) {
    auto it = memo_.find(lambda);
    if (it != memo_.end()) return it->second;
    std::optional<CompSeries> result = solve_uncached(lambda);
    memo_.emplace(lambda, result);
    return result;
  }

  // Exact character of L(lambda), when the factor recursion closes.
  std::optional<Character> irr_character(const Weight& lambda) {
    auto it = chars_.find(lambda);
    if (it != chars_.end()) return it->second;
    auto series = solve(lambda);
    std::optional<Character> result;
    if (series) {
      Character ch = freudenthal(rs_, lambda);
      for (const auto& [mu, mult] : series->factors) {
        if (mu == lambda) continue;
        auto sub = irr_character(mu);
        if (!sub) {
          result = std::nullopt;
          chars_.emplace(lambda, result);
          return result;
        }
        for (const auto& [w, m] : sub->mult) {
          auto jt = ch.mult.emplace(w, 0).first;
          jt->second -= Int(mult) * m;
          if (jt->second == 0) ch.mult.erase(jt);
        }
      }
      for (const auto& [w, m] : ch.mult)
        if (m < 0) throw inconsistent_character("irr_character: negative multiplicity at " + w.str());
      if (ch.at(lambda) != 1)
        throw inconsistent_character("irr_character: highest weight lost at " + lambda.str());
      result = std::move(ch);
    }
    chars_.emplace(lambda, result);
    return result;
  }

 private:
  std::optional<CompSeries> solve_uncached(const Weight& lambda) {
    JsfSum js = jsf_sum(rs_, lambda, p_);
    CompSeries series;
    series.factors[lambda] = 1;
    if (js.empty()) return series;

    std::map<Weight, Int> in_L;  // the sum rewritten over irreducible characters
    for (const auto& [mu, coeff] : js.terms) {
      auto sub = solve(mu);
      if (!sub) return std::nullopt;
      for (const auto& [nu, m] : sub->factors) in_L[nu] += coeff * m;
    }
    for (const auto& [nu, m] : in_L) {
      if (m < 0)
        throw inconsistent_character("jantzen sum negative in irreducible basis at " + nu.str());
      if (m >= 2) return std::nullopt;  // factor could sit in several layers
      if (m == 1) series.factors[nu] += 1;
    }
    return series;
  }

  const RootSystem& rs_;
  Int p_;
  std::map<Weight, std::optional<CompSeries>> memo_;
  std::map<Weight, std::optional<Character>> chars_;
};

inline std::optional<CompSeries> simple_solve(const RootSystem& rs, const Weight& lambda, Int p) {
  WeylSolver solver(rs, p);
  return solver.solve(lambda);
}

inline std::optional<Character> irr_character(const RootSystem& rs, const Weight& lambda, Int p) {
  WeylSolver solver(rs, p);
  return solver.irr_character(lambda);
}

}  // namespace mfa1
