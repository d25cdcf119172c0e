#pragma once

// Exact characters of Weyl modules: the Weyl degree formula, Freudenthal
// weight multiplicities over the saturated dominant set, and tensor-product
// weight supports for the rank-2 oracles.  All multiplicities are exact
// big integers; Freudenthal divisions are asserted exact.

#include "mfa1/rootsys.hpp"

#include <map>
#include <unordered_map>

namespace mfa1 {

// W-invariant character stored on its dominant support.
struct Character {
  const RootSystem* rs = nullptr;
  std::map<Weight, BigInt> mult;

  // Multiplicity at an arbitrary weight (W-invariance).
  BigInt at(const Weight& w) const {
    Weight dom = dominant_rep(*rs, w).first;
    auto it = mult.find(dom);
    return it == mult.end() ? BigInt(0) : it->second;
  }

  bool contains(const Weight& w) const { return at(w) != 0; }

  // Total dimension: sum of mult * |orbit| over the dominant support.
  BigInt mass() const {
    BigInt total = 0;
    for (const auto& [w, m] : mult) total += m * BigInt(orbit_size(*rs, w));
    return total;
  }

  // Visit every weight of the expanded character with its multiplicity.
  template <class F>
  void for_each_weight(F&& visit) const {
    for (const auto& [dom, m] : mult)
      for_each_orbit_weight(*rs, dom, [&](const Weight& w) { visit(w, m); });
  }
};

inline BigInt weyl_dim(const RootSystem& rs, const Weight& lambda) {
  if (!lambda.dominant()) throw not_dominant("weyl_dim: " + lambda.str());
  Weight lr = lambda + rs.rho;
  BigInt num = 1, den = 1;
  for (const auto& alpha : rs.positive) {
    num *= BigInt(rs.pairing(lr, alpha));
    den *= BigInt(rs.pairing(rs.rho, alpha));
  }
  BigInt q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (r != 0) throw error("weyl_dim: non-exact division");
  return q;
}

// All dominant mu <= lambda with lambda-mu in the nonnegative integer span of
// the simple roots.  Generated by walking down the dominant cone along
// positive roots (dominance covers between dominant weights are single
// positive roots), which stays proportional to the answer.
inline std::vector<Weight> weight_set(const RootSystem& rs, const Weight& lambda) {
  if (!lambda.dominant()) throw not_dominant("weight_set: " + lambda.str());
  std::unordered_set<Weight, WeightHash> seen{lambda};
  std::vector<Weight> queue{lambda}, out;
  while (!queue.empty()) {
    Weight mu = std::move(queue.back());
    queue.pop_back();
    out.push_back(mu);
    for (const auto& alpha : rs.positive) {
      Weight nu = mu - alpha.fw;
      if (!nu.dominant()) continue;
      if (seen.insert(nu).second) queue.push_back(nu);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Exact weight multiplicities of the Weyl character of highest weight lambda.
inline Character freudenthal(const RootSystem& rs, const Weight& lambda) {
  if (!lambda.dominant()) throw not_dominant("freudenthal: " + lambda.str());
  std::vector<Weight> sat = weight_set(rs, lambda);

  // Order by increasing height of lambda-mu, so higher weights come first.
  auto height_of = [&](const Weight& mu) {
    auto k = root_coords_diff(rs, lambda, mu);
    if (!k) throw error("freudenthal: weight outside the root-coordinate cone");
    return std::accumulate(k->begin(), k->end(), Int{0});
  };
  std::vector<std::pair<Int, Weight>> order;
  order.reserve(sat.size());
  for (auto& mu : sat) order.push_back({height_of(mu), mu});
  std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second < b.second;
  });

  Character ch;
  ch.rs = &rs;
  Weight two_rho = 2 * rs.rho;
  for (const auto& [ht, mu] : order) {
    if (ht == 0) {
      ch.mult[mu] = 1;
      continue;
    }
    // 6*[(lambda+rho,lambda+rho)-(mu+rho,mu+rho)] = 6*(lambda+mu+2rho, lambda-mu)
    auto diff = root_coords_diff(rs, lambda, mu);
    Weight sum = lambda + mu + two_rho;
    Int den6 = 0;
    for (int j = 0; j < rs.rank(); ++j) den6 += (*diff)[j] * rs.d6[j] * sum[j];
    if (den6 <= 0) throw error("freudenthal: nonpositive Casimir difference");

    BigInt num = 0;  // 6 * sum over alpha>0, k>=1 of mult(mu+k*alpha)*(mu+k*alpha, alpha)
    for (const auto& alpha : rs.positive) {
      Weight w = mu;
      for (Int k = 1;; ++k) {
        w = w + alpha.fw;
        BigInt m = ch.at(w);
        if (m == 0) break;  // weights along a root string are unbroken
        num += m * BigInt(rs.form6_root(w, alpha.rc));
      }
    }
    BigInt q, r;
    BigInt dd(den6);
    num *= 2;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), dd.get_mpz_t());
    if (r != 0) throw error("freudenthal: non-exact division at " + mu.str());
    if (q <= 0) throw error("freudenthal: nonpositive multiplicity at " + mu.str());
    ch.mult[mu] = q;
  }
  return ch;
}

// Weight multiset of ch(lambda1)*ch(lambda2), re-collected on dominant
// representatives.  Intended for small-rank oracle use.
inline Character tensor_weights(const RootSystem& rs, const Weight& l1, const Weight& l2) {
  Character c1 = freudenthal(rs, l1), c2 = freudenthal(rs, l2);
  std::unordered_map<Weight, BigInt, WeightHash> full1, product;
  c1.for_each_weight([&](const Weight& w, const BigInt& m) { full1[w] += m; });
  c2.for_each_weight([&](const Weight& w2, const BigInt& m2) {
    for (const auto& [w1, m1] : full1) product[w1 + w2] += m1 * m2;
  });
  Character out;
  out.rs = &rs;
  for (const auto& [w, m] : product)
    if (w.dominant()) out.mult[w] = m;
  return out;
}

}  // namespace mfa1
