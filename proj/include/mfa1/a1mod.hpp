#pragma once

// Rank-1 modular representation data: irreducible characters via the
// Steinberg digit factorisation, their weight gaps, tilting reducibility,
// the dimension bounds B(r) and B_K(r), and exact character peeling into
// irreducible (or characteristic-zero) factors.

#include "mfa1/rootsys.hpp"

#include <limits>
#include <map>

namespace mfa1 {
namespace a1 {

// Little-endian base-p digits; [0] for t = 0.
inline std::vector<Int> p_digits(Int t, Int p) {
  if (t < 0) throw error("p_digits: negative weight");
  std::vector<Int> d;
  do {
    d.push_back(t % p);
    t /= p;
  } while (t > 0);
  return d;
}

// dim (t) = prod (a_i + 1) over the digits.
inline Int dim_irr(Int t, Int p) {
  Int dim = 1;
  for (Int a : p_digits(t, p)) dim *= a + 1;
  return dim;
}

// Symmetric character of a finite-dimensional rank-1 module.
struct A1Char {
  std::map<Int, BigInt> mult;

  BigInt at(Int w) const {
    auto it = mult.find(w);
    return it == mult.end() ? BigInt(0) : it->second;
  }

  bool empty() const {
    return std::all_of(mult.begin(), mult.end(), [](auto& kv) { return kv.second == 0; });
  }

  void add(Int w, const BigInt& m) {
    auto it = mult.emplace(w, 0).first;
    it->second += m;
    if (it->second == 0) mult.erase(it);
  }

  Int highest() const {
    Int h = 0;
    bool found = false;
    for (const auto& [w, m] : mult)
      if (m != 0 && (!found || w > h)) {
        h = w;
        found = true;
      }
    if (!found) throw error("highest() of the zero character");
    return h;
  }

  bool symmetric() const {
    for (const auto& [w, m] : mult)
      if (at(-w) != m) return false;
    return true;
  }

  bool single_parity() const {
    std::optional<Int> par;
    for (const auto& [w, m] : mult) {
      if (m == 0) continue;
      Int q = ((w % 2) + 2) % 2;
      if (!par)
        par = q;
      else if (*par != q)
        return false;
    }
    return true;
  }

  BigInt dimension() const {
    BigInt d = 0;
    for (const auto& [w, m] : mult) d += m;
    return d;
  }

  friend A1Char operator*(const A1Char& x, const A1Char& y) {
    A1Char z;
    for (const auto& [w1, m1] : x.mult)
      for (const auto& [w2, m2] : y.mult) z.add(w1 + w2, m1 * m2);
    return z;
  }

  A1Char twist(Int scale) const {
    A1Char z;
    for (const auto& [w, m] : mult) z.mult[w * scale] = m;
    return z;
  }
};

// Weights of (t): all [a_0-2i_0, ..., a_m-2i_m] over the digit choices,
// each with multiplicity one.
inline A1Char irr_char(Int t, Int p) {
  auto digits = p_digits(t, p);
  std::vector<Int> ws{0};
  Int pk = 1;
  for (Int a : digits) {
    std::vector<Int> next;
    next.reserve(ws.size() * (a + 1));
    for (Int i = 0; i <= a; ++i)
      for (Int w : ws) next.push_back(w + (a - 2 * i) * pk);
    ws = std::move(next);
    pk *= p;
  }
  A1Char ch;
  for (Int w : ws) {
    auto [it, fresh] = ch.mult.emplace(w, 1);
    if (!fresh) throw error("irr_char: repeated weight in digit expansion");
  }
  return ch;
}

// Open intervals of absent weights inside (t), computed from digit patterns.
struct Gaps {
  Int t = 0, p = 0;
  std::vector<std::pair<Int, Int>> intervals;  // open, disjoint, sorted

  bool in_gap(Int w) const {
    auto it = std::upper_bound(intervals.begin(), intervals.end(), std::make_pair(w, std::numeric_limits<Int>::max()));
    if (it == intervals.begin()) return false;
    --it;
    return it->first < w && w < it->second;
  }

  // A weight of (t) is congruent to t mod 2, bounded by |t|, and in no gap.
  bool is_weight(Int w) const {
    if ((t - w) % 2 != 0) return false;
    if (w < -t || w > t) return false;
    return !in_gap(w);
  }
};

inline Gaps gaps(Int t, Int p) {
  auto a = p_digits(t, p);
  const int m = static_cast<int>(a.size()) - 1;
  Gaps g;
  g.t = t;
  g.p = p;
  std::vector<Int> pk(m + 1, 1);
  for (int i = 1; i <= m; ++i) pk[i] = pk[i - 1] * p;

  // Interval endpoints: for a position j+1 with digit decremented past a
  // rollover, delta keeps the full prefix [a_0..a_j] and gamma negates it.
  std::vector<std::pair<Int, Int>> raw;
  Int prefix = 0;  // [a_0, ..., a_j]
  for (int j = -1; j + 1 <= m; ++j) {
    if (j >= 0) prefix += a[j] * pk[j];
    if (j + 1 > m) break;
    if (a[j + 1] == 0) continue;
    // suffix choices above position j+1
    std::vector<Int> suffixes{0};
    for (int k = j + 2; k <= m; ++k) {
      std::vector<Int> next;
      for (Int ik = 0; ik <= a[k]; ++ik)
        for (Int s : suffixes) next.push_back(s + (a[k] - 2 * ik) * pk[k]);
      suffixes = std::move(next);
    }
    for (Int i1 = 0; i1 < a[j + 1]; ++i1)
      for (Int s : suffixes) {
        Int delta = prefix + (a[j + 1] - 2 * i1 - 2) * pk[j + 1] + s;
        Int gamma = -prefix + (a[j + 1] - 2 * i1) * pk[j + 1] + s;
        raw.push_back({delta, gamma});
      }
  }
  // Interval endpoints are themselves weights, so distinct gaps can share an
  // endpoint but never overlap strictly; merging is needed only for repeated
  // or same-start nested intervals.  Intervals with no interior integer of
  // the weight parity (gamma - delta = 2) carry no information and are dropped.
  std::sort(raw.begin(), raw.end());
  for (auto& iv : raw) {
    if (iv.second - iv.first <= 2) continue;
    if (!g.intervals.empty() && iv.first < g.intervals.back().second) {
      g.intervals.back().second = std::max(g.intervals.back().second, iv.second);
    } else {
      g.intervals.push_back(iv);
    }
  }
  return g;
}

// T(r) is reducible exactly when r >= p and r is not congruent to -1 mod p.
inline bool tilting_reducible(Int r, Int p) { return r >= p && (r + 1) % p != 0; }

inline Int bound_B(Int r, Int p) {
  Int b = 0;
  for (Int k = r; k >= 0; k -= 2) b += dim_irr(k, p);
  return b;
}

inline Int bound_BK(Int r) {
  return r % 2 == 0 ? (r / 2 + 1) * (r / 2 + 1) : (r + 1) / 2 * ((r + 3) / 2);
}

// Peel a genuine module character into irreducible factors (highest weight ->
// multiplicity).  A negative remainder means the input was not a character.
inline std::map<Int, BigInt> decompose(const A1Char& ch, Int p) {
  if (!ch.symmetric() || !ch.single_parity())
    throw negative_remainder("decompose: input is not symmetric of a single parity");
  A1Char rem = ch;
  std::map<Int, BigInt> factors;
  while (!rem.empty()) {
    Int t = rem.highest();
    if (t < 0) throw negative_remainder("decompose: support of negative highest weight");
    BigInt m = rem.mult.at(t);
    if (m < 0) throw negative_remainder("decompose: negative multiplicity at " + std::to_string(t));
    for (const auto& [w, one] : irr_char(t, p).mult) {
      rem.add(w, -m * one);
      if (rem.at(w) < 0)
        throw negative_remainder("decompose: negative remainder at " + std::to_string(w));
    }
    factors[t] = m;
  }
  return factors;
}

// Characteristic-zero peeling: factors are full strings t, t-2, ..., -t.
inline std::map<Int, BigInt> char0_decompose(const A1Char& ch) {
  if (!ch.symmetric() || !ch.single_parity())
    throw negative_remainder("char0_decompose: input is not symmetric of a single parity");
  A1Char rem = ch;
  std::map<Int, BigInt> factors;
  while (!rem.empty()) {
    Int t = rem.highest();
    if (t < 0) throw negative_remainder("char0_decompose: negative highest weight");
    BigInt m = rem.mult.at(t);
    if (m < 0) throw negative_remainder("char0_decompose: negative multiplicity");
    for (Int w = t; w >= -t; w -= 2) {
      rem.add(w, -m);
      if (rem.at(w) < 0)
        throw negative_remainder("char0_decompose: negative remainder at " + std::to_string(w));
    }
    factors[t] = m;
  }
  return factors;
}

}  // namespace a1
}  // namespace mfa1
