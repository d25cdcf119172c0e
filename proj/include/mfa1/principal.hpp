#pragma once

// Restriction to the principal rank-1 subgroup: the highest restricted
// weight r, pushforward of characters along "every simple root goes to 2",
// the n_d / m_d / s_d recurrence engine, computed multiplicity-freeness
// decisions, and replayable "not multiplicity-free" certificates.

#include "mfa1/a1mod.hpp"
#include "mfa1/jantzen.hpp"

#include <functional>
#include <set>

namespace mfa1 {
namespace principal {

using a1::A1Char;

// T_A-value of a weight: every simple root restricts to 2, so this is the
// pairing with the sum of all positive coroots.
inline Int restrict_weight(const RootSystem& rs, const Weight& w) {
  Int r = 0;
  for (int i = 0; i < rs.rank(); ++i) r += rs.fund_restriction[i] * w[i];
  return r;
}

// Pushforward of the fully orbit-expanded character.
inline A1Char project(const RootSystem& rs, const Character& ch) {
  A1Char out;
  ch.for_each_weight(
      [&](const Weight& w, const BigInt& m) { out.add(restrict_weight(rs, w), m); });
  return out;
}

enum class Source { WeylCharacter, IrreducibleCharacter };
enum class Exactness { Exact, LowerBound };

struct NSequence {
  Int r = 0;
  std::vector<BigInt> n;  // n[d] = multiplicity of the T_A-weight r-2d, 0 <= d <= r
  Exactness exact = Exactness::Exact;

  BigInt at(Int d) const {
    if (d < 0 || d > r) return 0;
    return n[static_cast<size_t>(d)];
  }
};

inline NSequence nsequence_from_a1(const A1Char& a, Int r, Exactness e) {
  NSequence ns;
  ns.r = r;
  ns.exact = e;
  ns.n.resize(static_cast<size_t>(r) + 1);
  for (Int d = 0; d <= r; ++d) ns.n[static_cast<size_t>(d)] = a.at(r - 2 * d);
  return ns;
}

// The character of L(lambda) when obtainable: ingested data, or the Jantzen
// solver (which covers irreducible Weyl modules outright).
inline std::optional<Character> irreducible_character_for(const RootSystem& rs,
                                                          const Weight& lambda, Int p,
                                                          WeylSolver* solver = nullptr,
                                                          const Character* ingested = nullptr) {
  if (ingested) return *ingested;
  if (solver) return solver->irr_character(lambda);
  WeylSolver local(rs, p);
  return local.irr_character(lambda);
}

inline NSequence n_sequence(const RootSystem& rs, const Weight& lambda, Int p, Source source,
                            WeylSolver* solver = nullptr, const Character* ingested = nullptr) {
  if (!lambda.dominant()) throw not_dominant("n_sequence: " + lambda.str());
  Int r = restrict_weight(rs, lambda);
  if (source == Source::WeylCharacter)
    return nsequence_from_a1(project(rs, freudenthal(rs, lambda)), r, Exactness::Exact);
  if (auto ch = irreducible_character_for(rs, lambda, p, solver, ingested))
    return nsequence_from_a1(project(rs, *ch), r, Exactness::Exact);
  // Fall back to counting each weight of the saturated set once; the
  // irreducible and Weyl modules share their weight SETS in scope, so this
  // is a pointwise lower bound for the true multiplicities.
  Character once;
  once.rs = &rs;
  for (const auto& mu : weight_set(rs, lambda)) once.mult[mu] = 1;
  return nsequence_from_a1(project(rs, once), r, Exactness::LowerBound);
}

// m_d = n_d - n_{d-1} + s_d - s_{d-1} with s_d counted by exact per-factor
// gap membership; valid for every d, no monotonicity shortcut.
inline std::map<Int, BigInt> recurrence_decompose(const NSequence& ns, Int p) {
  if (ns.exact != Exactness::Exact)
    throw error("recurrence_decompose requires an exact n-sequence");
  struct Chosen {
    Int t;
    BigInt m;
    a1::Gaps g;
  };
  std::vector<Chosen> chosen;
  std::map<Int, BigInt> factors;
  BigInt n_prev = 0, s_prev = 0;
  for (Int d = 0; 2 * d <= ns.r; ++d) {
    Int w = ns.r - 2 * d;
    BigInt s_d = 0;
    for (const auto& f : chosen)
      if (f.t > w && f.g.in_gap(w)) s_d += f.m;
    BigInt m_d = ns.at(d) - n_prev + s_d - s_prev;
    if (m_d < 0)
      throw inconsistent_character("recurrence_decompose: negative multiplicity at d=" +
                                   std::to_string(d));
    if (m_d > 0) {
      chosen.push_back({w, m_d, a1::gaps(w, p)});
      factors[w] = m_d;
    }
    n_prev = ns.at(d);
    s_prev = s_d;
  }
  return factors;
}

// ---------------------------------------------------------------------------
// Verdicts and certificates.

struct Certificate {
  enum class Kind { WeightCount, Recurrence, DimBound, DimBoundOmega, Tilting };
  Kind kind = Kind::WeightCount;
  Int r = 0, p = 0;

  // Tilting
  bool in_root_lattice = true;
  Int side_condition_bound = 0;  // binomial threshold for B/D outside the root lattice

  // DimBound / DimBoundOmega
  BigInt dim_lower = 0;
  bool dim_exact = false;
  Int bound = 0;

  // WeightCount / Recurrence
  Int d = -1;
  BigInt count = 0;  // offending n_d lower bound, resp. m_d
  std::vector<std::pair<Weight, Int>> weight_witnesses;
  std::vector<BigInt> n_prefix;
  std::map<Int, BigInt> factors_so_far;

  std::string kind_name() const {
    switch (kind) {
      case Kind::WeightCount: return "WeightCount";
      case Kind::Recurrence: return "Recurrence";
      case Kind::DimBound: return "DimBound";
      case Kind::DimBoundOmega: return "DimBoundOmega";
      case Kind::Tilting: return "Tilting";
    }
    return "?";
  }
};

enum class Status { MF, NotMF, Unknown };

struct Verdict {
  Status status = Status::Unknown;
  std::string branch;  // decision branch when produced by the classification
  std::optional<std::map<Int, BigInt>> factors;
  std::optional<Certificate> certificate;
};

// Exact weight-space dimension of L(lambda) at lambda-alpha_i-alpha_j for an
// adjacent two-node support; the congruence depends on the length ratio.
inline std::optional<Int> adjacent_pair_weight_dim(const RootSystem& rs, const Weight& lambda,
                                                   Int p) {
  std::vector<int> supp;
  for (int i = 0; i < rs.rank(); ++i)
    if (lambda[i] != 0) supp.push_back(i);
  if (supp.size() != 2) return std::nullopt;
  int i = supp[0], j = supp[1];
  if (!rs.adjacent(i, j)) return std::nullopt;
  if (rs.d6[i] < rs.d6[j]) std::swap(i, j);  // i is the longer root
  Int ci = lambda[i], cj = lambda[j];
  Int ratio = rs.d6[i] / rs.d6[j];
  Int q = 0;
  if (ratio == 1)
    q = ci + cj + 1;
  else if (ratio == 2)
    q = 2 * ci + cj + 2;
  else
    q = 3 * ci + cj + 3;
  return (q % p == 0) ? 1 : 2;
}

// Lower bound (exact where marked) for dim L(lambda): the Jantzen sum bounds
// the radical dimension from above even when the factor recursion fails.
inline std::pair<BigInt, bool> dim_lower_bound(const RootSystem& rs, const Weight& lambda, Int p,
                                               WeylSolver* solver = nullptr,
                                               const Character* ingested = nullptr) {
  if (auto ch = irreducible_character_for(rs, lambda, p, solver, ingested))
    return {ch->mass(), true};
  JsfSum js = jsf_sum(rs, lambda, p);
  BigInt rad = 0;
  for (const auto& [mu, c] : js.terms) rad += BigInt(c) * weyl_dim(rs, mu);
  BigInt lower = weyl_dim(rs, lambda) - rad;
  return {lower, false};
}

// Optional closed-form lower bounds for individual weight-space dimensions of
// L(lambda), supplied by the table layer; absent means "count the weight once".
using WeightDimOracle =
    std::function<std::optional<Int>(const RootSystem&, const Weight& lambda, const Weight& w, Int p)>;

// Multiplicity-freeness by direct decomposition of the restricted character.
inline std::optional<Verdict> mf_decide_computed(const RootSystem& rs, const Weight& lambda, Int p,
                                                 WeylSolver* solver = nullptr,
                                                 const Character* ingested = nullptr) {
  auto ch = irreducible_character_for(rs, lambda, p, solver, ingested);
  if (!ch) return std::nullopt;
  auto factors = a1::decompose(project(rs, *ch), p);
  Verdict v;
  v.factors = factors;
  v.status = Status::MF;
  for (const auto& [t, m] : factors)
    if (m > 1) v.status = Status::NotMF;
  return v;
}

// First applicable certificate in the fixed priority order
// Tilting, DimBound, DimBoundOmega, WeightCount, Recurrence.
inline std::optional<Certificate> certify_not_mf(const RootSystem& rs, const Weight& lambda, Int p,
                                                 WeylSolver* solver = nullptr,
                                                 const Character* ingested = nullptr,
                                                 const WeightDimOracle& oracle = {}) {
  if (p < rs.coxeter) throw p_below_coxeter("certify_not_mf requires p >= h");
  if (!lambda.dominant()) throw not_dominant("certify_not_mf: " + lambda.str());
  if (lambda.is_zero()) return std::nullopt;
  const Int r = restrict_weight(rs, lambda);

  std::optional<WeylSolver> local;
  if (!solver) {
    local.emplace(rs, p);
    solver = &*local;
  }

  // Tilting: irreducible Weyl module restricts to a tilting module with T(r)
  // as a summand; reducible indecomposable rank-1 tilting modules repeat.
  if (a1::tilting_reducible(r, p) && is_weyl_irreducible(rs, lambda, p)) {
    Certificate c;
    c.kind = Certificate::Kind::Tilting;
    c.r = r;
    c.p = p;
    c.in_root_lattice = lies_in_root_lattice(rs, lambda);
    bool ok = true;
    if (!c.in_root_lattice) {
      Int l = rs.rank();
      if (rs.type.family == Family::B) c.side_condition_bound = l * (l + 1) / 2;
      if (rs.type.family == Family::D) c.side_condition_bound = l * (l - 1) / 2;
      if (c.side_condition_bound != 0 && p <= c.side_condition_bound) ok = false;
    }
    if (ok) return c;
  }

  auto [dim_lb, dim_exact] = dim_lower_bound(rs, lambda, p, solver, ingested);

  // DimBound: a multiplicity-free restriction fits inside B(r).
  {
    Int B = a1::bound_B(r, p);
    if (dim_lb > B) {
      Certificate c;
      c.kind = Certificate::Kind::DimBound;
      c.r = r;
      c.p = p;
      c.dim_lower = dim_lb;
      c.dim_exact = dim_exact;
      c.bound = B;
      return c;
    }
  }

  // DimBoundOmega: single-support lambda with r not divisible by p loses the
  // factor (r-2) as well.
  {
    int nonzero = 0;
    for (int i = 0; i < rs.rank(); ++i)
      if (lambda[i] != 0) ++nonzero;
    if (nonzero == 1 && r % p != 0 && r >= 2) {
      Int B = a1::bound_B(r, p) - a1::dim_irr(r - 2, p);
      if (dim_lb > B) {
        Certificate c;
        c.kind = Certificate::Kind::DimBoundOmega;
        c.r = r;
        c.p = p;
        c.dim_lower = dim_lb;
        c.dim_exact = dim_exact;
        c.bound = B;
        return c;
      }
    }
  }

  // WeightCount: some T_A-level holds at least d+2 distinct weights (counted
  // with any certified weight-space dimensions), breaching n_d <= d+1.
  {
    std::vector<BigInt> count(static_cast<size_t>(r / 2) + 1, 0);
    for (const auto& mu : weight_set(rs, lambda)) {
      for_each_orbit_weight(rs, mu, [&](const Weight& w) {
        Int level2 = r - restrict_weight(rs, w);
        if (level2 % 2 != 0) throw error("odd level in weight projection");
        Int d = level2 / 2;
        if (d < 0 || 2 * d > r) return;
        Int lb = 1;
        if (oracle)
          if (auto v = oracle(rs, lambda, w, p)) lb = *v;
        count[static_cast<size_t>(d)] += lb;
      });
    }
    for (Int d = 0; 2 * d <= r; ++d) {
      if (count[static_cast<size_t>(d)] >= d + 2) {
        Certificate c;
        c.kind = Certificate::Kind::WeightCount;
        c.r = r;
        c.p = p;
        c.d = d;
        c.count = count[static_cast<size_t>(d)];
        // record the witnesses for this level
        for (const auto& mu : weight_set(rs, lambda)) {
          for_each_orbit_weight(rs, mu, [&](const Weight& w) {
            if (restrict_weight(rs, w) != r - 2 * d) return;
            Int lb = 1;
            if (oracle)
              if (auto v = oracle(rs, lambda, w, p)) lb = *v;
            c.weight_witnesses.push_back({w, lb});
          });
        }
        return c;
      }
    }
  }

  // Recurrence: with the exact restricted character, a factor multiplicity
  // m_d >= 2 read off the recurrence refutes multiplicity-freeness.
  if (auto ch = irreducible_character_for(rs, lambda, p, solver, ingested)) {
    NSequence ns = nsequence_from_a1(project(rs, *ch), r, Exactness::Exact);
    struct Chosen {
      Int t;
      BigInt m;
      a1::Gaps g;
    };
    std::vector<Chosen> chosen;
    BigInt n_prev = 0, s_prev = 0;
    for (Int d = 0; 2 * d <= r; ++d) {
      Int w = r - 2 * d;
      BigInt s_d = 0;
      for (const auto& f : chosen)
        if (f.t > w && f.g.in_gap(w)) s_d += f.m;
      BigInt m_d = ns.at(d) - n_prev + s_d - s_prev;
      if (m_d < 0) throw inconsistent_character("certify: negative recurrence multiplicity");
      if (m_d >= 2) {
        Certificate c;
        c.kind = Certificate::Kind::Recurrence;
        c.r = r;
        c.p = p;
        c.d = d;
        c.count = m_d;
        c.n_prefix.assign(ns.n.begin(), ns.n.begin() + static_cast<size_t>(d) + 1);
        for (const auto& f : chosen) c.factors_so_far[f.t] = f.m;
        return c;
      }
      if (m_d == 1) chosen.push_back({w, m_d, a1::gaps(w, p)});
      n_prev = ns.at(d);
      s_prev = s_d;
    }
  }
  return std::nullopt;
}

// Re-verify a certificate from its recorded witnesses.
inline bool verify_certificate(const RootSystem& rs, const Weight& lambda, Int p,
                               const Certificate& c, const WeightDimOracle& oracle = {}) {
  const Int r = restrict_weight(rs, lambda);
  if (c.r != r || c.p != p) return false;
  switch (c.kind) {
    case Certificate::Kind::Tilting: {
      if (!a1::tilting_reducible(r, p)) return false;
      if (!is_weyl_irreducible(rs, lambda, p)) return false;
      if (lies_in_root_lattice(rs, lambda) != c.in_root_lattice) return false;
      if (!c.in_root_lattice) {
        Int l = rs.rank();
        Int need = 0;
        if (rs.type.family == Family::B) need = l * (l + 1) / 2;
        if (rs.type.family == Family::D) need = l * (l - 1) / 2;
        if (need != 0 && p <= need) return false;
      }
      return true;
    }
    case Certificate::Kind::DimBound:
    case Certificate::Kind::DimBoundOmega: {
      auto [dim_lb, exact] = dim_lower_bound(rs, lambda, p);
      if (dim_lb < c.dim_lower) return false;  // recorded bound must be reproducible
      Int B = a1::bound_B(r, p);
      if (c.kind == Certificate::Kind::DimBoundOmega) {
        int nonzero = 0;
        for (int i = 0; i < rs.rank(); ++i)
          if (lambda[i] != 0) ++nonzero;
        if (nonzero != 1 || r % p == 0) return false;
        B -= a1::dim_irr(r - 2, p);
      }
      if (B != c.bound) return false;
      return c.dim_lower > BigInt(c.bound);
    }
    case Certificate::Kind::WeightCount: {
      if (c.d < 0) return false;
      // witnesses must be distinct weights of the module at the stated level
      std::set<std::vector<Int>> seen;
      BigInt total = 0;
      Character saturation;
      saturation.rs = &rs;
      for (const auto& mu : weight_set(rs, lambda)) saturation.mult[mu] = 1;
      for (const auto& [w, lb] : c.weight_witnesses) {
        if (!seen.insert(w.c).second) return false;
        if (restrict_weight(rs, w) != r - 2 * c.d) return false;
        if (saturation.at(w) != 1) return false;
        Int allowed = 1;
        if (oracle)
          if (auto v = oracle(rs, lambda, w, p)) allowed = *v;
        if (lb > allowed) return false;
        total += lb;
      }
      return total >= c.d + 2;
    }
    case Certificate::Kind::Recurrence: {
      if (c.d < 0 || static_cast<Int>(c.n_prefix.size()) != c.d + 1) return false;
      std::vector<std::pair<Int, BigInt>> chosen;
      BigInt n_prev = 0, s_prev = 0;
      for (Int d = 0; d <= c.d; ++d) {
        Int w = r - 2 * d;
        BigInt s_d = 0;
        for (const auto& [t, m] : chosen)
          if (t > w && a1::gaps(t, p).in_gap(w)) s_d += m;
        BigInt m_d = c.n_prefix[static_cast<size_t>(d)] - n_prev + s_d - s_prev;
        if (d == c.d) return m_d >= 2 && m_d == c.count;
        if (m_d < 0 || m_d > 1) return false;
        if (m_d == 1) chosen.push_back({w, m_d});
        n_prev = c.n_prefix[static_cast<size_t>(d)];
        s_prev = s_d;
      }
      return false;
    }
  }
  return false;
}

// Necessary support conditions for a multiplicity-free restriction; prunes
// classification sweeps.  Returns the failing clause (1..6) or 0.
struct FilterResult {
  bool pass = true;
  int clause = 0;
  std::string detail;
};

inline FilterResult support_filter(const RootSystem& rs, const Weight& lambda,
                                   std::optional<Int> p = std::nullopt) {
  FilterResult res;
  std::vector<int> supp;
  for (int i = 0; i < rs.rank(); ++i)
    if (lambda[i] != 0) supp.push_back(i);
  if (supp.size() <= 1) return res;
  if (supp.size() > 2) {
    res.pass = false;
    res.clause = 1;
    res.detail = "support on more than two nodes";
    return res;
  }
  int i = supp[0], j = supp[1];
  Int ci = lambda[i], cj = lambda[j];
  bool adj = rs.adjacent(i, j);
  auto fail = [&](int clause, std::string detail) {
    res.pass = false;
    res.clause = clause;
    res.detail = std::move(detail);
    return res;
  };
  if (!adj && (ci != 1 || cj != 1)) return fail(2, "non-adjacent support needs both coefficients 1");
  if (!adj && !(rs.end_node(i) && rs.end_node(j)))
    return fail(3, "non-adjacent support nodes must both be end-nodes");
  if (!rs.end_node(i) && !rs.end_node(j)) return fail(4, "neither support node is an end-node");
  if (ci > 1 && cj > 1) {
    if (rs.rank() != 2) return fail(5, "two coefficients above 1 need rank 2");
    if (p) {
      auto d = adjacent_pair_weight_dim(rs, lambda, *p);
      if (d && *d != 1) return fail(5, "weight space below the support pair is 2-dimensional");
    }
  }
  if (ci > 1 || cj > 1) {
    if (rs.rank() != 2) {
      if (!adj) return fail(6, "coefficient above 1 with non-adjacent support");
      if (p) {
        auto d = adjacent_pair_weight_dim(rs, lambda, *p);
        if (d && *d != 1) return fail(6, "weight space below the support pair is 2-dimensional");
      }
    }
  }
  return res;
}

}  // namespace principal
}  // namespace mfa1
