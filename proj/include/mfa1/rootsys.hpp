#pragma once

// Root-system data for the simple types with Bourbaki labelling: Cartan
// matrices, positive roots generated by reflection closure, the invariant
// form normalised so that long roots have squared length 2, Weyl-orbit
// machinery with canonical dominant representatives.
//
// Weights are integer vectors in the fundamental-weight basis.  Root
// coordinates (coefficients over the simple roots) are exact rationals
// whose denominators divide the Cartan determinant.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace mfa1 {

using Int = long;  // 64-bit on the supported platforms; gmpxx-compatible
using BigInt = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(Int num, Int den) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct invalid_rank : error {
  using error::error;
};
struct not_dominant : error {
  using error::error;
};
struct negative_remainder : error {
  using error::error;
};
struct character_unavailable : error {
  using error::error;
};
struct p_below_coxeter : error {
  using error::error;
};
struct separation_violated : error {
  using error::error;
};
struct inconsistent_character : error {
  using error::error;
};
struct ingest_error : error {
  using error::error;
};

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

inline char family_letter(Family f) { return static_cast<char>(f); }

inline Family family_from_letter(char c) {
  switch (c) {
    case 'A': case 'B': case 'C': case 'D': case 'E': case 'F': case 'G':
      return static_cast<Family>(c);
    default:
      throw error(std::string("unknown family letter '") + c + "'");
  }
}

struct GroupType {
  Family family;
  int rank;

  bool operator==(const GroupType&) const = default;

  std::string name() const { return std::string(1, family_letter(family)) + std::to_string(rank); }

  // Rank bounds: A l>=1, B l>=2, C l>=3, D l>=4, E 6..8, F 4, G 2.
  bool valid() const {
    switch (family) {
      case Family::A: return rank >= 1;
      case Family::B: return rank >= 2;
      case Family::C: return rank >= 3;
      case Family::D: return rank >= 4;
      case Family::E: return rank >= 6 && rank <= 8;
      case Family::F: return rank == 4;
      case Family::G: return rank == 2;
    }
    return false;
  }
};

// ---------------------------------------------------------------------------
// Weight: integer vector in the fundamental-weight basis.

struct Weight {
  std::vector<Int> c;

  Weight() = default;
  explicit Weight(std::vector<Int> v) : c(std::move(v)) {}
  Weight(std::initializer_list<Int> v) : c(v) {}

  static Weight zero(int rank) { return Weight(std::vector<Int>(rank, 0)); }

  int rank() const { return static_cast<int>(c.size()); }
  Int operator[](size_t i) const { return c[i]; }
  Int& operator[](size_t i) { return c[i]; }

  bool dominant() const {
    return std::all_of(c.begin(), c.end(), [](Int x) { return x >= 0; });
  }
  bool is_zero() const {
    return std::all_of(c.begin(), c.end(), [](Int x) { return x == 0; });
  }
  bool p_restricted(Int p) const {
    return std::all_of(c.begin(), c.end(), [p](Int x) { return 0 <= x && x < p; });
  }

  friend Weight operator+(const Weight& a, const Weight& b) {
    Weight r = a;
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] += b.c[i];
    return r;
  }
  friend Weight operator-(const Weight& a, const Weight& b) {
    Weight r = a;
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] -= b.c[i];
    return r;
  }
  friend Weight operator*(Int k, const Weight& a) {
    Weight r = a;
    for (auto& x : r.c) x *= k;
    return r;
  }
  friend bool operator==(const Weight& a, const Weight& b) { return a.c == b.c; }
  friend bool operator<(const Weight& a, const Weight& b) { return a.c < b.c; }

  std::string str() const {
    std::string s = "(";
    for (size_t i = 0; i < c.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(c[i]);
    }
    return s + ")";
  }
};

struct WeightHash {
  size_t operator()(const Weight& w) const {
    size_t h = 1469598103934665603ull;
    for (Int x : w.c) {
      h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

// ---------------------------------------------------------------------------
// RootSystem

struct PositiveRoot {
  std::vector<Int> rc;  // coordinates over the simple roots (all >= 0)
  Weight fw;            // the same root in fundamental-weight coordinates
  Int norm6 = 0;        // 6*(alpha,alpha)
  Int height = 0;       // sum of rc
};

class RootSystem {
 public:
  GroupType type{Family::A, 1};
  // cartan[i][j] = <alpha_j, alpha_i^vee>; column j holds the fundamental-weight
  // coordinates of alpha_j.
  std::vector<std::vector<Int>> cartan;
  std::vector<Int> d6;  // 3*(alpha_i,alpha_i): 6 long; 3 short (B/C/F); 2 short (G2)
  std::vector<PositiveRoot> positive;
  Weight rho;
  int coxeter = 0;
  std::vector<Int> fund_restriction;  // <omega_i, 2 rho^vee>: T_A-weight of omega_i
  Int cartan_det = 0;
  // adj(Cartan): cartan_adj * cartan == cartan_det * Id
  std::vector<std::vector<Int>> cartan_adj;
  Int weyl_group_order = 0;

  int rank() const { return type.rank; }

  bool adjacent(int i, int j) const { return i != j && cartan[i][j] != 0; }
  int node_degree(int i) const {
    int d = 0;
    for (int j = 0; j < rank(); ++j)
      if (adjacent(i, j)) ++d;
    return d;
  }
  bool end_node(int i) const { return node_degree(i) <= 1; }

  Weight simple_root_fw(int j) const {
    Weight w = Weight::zero(rank());
    for (int i = 0; i < rank(); ++i) w[i] = cartan[i][j];
    return w;
  }

  // s_i acting on fundamental-weight coordinates.
  Weight reflect(const Weight& w, int i) const {
    Weight r = w;
    Int m = w[static_cast<size_t>(i)];
    if (m == 0) return r;
    for (int j = 0; j < rank(); ++j) r[j] -= m * cartan[j][i];
    return r;
  }

  // 6*(w, alpha) for alpha given by integer root coordinates.
  Int form6_root(const Weight& w, const std::vector<Int>& rc) const {
    Int s = 0;
    for (int j = 0; j < rank(); ++j) s += rc[j] * d6[j] * w[j];
    return s;
  }

  // <w, alpha^vee> for a root alpha.
  Int pairing(const Weight& w, const PositiveRoot& alpha) const {
    Int num = 2 * form6_root(w, alpha.rc);
    if (num % alpha.norm6 != 0) throw error("non-integral coroot pairing");
    return num / alpha.norm6;
  }
};

namespace detail {

inline Int factorial_ll(int n) {
  Int r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

inline Int weyl_order_of(Family f, int n) {
  switch (f) {
    case Family::A: return factorial_ll(n + 1);
    case Family::B:
    case Family::C: return factorial_ll(n) << n;
    case Family::D: return factorial_ll(n) << (n - 1);
    case Family::G: return 12;
    case Family::F: return 1152;
    case Family::E:
      if (n == 6) return 51840;
      if (n == 7) return 2903040;
      return 696729600;
  }
  return 0;
}

inline size_t expected_positive_count(const GroupType& t) {
  int l = t.rank;
  switch (t.family) {
    case Family::A: return static_cast<size_t>(l) * (l + 1) / 2;
    case Family::B:
    case Family::C: return static_cast<size_t>(l) * l;
    case Family::D: return static_cast<size_t>(l) * (l - 1);
    case Family::G: return 6;
    case Family::F: return 24;
    case Family::E: return l == 6 ? 36 : (l == 7 ? 63 : 120);
  }
  return 0;
}

}  // namespace detail

inline RootSystem build(GroupType t) {
  if (!t.valid()) throw invalid_rank("rank out of bounds for type " + t.name());
  const int l = t.rank;
  RootSystem rs;
  rs.type = t;
  rs.d6.assign(l, 6);
  rs.cartan.assign(l, std::vector<Int>(l, 0));
  for (int i = 0; i < l; ++i) rs.cartan[i][i] = 2;

  std::vector<std::pair<int, int>> edges;
  switch (t.family) {
    case Family::A:
      for (int i = 0; i + 1 < l; ++i) edges.push_back({i, i + 1});
      break;
    case Family::B:
      rs.d6[l - 1] = 3;
      for (int i = 0; i + 1 < l; ++i) edges.push_back({i, i + 1});
      break;
    case Family::C:
      for (int i = 0; i + 1 < l; ++i) rs.d6[i] = 3;
      for (int i = 0; i + 1 < l; ++i) edges.push_back({i, i + 1});
      break;
    case Family::D:
      for (int i = 0; i + 1 < l - 1; ++i) edges.push_back({i, i + 1});
      edges.push_back({l - 3, l - 1});
      break;
    case Family::E:
      // Bourbaki: chain 1-3-4-5-6(-7)(-8), node 2 attached to node 4.
      edges.push_back({0, 2});
      for (int i = 2; i + 1 < l; ++i) edges.push_back({i, i + 1});
      edges.push_back({1, 3});
      break;
    case Family::F:
      rs.d6[2] = rs.d6[3] = 3;
      for (int i = 0; i + 1 < l; ++i) edges.push_back({i, i + 1});
      break;
    case Family::G:
      rs.d6[0] = 2;  // alpha_1 short
      edges.push_back({0, 1});
      break;
  }
  for (auto [i, j] : edges) {
    // 6*(alpha_i,alpha_j) is -6 when either endpoint is long, -3 for the
    // short-short edges inside B/C/F chains.  cartan[i][j] = <a_j, a_i^vee>
    // = 2(a_i,a_j)/(a_i,a_i) = f6/d6[i].
    Int f6 = (rs.d6[i] == 6 || rs.d6[j] == 6) ? -6 : -3;
    rs.cartan[i][j] = f6 / rs.d6[i];
    rs.cartan[j][i] = f6 / rs.d6[j];
  }

  // Sanity: the symmetrised matrix must be symmetric.
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j)
      if (rs.cartan[i][j] * rs.d6[i] != rs.cartan[j][i] * rs.d6[j])
        throw error("asymmetric invariant form in Cartan data");

  // Full root set by reflection closure from the simple roots.
  std::vector<std::vector<Int>> roots;
  std::unordered_set<Weight, WeightHash> seen;
  auto fw_of = [&](const std::vector<Int>& rc) {
    Weight w = Weight::zero(l);
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < l; ++j) w[i] += rs.cartan[i][j] * rc[j];
    return w;
  };
  std::vector<std::vector<Int>> frontier;
  for (int i = 0; i < l; ++i) {
    std::vector<Int> e(l, 0);
    e[i] = 1;
    frontier.push_back(e);
    roots.push_back(e);
    seen.insert(fw_of(e));
  }
  while (!frontier.empty()) {
    std::vector<std::vector<Int>> next;
    for (const auto& rc : frontier) {
      Weight w = fw_of(rc);
      for (int i = 0; i < l; ++i) {
        Int m = w[i];
        if (m == 0) continue;
        std::vector<Int> rc2 = rc;
        rc2[i] -= m;
        Weight w2 = rs.reflect(w, i);
        if (seen.insert(w2).second) {
          roots.push_back(rc2);
          next.push_back(rc2);
        }
      }
    }
    frontier = std::move(next);
  }

  for (auto& rc : roots) {
    bool pos = std::all_of(rc.begin(), rc.end(), [](Int x) { return x >= 0; });
    bool neg = std::all_of(rc.begin(), rc.end(), [](Int x) { return x <= 0; });
    if (!pos && !neg) throw error("root with mixed-sign coordinates");
    if (!pos) continue;
    PositiveRoot r;
    r.rc = rc;
    r.fw = fw_of(rc);
    r.height = std::accumulate(rc.begin(), rc.end(), Int{0});
    Int n6 = 0;  // 6*(alpha_i,alpha_j) = cartan[i][j]*d6[i]
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < l; ++j) n6 += rc[i] * rc[j] * rs.cartan[i][j] * rs.d6[i];
    r.norm6 = n6;
    rs.positive.push_back(std::move(r));
  }
  std::sort(rs.positive.begin(), rs.positive.end(),
            [](const PositiveRoot& a, const PositiveRoot& b) {
              if (a.height != b.height) return a.height < b.height;
              return a.rc < b.rc;
            });
  if (rs.positive.size() != detail::expected_positive_count(t))
    throw error("positive root count mismatch for " + t.name());

  rs.coxeter = static_cast<int>(2 * rs.positive.size() / static_cast<size_t>(l));
  rs.rho = Weight(std::vector<Int>(l, 1));
  rs.weyl_group_order = detail::weyl_order_of(t.family, l);
  rs.fund_restriction.assign(l, 0);
  for (int i = 0; i < l; ++i) {
    Weight wi = Weight::zero(l);
    wi[i] = 1;
    for (const auto& alpha : rs.positive) rs.fund_restriction[i] += rs.pairing(wi, alpha);
  }

  // Exact inverse data for root-coordinate conversions: adjugate over det.
  {
    int n = l;
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(2 * n, 0));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) m[i][j] = rs.cartan[i][j];
      m[i][n + i] = 1;
    }
    Rat det = 1;
    for (int col = 0; col < n; ++col) {
      int piv = -1;
      for (int r = col; r < n; ++r)
        if (m[r][col] != 0) {
          piv = r;
          break;
        }
      if (piv < 0) throw error("singular Cartan matrix");
      if (piv != col) {
        std::swap(m[piv], m[col]);
        det = -det;
      }
      det *= m[col][col];
      Rat inv = 1 / m[col][col];
      for (int j = col; j < 2 * n; ++j) m[col][j] *= inv;
      for (int r = 0; r < n; ++r) {
        if (r == col || m[r][col] == 0) continue;
        Rat f = m[r][col];
        for (int j = col; j < 2 * n; ++j) m[r][j] -= f * m[col][j];
      }
    }
    det.canonicalize();
    if (det.get_den() != 1) throw error("non-integral Cartan determinant");
    rs.cartan_det = static_cast<Int>(det.get_num().get_si());
    rs.cartan_adj.assign(n, std::vector<Int>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Rat a = m[i][n + j] * det;
        a.canonicalize();
        if (a.get_den() != 1) throw error("non-integral adjugate entry");
        rs.cartan_adj[i][j] = static_cast<Int>(a.get_num().get_si());
      }
  }
  return rs;
}

// ---------------------------------------------------------------------------
// Coordinate conversions and Weyl-orbit machinery.

// Unique rational vector a with mu = sum a_j alpha_j.
inline std::vector<Rat> weight_to_root_coords(const RootSystem& rs, const Weight& mu) {
  const int l = rs.rank();
  std::vector<Rat> a(l, 0);
  for (int j = 0; j < l; ++j) {
    Int num = 0;
    for (int i = 0; i < l; ++i) num += rs.cartan_adj[j][i] * mu[i];
    a[j] = Rat(num, rs.cartan_det);
    a[j].canonicalize();
  }
  return a;
}

// Integer root coordinates of lambda-mu; empty optional when the difference
// is not in the nonnegative integer span of the simple roots.
inline std::optional<std::vector<Int>> root_coords_diff(const RootSystem& rs, const Weight& lambda,
                                                        const Weight& mu) {
  auto a = weight_to_root_coords(rs, lambda - mu);
  std::vector<Int> k(rs.rank());
  for (int j = 0; j < rs.rank(); ++j) {
    if (a[j].get_den() != 1 || a[j] < 0) return std::nullopt;
    k[j] = static_cast<Int>(a[j].get_num().get_si());
  }
  return k;
}

inline bool lies_in_root_lattice(const RootSystem& rs, const Weight& mu) {
  for (const auto& a : weight_to_root_coords(rs, mu))
    if (a.get_den() != 1) return false;
  return true;
}

// Canonical reduction to the dominant chamber; second component is the parity
// of the reducing word (well defined on regular orbits).
inline std::pair<Weight, int> dominant_rep(const RootSystem& rs, const Weight& mu) {
  Weight w = mu;
  int parity = 0;
  for (;;) {
    int neg = -1;
    for (int i = 0; i < rs.rank(); ++i)
      if (w[i] < 0) {
        neg = i;
        break;
      }
    if (neg < 0) return {w, parity};
    w = rs.reflect(w, neg);
    parity ^= 1;
  }
}

// Visit every weight of the Weyl orbit of a dominant weight exactly once.
template <class F>
inline void for_each_orbit_weight(const RootSystem& rs, const Weight& mu, F&& visit) {
  if (!mu.dominant()) throw not_dominant("orbit requires a dominant weight");
  std::unordered_set<Weight, WeightHash> seen;
  std::vector<Weight> stack{mu};
  seen.insert(mu);
  while (!stack.empty()) {
    Weight w = std::move(stack.back());
    stack.pop_back();
    visit(static_cast<const Weight&>(w));
    for (int i = 0; i < rs.rank(); ++i) {
      if (w[i] <= 0) continue;  // walk downhill only; reaches the full orbit
      Weight w2 = rs.reflect(w, i);
      if (seen.insert(w2).second) stack.push_back(w2);
    }
  }
}

inline std::vector<Weight> orbit(const RootSystem& rs, const Weight& mu) {
  std::vector<Weight> out;
  for_each_orbit_weight(rs, mu, [&](const Weight& w) { out.push_back(w); });
  return out;
}

namespace detail {

// Weyl order of the subdiagram induced by `nodes` (each connected component
// classified by its shape; B and C have equal orders, so no distinction needed).
inline Int subdiagram_weyl_order(const RootSystem& rs, const std::vector<int>& nodes) {
  const int l = rs.rank();
  std::vector<char> in(l, 0);
  for (int i : nodes) in[i] = 1;
  std::vector<char> done(l, 0);
  Int total = 1;
  for (int start : nodes) {
    if (done[start]) continue;
    // collect the component
    std::vector<int> comp{start};
    done[start] = 1;
    for (size_t q = 0; q < comp.size(); ++q)
      for (int j = 0; j < l; ++j)
        if (in[j] && !done[j] && rs.adjacent(comp[q], j)) {
          done[j] = 1;
          comp.push_back(j);
        }
    int n = static_cast<int>(comp.size());
    bool triple = false, dbl = false;
    int branch = -1;
    std::vector<int> deg(n, 0);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (a == b || !rs.adjacent(comp[a], comp[b])) continue;
        ++deg[a];
        Int prod = rs.cartan[comp[a]][comp[b]] * rs.cartan[comp[b]][comp[a]];
        if (prod == 3) triple = true;
        if (prod == 2) dbl = true;
      }
    for (int a = 0; a < n; ++a)
      if (deg[a] >= 3) branch = a;
    if (triple) {
      total *= 12;
    } else if (dbl) {
      total *= factorial_ll(n) << n;  // B_n / C_n (F4 subdiagrams of this kind are chains)
    } else if (branch < 0) {
      total *= factorial_ll(n + 1);  // A_n
    } else {
      // arms of the branch node
      std::vector<int> arms;
      for (int b = 0; b < n; ++b) {
        if (b == branch || !rs.adjacent(comp[branch], comp[b])) continue;
        int len = 1, prev = branch, cur = b;
        for (;;) {
          int nxt = -1;
          for (int s = 0; s < n; ++s)
            if (s != prev && s != cur && rs.adjacent(comp[cur], comp[s])) nxt = s;
          if (nxt < 0) break;
          prev = cur;
          cur = nxt;
          ++len;
        }
        arms.push_back(len);
      }
      std::sort(arms.begin(), arms.end());
      if (arms.size() == 3 && arms[0] == 1 && arms[1] == 1) {
        total *= factorial_ll(n) << (n - 1);  // D_n
      } else if (arms.size() == 3 && arms[0] == 1 && arms[1] == 2) {
        total *= weyl_order_of(Family::E, n);  // E6/E7/E8
      } else {
        throw error("unrecognised subdiagram shape");
      }
    }
  }
  return total;
}

}  // namespace detail

inline Int orbit_size(const RootSystem& rs, const Weight& mu) {
  if (!mu.dominant()) throw not_dominant("orbit_size requires a dominant weight");
  std::vector<int> zero_nodes;
  for (int i = 0; i < rs.rank(); ++i)
    if (mu[i] == 0) zero_nodes.push_back(i);
  return rs.weyl_group_order / detail::subdiagram_weyl_order(rs, zero_nodes);
}

}  // namespace mfa1
