#pragma once

// Finite bitopological spaces and the prime-filter spectrum construction:
// pairwise Stone property checkers, the six-condition test for a CRDSA base,
// the boundary-condition morphism checker and the Psi round trip.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "crdsa/finalg.hpp"
#include "crdsa/fixtures.hpp"
#include "crdsa/structure.hpp"

namespace crdsa {

// ---------------------------------------------------------------------------
// Topologies on a ground set of at most 16 points, sets as bitmasks.

struct FiniteTopology {
  int ground = 0;
  std::vector<std::uint64_t> opens;  // sorted ascending

  std::uint64_t full() const { return ground == 0 ? 0 : (1ull << ground) - 1; }

  bool is_open(std::uint64_t u) const { return std::binary_search(opens.begin(), opens.end(), u); }
  bool is_closed(std::uint64_t u) const { return is_open(full() & ~u); }
  bool is_clopen(std::uint64_t u) const { return is_open(u) && is_closed(u); }

  // least closed superset
  std::uint64_t closure(std::uint64_t u) const {
    std::uint64_t out = full();
    for (std::uint64_t o : opens) {
      const std::uint64_t closed = full() & ~o;
      if ((u & ~closed) == 0) out &= closed;
    }
    return out;
  }

  // greatest open subset
  std::uint64_t interior(std::uint64_t u) const {
    std::uint64_t out = 0;
    for (std::uint64_t o : opens) {
      if ((o & ~u) == 0) out |= o;
    }
    return out;
  }

  std::uint64_t boundary(std::uint64_t u) const { return closure(u) & ~interior(u); }

  std::vector<std::uint64_t> closed_sets() const {
    std::vector<std::uint64_t> out;
    out.reserve(opens.size());
    for (std::uint64_t o : opens) out.push_back(full() & ~o);
    std::sort(out.begin(), out.end());
    return out;
  }

  // contains empty and full and is closed under union and intersection
  bool is_topology() const {
    if (!is_open(0) || !is_open(full())) return false;
    for (std::uint64_t a : opens) {
      for (std::uint64_t b : opens) {
        if (!is_open(a | b) || !is_open(a & b)) return false;
      }
    }
    return true;
  }
};

// Smallest topology containing the family: close under intersections (empty
// intersection is X), then under unions (empty union is the empty set).
inline FiniteTopology generate_topology(int ground, const std::vector<std::uint64_t>& family) {
  if (ground < 1 || ground > 16) throw std::invalid_argument("ground size out of range: 1 <= n <= 16");
  const std::uint64_t full = (1ull << ground) - 1;
  std::set<std::uint64_t> ints = {full};
  for (std::uint64_t u : family) {
    if ((u & ~full) != 0) throw std::invalid_argument("base set outside the ground set");
    ints.insert(u);
  }
  while (true) {
    std::set<std::uint64_t> next = ints;
    for (std::uint64_t a : ints) {
      for (std::uint64_t b : ints) next.insert(a & b);
    }
    if (next.size() == ints.size()) break;
    ints.swap(next);
  }
  std::set<std::uint64_t> opens = {0};
  opens.insert(ints.begin(), ints.end());
  while (true) {
    std::set<std::uint64_t> next = opens;
    for (std::uint64_t a : opens) {
      for (std::uint64_t b : opens) next.insert(a | b);
    }
    if (next.size() == opens.size()) break;
    opens.swap(next);
  }
  return FiniteTopology{ground, {opens.begin(), opens.end()}};
}

struct BitopSpace {
  int ground = 0;
  std::vector<std::uint64_t> base1, base2;
  FiniteTopology t1, t2;

  static BitopSpace from_bases(int ground, std::vector<std::uint64_t> b1, std::vector<std::uint64_t> b2) {
    BitopSpace s;
    s.ground = ground;
    std::sort(b1.begin(), b1.end());
    b1.erase(std::unique(b1.begin(), b1.end()), b1.end());
    std::sort(b2.begin(), b2.end());
    b2.erase(std::unique(b2.begin(), b2.end()), b2.end());
    s.t1 = generate_topology(ground, b1);
    s.t2 = generate_topology(ground, b2);
    s.base1 = std::move(b1);
    s.base2 = std::move(b2);
    return s;
  }

  std::uint64_t full() const { return t1.full(); }

  // opens of one topology closed in the other; the canonical bases of a
  // pairwise zero-dimensional space
  std::vector<std::uint64_t> canonical_base1() const {
    std::vector<std::uint64_t> out;
    for (std::uint64_t u : t1.opens) {
      if (t2.is_closed(u)) out.push_back(u);
    }
    return out;
  }
  std::vector<std::uint64_t> canonical_base2() const {
    std::vector<std::uint64_t> out;
    for (std::uint64_t u : t2.opens) {
      if (t1.is_closed(u)) out.push_back(u);
    }
    return out;
  }
};

enum class RegionKind { closure, interior, boundary };

inline std::uint64_t region_operator(const BitopSpace& s, int which, RegionKind kind, std::uint64_t u) {
  if (which != 1 && which != 2) throw std::invalid_argument("topology selector must be 1 or 2");
  if ((u & ~s.full()) != 0) throw std::invalid_argument("subset outside the ground set");
  const FiniteTopology& t = which == 1 ? s.t1 : s.t2;
  switch (kind) {
    case RegionKind::closure: return t.closure(u);
    case RegionKind::interior: return t.interior(u);
    case RegionKind::boundary: return t.boundary(u);
  }
  throw std::invalid_argument("unknown region kind");
}

// ---------------------------------------------------------------------------
// Prime filters and spectra.

struct PrimeFilter {
  std::vector<int> members;  // sorted lattice elements
  friend bool operator==(const PrimeFilter&, const PrimeFilter&) = default;
};

namespace detail {

struct LatticeView {
  const FiniteAlgebra* a;
  int join_sym, meet_sym, bottom, top;
  int join(int x, int y) const {
    const int args[2] = {x, y};
    return a->apply(static_cast<std::size_t>(join_sym), args);
  }
  int meet(int x, int y) const {
    const int args[2] = {x, y};
    return a->apply(static_cast<std::size_t>(meet_sym), args);
  }
  bool leq(int x, int y) const { return join(x, y) == y; }
};

// Requires the algebra to carry a bounded distributive lattice in its join
// and meet tables; bounds are located by scanning.
inline LatticeView lattice_view(const FiniteAlgebra& a) {
  const int js = a.signature().index_of("join");
  const int ms = a.signature().index_of("meet");
  if (js < 0 || ms < 0 || a.signature().arity(static_cast<std::size_t>(js)) != 2 ||
      a.signature().arity(static_cast<std::size_t>(ms)) != 2) {
    throw std::invalid_argument("not a lattice: join/meet operations missing");
  }
  LatticeView v{&a, js, ms, -1, -1};
  const int m = a.carrier_size();
  for (int x = 0; x < m; ++x) {
    bool bottom = true, top = true;
    for (int y = 0; y < m; ++y) {
      bottom = bottom && v.join(x, y) == y;
      top    = top && v.meet(x, y) == y;
    }
    if (bottom) v.bottom = x;
    if (top) v.top = x;
  }
  if (v.bottom < 0 || v.top < 0) throw std::invalid_argument("not a bounded lattice");
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) {
      if (v.join(x, y) != v.join(y, x) || v.meet(x, y) != v.meet(y, x) ||
          v.join(x, v.meet(x, y)) != x || v.meet(x, v.join(x, y)) != x) {
        throw std::invalid_argument("not a lattice: join/meet axioms fail");
      }
      for (int z = 0; z < m; ++z) {
        if (v.meet(x, v.join(y, z)) != v.join(v.meet(x, y), v.meet(x, z))) {
          throw std::invalid_argument("not a distributive lattice");
        }
      }
    }
  }
  return v;
}

// 128-bit member mask for deterministic ordering of filters (carrier <= 81).
inline std::pair<std::uint64_t, std::uint64_t> member_mask(const std::vector<int>& members) {
  std::pair<std::uint64_t, std::uint64_t> mask{0, 0};
  for (int x : members) {
    if (x < 64) {
      mask.second |= 1ull << x;
    } else {
      mask.first |= 1ull << (x - 64);
    }
  }
  return mask;  // compared (hi, lo)
}

}  // namespace detail

inline bool is_prime_filter(const FiniteAlgebra& lattice, const std::vector<int>& members) {
  auto v = detail::lattice_view(lattice);
  const int m = lattice.carrier_size();
  if (members.empty() || static_cast<int>(members.size()) == m) return false;
  std::vector<bool> in(static_cast<std::size_t>(m), false);
  for (int x : members) {
    if (x < 0 || x >= m) return false;
    in[static_cast<std::size_t>(x)] = true;
  }
  for (int x : members) {
    for (int y = 0; y < m; ++y) {
      if (v.leq(x, y) && !in[static_cast<std::size_t>(y)]) return false;  // upward closure
    }
    for (int y : members) {
      if (!in[static_cast<std::size_t>(v.meet(x, y))]) return false;  // meet closure
    }
  }
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) {
      if (in[static_cast<std::size_t>(v.join(x, y))] && !in[static_cast<std::size_t>(x)] &&
          !in[static_cast<std::size_t>(y)]) {
        return false;  // primeness
      }
    }
  }
  return true;
}

// All prime filters, ordered by their member bitmask. Brute force over all
// subsets up to carrier 16; above that each join-irreducible j contributes
// its up-set, which is verified prime. The two constructions are compared on
// the overlap region in the test suite.
inline std::vector<PrimeFilter> prime_filters(const FiniteAlgebra& lattice) {
  if (static_cast<std::size_t>(lattice.carrier_size()) > carrier_cap()) {
    throw std::invalid_argument("carrier cap exceeded (" + std::to_string(carrier_cap()) + ")");
  }
  auto v = detail::lattice_view(lattice);
  const int m = lattice.carrier_size();
  std::vector<PrimeFilter> out;
  if (m <= 16) {
    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
      std::vector<int> members;
      for (int x = 0; x < m; ++x) {
        if (mask & (1u << x)) members.push_back(x);
      }
      if (is_prime_filter(lattice, members)) out.push_back({std::move(members)});
    }
  } else {
    for (int j = 0; j < m; ++j) {
      if (j == v.bottom) continue;
      bool irreducible = true;
      for (int x = 0; x < m && irreducible; ++x) {
        for (int y = 0; y < m; ++y) {
          if (x != j && y != j && v.join(x, y) == j) {
            irreducible = false;
            break;
          }
        }
      }
      if (!irreducible) continue;
      std::vector<int> members;
      for (int x = 0; x < m; ++x) {
        if (v.leq(j, x)) members.push_back(x);
      }
      if (!is_prime_filter(lattice, members)) {
        throw std::domain_error("up-set of a join-irreducible failed the prime filter check");
      }
      out.push_back({std::move(members)});
    }
  }
  std::sort(out.begin(), out.end(), [](const PrimeFilter& a, const PrimeFilter& b) {
    return detail::member_mask(a.members) < detail::member_mask(b.members);
  });
  return out;
}

// The spectrum of a bounded distributive lattice: points are prime filters,
// the two bases are the images of Phi+ and Phi-.
struct SpectrumResult {
  std::vector<PrimeFilter> points;
  BitopSpace space;
  std::vector<std::uint64_t> phi_plus;   // per lattice element
  std::vector<std::uint64_t> phi_minus;  // complements of phi_plus
};

inline SpectrumResult spectrum(const FiniteAlgebra& lattice) {
  SpectrumResult out;
  out.points = prime_filters(lattice);
  const int n = static_cast<int>(out.points.size());
  if (n == 0) throw std::invalid_argument("spectrum requires a nontrivial lattice");
  if (n > 16) throw std::invalid_argument("spectrum ground set too large");
  const std::uint64_t full = (1ull << n) - 1;
  out.phi_plus.assign(static_cast<std::size_t>(lattice.carrier_size()), 0);
  for (int p = 0; p < n; ++p) {
    for (int a : out.points[static_cast<std::size_t>(p)].members) {
      out.phi_plus[static_cast<std::size_t>(a)] |= 1ull << p;
    }
  }
  out.phi_minus.reserve(out.phi_plus.size());
  for (std::uint64_t u : out.phi_plus) out.phi_minus.push_back(full & ~u);
  std::vector<std::uint64_t> base1 = out.phi_plus;
  std::sort(base1.begin(), base1.end());
  base1.erase(std::unique(base1.begin(), base1.end()), base1.end());
  std::vector<std::uint64_t> base2 = out.phi_minus;
  std::sort(base2.begin(), base2.end());
  base2.erase(std::unique(base2.begin(), base2.end()), base2.end());
  out.space = BitopSpace::from_bases(n, std::move(base1), std::move(base2));
  return out;
}

// ---------------------------------------------------------------------------
// Pairwise separation, zero-dimensionality and compactness.

namespace detail {

// Extracts a pointwise finite subcover of K from the family, if the family
// covers K at all. On a finite ground set every cover is itself finite, so
// compactness amounts to this extraction succeeding whenever a cover exists.
inline bool compact_in(const std::vector<std::uint64_t>& family, std::uint64_t k) {
  std::uint64_t reachable = 0;
  for (std::uint64_t u : family) reachable |= u;
  if ((k & ~reachable) != 0) return true;  // no cover of K exists, vacuously compact
  std::uint64_t covered = 0;
  std::vector<std::uint64_t> witness;
  for (int p = 0; p < 64; ++p) {
    const std::uint64_t bit = 1ull << p;
    if ((k & bit) == 0 || (covered & bit) != 0) continue;
    for (std::uint64_t u : family) {
      if (u & bit) {
        witness.push_back(u);
        covered |= u;
        break;
      }
    }
  }
  return (k & ~covered) == 0;
}

inline bool is_t0(const FiniteTopology& t) {
  for (int x = 0; x < t.ground; ++x) {
    for (int y = x + 1; y < t.ground; ++y) {
      bool separated = false;
      for (std::uint64_t u : t.opens) {
        const bool hx = (u >> x) & 1, hy = (u >> y) & 1;
        if (hx != hy) {
          separated = true;
          break;
        }
      }
      if (!separated) return false;
    }
  }
  return true;
}

inline bool covers_as_basis(const FiniteTopology& t, const std::vector<std::uint64_t>& basis) {
  for (std::uint64_t u : t.opens) {
    std::uint64_t built = 0;
    for (std::uint64_t b : basis) {
      if ((b & ~u) == 0) built |= b;
    }
    if (built != u) return false;
  }
  return true;
}

}  // namespace detail

struct PairwiseReport {
  bool hausdorff = false;
  bool zero_dimensional = false;
  bool compact_subcover = false;
  bool compact_closed_sets = false;  // delta1 in sigma2 and delta2 in sigma1
  bool stone = false;
  bool t0_1 = false;
  bool t0_2 = false;
  bool separated_by_disjoint_pair = false;  // disjoint U,V from t1 u t2
  bool zerodim_equivalences_hold = true;    // meaningful when zero_dimensional
};

inline PairwiseReport pairwise_properties(const BitopSpace& s) {
  PairwiseReport r;
  const int n = s.ground;

  auto separated = [&](const FiniteTopology& ta, const FiniteTopology& tb, int x, int y) {
    for (std::uint64_t u : ta.opens) {
      if (((u >> x) & 1) == 0) continue;
      for (std::uint64_t v : tb.opens) {
        if ((u & v) == 0 && ((v >> y) & 1)) return true;
      }
    }
    return false;
  };
  r.hausdorff = true;
  for (int x = 0; x < n && r.hausdorff; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      if (!separated(s.t1, s.t2, x, y) && !separated(s.t2, s.t1, x, y)) {
        r.hausdorff = false;
        break;
      }
    }
  }

  r.zero_dimensional =
      detail::covers_as_basis(s.t1, s.canonical_base1()) && detail::covers_as_basis(s.t2, s.canonical_base2());

  std::vector<std::uint64_t> both = s.t1.opens;
  both.insert(both.end(), s.t2.opens.begin(), s.t2.opens.end());
  r.compact_subcover = detail::compact_in(both, s.full());

  r.compact_closed_sets = true;
  for (std::uint64_t c : s.t1.closed_sets()) {
    r.compact_closed_sets = r.compact_closed_sets && detail::compact_in(s.t2.opens, c);
  }
  for (std::uint64_t c : s.t2.closed_sets()) {
    r.compact_closed_sets = r.compact_closed_sets && detail::compact_in(s.t1.opens, c);
  }

  r.t0_1 = detail::is_t0(s.t1);
  r.t0_2 = detail::is_t0(s.t2);

  r.separated_by_disjoint_pair = true;
  for (int x = 0; x < n && r.separated_by_disjoint_pair; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      bool found = false;
      for (std::uint64_t u : both) {
        if (((u >> x) & 1) == 0) continue;
        for (std::uint64_t v : both) {
          if ((u & v) == 0 && ((v >> y) & 1)) {
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (!found) {
        r.separated_by_disjoint_pair = false;
        break;
      }
    }
  }

  if (r.zero_dimensional) {
    r.zerodim_equivalences_hold = (r.t0_1 == r.t0_2) && (r.t0_1 == r.hausdorff) &&
                                  (r.t0_1 == r.separated_by_disjoint_pair);
  }

  r.stone = r.hausdorff && r.zero_dimensional && r.compact_subcover && r.compact_closed_sets;
  return r;
}

// ---------------------------------------------------------------------------
// The six-condition CRDSA base checker.

struct BaseConditionResult {
  bool pass = true;
  std::vector<std::uint64_t> witness;
};

struct BaseCheckReport {
  bool zero_dimensional = false;  // precondition; conditions are evaluated only when true
  std::array<BaseConditionResult, 6> conditions;
  bool all_pass = false;
  std::vector<std::uint64_t> base_elements;  // canonical B1, sorted
  std::vector<std::uint64_t> core_sets;      // k(B1)
  std::optional<FiniteAlgebra> base_algebra;
  std::optional<CrdsaValidation> algebra_validation;
  bool closure_in_base = false;  // u** = Cl1(u) and lies in B1
  bool pcdpc_ok = false;         // dual pseudocomplements mirror to pseudocomplements in B2

  int index_of(std::uint64_t set) const {
    auto it = std::lower_bound(base_elements.begin(), base_elements.end(), set);
    if (it == base_elements.end() || *it != set) return -1;
    return static_cast<int>(it - base_elements.begin());
  }
};

inline BaseCheckReport check_crdsa_base(const BitopSpace& s) {
  BaseCheckReport r;
  auto props = pairwise_properties(s);
  r.zero_dimensional = props.zero_dimensional;
  if (!r.zero_dimensional) return r;

  const std::uint64_t full = s.full();
  std::vector<std::uint64_t> b1 = s.canonical_base1();
  std::vector<std::uint64_t> b2 = s.canonical_base2();
  std::sort(b1.begin(), b1.end());
  std::sort(b2.begin(), b2.end());
  r.base_elements = b1;

  auto in_b1 = [&](std::uint64_t u) { return std::binary_search(b1.begin(), b1.end(), u); };
  auto in_b2 = [&](std::uint64_t u) { return std::binary_search(b2.begin(), b2.end(), u); };

  // (1) Int1 of every member of B2 lies in B1 (gives u* = Cl1(u)^c in B1)
  for (std::uint64_t v : b2) {
    if (!in_b1(s.t1.interior(v))) {
      r.conditions[0] = {false, {v}};
      break;
    }
  }
  // (2) Int2 of every member of B1 lies in B2 (gives u+ = Cl2(u^c) in B1)
  for (std::uint64_t u : b1) {
    if (!in_b2(s.t2.interior(u))) {
      r.conditions[1] = {false, {u}};
      break;
    }
  }
  // (3) u* = Cl1(u)^c is clopen in t1
  for (std::uint64_t u : b1) {
    if (!s.t1.is_clopen(full & ~s.t1.closure(u))) {
      r.conditions[2] = {false, {u}};
      break;
    }
  }
  // (4) Int2(u) = Cl2(u^c)^c is clopen in t2
  for (std::uint64_t u : b1) {
    if (!s.t2.is_clopen(s.t2.interior(u))) {
      r.conditions[3] = {false, {u}};
      break;
    }
  }
  // (5) Cl1 and Int2 are jointly injective on B1
  for (std::size_t i = 0; i < b1.size() && r.conditions[4].pass; ++i) {
    for (std::size_t j = i + 1; j < b1.size(); ++j) {
      if (s.t1.closure(b1[i]) == s.t1.closure(b1[j]) && s.t2.interior(b1[i]) == s.t2.interior(b1[j])) {
        r.conditions[4] = {false, {b1[i], b1[j]}};
        break;
      }
    }
  }
  // (6) k(B1) = {u | Bd1(u) = u^c and Bd2(u^c) = u} is nonempty
  for (std::uint64_t u : b1) {
    if (s.t1.boundary(u) == (full & ~u) && s.t2.boundary(full & ~u) == u) {
      r.core_sets.push_back(u);
    }
  }
  if (r.core_sets.empty()) r.conditions[5] = {false, {}};

  r.all_pass = true;
  for (const auto& c : r.conditions) r.all_pass = r.all_pass && c.pass;
  if (!r.all_pass) return r;

  // materialize (B1, u, n, 0, X) with u* = Cl1(u)^c and u+ = Cl2(u^c)
  const int m = static_cast<int>(b1.size());
  auto index_of = [&](std::uint64_t set) {
    auto it = std::lower_bound(b1.begin(), b1.end(), set);
    if (it == b1.end() || *it != set) throw std::domain_error("base is not closed under an induced operation");
    return static_cast<int>(it - b1.begin());
  };
  std::vector<int> join(static_cast<std::size_t>(m * m)), meet(static_cast<std::size_t>(m * m)),
      star(static_cast<std::size_t>(m)), plus(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    star[static_cast<std::size_t>(i)] = index_of(full & ~s.t1.closure(b1[static_cast<std::size_t>(i)]));
    plus[static_cast<std::size_t>(i)] = index_of(s.t2.closure(full & ~b1[static_cast<std::size_t>(i)]));
    for (int j = 0; j < m; ++j) {
      join[static_cast<std::size_t>(i * m + j)] = index_of(b1[static_cast<std::size_t>(i)] | b1[static_cast<std::size_t>(j)]);
      meet[static_cast<std::size_t>(i * m + j)] = index_of(b1[static_cast<std::size_t>(i)] & b1[static_cast<std::size_t>(j)]);
    }
  }
  r.base_algebra.emplace(m, crdsa_signature(),
                         std::vector<std::vector<int>>{join, meet, star, plus,
                                                       {index_of(0)},
                                                       {index_of(r.core_sets.front())},
                                                       {index_of(full)}});
  r.algebra_validation = validate_crdsa(*r.base_algebra);

  // u** = Cl1(u), and it lies in B1
  r.closure_in_base = true;
  for (std::uint64_t u : b1) {
    const std::uint64_t ustar  = full & ~s.t1.closure(u);
    const std::uint64_t ustar2 = full & ~s.t1.closure(ustar);
    r.closure_in_base = r.closure_in_base && ustar2 == s.t1.closure(u) && in_b1(ustar2);
  }

  // least cover of u in B1 is the complement of the greatest member of B2
  // disjoint from u^c, and equals Cl2(u^c)
  r.pcdpc_ok = true;
  for (std::uint64_t u : b1) {
    std::uint64_t least_cover = full;
    bool have = false;
    for (std::uint64_t w : b1) {
      if ((u | w) == full) {
        least_cover = have ? (least_cover & w) : w;
        have = true;
      }
    }
    std::uint64_t greatest_disjoint = 0;
    for (std::uint64_t z : b2) {
      if (((full & ~u) & z) == 0) greatest_disjoint |= z;
    }
    r.pcdpc_ok = r.pcdpc_ok && have && in_b1(least_cover) && ((u | least_cover) == full) &&
                 in_b2(greatest_disjoint) && greatest_disjoint == (full & ~least_cover) &&
                 least_cover == s.t2.closure(full & ~u);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Phi+ as a CRDSA isomorphism onto the base algebra of the spectrum.

struct PhiIsoReport {
  bool pass = false;
  std::string detail;  // first violation, empty on pass
};

inline PhiIsoReport phi_plus_iso_check(const FiniteAlgebra& a) {
  detail::require_signature(a, crdsa_signature(), "CRDSA");
  auto spec = spectrum(a);
  auto base = check_crdsa_base(spec.space);
  if (!base.all_pass) return {false, "spectrum base fails the six-condition check"};
  const FiniteAlgebra& b = *base.base_algebra;

  const int m = a.carrier_size();
  std::vector<int> phi(static_cast<std::size_t>(m), -1);
  std::vector<bool> hit(base.base_elements.size(), false);
  for (int x = 0; x < m; ++x) {
    int idx = base.index_of(spec.phi_plus[static_cast<std::size_t>(x)]);
    if (idx < 0) return {false, "Phi+ image is not a base element"};
    if (hit[static_cast<std::size_t>(idx)]) return {false, "Phi+ is not injective"};
    hit[static_cast<std::size_t>(idx)] = true;
    phi[static_cast<std::size_t>(x)] = idx;
  }
  if (static_cast<std::size_t>(m) != base.base_elements.size()) return {false, "Phi+ is not onto the base"};

  for (int x = 0; x < m; ++x) {
    if (b.op1("star", phi[static_cast<std::size_t>(x)]) != phi[static_cast<std::size_t>(a.op1("star", x))]) {
      return {false, "Phi+ does not preserve * at element " + std::to_string(x)};
    }
    if (b.op1("plus", phi[static_cast<std::size_t>(x)]) != phi[static_cast<std::size_t>(a.op1("plus", x))]) {
      return {false, "Phi+ does not preserve + at element " + std::to_string(x)};
    }
    for (int y = 0; y < m; ++y) {
      if (b.op2("join", phi[static_cast<std::size_t>(x)], phi[static_cast<std::size_t>(y)]) !=
          phi[static_cast<std::size_t>(a.op2("join", x, y))]) {
        return {false, "Phi+ does not preserve join"};
      }
      if (b.op2("meet", phi[static_cast<std::size_t>(x)], phi[static_cast<std::size_t>(y)]) !=
          phi[static_cast<std::size_t>(a.op2("meet", x, y))]) {
        return {false, "Phi+ does not preserve meet"};
      }
    }
  }
  for (const char* c : {"zero", "core", "one"}) {
    if (b.constant(c) != phi[static_cast<std::size_t>(a.constant(c))]) {
      return {false, std::string("Phi+ does not preserve the ") + c + " constant"};
    }
  }
  return {true, ""};
}

// ---------------------------------------------------------------------------
// Morphism checking (boundary conditions vs direct preservation).

enum class MorphismStatus { base_not_crdsa, not_bicontinuous, evaluated };

struct MorphismReport {
  MorphismStatus status = MorphismStatus::base_not_crdsa;
  bool bd1_ok = false;
  bool bd2_ok = false;
  std::string failing_condition;
  bool direct_ok = false;
  std::string direct_detail;
  bool routes_agree = false;
  bool verdict = false;
};

namespace detail {

inline std::string set_str(std::uint64_t u, int ground) {
  std::string out = "{";
  bool first = true;
  for (int p = 0; p < ground; ++p) {
    if ((u >> p) & 1) {
      if (!first) out += ",";
      out += std::to_string(p);
      first = false;
    }
  }
  return out + "}";
}

}  // namespace detail

// f maps the ground set of `from` into the ground set of `to`; the checked
// algebra map is the preimage map from `to`'s base to `from`'s base.
inline MorphismReport check_morphism(const std::vector<int>& f, const BitopSpace& from, const BitopSpace& to) {
  if (static_cast<int>(f.size()) != from.ground) throw std::invalid_argument("map is not total on the ground set");
  for (int y : f) {
    if (y < 0 || y >= to.ground) throw std::invalid_argument("map image outside the target ground set");
  }

  MorphismReport r;
  auto base_from = check_crdsa_base(from);
  auto base_to   = check_crdsa_base(to);
  if (!base_from.all_pass || !base_to.all_pass) {
    r.status = MorphismStatus::base_not_crdsa;
    return r;
  }

  auto preimage = [&](std::uint64_t u) {
    std::uint64_t out = 0;
    for (int x = 0; x < from.ground; ++x) {
      if ((u >> f[static_cast<std::size_t>(x)]) & 1) out |= 1ull << x;
    }
    return out;
  };

  for (std::uint64_t u : to.t1.opens) {
    if (!from.t1.is_open(preimage(u))) {
      r.status = MorphismStatus::not_bicontinuous;
      return r;
    }
  }
  for (std::uint64_t u : to.t2.opens) {
    if (!from.t2.is_open(preimage(u))) {
      r.status = MorphismStatus::not_bicontinuous;
      return r;
    }
  }

  r.status = MorphismStatus::evaluated;
  const std::uint64_t to_full = to.full();
  r.bd1_ok = r.bd2_ok = true;
  for (std::uint64_t u : base_to.base_elements) {
    const std::uint64_t uc = to_full & ~u;
    if (r.bd1_ok && (preimage(to.t1.boundary(u)) & ~from.t1.closure(preimage(u))) != 0) {
      r.bd1_ok = false;
      r.failing_condition = "f^{-1}(Bd1(" + detail::set_str(u, to.ground) + ")) is not inside Cl1(f^{-1}(" +
                            detail::set_str(u, to.ground) + "))";
    }
    if (r.bd2_ok && (preimage(to.t2.boundary(uc)) & ~from.t2.closure(preimage(uc))) != 0) {
      r.bd2_ok = false;
      if (r.failing_condition.empty()) {
        r.failing_condition = "f^{-1}(Bd2(" + detail::set_str(uc, to.ground) + ")) is not inside Cl2(f^{-1}(" +
                              detail::set_str(uc, to.ground) + "))";
      }
    }
  }
  r.verdict = r.bd1_ok && r.bd2_ok;

  // independent route: does the preimage map preserve *, + and the core
  // between the two base algebras?
  const FiniteAlgebra& alg_to   = *base_to.base_algebra;
  const FiniteAlgebra& alg_from = *base_from.base_algebra;
  r.direct_ok = true;
  for (int i = 0; i < alg_to.carrier_size() && r.direct_ok; ++i) {
    const std::uint64_t u = base_to.base_elements[static_cast<std::size_t>(i)];
    const int gu = base_from.index_of(preimage(u));
    if (gu < 0) {
      r.direct_ok = false;
      r.direct_detail = "preimage of a base element is not a base element";
      break;
    }
    const int gstar = base_from.index_of(preimage(base_to.base_elements[static_cast<std::size_t>(alg_to.op1("star", i))]));
    const int gplus = base_from.index_of(preimage(base_to.base_elements[static_cast<std::size_t>(alg_to.op1("plus", i))]));
    if (gstar != alg_from.op1("star", gu)) {
      r.direct_ok = false;
      r.direct_detail = "preimage map does not preserve *";
    } else if (gplus != alg_from.op1("plus", gu)) {
      r.direct_ok = false;
      r.direct_detail = "preimage map does not preserve +";
    }
  }
  if (r.direct_ok) {
    const std::uint64_t core_to = base_to.base_elements[static_cast<std::size_t>(alg_to.constant("core"))];
    if (base_from.index_of(preimage(core_to)) != alg_from.constant("core")) {
      r.direct_ok = false;
      r.direct_detail = "preimage map does not preserve the core";
    }
  }
  r.routes_agree = r.verdict == r.direct_ok;
  return r;
}

// ---------------------------------------------------------------------------
// Psi: X -> X**, x |-> {u in B1 | x in u}.

struct PsiReport {
  bool bijective = false;
  bool bicontinuous = false;
  bool phi_inverse_identity = false;
  bool base_crdsa = false;
  std::optional<bool> morphism_ok;    // when both bases are CRDSA
  std::optional<bool> composite_iso;  // when the input is in the CRDSA signature
  std::vector<int> psi;

  bool pass() const {
    return bijective && bicontinuous && phi_inverse_identity && morphism_ok.value_or(true) &&
           composite_iso.value_or(true);
  }
};

// The bounded lattice of the canonical base B1 of a space, as an algebra.
inline FiniteAlgebra base_lattice(const std::vector<std::uint64_t>& base_sets, std::uint64_t full) {
  const int m = static_cast<int>(base_sets.size());
  auto index_of = [&](std::uint64_t set) {
    auto it = std::lower_bound(base_sets.begin(), base_sets.end(), set);
    if (it == base_sets.end() || *it != set) throw std::domain_error("base family is not a bounded sublattice");
    return static_cast<int>(it - base_sets.begin());
  };
  std::vector<int> join(static_cast<std::size_t>(m * m)), meet(static_cast<std::size_t>(m * m));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      join[static_cast<std::size_t>(i * m + j)] = index_of(base_sets[static_cast<std::size_t>(i)] | base_sets[static_cast<std::size_t>(j)]);
      meet[static_cast<std::size_t>(i * m + j)] = index_of(base_sets[static_cast<std::size_t>(i)] & base_sets[static_cast<std::size_t>(j)]);
    }
  }
  return FiniteAlgebra(m, lattice_signature(), {join, meet, {index_of(0)}, {index_of(full)}});
}

inline PsiReport psi_roundtrip(const FiniteAlgebra& lattice) {
  PsiReport r;
  auto spec_x = spectrum(lattice);
  const BitopSpace& x = spec_x.space;

  std::vector<std::uint64_t> b1 = x.canonical_base1();
  std::sort(b1.begin(), b1.end());
  auto l1 = base_lattice(b1, x.full());

  auto spec_x2 = spectrum(l1);
  const BitopSpace& x2 = spec_x2.space;

  // pointwise Psi
  r.psi.assign(static_cast<std::size_t>(x.ground), -1);
  bool total = true;
  for (int p = 0; p < x.ground; ++p) {
    std::vector<int> members;
    for (std::size_t u = 0; u < b1.size(); ++u) {
      if ((b1[u] >> p) & 1) members.push_back(static_cast<int>(u));
    }
    int found = -1;
    for (std::size_t q = 0; q < spec_x2.points.size(); ++q) {
      if (spec_x2.points[q].members == members) {
        found = static_cast<int>(q);
        break;
      }
    }
    if (found < 0) total = false;
    r.psi[static_cast<std::size_t>(p)] = found;
  }
  r.bijective = total && x.ground == x2.ground;
  if (r.bijective) {
    std::vector<bool> hit(static_cast<std::size_t>(x2.ground), false);
    for (int q : r.psi) {
      if (hit[static_cast<std::size_t>(q)]) r.bijective = false;
      hit[static_cast<std::size_t>(q)] = true;
    }
  }
  if (!r.bijective) return r;

  std::vector<int> psi_inv(static_cast<std::size_t>(x2.ground));
  for (int p = 0; p < x.ground; ++p) psi_inv[static_cast<std::size_t>(r.psi[static_cast<std::size_t>(p)])] = p;

  auto bicontinuous = [](const std::vector<int>& f, const BitopSpace& from, const BitopSpace& to) {
    auto preimage = [&](std::uint64_t u) {
      std::uint64_t out = 0;
      for (int p = 0; p < from.ground; ++p) {
        if ((u >> f[static_cast<std::size_t>(p)]) & 1) out |= 1ull << p;
      }
      return out;
    };
    for (std::uint64_t u : to.t1.opens) {
      if (!from.t1.is_open(preimage(u))) return false;
    }
    for (std::uint64_t u : to.t2.opens) {
      if (!from.t2.is_open(preimage(u))) return false;
    }
    return true;
  };
  r.bicontinuous = bicontinuous(r.psi, x, x2) && bicontinuous(psi_inv, x2, x);

  // Psi^{-1}(Phi+(u)) = u for every base element u
  r.phi_inverse_identity = true;
  for (std::size_t u = 0; u < b1.size(); ++u) {
    std::uint64_t pulled = 0;
    for (int p = 0; p < x.ground; ++p) {
      if ((spec_x2.phi_plus[u] >> r.psi[static_cast<std::size_t>(p)]) & 1) pulled |= 1ull << p;
    }
    r.phi_inverse_identity = r.phi_inverse_identity && pulled == b1[u];
  }

  auto base_x  = check_crdsa_base(x);
  auto base_x2 = check_crdsa_base(x2);
  r.base_crdsa = base_x.all_pass && base_x2.all_pass;
  if (r.base_crdsa) {
    r.morphism_ok = check_morphism(r.psi, x, x2).verdict;
    if (lattice.signature() == crdsa_signature()) {
      r.composite_iso = is_isomorphic(lattice, *base_x2.base_algebra).isomorphic;
    }
  }
  return r;
}

}  // namespace crdsa
