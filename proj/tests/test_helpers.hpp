#pragma once

// Brute-force reference implementations used as independent oracles. These
// deliberately avoid the library's search strategies: plain scans over all
// subsets / maps / permutations, feasible only at oracle scale.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "crdsa/finalg.hpp"

namespace crdsa::testing {

inline bool oracle_is_hom(const FiniteAlgebra& a, const FiniteAlgebra& b, const std::vector<int>& h) {
  // constants first: cheapest rejection
  for (std::size_t s = 0; s < a.signature().size(); ++s) {
    if (a.signature().arity(s) == 0 && h[static_cast<std::size_t>(a.table(s)[0])] != b.table(s)[0]) return false;
  }
  std::vector<int> tuple, mapped;
  for (std::size_t s = 0; s < a.signature().size(); ++s) {
    const int arity = a.signature().arity(s);
    if (arity == 0) continue;
    tuple.assign(static_cast<std::size_t>(arity), 0);
    mapped.resize(static_cast<std::size_t>(arity));
    while (true) {
      for (int i = 0; i < arity; ++i) mapped[static_cast<std::size_t>(i)] = h[static_cast<std::size_t>(tuple[static_cast<std::size_t>(i)])];
      if (h[static_cast<std::size_t>(a.apply(s, tuple))] != b.apply(s, mapped)) return false;
      int p = arity - 1;
      while (p >= 0 && ++tuple[static_cast<std::size_t>(p)] == a.carrier_size()) {
        tuple[static_cast<std::size_t>(p)] = 0;
        --p;
      }
      if (p < 0) break;
    }
  }
  return true;
}

// Every subuniverse by scanning all 2^m subsets.
inline std::vector<std::vector<int>> oracle_subuniverses(const FiniteAlgebra& a) {
  const int m = a.carrier_size();
  if (m > 16) throw std::invalid_argument("oracle limited to carrier <= 16");
  std::vector<std::vector<int>> out;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    std::vector<int> subset;
    for (int x = 0; x < m; ++x) {
      if (mask & (1u << x)) subset.push_back(x);
    }
    bool closed = true;
    for (std::size_t s = 0; s < a.signature().size() && closed; ++s) {
      const int arity = a.signature().arity(s);
      if (arity == 0) {
        closed = (mask & (1u << a.table(s)[0])) != 0;
        continue;
      }
      if (subset.empty()) continue;  // vacuously closed
      std::vector<int> tuple(static_cast<std::size_t>(arity), 0);
      std::vector<std::size_t> idx(static_cast<std::size_t>(arity), 0);
      while (closed) {
        for (int i = 0; i < arity; ++i) tuple[static_cast<std::size_t>(i)] = subset[idx[static_cast<std::size_t>(i)]];
        if (!(mask & (1u << a.apply(s, tuple)))) closed = false;
        int p = arity - 1;
        while (p >= 0 && ++idx[static_cast<std::size_t>(p)] == subset.size()) {
          idx[static_cast<std::size_t>(p)] = 0;
          --p;
        }
        if (p < 0) break;
      }
    }
    if (closed) out.push_back(std::move(subset));
  }
  std::sort(out.begin(), out.end(), [](const std::vector<int>& x, const std::vector<int>& y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });
  return out;
}

// Compatibility by the literal definition: componentwise-related argument
// tuples must have related images.
inline bool oracle_is_congruence(const FiniteAlgebra& a, const PartitionRelation& theta) {
  const int m = a.carrier_size();
  std::vector<int> u, v;
  for (std::size_t s = 0; s < a.signature().size(); ++s) {
    const int arity = a.signature().arity(s);
    if (arity == 0) continue;
    u.assign(static_cast<std::size_t>(arity), 0);
    while (true) {
      v.assign(static_cast<std::size_t>(arity), 0);
      while (true) {
        bool related = true;
        for (int i = 0; i < arity && related; ++i) {
          related = theta.related(u[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(i)]);
        }
        if (related && !theta.related(a.apply(s, u), a.apply(s, v))) return false;
        int p = arity - 1;
        while (p >= 0 && ++v[static_cast<std::size_t>(p)] == m) {
          v[static_cast<std::size_t>(p)] = 0;
          --p;
        }
        if (p < 0) break;
      }
      int p = arity - 1;
      while (p >= 0 && ++u[static_cast<std::size_t>(p)] == m) {
        u[static_cast<std::size_t>(p)] = 0;
        --p;
      }
      if (p < 0) break;
    }
  }
  return true;
}

// All homomorphisms by scanning every map |B|^|A|.
inline std::vector<std::vector<int>> oracle_homomorphisms(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  const int m = a.carrier_size();
  const int k = b.carrier_size();
  double raw = 1;
  for (int i = 0; i < m; ++i) raw *= k;
  if (raw > 2e7) throw std::invalid_argument("oracle map space too large");
  std::vector<std::vector<int>> out;
  std::vector<int> h(static_cast<std::size_t>(m), 0);
  while (true) {
    if (oracle_is_hom(a, b, h)) out.push_back(h);
    int p = m - 1;
    while (p >= 0 && ++h[static_cast<std::size_t>(p)] == k) {
      h[static_cast<std::size_t>(p)] = 0;
      --p;
    }
    if (p < 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

// All automorphisms by scanning every permutation.
inline std::vector<std::vector<int>> oracle_automorphisms(const FiniteAlgebra& a) {
  const int m = a.carrier_size();
  if (m > 9) throw std::invalid_argument("oracle limited to carrier <= 9");
  std::vector<int> perm(static_cast<std::size_t>(m));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    if (oracle_is_hom(a, a, perm)) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(out.begin(), out.end());
  return out;
}

// Carrier relabeling along a permutation; the result is isomorphic by
// construction.
inline FiniteAlgebra permute_algebra(const FiniteAlgebra& a, const std::vector<int>& perm) {
  const int m = a.carrier_size();
  std::vector<std::vector<int>> tables;
  std::vector<int> tuple;
  for (std::size_t s = 0; s < a.signature().size(); ++s) {
    const int arity = a.signature().arity(s);
    std::size_t size = 1;
    for (int i = 0; i < arity; ++i) size *= static_cast<std::size_t>(m);
    std::vector<int> table(size);
    tuple.assign(static_cast<std::size_t>(arity), 0);
    std::vector<int> inverse(static_cast<std::size_t>(m));
    for (int x = 0; x < m; ++x) inverse[static_cast<std::size_t>(perm[static_cast<std::size_t>(x)])] = x;
    for (std::size_t flat = 0; flat < size; ++flat) {
      std::size_t rest = flat;
      for (int i = arity - 1; i >= 0; --i) {
        tuple[static_cast<std::size_t>(i)] = inverse[rest % static_cast<std::size_t>(m)];
        rest /= static_cast<std::size_t>(m);
      }
      table[flat] = perm[static_cast<std::size_t>(a.apply(s, tuple))];
    }
    tables.push_back(std::move(table));
  }
  return FiniteAlgebra(m, a.signature(), std::move(tables));
}

}  // namespace crdsa::testing
