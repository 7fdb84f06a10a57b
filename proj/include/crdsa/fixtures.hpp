#pragma once

// Built-in algebras: the chain CRDSA C_3 and its finite powers, the ring Z_3,
// Boolean cubes, and the degenerate fixtures used as negative examples.

#include <string>
#include <vector>

#include "crdsa/finalg.hpp"
#include "crdsa/ternary.hpp"

namespace crdsa {

// <join, meet, star, plus, 0, k, 1> of type <2,2,1,1,0,0,0>
inline Signature crdsa_signature() {
  return Signature({{"join", 2}, {"meet", 2}, {"star", 1}, {"plus", 1}, {"zero", 0}, {"core", 0}, {"one", 0}});
}

// Same without the core constant.
inline Signature dsa_signature() {
  return Signature({{"join", 2}, {"meet", 2}, {"star", 1}, {"plus", 1}, {"zero", 0}, {"one", 0}});
}

inline Signature boolean_signature() {
  return Signature({{"join", 2}, {"meet", 2}, {"compl", 1}, {"zero", 0}, {"one", 0}});
}

inline Signature lattice_signature() {
  return Signature({{"join", 2}, {"meet", 2}, {"zero", 0}, {"one", 0}});
}

inline Signature ring_signature() {
  return Signature({{"add", 2}, {"mul", 2}, {"neg", 1}, {"zero", 0}, {"one", 0}});
}

namespace detail {

inline std::uint64_t pow_u64(std::uint64_t base, std::size_t exp) {
  std::uint64_t v = 1;
  for (std::size_t i = 0; i < exp; ++i) v *= base;
  return v;
}

}  // namespace detail

// C_3^n with elements indexed by base-3 value of their word; all operations
// are computed digitwise from the chain tables.
inline FiniteAlgebra make_c3_power(std::size_t n) {
  if (n < 1) throw std::invalid_argument("power must be at least 1");
  const std::uint64_t m = detail::pow_u64(3, n);
  auto digitwise2 = [&](Trit (*f)(Trit, Trit)) {
    std::vector<int> table(m * m);
    for (std::uint64_t x = 0; x < m; ++x) {
      auto vx = TernaryVector::from_index(n, x);
      for (std::uint64_t y = 0; y < m; ++y) {
        auto vy = TernaryVector::from_index(n, y);
        std::vector<Trit> digits(n);
        for (std::size_t i = 0; i < n; ++i) digits[i] = f(vx.digit(i), vy.digit(i));
        table[x * m + y] = static_cast<int>(TernaryVector(std::move(digits)).index());
      }
    }
    return table;
  };
  auto digitwise1 = [&](Trit (*f)(Trit)) {
    std::vector<int> table(m);
    for (std::uint64_t x = 0; x < m; ++x) {
      auto vx = TernaryVector::from_index(n, x);
      std::vector<Trit> digits(n);
      for (std::size_t i = 0; i < n; ++i) digits[i] = f(vx.digit(i));
      table[x] = static_cast<int>(TernaryVector(std::move(digits)).index());
    }
    return table;
  };
  std::vector<std::vector<int>> tables;
  tables.push_back(digitwise2(tri_join));
  tables.push_back(digitwise2(tri_meet));
  tables.push_back(digitwise1(tri_star));
  tables.push_back(digitwise1(tri_plus));
  tables.push_back({static_cast<int>(TernaryVector::bottom(n).index())});
  tables.push_back({static_cast<int>(TernaryVector::core_element(n).index())});
  tables.push_back({static_cast<int>(TernaryVector::top(n).index())});
  return FiniteAlgebra(static_cast<int>(m), crdsa_signature(), std::move(tables));
}

inline FiniteAlgebra make_c3() { return make_c3_power(1); }

inline std::vector<std::string> c3_power_names(std::size_t n) {
  const std::uint64_t m = detail::pow_u64(3, n);
  std::vector<std::string> names;
  names.reserve(m);
  for (std::uint64_t x = 0; x < m; ++x) names.push_back(TernaryVector::from_index(n, x).word());
  return names;
}

// C_3 with the core constant dropped from the signature: {0,1} becomes a
// proper subuniverse, so primality condition (1) fails.
inline FiniteAlgebra make_c3_nocore() {
  std::vector<std::vector<int>> tables;
  auto c3 = make_c3();
  tables.push_back(c3.table(0));
  tables.push_back(c3.table(1));
  tables.push_back(c3.table(2));
  tables.push_back(c3.table(3));
  tables.push_back({0});
  tables.push_back({2});
  return FiniteAlgebra(3, dsa_signature(), std::move(tables));
}

// The ring of integers modulo 3.
inline FiniteAlgebra make_z3() {
  std::vector<int> add(9), mul(9), neg(3);
  for (int x = 0; x < 3; ++x) {
    neg[static_cast<std::size_t>(x)] = (3 - x) % 3;
    for (int y = 0; y < 3; ++y) {
      add[static_cast<std::size_t>(x * 3 + y)] = (x + y) % 3;
      mul[static_cast<std::size_t>(x * 3 + y)] = (x * y) % 3;
    }
  }
  return FiniteAlgebra(3, ring_signature(), {add, mul, neg, {0}, {1}});
}

// The Boolean cube 2^n with elements as bitmasks, in the Boolean signature.
inline FiniteAlgebra make_c2_power_boolean(std::size_t n) {
  if (n < 1) throw std::invalid_argument("power must be at least 1");
  const std::uint64_t m    = detail::pow_u64(2, n);
  const int           full = static_cast<int>(m - 1);
  std::vector<int> join(m * m), meet(m * m), compl_(m);
  for (std::uint64_t x = 0; x < m; ++x) {
    compl_[x] = full & ~static_cast<int>(x);
    for (std::uint64_t y = 0; y < m; ++y) {
      join[x * m + y] = static_cast<int>(x | y);
      meet[x * m + y] = static_cast<int>(x & y);
    }
  }
  return FiniteAlgebra(static_cast<int>(m), boolean_signature(), {join, meet, compl_, {0}, {full}});
}

// 2^n forced into the CRDSA signature with * = + = complement. No element is
// simultaneously dense and dually dense, so the core slot (bottom, by
// convention) never validates; this is the standard negative fixture.
inline FiniteAlgebra make_c2_power(std::size_t n) {
  auto b = make_c2_power_boolean(n);
  const int m = b.carrier_size();
  std::vector<std::vector<int>> tables;
  tables.push_back(b.table(0));
  tables.push_back(b.table(1));
  tables.push_back(b.table(2));
  tables.push_back(b.table(2));
  tables.push_back({0});
  tables.push_back({0});
  tables.push_back({m - 1});
  return FiniteAlgebra(m, crdsa_signature(), std::move(tables));
}

// The two-element chain as a bounded lattice.
inline FiniteAlgebra make_c2_lattice() {
  return FiniteAlgebra(2, lattice_signature(), {{0, 1, 1, 1}, {0, 0, 0, 1}, {0}, {1}});
}

// The four-element chain with its double p-algebra operations. It is a double
// Stone algebra but not regular: the two middle elements share * and +.
// The core slot is set to 1 by convention; K = {1,2} so validation fails.
inline FiniteAlgebra make_c4_double_p() {
  const int m = 4;
  std::vector<int> join(16), meet(16);
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) {
      join[static_cast<std::size_t>(x * m + y)] = std::max(x, y);
      meet[static_cast<std::size_t>(x * m + y)] = std::min(x, y);
    }
  }
  std::vector<int> star = {3, 0, 0, 0};
  std::vector<int> plus = {3, 3, 3, 0};
  return FiniteAlgebra(m, crdsa_signature(), {join, meet, star, plus, {0}, {1}, {3}});
}

// Witness terms used by the primality checks.
inline Term c3_malcev_term() {
  return Term::parse(
      "(join (meet (join v0 v2) (star v1))"
      " (meet (join v0 (plus (plus v2)))"
      " (meet (join (meet v0 v2) (plus v1)) (star (star v2)))))");
}

inline Term z3_malcev_term() { return Term::parse("(add (add v0 (neg v1)) v2)"); }

inline Term z3_majority_term() {
  return Term::parse("(add v2 (neg (mul (add v2 (neg v1)) (mul (add v2 (neg v0)) (add v2 (neg v0))))))");
}

}  // namespace crdsa
