#pragma once

// CRDSA structure theory: axiom validation, center and core, the Boolean
// center embedding <B>, subalgebra enumeration of C_3^n by Boolean
// subuniverses, subdirect representation into C_3 and the decomposition
// identities.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "crdsa/finalg.hpp"
#include "crdsa/fixtures.hpp"
#include "crdsa/ternary.hpp"

namespace crdsa {

struct AxiomCheck {
  std::string name;
  bool pass = true;
  std::vector<int> witness;  // offending elements, empty when passing
};

struct CrdsaValidation {
  std::vector<AxiomCheck> checks;
  bool pass = true;

  const AxiomCheck* find(const std::string& name) const {
    for (const auto& c : checks) {
      if (c.name == name) return &c;
    }
    return nullptr;
  }
};

namespace detail {

inline void require_signature(const FiniteAlgebra& a, const Signature& expected, const char* kind) {
  if (!(a.signature() == expected)) {
    throw std::invalid_argument(std::string("signature mismatch: expected the ") + kind + " signature");
  }
}

// Shared lattice axioms for the join/meet fragment with bounds.
inline void check_lattice_axioms(const FiniteAlgebra& a, int zero, int one, std::vector<AxiomCheck>& out) {
  const int m = a.carrier_size();
  AxiomCheck lattice{"bounded-lattice", true, {}};
  AxiomCheck distributive{"distributive", true, {}};
  for (int x = 0; x < m && lattice.pass; ++x) {
    if (a.op2("join", x, zero) != x || a.op2("meet", x, one) != x || a.op2("join", x, x) != x ||
        a.op2("meet", x, x) != x) {
      lattice = {"bounded-lattice", false, {x}};
      break;
    }
    for (int y = 0; y < m && lattice.pass; ++y) {
      if (a.op2("join", x, y) != a.op2("join", y, x) || a.op2("meet", x, y) != a.op2("meet", y, x) ||
          a.op2("join", x, a.op2("meet", x, y)) != x || a.op2("meet", x, a.op2("join", x, y)) != x) {
        lattice = {"bounded-lattice", false, {x, y}};
        break;
      }
      for (int z = 0; z < m; ++z) {
        if (a.op2("join", a.op2("join", x, y), z) != a.op2("join", x, a.op2("join", y, z)) ||
            a.op2("meet", a.op2("meet", x, y), z) != a.op2("meet", x, a.op2("meet", y, z))) {
          lattice = {"bounded-lattice", false, {x, y, z}};
          break;
        }
        if (distributive.pass &&
            a.op2("meet", x, a.op2("join", y, z)) != a.op2("join", a.op2("meet", x, y), a.op2("meet", x, z))) {
          distributive = {"distributive", false, {x, y, z}};
        }
      }
    }
  }
  out.push_back(std::move(lattice));
  out.push_back(std::move(distributive));
}

}  // namespace detail

// Per-axiom report for the CRDSA laws: bounded distributive lattice, the
// universal properties of * and +, the Stone identities, regularity and a
// singleton core matching the core constant.
inline CrdsaValidation validate_crdsa(const FiniteAlgebra& a) {
  detail::require_signature(a, crdsa_signature(), "CRDSA");
  const int m    = a.carrier_size();
  const int zero = a.constant("zero");
  const int one  = a.constant("one");
  const int k    = a.constant("core");

  CrdsaValidation v;
  detail::check_lattice_axioms(a, zero, one, v.checks);

  AxiomCheck star_univ{"pseudocomplement-universal", true, {}};
  AxiomCheck plus_univ{"dual-pseudocomplement-universal", true, {}};
  for (int x = 0; x < m; ++x) {
    const int xs = a.op1("star", x);
    const int xp = a.op1("plus", x);
    for (int y = 0; y < m; ++y) {
      const bool below_star = a.op2("meet", y, xs) == y;
      const bool kills      = a.op2("meet", y, x) == zero;
      if (below_star != kills && star_univ.pass) star_univ = {"pseudocomplement-universal", false, {x, y}};
      const bool above_plus = a.op2("join", y, xp) == y;
      const bool covers     = a.op2("join", y, x) == one;
      if (above_plus != covers && plus_univ.pass) plus_univ = {"dual-pseudocomplement-universal", false, {x, y}};
    }
  }
  v.checks.push_back(std::move(star_univ));
  v.checks.push_back(std::move(plus_univ));

  AxiomCheck stone{"stone-identities", true, {}};
  for (int x = 0; x < m && stone.pass; ++x) {
    const int xs = a.op1("star", x);
    const int xp = a.op1("plus", x);
    if (a.op2("join", xs, a.op1("star", xs)) != one || a.op2("meet", xp, a.op1("plus", xp)) != zero) {
      stone = {"stone-identities", false, {x}};
    }
  }
  v.checks.push_back(std::move(stone));

  AxiomCheck regular{"regularity", true, {}};
  for (int x = 0; x < m && regular.pass; ++x) {
    for (int y = x + 1; y < m; ++y) {
      if (a.op1("star", x) == a.op1("star", y) && a.op1("plus", x) == a.op1("plus", y)) {
        regular = {"regularity", false, {x, y}};
        break;
      }
    }
  }
  v.checks.push_back(std::move(regular));

  AxiomCheck core_check{"core-singleton", true, {}};
  std::vector<int> core_set;
  for (int x = 0; x < m; ++x) {
    if (a.op1("star", x) == zero && a.op1("plus", x) == one) core_set.push_back(x);
  }
  if (core_set.size() != 1 || core_set[0] != k) {
    core_check = {"core-singleton", false, core_set};
  }
  v.checks.push_back(std::move(core_check));

  for (const auto& c : v.checks) v.pass = v.pass && c.pass;
  return v;
}

// Boolean-algebra laws for the <join, meet, compl, 0, 1> signature.
inline CrdsaValidation validate_boolean(const FiniteAlgebra& a) {
  detail::require_signature(a, boolean_signature(), "Boolean");
  const int m    = a.carrier_size();
  const int zero = a.constant("zero");
  const int one  = a.constant("one");

  CrdsaValidation v;
  detail::check_lattice_axioms(a, zero, one, v.checks);

  AxiomCheck compl_check{"complementation", true, {}};
  for (int x = 0; x < m && compl_check.pass; ++x) {
    const int xc = a.op1("compl", x);
    if (a.op2("meet", x, xc) != zero || a.op2("join", x, xc) != one) {
      compl_check = {"complementation", false, {x}};
    }
  }
  v.checks.push_back(std::move(compl_check));

  for (const auto& c : v.checks) v.pass = v.pass && c.pass;
  return v;
}

// ---------------------------------------------------------------------------
// Center, dense sets and core.

struct CenterResult {
  std::vector<int> elements;  // central elements of the input carrier
  FiniteAlgebra algebra;      // induced Boolean algebra on them
};

inline CenterResult center(const FiniteAlgebra& a) {
  detail::require_signature(a, crdsa_signature(), "CRDSA");
  const int m = a.carrier_size();
  std::vector<int> elements;
  std::vector<int> to_new(static_cast<std::size_t>(m), -1);
  for (int x = 0; x < m; ++x) {
    if (a.op1("star", x) == a.op1("plus", x)) {
      to_new[static_cast<std::size_t>(x)] = static_cast<int>(elements.size());
      elements.push_back(x);
    }
  }
  const int k = static_cast<int>(elements.size());
  auto renum  = [&](int orig) {
    int v = to_new[static_cast<std::size_t>(orig)];
    if (v == -1) throw std::domain_error("center is not closed under the induced operations");
    return v;
  };
  std::vector<int> join(static_cast<std::size_t>(k * k)), meet(static_cast<std::size_t>(k * k)),
      compl_(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    compl_[static_cast<std::size_t>(i)] = renum(a.op1("star", elements[static_cast<std::size_t>(i)]));
    for (int j = 0; j < k; ++j) {
      join[static_cast<std::size_t>(i * k + j)] =
          renum(a.op2("join", elements[static_cast<std::size_t>(i)], elements[static_cast<std::size_t>(j)]));
      meet[static_cast<std::size_t>(i * k + j)] =
          renum(a.op2("meet", elements[static_cast<std::size_t>(i)], elements[static_cast<std::size_t>(j)]));
    }
  }
  FiniteAlgebra boolean(k, boolean_signature(),
                        {join, meet, compl_, {renum(a.constant("zero"))}, {renum(a.constant("one"))}});
  return {std::move(elements), std::move(boolean)};
}

struct DenseCore {
  std::vector<int> dense;       // x with x* = 0
  std::vector<int> dual_dense;  // x with x+ = 1
  std::vector<int> core;        // intersection
};

inline DenseCore dense_core(const FiniteAlgebra& a) {
  detail::require_signature(a, crdsa_signature(), "CRDSA");
  DenseCore out;
  const int zero = a.constant("zero");
  const int one  = a.constant("one");
  for (int x = 0; x < a.carrier_size(); ++x) {
    const bool d  = a.op1("star", x) == zero;
    const bool dd = a.op1("plus", x) == one;
    if (d) out.dense.push_back(x);
    if (dd) out.dual_dense.push_back(x);
    if (d && dd) out.core.push_back(x);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Boolean subuniverses of C_2^n as sets of n-bit masks. Bit i corresponds to
// word position i of the matching ternary vector.

inline std::uint32_t boolean_full_mask(std::size_t n) { return n >= 32 ? ~0u : ((1u << n) - 1); }

inline bool is_boolean_subuniverse(std::size_t n, const std::vector<std::uint32_t>& b) {
  const std::uint32_t full = boolean_full_mask(n);
  auto contains = [&](std::uint32_t x) { return std::find(b.begin(), b.end(), x) != b.end(); };
  if (!contains(0) || !contains(full)) return false;
  for (std::uint32_t x : b) {
    if ((x & ~full) != 0) return false;
    if (!contains(full & ~x)) return false;
    for (std::uint32_t y : b) {
      if (!contains(x | y) || !contains(x & y)) return false;
    }
  }
  return true;
}

// <B u {a}> = {(b ^ a) v (c ^ a')} with b, c ranging over B.
inline std::vector<std::uint32_t> boolean_extend(std::size_t n, const std::vector<std::uint32_t>& b,
                                                 std::uint32_t a) {
  const std::uint32_t full = boolean_full_mask(n);
  std::vector<std::uint32_t> out;
  for (std::uint32_t x : b) {
    for (std::uint32_t y : b) {
      out.push_back((x & a) | (y & full & ~a));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace detail {

// Set partitions of {0..n-1} as restricted growth strings.
inline std::vector<std::vector<int>> set_partitions(std::size_t n) {
  std::vector<std::vector<int>> out;
  std::vector<int> rgs(n, 0);
  while (true) {
    out.push_back(rgs);
    // advance
    std::size_t i = n;
    while (i-- > 1) {
      int max_prefix = 0;
      for (std::size_t j = 0; j < i; ++j) max_prefix = std::max(max_prefix, rgs[j]);
      if (rgs[i] <= max_prefix) {
        ++rgs[i];
        for (std::size_t j = i + 1; j < n; ++j) rgs[j] = 0;
        break;
      }
      if (i == 1) return out;
    }
    if (n == 1) return out;
  }
}

}  // namespace detail

// All Boolean subuniverses of C_2^n, one per partition of the coordinates,
// built by extending {0, full} with each block atom in turn.
inline std::vector<std::vector<std::uint32_t>> enumerate_boolean_subuniverses(std::size_t n) {
  std::vector<std::vector<std::uint32_t>> out;
  for (const auto& rgs : detail::set_partitions(n)) {
    int block_count = 0;
    for (int b : rgs) block_count = std::max(block_count, b + 1);
    std::vector<std::uint32_t> atoms(static_cast<std::size_t>(block_count), 0);
    for (std::size_t i = 0; i < n; ++i) atoms[static_cast<std::size_t>(rgs[i])] |= 1u << i;
    std::vector<std::uint32_t> sub = {0, boolean_full_mask(n)};
    for (std::uint32_t atom : atoms) sub = boolean_extend(n, sub, atom);
    out.push_back(std::move(sub));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// The center embedding <B> = {x in C_3^n | x* in B and x+ in B}.

namespace detail {

// The mask of a ternary element all of whose digits are 0 or 1; nullopt when
// some digit is S.
inline std::optional<std::uint32_t> boolean_mask_of(const TernaryVector& v) {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v.digit(i) == Trit::S) return std::nullopt;
    if (v.digit(i) == Trit::one) mask |= 1u << i;
  }
  return mask;
}

inline std::uint64_t ternary_index_of_mask(std::size_t n, std::uint32_t mask) {
  std::vector<Trit> digits(n, Trit::zero);
  for (std::size_t i = 0; i < n; ++i) {
    if (mask & (1u << i)) digits[i] = Trit::one;
  }
  return TernaryVector(std::move(digits)).index();
}

}  // namespace detail

struct CenterEmbedding {
  std::vector<int> elements;  // ternary indices of <B> in C_3^n, sorted
  std::vector<std::string> words;
  FiniteAlgebra algebra;                     // induced CRDSA on <B>
  std::vector<std::uint32_t> center_masks;  // center of <B>, as masks
  bool center_equals_input = false;
};

inline CenterEmbedding boolean_center_embed(std::size_t n, std::vector<std::uint32_t> b) {
  std::sort(b.begin(), b.end());
  b.erase(std::unique(b.begin(), b.end()), b.end());
  if (!is_boolean_subuniverse(n, b)) {
    throw std::invalid_argument("input is not a Boolean subuniverse of C_2^n");
  }
  auto power = make_c3_power(n);
  std::vector<int> elements;
  for (int x = 0; x < power.carrier_size(); ++x) {
    auto star_mask = detail::boolean_mask_of(TernaryVector::from_index(n, static_cast<std::uint64_t>(power.op1("star", x))));
    auto plus_mask = detail::boolean_mask_of(TernaryVector::from_index(n, static_cast<std::uint64_t>(power.op1("plus", x))));
    // * and + always land in {0,1}-vectors
    if (std::binary_search(b.begin(), b.end(), *star_mask) && std::binary_search(b.begin(), b.end(), *plus_mask)) {
      elements.push_back(x);
    }
  }
  auto induced = induced_subalgebra(power, elements);

  auto c = center(induced.algebra);
  std::vector<std::uint32_t> center_masks;
  for (int idx : c.elements) {
    auto v = TernaryVector::from_index(n, static_cast<std::uint64_t>(induced.elements[static_cast<std::size_t>(idx)]));
    center_masks.push_back(*detail::boolean_mask_of(v));
  }
  std::sort(center_masks.begin(), center_masks.end());

  std::vector<std::string> words;
  for (int e : induced.elements) words.push_back(TernaryVector::from_index(n, static_cast<std::uint64_t>(e)).word());

  CenterEmbedding out{std::move(induced.elements), std::move(words), std::move(induced.algebra),
                      std::move(center_masks), false};
  out.center_equals_input = out.center_masks == b;
  return out;
}

// ---------------------------------------------------------------------------
// Subalgebras of C_3^n via the Boolean route.

struct SubalgebraInfo {
  std::vector<int> elements;  // ternary indices
  std::vector<std::string> words;
  int iso_power = 0;  // k with the subalgebra isomorphic to C_3^k
};

inline std::vector<SubalgebraInfo> enumerate_crdsa_subalgebras(std::size_t n) {
  if (n < 1 || n > 4) throw std::invalid_argument("power out of range: 1 <= n <= 4");
  std::vector<SubalgebraInfo> out;
  for (const auto& b : enumerate_boolean_subuniverses(n)) {
    auto embedded = boolean_center_embed(n, b);
    int k = 0;
    for (std::size_t size = embedded.elements.size(); size > 1; size /= 3) ++k;
    auto iso = is_isomorphic(embedded.algebra, make_c3_power(static_cast<std::size_t>(k)));
    if (!iso.isomorphic) throw std::domain_error("embedded subalgebra is not a chain power");
    out.push_back({std::move(embedded.elements), std::move(embedded.words), k});
  }
  std::sort(out.begin(), out.end(), [](const SubalgebraInfo& a, const SubalgebraInfo& b) {
    return a.elements.size() != b.elements.size() ? a.elements.size() < b.elements.size()
                                                  : a.elements < b.elements;
  });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const SubalgebraInfo& a, const SubalgebraInfo& b) { return a.elements == b.elements; }),
            out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Subdirect representation into C_3.

struct SubdirectResult {
  std::vector<std::vector<int>> homs;  // all homomorphisms into C_3
  bool injective = false;
  bool coordinates_surjective = false;
};

inline SubdirectResult subdirect_embedding(const FiniteAlgebra& a) {
  detail::require_signature(a, crdsa_signature(), "CRDSA");
  SubdirectResult out;
  out.homs = homomorphisms(a, make_c3());
  out.coordinates_surjective = !out.homs.empty();
  for (const auto& h : out.homs) {
    bool hit[3] = {false, false, false};
    for (int y : h) hit[y] = true;
    out.coordinates_surjective = out.coordinates_surjective && hit[0] && hit[1] && hit[2];
  }
  out.injective = true;
  for (int x = 0; x < a.carrier_size() && out.injective; ++x) {
    for (int y = x + 1; y < a.carrier_size() && out.injective; ++y) {
      bool split = false;
      for (const auto& h : out.homs) {
        if (h[static_cast<std::size_t>(x)] != h[static_cast<std::size_t>(y)]) {
          split = true;
          break;
        }
      }
      if (!split) out.injective = false;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Decomposition: x = x** ^ (x++ v k), x = x++ v (x** ^ k), and the center
// together with k generating everything under join and meet alone.

struct DecompositionResult {
  bool identities_ok = true;
  std::optional<int> identity_witness;
  bool center_core_generates = false;
  bool pass() const { return identities_ok && center_core_generates; }
};

inline DecompositionResult decomposition_check(const FiniteAlgebra& a) {
  detail::require_signature(a, crdsa_signature(), "CRDSA");
  DecompositionResult out;
  const int k = a.constant("core");
  for (int x = 0; x < a.carrier_size(); ++x) {
    const int ss = a.op1("star", a.op1("star", x));
    const int pp = a.op1("plus", a.op1("plus", x));
    if (a.op2("meet", ss, a.op2("join", pp, k)) != x || a.op2("join", pp, a.op2("meet", ss, k)) != x) {
      out.identities_ok = false;
      out.identity_witness = x;
      break;
    }
  }
  auto gens = center(a).elements;
  gens.push_back(k);
  auto closed = subalgebra_closure(reduct(a, {"join", "meet"}), gens);
  out.center_core_generates = static_cast<int>(closed.size()) == a.carrier_size();
  return out;
}

// Isomorphism decided by comparing the Boolean centers.
inline bool iso_via_centers(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  return is_isomorphic(center(a).algebra, center(b).algebra).isomorphic;
}

}  // namespace crdsa
