#include <catch2/catch_amalgamated.hpp>

#include "crdsa/bitop.hpp"
#include "test_helpers.hpp"

using namespace crdsa;

namespace {

// brute-force prime filters over all subsets, independent of the library's
// join-irreducible construction
std::vector<PrimeFilter> oracle_prime_filters(const FiniteAlgebra& lattice) {
  const int m = lattice.carrier_size();
  REQUIRE(m <= 16);
  std::vector<PrimeFilter> out;
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    std::vector<int> members;
    for (int x = 0; x < m; ++x) {
      if (mask & (1u << x)) members.push_back(x);
    }
    if (is_prime_filter(lattice, members)) out.push_back({std::move(members)});
  }
  return out;  // mask order equals the library's member-mask order
}

}  // namespace

TEST_CASE("generated topologies contain bounds and are union/intersection closed") {
  auto t = generate_topology(2, {0b10});
  CHECK(t.opens == std::vector<std::uint64_t>{0b00, 0b10, 0b11});
  CHECK(t.is_topology());

  // a family that is not intersection-refinable still generates a topology
  auto t2 = generate_topology(3, {0b011, 0b110});
  CHECK(t2.is_topology());
  CHECK(t2.is_open(0b010));

  CHECK_THROWS_AS(generate_topology(0, {}), std::invalid_argument);
  CHECK_THROWS_AS(generate_topology(2, {0b100}), std::invalid_argument);
}

TEST_CASE("region operators on the spectrum of C_3") {
  auto spec = spectrum(make_c3());
  const BitopSpace& s = spec.space;
  REQUIRE(s.ground == 2);

  // point 0 is the filter {1}, point 1 is {S,1}
  CHECK(spec.points[0].members == std::vector<int>{2});
  CHECK(spec.points[1].members == std::vector<int>{1, 2});
  CHECK(s.base1 == std::vector<std::uint64_t>{0b00, 0b10, 0b11});
  CHECK(s.base2 == std::vector<std::uint64_t>{0b00, 0b01, 0b11});

  CHECK(region_operator(s, 1, RegionKind::closure, 0b10) == 0b11);
  CHECK(region_operator(s, 1, RegionKind::boundary, 0b10) == 0b01);
  CHECK(region_operator(s, 1, RegionKind::closure, 0b00) == 0b00);
  CHECK(region_operator(s, 2, RegionKind::interior, 0b10) == 0b00);
  CHECK_THROWS_AS(region_operator(s, 3, RegionKind::closure, 0), std::invalid_argument);

  // interior/closure duality on every subset, both topologies
  for (int which : {1, 2}) {
    for (std::uint64_t u = 0; u <= s.full(); ++u) {
      auto interior   = region_operator(s, which, RegionKind::interior, u);
      auto co_closure = s.full() & ~region_operator(s, which, RegionKind::closure, s.full() & ~u);
      CHECK(interior == co_closure);
    }
  }
}

TEST_CASE("prime filter counts and the brute-force agreement") {
  CHECK(prime_filters(make_c2_lattice()).size() == 1);
  CHECK(prime_filters(make_c3()).size() == 2);
  CHECK(prime_filters(make_c3_power(2)).size() == 4);
  CHECK(prime_filters(make_c3_power(3)).size() == 6);

  for (const auto& a : {make_c3(), make_c3_power(2)}) {
    CHECK(prime_filters(a) == oracle_prime_filters(a));
  }

  CHECK_THROWS_AS(prime_filters(make_z3()), std::invalid_argument);

  // the join-irreducible construction agrees with brute force in the overlap
  // region: force it by relabeling C_3^2 so both paths see the same lattice
  auto c3sq = make_c3_power(2);
  auto ji_filters = [&](const FiniteAlgebra& a) {
    // mirror of the library's above-16 construction, usable at small sizes
    std::vector<PrimeFilter> out;
    for (int j = 0; j < a.carrier_size(); ++j) {
      if (j == a.constant("zero")) continue;
      bool irreducible = true;
      for (int x = 0; x < a.carrier_size() && irreducible; ++x) {
        for (int y = 0; y < a.carrier_size(); ++y) {
          if (x != j && y != j && a.op2("join", x, y) == j) {
            irreducible = false;
            break;
          }
        }
      }
      if (!irreducible) continue;
      std::vector<int> members;
      for (int x = 0; x < a.carrier_size(); ++x) {
        if (a.op2("join", j, x) == x) members.push_back(x);
      }
      out.push_back({std::move(members)});
    }
    std::sort(out.begin(), out.end(), [](const PrimeFilter& a_, const PrimeFilter& b_) {
      return detail::member_mask(a_.members) < detail::member_mask(b_.members);
    });
    return out;
  };
  CHECK(ji_filters(c3sq) == prime_filters(c3sq));
  CHECK(ji_filters(make_c3()) == prime_filters(make_c3()));
}

TEST_CASE("spectra are pairwise Stone and carry complementary bases") {
  for (std::size_t n : {1u, 2u, 3u}) {
    auto spec = spectrum(make_c3_power(n));
    CHECK(spec.space.ground == static_cast<int>(2 * n));
    CHECK(spec.space.t1.is_topology());
    CHECK(spec.space.t2.is_topology());

    auto props = pairwise_properties(spec.space);
    CHECK(props.hausdorff);
    CHECK(props.zero_dimensional);
    CHECK(props.compact_subcover);
    CHECK(props.compact_closed_sets);
    CHECK(props.stone);
    CHECK(props.zerodim_equivalences_hold);
    CHECK(props.compact_subcover == props.compact_closed_sets);

    // Phi- is the complement of Phi+ and B2 = {u^c | u in B1}
    for (std::size_t a = 0; a < spec.phi_plus.size(); ++a) {
      CHECK(spec.phi_minus[a] == (spec.space.full() & ~spec.phi_plus[a]));
    }
    auto b1 = spec.space.canonical_base1();
    auto b2 = spec.space.canonical_base2();
    std::vector<std::uint64_t> complements;
    for (std::uint64_t u : b1) complements.push_back(spec.space.full() & ~u);
    std::sort(complements.begin(), complements.end());
    std::sort(b1.begin(), b1.end());
    std::sort(b2.begin(), b2.end());
    CHECK(complements == b2);
    CHECK(b1 == spec.space.base1);

    // B1 is a bounded sublattice of the powerset and dually isomorphic to B2
    for (std::uint64_t u : b1) {
      for (std::uint64_t v : b1) {
        CHECK(std::binary_search(b1.begin(), b1.end(), u | v));
        CHECK(std::binary_search(b1.begin(), b1.end(), u & v));
        CHECK(std::binary_search(b2.begin(), b2.end(), spec.space.full() & ~(u | v)));
      }
    }

    // Phi+ turns join into union and meet into intersection
    auto alg = make_c3_power(n);
    for (int a = 0; a < alg.carrier_size(); ++a) {
      for (int b = 0; b < alg.carrier_size(); ++b) {
        CHECK(spec.phi_plus[static_cast<std::size_t>(alg.op2("join", a, b))] ==
              (spec.phi_plus[static_cast<std::size_t>(a)] | spec.phi_plus[static_cast<std::size_t>(b)]));
        CHECK(spec.phi_plus[static_cast<std::size_t>(alg.op2("meet", a, b))] ==
              (spec.phi_plus[static_cast<std::size_t>(a)] & spec.phi_plus[static_cast<std::size_t>(b)]));
      }
    }
  }
}

TEST_CASE("an indiscrete two-point space is zero-dimensional but not Hausdorff") {
  auto s = BitopSpace::from_bases(2, {0b11}, {0b11});
  auto props = pairwise_properties(s);
  CHECK_FALSE(props.hausdorff);
  CHECK(props.zero_dimensional);
  CHECK_FALSE(props.t0_1);
  CHECK_FALSE(props.separated_by_disjoint_pair);
  CHECK(props.zerodim_equivalences_hold);  // items 1-4 are all false together
  CHECK_FALSE(props.stone);
}

TEST_CASE("dense and dually dense base elements are characterized by boundaries") {
  for (std::size_t n : {1u, 2u, 3u}) {
    auto spec = spectrum(make_c3_power(n));
    auto base = check_crdsa_base(spec.space);
    REQUIRE(base.all_pass);
    const FiniteAlgebra& alg = *base.base_algebra;
    const std::uint64_t full = spec.space.full();
    for (int i = 0; i < alg.carrier_size(); ++i) {
      const std::uint64_t u = base.base_elements[static_cast<std::size_t>(i)];
      const bool dense      = alg.op1("star", i) == alg.constant("zero");
      const bool dual_dense = alg.op1("plus", i) == alg.constant("one");
      CHECK(dense == (spec.space.t1.boundary(u) == (full & ~u)));
      CHECK(dual_dense == (spec.space.t2.boundary(full & ~u) == u));
    }
  }
}

TEST_CASE("the six base conditions pass on chain-power spectra") {
  auto spec = spectrum(make_c3());
  auto base = check_crdsa_base(spec.space);
  REQUIRE(base.zero_dimensional);
  for (const auto& c : base.conditions) CHECK(c.pass);
  REQUIRE(base.all_pass);
  CHECK(base.core_sets == std::vector<std::uint64_t>{0b10});
  CHECK(base.closure_in_base);
  CHECK(base.pcdpc_ok);
  REQUIRE(base.algebra_validation.has_value());
  CHECK(base.algebra_validation->pass);
  CHECK(is_isomorphic(*base.base_algebra, make_c3()).isomorphic);

  auto base2 = check_crdsa_base(spectrum(make_c3_power(2)).space);
  REQUIRE(base2.all_pass);
  CHECK(is_isomorphic(*base2.base_algebra, make_c3_power(2)).isomorphic);
}

TEST_CASE("the one-point spectrum of C_2 fails exactly condition six") {
  auto spec = spectrum(make_c2_lattice());
  CHECK(spec.space.ground == 1);
  auto base = check_crdsa_base(spec.space);
  REQUIRE(base.zero_dimensional);
  CHECK(base.conditions[0].pass);
  CHECK(base.conditions[1].pass);
  CHECK(base.conditions[2].pass);
  CHECK(base.conditions[3].pass);
  CHECK(base.conditions[4].pass);
  CHECK_FALSE(base.conditions[5].pass);
  CHECK(base.core_sets.empty());
  CHECK_FALSE(base.all_pass);
  CHECK_FALSE(base.base_algebra.has_value());
}

TEST_CASE("Phi+ is a CRDSA isomorphism onto the spectrum base") {
  CHECK(phi_plus_iso_check(make_c3()).pass);
  CHECK(phi_plus_iso_check(make_c3_power(2)).pass);

  auto diag = induced_subalgebra(make_c3_power(2), std::vector<int>{0, 4, 8});
  auto r    = phi_plus_iso_check(diag.algebra);
  CHECK(r.pass);
  CHECK(spectrum(diag.algebra).space.ground == 2);

  // Phi+ sends the core to the core of the base algebra
  auto spec = spectrum(make_c3());
  auto base = check_crdsa_base(spec.space);
  CHECK(spec.phi_plus[1] == base.base_elements[static_cast<std::size_t>(base.base_algebra->constant("core"))]);
}

TEST_CASE("the identity map is a CRDSA morphism and the constant map is not") {
  auto spec = spectrum(make_c3());
  const BitopSpace& s = spec.space;

  auto ident = check_morphism({0, 1}, s, s);
  CHECK(ident.status == MorphismStatus::evaluated);
  CHECK(ident.bd1_ok);
  CHECK(ident.bd2_ok);
  CHECK(ident.verdict);
  CHECK(ident.direct_ok);
  CHECK(ident.routes_agree);

  // every point to the filter {S,1}: bi-continuous, fails the Bd2 containment
  auto constant = check_morphism({1, 1}, s, s);
  CHECK(constant.status == MorphismStatus::evaluated);
  CHECK(constant.bd1_ok);
  CHECK_FALSE(constant.bd2_ok);
  CHECK(constant.failing_condition.find("Bd2") != std::string::npos);
  CHECK_FALSE(constant.verdict);
  CHECK_FALSE(constant.direct_ok);
  CHECK(constant.routes_agree);

  // the constant map onto the closed point fails the Bd1 containment instead
  auto other = check_morphism({0, 0}, s, s);
  CHECK(other.status == MorphismStatus::evaluated);
  CHECK_FALSE(other.bd1_ok);
  CHECK(other.routes_agree);

  // the point swap reverses specialization, so it is not even bi-continuous
  auto swap = check_morphism({1, 0}, s, s);
  CHECK(swap.status == MorphismStatus::not_bicontinuous);

  CHECK_THROWS_AS(check_morphism({0}, s, s), std::invalid_argument);
  CHECK_THROWS_AS(check_morphism({0, 5}, s, s), std::invalid_argument);
}

TEST_CASE("the spectrum map induced by the first projection passes the morphism check") {
  auto spec_c3   = spectrum(make_c3());
  auto spec_c3sq = spectrum(make_c3_power(2));
  auto c3sq      = make_c3_power(2);
  auto homs      = homomorphisms(c3sq, make_c3());
  REQUIRE(homs.size() == 2);

  for (const auto& h : homs) {
    // f_h : pf(C_3) -> pf(C_3^2), F |-> h^{-1}(F)
    std::vector<int> f;
    for (const auto& filter : spec_c3.points) {
      std::vector<int> pulled;
      for (int x = 0; x < c3sq.carrier_size(); ++x) {
        if (std::find(filter.members.begin(), filter.members.end(), h[static_cast<std::size_t>(x)]) !=
            filter.members.end()) {
          pulled.push_back(x);
        }
      }
      int found = -1;
      for (std::size_t q = 0; q < spec_c3sq.points.size(); ++q) {
        if (spec_c3sq.points[q].members == pulled) found = static_cast<int>(q);
      }
      REQUIRE(found >= 0);
      f.push_back(found);
    }
    auto r = check_morphism(f, spec_c3.space, spec_c3sq.space);
    CHECK(r.status == MorphismStatus::evaluated);
    CHECK(r.verdict);
    CHECK(r.direct_ok);
    CHECK(r.routes_agree);
  }
}

TEST_CASE("the two morphism routes agree on every map between small spectra") {
  auto s2 = spectrum(make_c3()).space;          // 2 points
  auto s4 = spectrum(make_c3_power(2)).space;   // 4 points

  auto check_all = [](const BitopSpace& from, const BitopSpace& to) {
    std::vector<int> f(static_cast<std::size_t>(from.ground), 0);
    int evaluated = 0;
    while (true) {
      auto r = check_morphism(f, from, to);
      if (r.status == MorphismStatus::evaluated) {
        ++evaluated;
        CHECK(r.routes_agree);
      }
      std::size_t p = f.size();
      while (p > 0) {
        if (++f[p - 1] < to.ground) break;
        f[p - 1] = 0;
        --p;
      }
      if (p == 0) break;
    }
    return evaluated;
  };

  CHECK(check_all(s2, s2) >= 2);
  CHECK(check_all(s2, s4) >= 1);
  CHECK(check_all(s4, s2) >= 1);
  CHECK(check_all(s4, s4) >= 1);
}

TEST_CASE("Psi is a bijective bi-homeomorphism compatible with Phi+") {
  auto r3 = psi_roundtrip(make_c3());
  CHECK(r3.bijective);
  CHECK(r3.bicontinuous);
  CHECK(r3.phi_inverse_identity);
  CHECK(r3.base_crdsa);
  REQUIRE(r3.morphism_ok.has_value());
  CHECK(*r3.morphism_ok);
  REQUIRE(r3.composite_iso.has_value());
  CHECK(*r3.composite_iso);
  CHECK(r3.pass());

  auto r9 = psi_roundtrip(make_c3_power(2));
  CHECK(r9.pass());

  auto diag = induced_subalgebra(make_c3_power(2), std::vector<int>{0, 4, 8});
  CHECK(psi_roundtrip(diag.algebra).pass());
}

TEST_CASE("Psi on the lattice C_2 is a bi-homeomorphism but the morphism check is not applicable") {
  auto r = psi_roundtrip(make_c2_lattice());
  CHECK(r.bijective);
  CHECK(r.bicontinuous);
  CHECK(r.phi_inverse_identity);
  CHECK_FALSE(r.base_crdsa);
  CHECK_FALSE(r.morphism_ok.has_value());
  CHECK_FALSE(r.composite_iso.has_value());
  CHECK(r.pass());
}
