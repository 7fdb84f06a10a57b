#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <random>

#include "crdsa/finalg.hpp"
#include "crdsa/fixtures.hpp"
#include "test_helpers.hpp"

using namespace crdsa;
using namespace crdsa::testing;

namespace {
constexpr int T0 = 0;  // chain element 0
constexpr int TS = 1;  // chain element S
constexpr int T1 = 2;  // chain element 1
}  // namespace

TEST_CASE("algebra construction validates tables") {
  CHECK_THROWS_AS(FiniteAlgebra(0, lattice_signature(), {}), std::invalid_argument);
  CHECK_THROWS_AS(FiniteAlgebra(2, lattice_signature(), {{0}, {0}, {0}, {1}}), std::invalid_argument);
  CHECK_THROWS_AS(FiniteAlgebra(2, lattice_signature(), {{0, 1, 1, 5}, {0, 0, 0, 1}, {0}, {1}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(Signature({{"f", 1}, {"f", 2}}), std::invalid_argument);
}

TEST_CASE("terms parse, print and reject malformed input") {
  auto t = Term::parse("(join (star v1) v0)");
  CHECK(t.str() == "(join (star v1) v0)");
  CHECK(t.max_var() == 1);
  CHECK(Term::parse("zero").str() == "zero");
  CHECK(Term::parse("v12").var == 12);
  CHECK_THROWS_AS(Term::parse("(join v0"), std::invalid_argument);
  CHECK_THROWS_AS(Term::parse("(join v0 v1) tail"), std::invalid_argument);

  auto c3 = make_c3();
  const int args[2] = {T0, T1};
  CHECK_THROWS_AS(eval_term(c3, Term::parse("(join v0 v5)"), args), std::invalid_argument);
  CHECK_THROWS_AS(eval_term(c3, Term::parse("(join v0)"), args), std::invalid_argument);
  CHECK_THROWS_AS(eval_term(c3, Term::parse("(frob v0 v1)"), args), std::invalid_argument);
}

TEST_CASE("published witness terms evaluate as computed by hand") {
  auto c3 = make_c3();
  auto m  = c3_malcev_term();
  {
    const int args[3] = {TS, T1, T1};
    CHECK(eval_term(c3, m, args) == TS);
  }
  {
    const int args[3] = {T0, T0, T1};
    CHECK(eval_term(c3, m, args) == T1);
  }
  auto z3 = make_z3();
  {
    const int args[3] = {2, 2, 0};
    CHECK(eval_term(z3, z3_majority_term(), args) == 2);
  }
}

TEST_CASE("Mal'cev and majority identities hold exhaustively on the fixtures") {
  auto c3 = make_c3();
  auto m  = c3_malcev_term();
  for (int x = 0; x < 3; ++x) {
    for (int y = 0; y < 3; ++y) {
      const int xyy[3] = {x, y, y};
      const int xxy[3] = {x, x, y};
      CHECK(eval_term(c3, m, xyy) == x);
      CHECK(eval_term(c3, m, xxy) == y);
    }
  }
  auto z3 = make_z3();
  auto p  = z3_malcev_term();
  auto t  = z3_majority_term();
  for (int x = 0; x < 3; ++x) {
    for (int y = 0; y < 3; ++y) {
      const int xyy[3] = {x, y, y};
      const int xxy[3] = {x, x, y};
      const int xyx[3] = {x, y, x};
      const int yxx[3] = {y, x, x};
      CHECK(eval_term(z3, p, xyy) == x);
      CHECK(eval_term(z3, p, xxy) == y);
      CHECK(eval_term(z3, t, xxy) == x);
      CHECK(eval_term(z3, t, xyx) == x);
      CHECK(eval_term(z3, t, yxx) == x);
    }
  }
}

TEST_CASE("closure reaches the constants' span and respects reducts") {
  CHECK(subalgebra_closure(make_c3(), {}) == std::vector<int>{0, 1, 2});
  CHECK(subalgebra_closure(make_z3(), {}) == std::vector<int>{0, 1, 2});

  auto c3sq        = make_c3_power(2);
  auto lattice_ops = reduct(c3sq, {"join", "meet"});
  const int gens[3] = {0, 8, 4};  // "00", "11", "SS"
  CHECK(subalgebra_closure(lattice_ops, gens) == std::vector<int>{0, 4, 8});

  const int bad[1] = {99};
  CHECK_THROWS_AS(subalgebra_closure(c3sq, bad), std::invalid_argument);
}

TEST_CASE("closure is idempotent on random generator sets") {
  auto c3cube = make_c3_power(3);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> dist(0, 26);
  for (int round = 0; round < 50; ++round) {
    std::vector<int> gens;
    for (int i = 0; i < 3; ++i) gens.push_back(dist(rng));
    auto once  = subalgebra_closure(c3cube, gens);
    auto twice = subalgebra_closure(c3cube, once);
    CHECK(once == twice);
  }
}

TEST_CASE("subuniverse enumeration matches the frozen counts") {
  CHECK(enumerate_subalgebras(make_c3()).size() == 1);

  auto subs2 = enumerate_subalgebras(make_c3_power(2));
  REQUIRE(subs2.size() == 2);
  CHECK(subs2[0] == std::vector<int>{0, 4, 8});
  CHECK(subs2[1].size() == 9);

  CHECK(enumerate_subalgebras(make_c3_power(3)).size() == 5);
}

TEST_CASE("subuniverse enumeration agrees with the 2^m subset oracle") {
  for (const auto& a : {make_c3(), make_z3(), make_c3_nocore(), make_c3_power(2)}) {
    CHECK(enumerate_subalgebras(a) == oracle_subuniverses(a));
  }
}

TEST_CASE("congruence generation collapses the fixtures as the case analyses show") {
  CHECK(principal_congruence(make_c3(), 0, 2).is_full());
  CHECK(principal_congruence(make_z3(), 0, 2).is_full());
  CHECK(congruence_generated(make_c3(), {}).is_identity());

  auto c3sq = make_c3_power(2);
  auto theta = principal_congruence(c3sq, 0, 1);  // "00" with "0S"
  CHECK(theta.blocks() == std::vector<std::vector<int>>{{0, 1, 2}, {3, 4, 5}, {6, 7, 8}});
  CHECK(is_congruence(c3sq, theta));
  CHECK(oracle_is_congruence(c3sq, theta));
}

TEST_CASE("generated congruences always pass both compatibility predicates") {
  auto c3sq = make_c3_power(2);
  for (int x = 0; x < 9; ++x) {
    for (int y = x + 1; y < 9; ++y) {
      auto theta = principal_congruence(c3sq, x, y);
      CHECK(is_congruence(c3sq, theta));
      CHECK(oracle_is_congruence(c3sq, theta));
    }
  }
  // the two predicates also agree on arbitrary partitions, congruence or not
  auto some = PartitionRelation::from_blocks(9, {{0, 1}, {2, 3}, {4, 5}, {6, 7}, {8}});
  CHECK(is_congruence(c3sq, some) == oracle_is_congruence(c3sq, some));
}

TEST_CASE("simplicity verdicts match the case arguments") {
  CHECK(is_simple(make_c3()).simple);
  CHECK(is_simple(make_z3()).simple);

  auto res = is_simple(make_c3_power(2));
  REQUIRE_FALSE(res.simple);
  REQUIRE(res.witness.has_value());
  CHECK(res.witness->block_count() == 3);  // a projection kernel
  CHECK(is_congruence(make_c3_power(2), *res.witness));
}

TEST_CASE("the congruence lattice of C_3^2 has exactly the four product congruences") {
  auto cons = all_congruences(make_c3_power(2));
  CHECK(cons.size() == 4);
  CHECK(all_congruences(make_c3()).size() == 2);
  std::size_t trivial = 0;
  for (const auto& theta : cons) {
    if (theta.is_identity() || theta.is_full()) ++trivial;
    CHECK(is_congruence(make_c3_power(2), theta));
  }
  CHECK(trivial == 2);
}

TEST_CASE("homomorphism search agrees with the full map scan") {
  auto c3   = make_c3();
  auto c3sq = make_c3_power(2);

  auto homs = homomorphisms(c3sq, c3);
  REQUIRE(homs.size() == 2);
  CHECK(homs[0] == std::vector<int>{0, 0, 0, 1, 1, 1, 2, 2, 2});  // first projection
  CHECK(homs[1] == std::vector<int>{0, 1, 2, 0, 1, 2, 0, 1, 2});  // second projection
  CHECK(homs == oracle_homomorphisms(c3sq, c3));

  CHECK(homomorphisms(c3, c3) == std::vector<std::vector<int>>{{0, 1, 2}});
  CHECK(homomorphisms(make_c3_power(3), c3).size() == 3);

  CHECK_THROWS_AS(homomorphisms(c3, make_z3()), std::invalid_argument);
}

TEST_CASE("hom composition stays inside the hom set") {
  auto c3     = make_c3();
  auto c3sq   = make_c3_power(2);
  auto c3cube = make_c3_power(3);
  auto inner  = homomorphisms(c3cube, c3sq);
  auto outer  = homomorphisms(c3sq, c3);
  auto target = homomorphisms(c3cube, c3);
  CHECK(inner.size() == 9);
  for (const auto& g : inner) {
    for (const auto& f : outer) {
      std::vector<int> composed(g.size());
      for (std::size_t x = 0; x < g.size(); ++x) composed[x] = f[static_cast<std::size_t>(g[x])];
      CHECK(std::find(target.begin(), target.end(), composed) != target.end());
    }
  }
}

TEST_CASE("automorphism search agrees with the permutation scan") {
  CHECK(automorphisms(make_c3()) == std::vector<std::vector<int>>{{0, 1, 2}});
  CHECK(automorphisms(make_z3()) == std::vector<std::vector<int>>{{0, 1, 2}});

  auto c3sq  = make_c3_power(2);
  auto autos = automorphisms(c3sq);
  REQUIRE(autos.size() == 2);
  CHECK(autos[0] == std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7, 8});
  CHECK(autos[1] == std::vector<int>{0, 3, 6, 1, 4, 7, 2, 5, 8});  // coordinate swap
  CHECK(autos == oracle_automorphisms(c3sq));
}

TEST_CASE("isomorphism checks on chains, powers and relabelings") {
  auto c3   = make_c3();
  auto c3sq = make_c3_power(2);

  auto diag = induced_subalgebra(c3sq, std::vector<int>{0, 4, 8});
  CHECK(diag.elements == std::vector<int>{0, 4, 8});
  CHECK(is_isomorphic(c3, diag.algebra).isomorphic);

  CHECK_FALSE(is_isomorphic(c3, c3sq).isomorphic);

  std::vector<int> perm = {3, 7, 2, 8, 4, 0, 6, 1, 5};
  auto shuffled = permute_algebra(c3sq, perm);
  auto res      = is_isomorphic(c3sq, shuffled);
  REQUIRE(res.isomorphic);
  CHECK(oracle_is_hom(c3sq, shuffled, *res.witness));

  CHECK_THROWS_AS(induced_subalgebra(c3sq, std::vector<int>{0, 1}), std::invalid_argument);
}

TEST_CASE("primality reports for the three fixtures") {
  auto c3_report = check_primal(make_c3(), c3_malcev_term(), std::nullopt, true);
  CHECK(c3_report.no_proper_subalgebras);
  CHECK(c3_report.simple);
  CHECK(c3_report.rigid);
  CHECK(c3_report.malcev_ok);
  CHECK(c3_report.distributivity_granted());
  CHECK(c3_report.primal());

  auto z3_report = check_primal(make_z3(), z3_malcev_term(), z3_majority_term(), false);
  CHECK(z3_report.majority_checked);
  CHECK(z3_report.majority_ok);
  CHECK(z3_report.primal());

  auto nocore = check_primal(make_c3_nocore(), c3_malcev_term(), std::nullopt, true);
  CHECK_FALSE(nocore.no_proper_subalgebras);
  REQUIRE(nocore.proper_subuniverse.has_value());
  CHECK(*nocore.proper_subuniverse == std::vector<int>{0, 2});  // {0,1} of the chain
  CHECK(nocore.simple);
  CHECK(nocore.rigid);
  CHECK_FALSE(nocore.primal());

  // no majority witness and no lattice reduct: distributivity not granted
  auto ungated = check_primal(make_z3(), z3_malcev_term(), std::nullopt, false);
  CHECK_FALSE(ungated.primal());

  CHECK_THROWS_AS(check_primal(make_c3(), Term::parse("(join v0 v3)"), std::nullopt, true),
                  std::invalid_argument);
}

TEST_CASE("the carrier cap guards the exhaustive operations") {
  REQUIRE(setenv("CRDSA_MAX_CARRIER", "10", 1) == 0);
  CHECK_THROWS_AS(enumerate_subalgebras(make_c3_power(3)), std::invalid_argument);
  CHECK(enumerate_subalgebras(make_c3_power(2)).size() == 2);
  REQUIRE(unsetenv("CRDSA_MAX_CARRIER") == 0);
  CHECK(enumerate_subalgebras(make_c3_power(3)).size() == 5);
}

TEST_CASE("generating sets are small and generate") {
  auto c3cube = make_c3_power(3);
  auto gens   = generating_set(c3cube);
  CHECK(gens.size() <= 2);
  CHECK(subalgebra_closure(c3cube, gens).size() == 27);
  CHECK(generating_set(make_c3()).empty());  // constants already generate
}
