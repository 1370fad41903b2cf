#include <random>

#include "builders.hpp"
#include "doctest.h"
#include "sgo/semiprime.hpp"

using namespace sgo;
using namespace sgo::testing;

TEST_CASE("idempotent action") {
  SUBCASE("S_d permutes d copies naturally") {
    for (int d = 2; d <= 4; ++d) {
      const auto lam = semiprime_lambda(d, hereditary_staircase({1, 1}), 2);
      const auto act = idempotent_action(lam);
      CHECK(act.set_size == d);
      for (std::size_t g = 0; g < lam.group->order(); ++g) CHECK(act.images[g] == lam.group->element(g));
    }
  }
  SUBCASE("prime Delta has the trivial action") {
    const auto lam = outer_lambda();
    const auto act = idempotent_action(lam);
    CHECK(act.set_size == 1);
    CHECK(orbit_decompose(lam).size() == 1);
  }
  SUBCASE("C2 swapping two copies") {
    const auto lam = semiprime_lambda(2, hereditary_staircase({1}), 3);
    const auto act = idempotent_action(lam);
    CHECK(act.images[1] == Perm{1, 0});
    const auto orbits = orbit_decompose(lam);
    REQUIRE(orbits.size() == 1);
    CHECK(orbits[0].orbit == std::vector<int>{0, 1});
    CHECK(orbits[0].stabilizer.order() == 1);
    CHECK(orbits[0].orbit.size() * orbits[0].stabilizer.order() == lam.group->order());
    CHECK(orbits[0].corner.group->order() == 1);
    CHECK(orbits[0].corner.size() == 1);
  }
  SUBCASE("inconsistent supports are rejected") {
    const auto p = z_place(2);
    const auto d = direct_sum({hereditary_staircase({1}), hereditary_staircase({1})});
    const auto delta = local_order(d, 2);
    IntMatrix x = IntMatrix::Zero(2, 2);  // full support mixes the blocks
    const auto g = FiniteGroup::cyclic(2);
    const auto lam = make_graded_order(g, delta, {delta.data(), local_ideal(x, 2)}, trivial_twist(*g), p);
    CHECK_THROWS_AS(idempotent_action(lam), InconsistentBlockSupport);
  }
}

TEST_CASE("trivial action on t components") {
  const auto d = direct_sum({hereditary_staircase({1, 1}), hereditary_staircase({1}), hereditary_staircase({1, 1})});
  const auto delta = local_order(d, 2);
  const auto g = FiniteGroup::cyclic(3);
  CrossedProductDatum datum;
  datum.generator_images.push_back(permutation_matrix(identity_perm(5)));
  const auto lam = construct_crossed_product(delta, g, datum, z_place(2));
  const auto orbits = orbit_decompose(lam);
  REQUIRE(orbits.size() == 3);
  for (const auto& o : orbits) CHECK(o.stabilizer.order() == 3);
  // Group rings over a prime hereditary order at (2): 2 does not divide 3.
  CHECK(main_hereditary_verdict(lam).hereditary);
}

TEST_CASE("semiprime example, d = 3, residue characteristic 2") {
  const auto lam = semiprime_lambda(3, hereditary_staircase({1, 1}), 2);
  CHECK(validate_strong_grading(lam).strong);
  const auto orbits = orbit_decompose(lam);
  REQUIRE(orbits.size() == 1);
  CHECK(orbits[0].representative == 0);
  CHECK(orbits[0].stabilizer.order() == 2);
  CHECK(orbits[0].stabilizer.contains(lam.group->index_of(parse_cycles("(2 3)", 3))));
  const auto& corner = orbits[0].corner;
  CHECK(validate_strong_grading(corner).strong);
  // Group ring Delta S_2: every component equals Delta with trivial twist.
  for (const auto& x : corner.components) CHECK(x == corner.delta.data());
  for (const auto& row : corner.twist)
    for (const auto& s : row) CHECK(s == GaussianRational(Gaussian{1}));

  const auto p2 = z_place(2);
  const auto sylow_corner = sylow_subgroup(corner.group, 2);
  CHECK(inner_classification(corner, sylow_corner, p2).inner.size() == 2);
  const auto sylow_full = sylow_subgroup(lam.group, 2);
  CHECK(inner_classification_full_order(lam, sylow_full, p2).trivial());
  CHECK_THROWS_AS(inner_classification(lam, sylow_full, p2), NotPrimeContext);

  const auto v = main_hereditary_verdict(lam);
  CHECK_FALSE(v.hereditary);
  CHECK(v.delta_hereditary);
  REQUIRE(v.breakdown.size() == 1);
  CHECK(v.breakdown[0].p == 2);
  REQUIRE(v.breakdown[0].inner_witness);
  CHECK(to_cycle_string(*v.breakdown[0].inner_witness) == "(2 3)");
  CHECK_FALSE(local_hereditary_verdict(lam, p2));
}

TEST_CASE("representative choice does not change the verdict") {
  for (int d = 2; d <= 4; ++d)
    for (Int p : {2, 3}) {
      const auto lam = semiprime_lambda(d, hereditary_staircase({1, 1}), p);
      const auto base = main_hereditary_verdict(lam);
      std::size_t total = 0;
      for (const auto& o : orbit_decompose(lam)) total += o.orbit.size();
      CHECK(total == static_cast<std::size_t>(d));
      for (std::size_t r = 0; r < static_cast<std::size_t>(d); ++r) {
        VerdictOptions opts;
        opts.representative_choice = r;
        CHECK(main_hereditary_verdict(lam, opts).hereditary == base.hereditary);
        for (const auto& o : orbit_decompose(lam, r)) CHECK(validate_strong_grading(o.corner).strong);
      }
      // S_{d-1} has order divisible by p exactly when d-1 >= p.
      CHECK(base.hereditary == (d - 1 < p));
    }
}

TEST_CASE("corner Inn strictly contains full-order Inn") {
  for (int d = 3; d <= 4; ++d) {
    const auto lam = semiprime_lambda(d, hereditary_staircase({1, 1}), 2);
    const auto orbits = orbit_decompose(lam);
    const auto& corner = orbits[0].corner;
    const auto pc = sylow_subgroup(corner.group, 2);
    const auto pf = sylow_subgroup(lam.group, 2);
    CHECK(inner_classification(corner, pc, z_place(2)).inner.size() == pc.order());
    CHECK(inner_classification_full_order(lam, pf, z_place(2)).trivial());
  }
}

TEST_CASE("prime reduction: t = 1 verdict equals the prime verdict") {
  std::mt19937 rng(29);
  for (const auto& [name, g] : small_groups()) {
    const auto lam = random_crossed_product(g, rng);
    if (lam.delta.prime_blocks().size() != 1) continue;
    const auto a = main_hereditary_verdict(lam);
    const auto b = prime_hereditary_verdict(lam);
    CHECK(a.hereditary == b.hereditary);
    CHECK(a.breakdown.size() == b.breakdown.size());
  }
}
