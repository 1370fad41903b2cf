#include <doctest.h>

#include <chrono>

#include "builders.hpp"
#include "sgo/oracle.hpp"
#include "support.hpp"

using namespace sgo;
using namespace sgo::testing;

namespace {

using Table = std::vector<std::vector<std::vector<Int>>>;

// M_n(Z_p) with basis e_ij, index i*n+j.
StructureConstantOrder matrix_algebra(int n, Int p) {
  const int r = n * n;
  Table t(static_cast<std::size_t>(r), std::vector<std::vector<Int>>(static_cast<std::size_t>(r), std::vector<Int>(static_cast<std::size_t>(r), 0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) t[static_cast<std::size_t>(i * n + j)][static_cast<std::size_t>(j * n + k)][static_cast<std::size_t>(i * n + k)] = 1;
  OracleVector one(static_cast<std::size_t>(r), 0);
  for (int i = 0; i < n; ++i) one[static_cast<std::size_t>(i * n + i)] = 1;
  return from_dense_table(p, t, one);
}

// Z_p[x]/(x^2 - c): basis 1, x.
StructureConstantOrder quadratic(Int p, Int c) {
  Table t = {{{1, 0}, {0, 1}}, {{0, 1}, {c, 0}}};
  return from_dense_table(p, t, {1, 0});
}

GradedOrder trivially_graded(const GlobalTiledOrder& d, const MaximalIdeal& m) {
  const auto g = FiniteGroup::trivial();
  return make_graded_order(g, d, {d.data()}, trivial_twist(*g), m);
}

GradedOrder group_ring(const GroupPtr& g, Int p) {
  const auto d = local_order(validate_order(IntMatrix::Zero(1, 1)), p);
  CrossedProductDatum datum;
  for (std::size_t k = 0; k < g->generators().size(); ++k) datum.generator_images.push_back(permutation_matrix(identity_perm(1)));
  return construct_crossed_product(d, g, datum, z_place(p));
}

IntMatrix mat(std::initializer_list<std::initializer_list<Int>> rows) {
  IntMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& r : rows) {
    Eigen::Index j = 0;
    for (Int v : r) m(i, j++) = v;
    ++i;
  }
  return m;
}

bool oracle_on_tiled(const IntMatrix& l, Int p) {
  const auto lam = trivially_graded(local_order(validate_order(l, z_place(p)), p), z_place(p));
  return hereditary_oracle(flatten(lam, z_place(p)));
}

}  // namespace

TEST_CASE("radical of small algebras") {
  for (int n = 1; n <= 3; ++n) {
    const auto a = matrix_algebra(n, 3);
    check_associativity(a);
    CHECK(radical_mod_m(a).empty());
    CHECK(hereditary_oracle(a));
  }
  // Z_2[x]/(x^2): radical mod 2 is spanned by x.
  const auto dual = quadratic(2, 0);
  const auto r = radical_mod_m(dual);
  REQUIRE(r.size() == 1);
  CHECK(r[0] == OracleVector{0, 1});
  CHECK(certify_radical(dual, r).ok());
  // Z_p[x]/(x^2 - p) is the ramified DVR: hereditary with radical x.
  const auto dvr = quadratic(3, 3);
  CHECK(radical_mod_m(dvr).size() == 1);
  CHECK(hereditary_oracle(dvr));
  // Z_3[x]/(x^2 - 2): unramified extension, residue field F_9.
  CHECK(radical_mod_m(quadratic(3, 2)).empty());
  // Z_2[x]/(x^2 - 1): not a maximal order at 2.
  CHECK(radical_mod_m(quadratic(2, 1)).size() == 1);
  CHECK_FALSE(hereditary_oracle(quadratic(2, 1)));
}

TEST_CASE("associativity failures are reported") {
  Table t = {{{1, 0}, {0, 1}}, {{0, 1}, {1, 1}}};
  auto a = from_dense_table(2, t, {1, 0});
  CHECK_NOTHROW(check_associativity(a));  // commutative, x^2 = 1 + x
  Table bad = {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}, {{0, 0, 1}, {0, 0, 0}, {0, 0, 0}}};
  CHECK_THROWS_AS(check_associativity(from_dense_table(5, bad, {1, 0, 0})), AssociativityFailure);
}

TEST_CASE("flattened staircase") {
  const auto s = hereditary_staircase({1, 1}, z_place(2));
  const auto a = flatten(trivially_graded(local_order(s, 2), z_place(2)), z_place(2));
  CHECK(a.rank == 4);
  CHECK_NOTHROW(check_associativity(a));
  const auto r = radical_mod_m(a);
  CHECK(r.size() == 2);
  const auto cert = certify_radical(a, r);
  CHECK(cert.ok());
  CHECK(cert.nilpotency_index == 2);
  CHECK(hereditary_oracle(a));

  CHECK(oracle_on_tiled(mat({{0, 0}, {1, 0}}), 2));
  CHECK_FALSE(oracle_on_tiled(mat({{0, 0}, {2, 0}}), 2));
  CHECK_FALSE(oracle_on_tiled(mat({{0, 0}, {2, 0}}), 5));
  CHECK(oracle_on_tiled(mat({{0, 0, 0}, {1, 0, 0}, {1, 1, 0}}), 3));
  CHECK_FALSE(oracle_on_tiled(mat({{0, 0, 0}, {1, 0, 0}, {2, 1, 0}}), 3));
}

TEST_CASE("group rings at the characteristic") {
  CHECK_FALSE(hereditary_oracle(flatten(group_ring(FiniteGroup::cyclic(2), 2), z_place(2))));
  CHECK(hereditary_oracle(flatten(group_ring(FiniteGroup::cyclic(2), 3), z_place(3))));
  CHECK(hereditary_oracle(flatten(group_ring(FiniteGroup::symmetric(3), 5), z_place(5))));
  CHECK_FALSE(hereditary_oracle(flatten(group_ring(FiniteGroup::symmetric(3), 3), z_place(3))));
  const auto a = flatten(group_ring(FiniteGroup::cyclic(4), 2), z_place(2));
  const auto r = radical_mod_m(a);
  CHECK(r.size() == 3);
  CHECK(certify_radical(a, r).ok());
}

TEST_CASE("exhaustive tiled sweep against the closed form") {
  int count = 0;
  for (int n = 1; n <= 4; ++n)
    for_each_tiled_order(n, 2, [&](const IntMatrix& l) {
      for (Int p : {2, 3}) {
        const bool expect = is_hereditary_local(validate_order(l));
        INFO(to_string(l));
        CHECK(oracle_on_tiled(l, p) == expect);
      }
      ++count;
    });
  CHECK(count > 100);
}

TEST_CASE("graded examples") {
  const auto nb = nonbasic_lambda();
  const auto a = flatten(nb, z_place(2));
  CHECK_NOTHROW(check_associativity(a));
  CHECK(hereditary_oracle(a) == local_hereditary_verdict(nb, z_place(2)));

  const auto sp = semiprime_lambda(3, hereditary_staircase({1}), 2);
  const auto b = flatten(sp, z_place(2));
  CHECK(b.rank == 18);
  CHECK(hereditary_oracle(b) == local_hereditary_verdict(sp, z_place(2)));
  CHECK_FALSE(hereditary_oracle(b));
  const auto sp3 = semiprime_lambda(3, hereditary_staircase({1}), 3);
  CHECK(hereditary_oracle(flatten(sp3, z_place(3))) == local_hereditary_verdict(sp3, z_place(3)));
  CHECK(hereditary_oracle(flatten(sp3, z_place(3))));
}

TEST_CASE("outer example at both places over 5") {
  const auto lam = outer_lambda();
  CHECK(flattened_rank(lam) == 125);
  for (const auto& m : {place_p(), place_q()}) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto a = flatten(lam, m);
    CHECK(a.rank == 125);
    const auto r = radical_mod_m(a);
    CHECK(certify_radical(a, r).ok());
    INFO(m.label());
    CHECK(hereditary_oracle(a) == local_hereditary_verdict(lam, m));
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    MESSAGE(m.label() << " " << secs << "s");
  }
  CHECK_FALSE(hereditary_oracle(flatten(lam, place_p())));
  CHECK(hereditary_oracle(flatten(lam, place_q())));
}

TEST_CASE("unsupported places and the rank cap") {
  const auto lam = outer_lambda();
  CHECK_THROWS_AS(flatten(lam, parse_place(RingKind::GaussianIntegers, "1+i")), UnsupportedPlace);
  CHECK_THROWS_AS(flatten(lam, parse_place(RingKind::GaussianIntegers, "3")), UnsupportedPlace);
  CHECK_THROWS_AS(flatten(outer_lambda(7), place_p()), RankCapExceeded);
}

TEST_CASE("random crossed products agree with the verdict") {
  std::mt19937 rng(20261019);
  int compared = 0;
  for (const auto& [name, g] : small_groups())
    for (int rep = 0; rep < 6; ++rep) {
      const auto lam = random_crossed_product(g, rng);
      if (flattened_rank(lam) > kOracleRankCap) continue;
      const auto m = *lam.local_place;
      INFO(name << " rep " << rep << " delta " << to_string(lam.delta.data().local(m)));
      CHECK(hereditary_oracle(flatten(lam, m)) == local_hereditary_verdict(lam, m));
      ++compared;
    }
  MESSAGE("compared " << compared);
  CHECK(compared >= 40);
}
