#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "ssg/abelian.hpp"

using namespace ssg;

namespace {

  std::vector<std::vector<BigInt>> random_dense(std::mt19937& rng,
                                                std::size_t   r,
                                                std::size_t   c,
                                                int           lo,
                                                int           hi) {
    std::uniform_int_distribution<int> dist(lo, hi);
    std::vector<std::vector<BigInt>>   m(r, std::vector<BigInt>(c));
    for (auto& row : m) {
      for (auto& x : row) {
        x = dist(rng);
      }
    }
    return m;
  }

  KatsuraData random_katsura(std::mt19937& rng, std::size_t n) {
    std::uniform_int_distribution<int> a(0, 5), b(-5, 5);
    KatsuraData                        d;
    d.A.assign(n, std::vector<BigInt>(n));
    d.B.assign(n, std::vector<BigInt>(n));
    for (std::size_t i = 0; i < n; ++i) {
      while (true) {
        for (std::size_t j = 0; j < n; ++j) {
          d.A[i][j] = a(rng);
        }
        if (std::any_of(d.A[i].begin(), d.A[i].end(), [](auto const& x) { return x != 0; })) {
          break;
        }
      }
      for (std::size_t j = 0; j < n; ++j) {
        d.B[i][j] = d.A[i][j] == 0 ? 0 : b(rng);
      }
    }
    return d;
  }

  IntMatrix mat(std::vector<std::vector<BigInt>> const& rows) {
    return IntMatrix(rows);
  }

  FgAbelianGroup grp(std::size_t rank, std::vector<int> torsion = {}) {
    FgAbelianGroup g;
    g.rank = rank;
    for (int t : torsion) {
      g.torsion.push_back(t);
    }
    return g;
  }

}  // namespace

TEST_CASE("Smith normal form: U M V = D with a divisibility chain") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    auto        dense = random_dense(rng, r, c, -6, 6);
    IntMatrix   m(dense);
    SmithForm   f = smith_normal_form(m);
    CHECK(f.U * m * f.V == f.D);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < c; ++j) {
        if (i != j || i >= f.rank) {
          CHECK(f.D(i, j) == 0);
        }
      }
    }
    for (std::size_t i = 0; i < f.rank; ++i) {
      CHECK(f.D(i, i) > 0);
      if (i + 1 < f.rank) {
        CHECK(f.D(i + 1, i + 1) % f.D(i, i) == 0);
      }
    }
    auto dense_of = [](IntMatrix const& x) {
      std::vector<std::vector<BigInt>> out(x.rows(), std::vector<BigInt>(x.cols()));
      for (std::size_t i = 0; i < x.rows(); ++i) {
        for (std::size_t j = 0; j < x.cols(); ++j) {
          out[i][j] = x(i, j);
        }
      }
      return out;
    };
    BigInt du = oracles::det(dense_of(f.U)), dv = oracles::det(dense_of(f.V));
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));
    CHECK(coker(m) == oracles::coker(dense, r, c));
  }
}

TEST_CASE("Smith normal form keeps entries small on 6 x 6 inputs") {
  // With a pivot fixed once per step this input drove entries past 10^50
  // and the reduction did not finish.
  IntMatrix m({{-4, -10, 0, -9, -9, -10}, {7, 11, 8, 4, -7, -5},   {-8, 10, 3, -6, 7, 4},
               {2, 0, 9, -5, 0, -3},      {7, 0, 7, -6, -3, 4},    {6, -4, 9, -5, -2, 10}});
  std::vector<std::vector<BigInt>> dense(6, std::vector<BigInt>(6));
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      dense[i][j] = m(i, j);
    }
  }
  SmithForm f = smith_normal_form(m);
  CHECK(f.U * m * f.V == f.D);
  CHECK(coker(m) == oracles::coker(dense, 6, 6));

  std::mt19937 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    auto      d = random_dense(rng, 6, 6, -10, 10);
    IntMatrix x(d);
    CHECK(coker(x) == oracles::coker(d, 6, 6));
  }
}

TEST_CASE("abelian groups in invariant factor form") {
  CHECK(make_abelian_group(0, {2, 3}) == grp(0, {6}));
  CHECK(make_abelian_group(1, {4, 6}) == grp(1, {2, 12}));
  CHECK(make_abelian_group(0, {1, 0, -3}) == grp(1, {3}));
  CHECK(format_group(grp(0)) == "0");
  CHECK(format_group(grp(1)) == "Z");
  CHECK(format_group(grp(2, {2, 6})) == "Z^2 + Z/2 + Z/6");
  CHECK(direct_sum(grp(1, {2}), grp(0, {3})) == grp(1, {6}));

  IntMatrix m({{2, 0}, {0, 3}});
  CHECK(coker(m) == grp(0, {6}));
  CHECK(ker(m) == grp(0));
  CHECK(ker(mat({{1, 1}})) == grp(1));

  auto x = solve_integer(mat({{2, 1}, {1, 1}}), {BigInt(3), BigInt(2)});
  REQUIRE(x);
  CHECK((*x)[0] == 1);
  CHECK((*x)[1] == 1);
  CHECK_FALSE(solve_integer(mat({{2}}), {BigInt(1)}));
  CHECK_THROWS_AS(mat({{1, 2}, {3}}), Error);
  CHECK_THROWS_AS(IntMatrix(2, 3) * IntMatrix(2, 3), Error);
}

TEST_CASE("solve_integer against random right-hand sides") {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    IntMatrix   m(random_dense(rng, r, c, -4, 4));
    auto        xs = random_dense(rng, c, 1, -5, 5);
    IntMatrix   x(xs);
    IntMatrix   b = m * x;
    std::vector<BigInt> rhs(r);
    for (std::size_t i = 0; i < r; ++i) {
      rhs[i] = b(i, 0);
    }
    auto y = solve_integer(m, rhs);
    REQUIRE(y);
    for (std::size_t i = 0; i < r; ++i) {
      BigInt acc = 0;
      for (std::size_t j = 0; j < c; ++j) {
        acc += m(i, j) * (*y)[j];
      }
      CHECK(acc == rhs[i]);
    }
  }
}

TEST_CASE("Katsura K-theory") {
  KatsuraData simple{{{2}}, {{1}}};
  KGroups     k = katsura_ktheory(simple);
  CHECK(k.K0 == grp(1));
  CHECK(k.K1 == grp(1));

  // A = [4], B = [0] gives the Cuntz algebra O_4.
  KGroups on = katsura_ktheory({{{4}}, {{0}}});
  CHECK(on.K0 == grp(0, {3}));
  CHECK(on.K1 == grp(0));

  auto    pair = fixtures::data("katsura-noncommutative.matrices");
  KGroups kn   = katsura_ktheory(load_matrix_pair(pair));
  auto    m    = load_matrix_pair(pair);
  CHECK(kn == oracles::katsura_k(m.A, m.B));

  CHECK_THROWS_AS(katsura_ktheory({{{0}}, {{0}}}), Error);
  try {
    katsura_ktheory({{{1, 0}, {0, 1}}, {{1, 1}, {0, 1}}});
    FAIL("expected Condition0Violated");
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::condition0_violated);
  }
}

TEST_CASE("Katsura K-theory against determinantal divisors") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    KatsuraData d = random_katsura(rng, 1 + rng() % 4);
    CHECK(katsura_ktheory(d) == oracles::katsura_k(d.A, d.B));
  }
}

TEST_CASE("the batch kernel agrees with the serial reference") {
  std::mt19937             rng(43);
  std::vector<KatsuraData> batch;
  for (int i = 0; i < 64; ++i) {
    batch.push_back(random_katsura(rng, 1 + rng() % 4));
  }
  CHECK(katsura_ktheory_batch(batch) == katsura_ktheory_batch_serial(batch));
  batch.push_back({{{0}}, {{0}}});
  CHECK_THROWS_AS(katsura_ktheory_batch(batch), Error);
  CHECK_THROWS_AS(katsura_ktheory_batch_serial(batch), Error);
}

TEST_CASE("Katsura homology") {
  // Without zero rows the K-groups from homology match the direct formula.
  std::mt19937 rng(47);
  for (int trial = 0; trial < 60; ++trial) {
    KatsuraData     d = random_katsura(rng, 1 + rng() % 4);
    KatsuraHomology h = katsura_homology(d);
    KGroups         k = katsura_ktheory(d);
    CHECK(h.removed_rows.empty());
    CHECK(h.K0 == k.K0);
    CHECK(h.K1 == k.K1);
    CHECK(h.K0 == direct_sum(h.H0, h.H2));
    CHECK(h.K1 == h.H1);
  }
  // A zero row: the second vertex receives nothing.  The remaining column
  // of id - A'^T is (0, -1) and that of id - B'^T is (1, 0).
  KatsuraHomology z = katsura_homology({{{1, 1}, {0, 0}}, {{0, 0}, {0, 0}}});
  CHECK(z.removed_rows == std::vector<std::size_t>{1});
  CHECK(z.H0 == grp(1));
  CHECK(z.H1 == grp(1));
  CHECK(z.H2 == grp(0));
}

TEST_CASE("H0 of one-vertex systems from both formulas") {
  for (std::size_t n = 2; n <= 8; ++n) {
    std::string text = "graph { vertices: v;";
    for (std::size_t i = 0; i < n; ++i) {
      text += " edge e" + std::to_string(i) + ": v -> v;";
    }
    text += " } backend finite { elements: 1; table { 1: 1; } generators: ; }";
    auto    doc = parse_system(text);
    PhiMaps pm  = phi_maps(doc.system);
    auto    h   = katsura_homology({{{BigInt(n)}}, {{1}}});
    FgAbelianGroup expect = n == 2 ? grp(0) : grp(0, {int(n) - 1});
    CHECK(pm.H0 == expect);
    CHECK(h.H0 == expect);
  }
}

TEST_CASE("phi maps of the Grigorchuk action") {
  auto      doc = fixtures::load("grigorchuk.system");
  PhiMaps   pm  = phi_maps(doc.system, &*doc.abelianization);
  IntMatrix phi0 = mat({{2}});
  CHECK(pm.phi0 == phi0);
  CHECK(pm.H0 == grp(0));
  REQUIRE(pm.phi1);
  // a -> 0, b -> a + c, c -> a + d = a + b + c.
  IntMatrix phi1 = mat({{0, 1, 1}, {0, 0, 1}, {0, 1, 1}});
  CHECK(*pm.phi1 == phi1);
  REQUIRE(pm.H1);
  CHECK(*pm.H1 == grp(0));

  Abelianization bad = *doc.abelianization;
  bad.images[3]      = {0, 1, 0};
  try {
    phi_maps(doc.system, &bad);
    FAIL("expected AbelianizationInconsistent");
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::abelianization_inconsistent);
  }
}

TEST_CASE("phi0 counts edges between orbits") {
  // Z/2 swaps x and y; both receive one edge from z, and z has a loop.
  auto doc = parse_system(R"(
    graph { vertices: x y z; edge f: z -> x; edge g: z -> y; edge l: z -> z; }
    backend finite { elements: 1 s; table { 1: 1 s; s: s 1; } generators: s; }
    action s { vertex x -> y; vertex y -> x; edge f -> g; edge g -> f; }
    cocycle s { f: s; g: s; l: s; }
  )");
  PhiMaps pm = phi_maps(doc.system);
  CHECK(pm.orbit_reps == std::vector<VertexId>{0, 2});
  CHECK(pm.regular_reps == std::vector<VertexId>{0, 2});
  CHECK(pm.phi0 == mat({{0, 0}, {1, 1}}));
}

TEST_CASE("the six-term sequence in the split case") {
  auto r = les_assemble(grp(1), grp(0), mat({{3}}), IntMatrix(0, 0));
  REQUIRE(r.groups);
  CHECK(r.groups->K0 == grp(0, {2}));
  CHECK(r.groups->K1 == grp(0));
  auto ext = les_assemble(grp(1), grp(1), mat({{3}}), mat({{1}}));
  CHECK_FALSE(ext.groups);
  CHECK(ext.note.find("extension") != std::string::npos);
  CHECK_THROWS_AS(les_assemble(grp(2), grp(0), mat({{3}}), IntMatrix(0, 0)),
                  Error);
}
