#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "ssg/katsura.hpp"

using namespace ssg;

namespace {

  KatsuraData paper_pair() {
    return load_matrix_pair(fixtures::data("katsura-noncommutative.matrices"));
  }

  EdgeId edge(System const& s, int i, int j, int n) {
    auto e = s.graph().find_edge("e" + std::to_string(i) + "_" + std::to_string(j) + "_"
                                 + std::to_string(n));
    REQUIRE(e);
    return *e;
  }

  ErrorCode code_of(KatsuraData const& d) {
    try {
      check_condition0(d);
    } catch (Error const& e) {
      return e.code();
    }
    return ErrorCode::invalid_argument;
  }

}  // namespace

TEST_CASE("condition (0)") {
  CHECK_NOTHROW(check_condition0(paper_pair()));
  CHECK(code_of({{{1, 0}}, {{1, 0}}}) == ErrorCode::shape_mismatch);
  CHECK(code_of({{{1}}, {{1, 0}, {0, 1}}}) == ErrorCode::shape_mismatch);
  CHECK(code_of({{{-1}}, {{1}}}) == ErrorCode::condition0_violated);
  CHECK(code_of({{{1, 0}, {0, 0}}, {{1, 0}, {0, 0}}}) == ErrorCode::condition0_violated);
  CHECK(code_of({{{1, 0}, {1, 1}}, {{1, 2}, {0, 1}}}) == ErrorCode::condition0_violated);
}

TEST_CASE("floor division") {
  for (int x = -40; x <= 40; ++x) {
    for (int y = 1; y <= 7; ++y) {
      auto [k, r] = floor_divmod(x, y);
      // Oracle: step k down from above until k y <= x.
      int kk = 40;
      while (kk * y > x) {
        --kk;
      }
      CHECK(k == kk);
      CHECK(r == x - kk * y);
    }
  }
}

TEST_CASE("the Katsura system of the noncommutative example") {
  KatsuraData d = paper_pair();
  System      s = build_katsura(d);
  CHECK(s.graph().num_vertices() == 3);
  CHECK(s.graph().num_edges() == 11);
  CHECK(s.assertions().amenable);
  CHECK(kirchberg_precheck(d));

  // Rendered by hand from the matrices.  The loops e_ii carry two edges
  // swapped by 1 with cocycle 0 then 1; every other edge is fixed.
  std::vector<std::string> expect = {
      "1.e11^0 = e11^1, phi(1, e11^0) = 0", "1.e11^1 = e11^0, phi(1, e11^1) = 1",
      "1.e12 = e12, phi(1, e12) = 2",       "1.e21 = e21, phi(1, e21) = 2",
      "1.e22^0 = e22^1, phi(1, e22^0) = 0", "1.e22^1 = e22^0, phi(1, e22^1) = 1",
      "1.e23 = e23, phi(1, e23) = 2",       "1.e31 = e31, phi(1, e31) = 0",
      "1.e32 = e32, phi(1, e32) = 2",       "1.e33^0 = e33^1, phi(1, e33^0) = 0",
      "1.e33^1 = e33^0, phi(1, e33^1) = 1"};
  CHECK(katsura_generator_table(s, d) == expect);

  // Edges go from j to i.
  EdgeId e12 = edge(s, 1, 2, 0);
  CHECK(s.graph().source(e12) == 1);
  CHECK(s.graph().range(e12) == 0);
}

TEST_CASE("the action of m agrees with m-fold rotation") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t const n = 1 + rng() % 3;
    KatsuraData       d;
    d.A.assign(n, std::vector<BigInt>(n));
    d.B.assign(n, std::vector<BigInt>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        d.A[i][j] = (i == j) ? 1 + rng() % 3 : rng() % 3;
        d.B[i][j] = d.A[i][j] == 0 ? 0 : int(rng() % 9) - 4;
      }
    }
    System s = build_katsura(d);
    for (EdgeId e = 0; e < s.graph().num_edges(); ++e) {
      // Oracle: apply the generator m times, summing the cocycle.
      EdgeId       f   = e;
      BigInt       phi = 0;
      GroupElement one = s.group().generator(0);
      for (int m = 1; m <= 12; ++m) {
        phi += s.restrict(one, f).integer();
        f = s.act_edge(one, f);
        GroupElement g = s.parse_element(std::to_string(m));
        CHECK(s.act_edge(g, e) == f);
        CHECK(s.restrict(g, e).integer() == phi);
      }
    }
  }
}

TEST_CASE("the cocycle identity on Katsura systems") {
  System s = build_katsura(paper_pair());
  for (int m = -6; m <= 6; ++m) {
    for (int k = -6; k <= 6; ++k) {
      GroupElement g = s.parse_element(std::to_string(m));
      GroupElement h = s.parse_element(std::to_string(k));
      for (EdgeId e = 0; e < s.graph().num_edges(); ++e) {
        GroupElement gh = s.group().mul(g, h);
        CHECK(s.act_edge(gh, e) == s.act_edge(g, s.act_edge(h, e)));
        CHECK(s.restrict(gh, e).integer()
              == s.restrict(g, s.act_edge(h, e)).integer()
                     + s.restrict(h, e).integer());
      }
    }
  }
}

TEST_CASE("Kirchberg precheck") {
  CHECK_FALSE(kirchberg_precheck({{{1}}, {{1}}}));
  CHECK_FALSE(kirchberg_precheck({{{2}}, {{3}}}));
  CHECK(kirchberg_precheck({{{2}}, {{1}}}));
  // Not irreducible: nothing reaches 2 from 1.
  CHECK_FALSE(kirchberg_precheck({{{2, 1}, {0, 2}}, {{1, 0}, {0, 1}}}));
}
