#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "ssg/path_space.hpp"

using namespace ssg;

namespace {

  EventuallyPeriodicPath inf(Graph const& g, char const* text) {
    return parse_infinite_path(g, text);
  }

  struct GermSampler {
    System const& s;
    std::mt19937  rng;

    Path path(std::size_t lo, std::size_t hi) {
      Graph const& g = s.graph();
      Path         p = Path::vertex(0);
      std::size_t  n = lo + rng() % (hi - lo + 1);
      for (std::size_t i = 0; i < n; ++i) {
        auto const& in = g.edges_into(p.source());
        p.push_back(g, in[rng() % in.size()]);
      }
      return p;
    }
    GroupElement element() {
      std::string w;
      for (std::size_t i = 0, n = rng() % 5; i < n; ++i) {
        w += "abcd"[rng() % 4];
      }
      return s.parse_element(w.empty() ? "1" : w);
    }
    EventuallyPeriodicPath point() {
      return EventuallyPeriodicPath(s.graph(), path(0, 2), path(1, 2));
    }
    // A germ whose base is xi.
    GermElement germ_at(EventuallyPeriodicPath const& xi) {
      Path beta = xi.take(s.graph(), rng() % 3);
      return GermElement(SgeElement::triple(s, path(0, 2), element(), beta), xi);
    }
  };

}  // namespace

TEST_CASE("infinite paths: parsing and the group action") {
  auto          doc = fixtures::load("grigorchuk.system");
  System const& s   = doc.system;
  Graph const&  g   = s.graph();

  CHECK(format_infinite(g, inf(g, "(0)^inf")) == "(0)^inf");
  CHECK(inf(g, "01(01)^inf") == inf(g, "(01)^inf"));
  CHECK_THROWS_AS(inf(g, "0(1"), Error);

  auto a0 = g_act_infinite(s, s.parse_element("a"), inf(g, "(0)^inf"));
  REQUIRE(a0.path);
  CHECK(*a0.path == inf(g, "1(0)^inf"));
  auto id = g_act_infinite(s, s.group().identity(), inf(g, "10(110)^inf"));
  REQUIRE(id.path);
  CHECK(*id.path == inf(g, "10(110)^inf"));
  // b on 1^inf cycles through the states b, c, d.
  auto b1 = g_act_infinite(s, s.parse_element("b"), inf(g, "(1)^inf"));
  REQUIRE(b1.path);
  CHECK(*b1.path == inf(g, "(1)^inf"));
}

TEST_CASE("the infinite action restricts to the finite one") {
  auto          doc = fixtures::load("grigorchuk.system");
  System const& s   = doc.system;
  Graph const&  g   = s.graph();
  GermSampler   smp{s, std::mt19937(13)};
  for (int trial = 0; trial < 300; ++trial) {
    EventuallyPeriodicPath xi = smp.point();
    GroupElement           h  = smp.element();
    auto                   r  = g_act_infinite(s, h, xi);
    REQUIRE(r.path);
    std::size_t bound = 3 * (xi.prefix().length() + xi.cycle().length());
    for (std::size_t n = 0; n <= bound; ++n) {
      CHECK(r.path->take(g, n) == act_path(s, h, xi.take(g, n)));
    }
  }
}

TEST_CASE("germ examples") {
  auto          doc = fixtures::load("grigorchuk.system");
  System const& s   = doc.system;
  Graph const&  g   = s.graph();
  auto          z0  = inf(g, "(0)^inf");
  auto          z1  = inf(g, "(1)^inf");

  GermElement d0 = parse_germ(s, "[v; d; v] @ (0)^inf");
  CHECK(germ_equal(d0, unit_germ(s, z0)).is_yes());
  GermElement d1 = parse_germ(s, "[v; d; v] @ (1)^inf");
  CHECK(germ_equal(d1, unit_germ(s, z1)).is_no());
  CHECK(germ_equal(d0, d0).is_yes());
  CHECK(germ_equal(d0, unit_germ(s, z1)).is_no());

  GermElement dd = germ_compose(d0, d0);
  CHECK(germ_equal(dd, unit_germ(s, z0)).is_yes());
  CHECK(format_germ(d0) == "[v; d; v] @ (0)^inf");

  // [0; a; v] @ 0^inf sends 0^inf to 01^inf... and the composite with
  // its inverse is the unit at the target.
  GermElement u   = parse_germ(s, "[0; a; v] @ (0)^inf");
  auto        tgt = germ_target(u);
  CHECK(tgt == inf(g, "01(0)^inf"));
  CHECK(germ_equal(germ_compose(u, germ_inverse(u)), unit_germ(s, tgt)).is_yes());
  CHECK(germ_equal(germ_compose(germ_inverse(u), u), unit_germ(s, z0)).is_yes());

  try {
    germ_compose(u, u);
    FAIL("expected NonComposableGerms");
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::non_composable_germs);
  }
  try {
    parse_germ(s, "[v; d; 1] @ (0)^inf");
    FAIL("expected DomainMismatch");
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::domain_mismatch);
  }
}

TEST_CASE("germ composition is associative with neutral units") {
  auto          doc = fixtures::load("grigorchuk.system");
  System const& s   = doc.system;
  GermSampler   smp{s, std::mt19937(17)};
  for (int trial = 0; trial < 300; ++trial) {
    GermElement w = smp.germ_at(smp.point());
    GermElement v = smp.germ_at(germ_target(w));
    GermElement u = smp.germ_at(germ_target(v));
    Verdict     eq = germ_equal(germ_compose(germ_compose(u, v), w),
                            germ_compose(u, germ_compose(v, w)));
    CHECK(eq.is_yes());
    CHECK(germ_equal(germ_compose(unit_germ(s, germ_target(w)), w), w).is_yes());
    CHECK(germ_equal(germ_compose(w, unit_germ(s, w.base())), w).is_yes());
  }
}

TEST_CASE("germ equality is an equivalence on decisive samples") {
  auto          doc = fixtures::load("grigorchuk.system");
  System const& s   = doc.system;
  Graph const&  g   = s.graph();
  GermSampler   smp{s, std::mt19937(19)};
  auto          xi  = inf(g, "(0)^inf");
  std::vector<GermElement> germs;
  for (int i = 0; i < 25; ++i) {
    germs.push_back(smp.germ_at(xi));
  }
  std::size_t const     n = germs.size();
  std::vector<std::vector<int>> rel(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Verdict v = germ_equal(germs[i], germs[j]);
      REQUIRE_FALSE(v.is_unknown());
      rel[i][j] = v.is_yes();
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    CHECK(rel[i][i]);
    for (std::size_t j = 0; j < n; ++j) {
      CHECK(rel[i][j] == rel[j][i]);
      for (std::size_t k = 0; k < n; ++k) {
        if (rel[i][j] && rel[j][k]) {
          CHECK(rel[i][k]);
        }
      }
    }
  }
}

TEST_CASE("germ equality against finite cylinders") {
  // Oracle: two germs at xi agree iff their actions on (path, state)
  // pairs agree on some cylinder Z(xi|n); checked up to a depth where the
  // state pairs of this fixture are known to have repeated.
  auto          doc = fixtures::load("grigorchuk.system");
  System const& s   = doc.system;
  Graph const&  g   = s.graph();
  GermSampler   smp{s, std::mt19937(23)};
  for (int trial = 0; trial < 200; ++trial) {
    auto        xi = smp.point();
    GermElement u  = smp.germ_at(xi);
    GermElement v  = smp.germ_at(xi);
    bool        agree = false;
    for (std::size_t n = 2; n <= 40 && !agree; ++n) {
      Path gamma = xi.take(g, n);
      SgeElement e  = SgeElement::idempotent(s, gamma);
      agree = sge_equal(sge_mul(u.element(), e), sge_mul(v.element(), e)).is_yes();
    }
    Verdict eq = germ_equal(u, v);
    REQUIRE_FALSE(eq.is_unknown());
    CHECK(eq.is_yes() == agree);
  }
}

TEST_CASE("fixed points of semigroup elements") {
  auto          c1 = parse_system(R"(
    graph { vertices: v; edge l: v -> v; }
    backend finite { elements: 1; table { 1: 1; } generators: ; }
  )");
  System const& one = c1.system;
  SgeElement    t   = SgeElement::triple(one, parse_path(one.graph(), "l"),
                                    one.group().identity(), Path::vertex(0));
  auto          fp  = unique_fixed_point(t);
  REQUIRE(fp);
  CHECK(*fp == inf(one.graph(), "(l)^inf"));
  CHECK(isolated_fixed_point(t).is_yes());
  try {
    unique_fixed_point(sge_adjoint(t));
    FAIL("expected WrongShape");
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::wrong_shape);
  }

  auto          c2  = fixtures::load("cuntz-2.system");
  System const& two = c2.system;
  SgeElement    t2  = SgeElement::triple(two, Path::edge(two.graph(), 0),
                                     two.group().identity(), Path::vertex(0));
  CHECK(isolated_fixed_point(t2).is_no());

  auto          gr = fixtures::load("grigorchuk.system");
  System const& s  = gr.system;
  Graph const&  g  = s.graph();
  // (10, a, 1): alpha extends beta with gamma = 0, and a 0 = 1 with
  // trivial restriction, so the fixed point is 1 0 (1)^inf.
  SgeElement x = SgeElement::triple(s, parse_path(g, "10"), s.parse_element("a"),
                                    parse_path(g, "1"));
  auto       fx = unique_fixed_point(x);
  REQUIRE(fx);
  CHECK(*fx == inf(g, "10(1)^inf"));
  auto img = sge_act_infinite(x, *fx);
  REQUIRE(img.path);
  CHECK(*img.path == *fx);
  SgeElement y = SgeElement::triple(s, parse_path(g, "00"), s.parse_element("a"),
                                    parse_path(g, "1"));
  CHECK_FALSE(unique_fixed_point(y));
}
