#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "ssg/desingularize.hpp"

using namespace ssg;

namespace {

  std::string trivial(std::string const& graph) {
    return "graph { " + graph + " } backend finite { elements: 1; table { 1: 1; } generators: ; }";
  }

  bool source_free(Graph const& g) {
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      if (g.is_source(v)) {
        return false;
      }
    }
    return true;
  }

  bool is_cap(std::string const& name) {
    auto p = name.rfind('_');
    return p != std::string::npos && p + 1 < name.size() && name[p + 1] == 'c';
  }

  // Level n without its caps sits inside level m > n.
  void check_coherent(Graph const& small, Graph const& big) {
    for (VertexId v = 0; v < small.num_vertices(); ++v) {
      CHECK(big.find_vertex(small.vertex_name(v)));
    }
    for (EdgeId e = 0; e < small.num_edges(); ++e) {
      std::string const& name = small.edge_name(e);
      if (is_cap(name)) {
        continue;
      }
      auto f = big.find_edge(name);
      REQUIRE(f);
      CHECK(big.vertex_name(big.source(*f)) == small.vertex_name(small.source(e)));
      CHECK(big.vertex_name(big.range(*f)) == small.vertex_name(small.range(e)));
    }
  }

}  // namespace

TEST_CASE("a classical tail at a source") {
  auto       doc = parse_system(trivial("vertices: x w; edge a: x -> w; edge l: w -> w; "
                                        "edge k: w -> w;"));
  TailSystem t   = desingularize_source(doc.system, 0);
  REQUIRE(t.tails().size() == 1);
  CHECK(t.tails()[0].orbit == std::vector<VertexId>{0});
  for (std::size_t n = 1; n <= 6; ++n) {
    auto         s = t.materialize(n);
    Graph const& F = s->graph();
    CHECK(F.num_vertices() == 2 + n);
    CHECK(F.num_edges() == 3 + n + 2);
    CHECK(source_free(F));
    CHECK(condition_L(F) == condition_L(doc.system.graph()));
    auto e1 = F.find_edge("x_e1");
    REQUIRE(e1);
    CHECK(F.range(*e1) == 0);
    CHECK(F.vertex_name(F.source(*e1)) == "x_t1");
    if (n > 1) {
      check_coherent(F, t.materialize(n + 1)->graph());
    }
  }
  // The cache hands out the same object.
  CHECK(t.materialize(3).get() == t.materialize(3).get());
  CHECK_THROWS_AS(t.materialize(0), Error);

  // A circuit in the core never reaches the tail, so the desingularized
  // graph is not weakly G-transitive.
  PropertyReport r = countable_property_bridge(t, 3);
  CHECK(r.minimal.verdict.is_no());
  CHECK(r.minimal.verdict.note.find("never dominates") != std::string::npos);
  CHECK(r.locally_contracting.verdict.is_yes());
  CHECK(r.warnings.front().find("desingularized") != std::string::npos);
}

TEST_CASE("mirrored tails for two swapped sources") {
  auto doc = parse_system(R"(
    graph { vertices: x y w; edge a: x -> w; edge b: y -> w; edge l: w -> w; }
    backend finite { elements: 1 s; table { 1: 1 s; s: s 1; } generators: s; }
    action s { vertex x -> y; vertex y -> x; edge a -> b; edge b -> a; }
    cocycle s { a: s; b: s; l: s; }
  )");
  TailSystem t = desingularize_sources(doc.system);
  REQUIRE(t.tails().size() == 1);
  CHECK(t.tails()[0].orbit == std::vector<VertexId>{0, 1});
  auto          s  = t.materialize(4);
  Graph const&  F  = s->graph();
  GroupElement  sw = s->parse_element("s");
  CHECK(source_free(F));
  for (std::size_t i = 1; i <= 4; ++i) {
    EdgeId ex = *F.find_edge("x_e" + std::to_string(i));
    EdgeId ey = *F.find_edge("y_e" + std::to_string(i));
    CHECK(s->act_edge(sw, ex) == ey);
    CHECK(s->act_edge(sw, ey) == ex);
    // The tail cocycle is the acting element itself.
    CHECK(s->format(s->restrict(sw, ex)) == "s");
  }
  CHECK(s->act_edge(sw, *F.find_edge("x_c0")) == *F.find_edge("y_c0"));
}

TEST_CASE("desingularization errors") {
  auto cuntz = fixtures::load("cuntz-2.system");
  try {
    desingularize_source(cuntz.system, 0);
    FAIL("expected NotASource");
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::not_a_source);
  }
  try {
    desingularize_sources(cuntz.system);
    FAIL("expected NotASource");
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::not_a_source);
  }
  ReceiverFamily fam{[](VertexId, std::size_t) { return VertexId(0); },
                     [&](std::size_t, VertexId, std::size_t) {
                       return cuntz.system.group().identity();
                     }};
  try {
    desingularize_infinite_receiver(cuntz.system, 0, fam);
    FAIL("expected NotInfiniteReceiver");
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::not_infinite_receiver);
  }
}

TEST_CASE("replacing infinitely many parallel edges") {
  // Core: v receives nothing yet; w has a loop.  The family is a_i: w -> v
  // for every i >= 1.
  auto           doc = parse_system(trivial("vertices: v w; edge l: w -> w;"));
  System const&  E   = doc.system;
  ReceiverFamily fam{[](VertexId, std::size_t) { return VertexId(1); },
                     [&](std::size_t, VertexId, std::size_t) { return E.group().identity(); }};
  TailSystem t = desingularize_infinite_receiver(E, 0, fam);
  auto       s = t.materialize(3);
  Graph const& F = s->graph();
  CHECK(F.edges_into(0).size() == 2);  // e1 and f1: v is regular
  CHECK(F.num_vertices() == 5);
  CHECK(F.num_edges() == 1 + 3 + 4);
  CHECK(source_free(F));
  for (std::size_t i = 2; i <= 4; ++i) {
    EdgeId f = *F.find_edge("v_f" + std::to_string(i));
    CHECK(F.vertex_name(F.range(f)) == "v_t" + std::to_string(i - 1));
    CHECK(F.source(f) == 1);
  }
  CHECK_THROWS_AS(desingularize_infinite_receiver(E, 1, fam), Error);
}

TEST_CASE("restrictions along the connecting paths") {
  // Z/2 acts trivially on vertices and swaps the loops at w; the i-th edge
  // into v restricts s to s for odd i and to 1 for even i.
  auto doc = parse_system(R"(
    graph { vertices: v w; edge p: w -> w; edge q: w -> w; }
    backend finite { elements: 1 s; table { 1: 1 s; s: s 1; } generators: s; }
    action s { edge p -> q; edge q -> p; }
    cocycle s { p: s; q: s; }
  )");
  System const&  E = doc.system;
  GroupElement   sw = E.parse_element("s");
  ReceiverFamily fam{[](VertexId, std::size_t) { return VertexId(1); },
                     [&](std::size_t, VertexId, std::size_t i) {
                       return i % 2 == 1 ? sw : E.group().identity();
                     }};
  TailSystem t = desingularize_infinite_receiver(E, 0, fam);
  std::size_t const n = 5;
  auto          s = t.materialize(n);
  Graph const&  F = s->graph();
  for (std::size_t i = 1; i <= n + 1; ++i) {
    std::vector<EdgeId> alpha;
    for (std::size_t j = 1; j < i; ++j) {
      alpha.push_back(*F.find_edge("v_e" + std::to_string(j)));
    }
    alpha.push_back(*F.find_edge("v_f" + std::to_string(i)));
    Path a = Path::from_edges(F, alpha);
    CHECK(a.range() == 0);
    for (auto const& h : {s->group().identity(), s->parse_element("s")}) {
      GroupElement expect = fam.restriction(0, 0, i);
      if (s->format(h) == "1") {
        expect = E.group().identity();
      }
      CHECK(s->format(restrict_path(*s, h, a)) == E.format(expect));
      CHECK(act_path(*s, h, a) == a);
    }
  }
}

TEST_CASE("random systems with one source") {
  std::mt19937 rng(29);
  int          made = 0;
  while (made < 20) {
    std::size_t nv = 2 + rng() % 4;
    std::string text = "vertices:";
    for (std::size_t v = 0; v < nv; ++v) {
      text += " v" + std::to_string(v);
    }
    text += ";";
    std::vector<bool> fed(nv);
    std::size_t       ne = 1 + rng() % 8;
    for (std::size_t i = 0; i < ne; ++i) {
      std::size_t d = rng() % nv, r = 1 + rng() % (nv - 1);  // v0 never receives
      fed[r] = true;
      text += " edge e" + std::to_string(i) + ": v" + std::to_string(d) + " -> v"
              + std::to_string(r) + ";";
    }
    if (std::count(fed.begin() + 1, fed.end(), true) != int(nv) - 1) {
      continue;
    }
    ++made;
    auto       doc = parse_system(trivial(text));
    TailSystem t   = desingularize_source(doc.system, 0);
    for (std::size_t n = 1; n <= 6; ++n) {
      auto s = t.materialize(n);
      CHECK_NOTHROW(validate_system(*s));
      CHECK(source_free(s->graph()));
      CHECK(condition_L(s->graph()) == condition_L(doc.system.graph()));
      if (n < 6) {
        check_coherent(s->graph(), t.materialize(n + 1)->graph());
      }
    }
  }
}
