#include <chrono>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "graph_oracles.hpp"
#include "ssg/katsura.hpp"
#include "ssg/properties.hpp"

using namespace ssg;

using graph_oracles::RandomGraph;
using graph_oracles::brute_condition_L;
using graph_oracles::brute_minimal;
using graph_oracles::random_graph;

TEST_CASE("Grigorchuk properties") {
  auto          doc = fixtures::load("grigorchuk.system");
  System const& s   = doc.system;
  auto          h   = check_hausdorff(s);
  CHECK(h.verdict.is_no());
  CHECK(h.verdict.note.rfind("b ", 0) == 0);
  CHECK(check_minimal(s).verdict.is_yes());
  auto e = check_effective(s);
  CHECK(e.verdict.is_yes());
  CHECK(e.rule == "single vertex with a faithful action");
  CHECK(check_locally_contracting(s).verdict.is_yes());

  PropertyReport r = simplicity_report(s, true);
  CHECK(r.simple_cstar.verdict.is_unknown());
  CHECK(r.simple_algebraic.verdict.is_unknown());
  CHECK(r.purely_infinite.verdict.is_unknown());
  CHECK(r.warnings.size() == 1);
  PropertyReport r2 = simplicity_report(s, true, 2u);
  CHECK(r2.warnings.size() == 2);
  CHECK(r2.warnings[1].find("characteristic 2") != std::string::npos);
}

TEST_CASE("Katsura properties") {
  auto   start = std::chrono::steady_clock::now();
  System s     = build_katsura(load_matrix_pair(fixtures::data("katsura-noncommutative.matrices")));
  CHECK(check_hausdorff(s).verdict.is_no());
  CHECK(check_minimal(s).verdict.is_yes());
  auto e = check_effective(s);
  CHECK(e.verdict.is_yes());
  CHECK(check_locally_contracting(s).verdict.is_yes());
  PropertyReport r = simplicity_report(s, s.assertions().amenable);
  CHECK(r.simple_cstar.verdict.is_unknown());
  CHECK(r.warnings.size() == 1);
  CHECK(std::chrono::steady_clock::now() - start < std::chrono::seconds(5));
}

TEST_CASE("Cuntz systems are simple") {
  for (auto name : {"cuntz-2.system", "cuntz-3.system"}) {
    auto           doc = fixtures::load(name);
    PropertyReport r   = simplicity_report(doc.system, true);
    CHECK(r.hausdorff.verdict.is_yes());
    CHECK(r.simple_cstar.verdict.is_yes());
    CHECK(r.simple_algebraic.verdict.is_yes());
    CHECK(r.purely_infinite.verdict.is_yes());
    CHECK(r.warnings.empty());
    // Without amenability the C*-verdict is withheld.
    CHECK(simplicity_report(doc.system, false).simple_cstar.verdict.is_unknown());
  }
}

TEST_CASE("small examples") {
  auto loop = parse_system(
      "graph { vertices: v; edge l: v -> v; } "
      "backend finite { elements: 1; table { 1: 1; } generators: ; }");
  CHECK(check_minimal(loop.system).verdict.is_yes());
  CHECK(check_effective(loop.system).verdict.is_no());
  CHECK(check_locally_contracting(loop.system).verdict.is_no());
  PropertyReport r = simplicity_report(loop.system, true);
  CHECK(r.simple_cstar.verdict.is_no());
  CHECK(r.purely_infinite.verdict.is_no());

  auto two = parse_system(
      "graph { vertices: x y; edge l: x -> x; edge m: y -> y; } "
      "backend finite { elements: 1; table { 1: 1; } generators: ; }");
  CHECK(check_minimal(two.system).verdict.is_no());

  // Swapping the two components makes them one orbit, and minimality
  // returns.
  auto swapped = parse_system(R"(
    graph { vertices: x y; edge l: x -> x; edge k: x -> x; edge m: y -> y; edge n: y -> y; }
    backend finite { elements: 1 s; table { 1: 1 s; s: s 1; } generators: s; }
    action s { vertex x -> y; vertex y -> x; edge l -> m; edge m -> l; edge k -> n; edge n -> k; }
    cocycle s { l: s; k: s; m: s; n: s; }
  )");
  CHECK(check_minimal(swapped.system).verdict.is_yes());
  auto dom = dominance_matrix(swapped.system);
  CHECK(dom[0][1]);
  CHECK(vertex_orbits(swapped.system) == std::vector<VertexId>{0, 0});
}

TEST_CASE("graph properties against brute force") {
  std::mt19937 rng(101);
  for (int trial = 0; trial < 300; ++trial) {
    RandomGraph   rg  = random_graph(rng);
    auto          doc = parse_system(rg.system_text());
    System const& s   = doc.system;
    bool const    L   = brute_condition_L(rg);
    CHECK(condition_L(s.graph()) == L);
    CHECK(check_locally_contracting(s).verdict.is_yes() == L);
    CHECK(check_locally_contracting(s).verdict.is_no() == !L);
    // With a trivial group every element is slack, so effective means (L).
    CHECK(check_effective(s).verdict.is_yes() == L);
    CHECK(check_effective(s).verdict.is_no() == !L);
    bool const M = brute_minimal(rg);
    CHECK(check_minimal(s).verdict.is_yes() == M);
    CHECK(check_minimal(s).verdict.is_no() == !M);
    // Trivial groups are pseudo-free.
    CHECK(check_hausdorff(s).verdict.is_yes());
  }
}
