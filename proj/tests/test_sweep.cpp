#include "doctest.h"
#include "fixtures.hpp"
#include "ssg/katsura.hpp"
#include "ssg/sweep.hpp"

using namespace ssg;

namespace {

  void check_same(std::vector<SfpReport> const& a, std::vector<SfpReport> const& b) {
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].status == b[i].status);
      CHECK(a[i].minimal_paths == b[i].minimal_paths);
      CHECK(a[i].truncated == b[i].truncated);
      CHECK(a[i].note == b[i].note);
      CHECK(a[i].witness.has_value() == b[i].witness.has_value());
      if (a[i].witness && b[i].witness) {
        CHECK(a[i].witness->prefix == b[i].witness->prefix);
        CHECK(a[i].witness->cycle == b[i].witness->cycle);
        CHECK(a[i].witness->exit == b[i].witness->exit);
      }
    }
  }

}  // namespace

TEST_CASE("parallel sweeps match the serial references") {
  SearchBudget budget;
  budget.max_elements = 64;

  auto          doc = fixtures::load("grigorchuk.system");
  System const& s   = doc.system;
  Ball          ball = group_ball(s, budget);
  check_same(sfp_sweep(s, ball.elements, budget), sfp_sweep_serial(s, ball.elements, budget));

  System k  = build_katsura(load_matrix_pair(fixtures::data("katsura-noncommutative.matrices")));
  Ball   kb = group_ball(k, budget);
  check_same(sfp_sweep(k, kb.elements, budget), sfp_sweep_serial(k, kb.elements, budget));

  auto a = cylinder_sweep(k, kb.elements, budget);
  auto b = cylinder_sweep_serial(k, kb.elements, budget);
  REQUIRE(a.size() == kb.elements.size() * k.graph().num_vertices());
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].fixes_cylinder.answer == b[i].fixes_cylinder.answer);
    CHECK(a[i].slack.answer == b[i].slack.answer);
    CHECK(a[i].level == b[i].level);
  }
}
