#include <random>

#include "doctest.h"
#include "fixtures.hpp"

using namespace ssg;

namespace {

  // Oracle: the action of an automaton word on every path of length <= n,
  // computed by walking the generator tables letter by letter.  Inverse
  // letters use the inverse permutation and phi(s^-1, e) = phi(s, s^-1 e)^-1.
  struct TableWalker {
    System const& s;

    EdgeId step(int letter, EdgeId e, Word& restriction) const {
      GroupBackend const& G = s.group();
      std::size_t         i = static_cast<std::size_t>(std::abs(letter) - 1);
      auto const&         a = G.generator_action(i);
      if (letter > 0) {
        Word const& w = a.cocycle[e].word();
        restriction.insert(restriction.end(), w.begin(), w.end());
        return a.edge[e];
      }
      EdgeId pre = 0;
      while (a.edge[pre] != e) {
        ++pre;
      }
      Word w = a.cocycle[pre].word();
      for (auto it = w.rbegin(); it != w.rend(); ++it) {
        restriction.push_back(-*it);
      }
      return pre;
    }

    // Acts by the word on a path, returning the image.
    std::vector<EdgeId> act(Word w, std::vector<EdgeId> p) const {
      for (EdgeId& e : p) {
        Word next;
        // Letters act right to left: the rightmost letter acts first.
        for (auto it = w.rbegin(); it != w.rend(); ++it) {
          Word r;
          e = step(*it, e, r);
          next.insert(next.begin(), r.begin(), r.end());
        }
        w = next;
      }
      return p;
    }

    bool agree_to_depth(Word const& x, Word const& y, std::size_t n) const {
      std::size_t const ne = s.graph().num_edges();
      std::vector<std::vector<EdgeId>> layer{{}};
      for (std::size_t len = 1; len <= n; ++len) {
        std::vector<std::vector<EdgeId>> next;
        for (auto const& p : layer) {
          for (EdgeId e = 0; e < ne; ++e) {
            auto q = p;
            q.push_back(e);
            if (act(x, q) != act(y, q)) {
              return false;
            }
            next.push_back(q);
          }
        }
        layer = std::move(next);
      }
      return true;
    }
  };

  Word random_word(std::mt19937& rng, std::size_t gens, std::size_t len) {
    Word w;
    for (std::size_t i = 0; i < len; ++i) {
      int l = static_cast<int>(rng() % gens) + 1;
      w.push_back(rng() % 2 ? l : -l);
    }
    return w;
  }

}  // namespace

TEST_CASE("automaton backend on the Grigorchuk group") {
  auto                    doc = fixtures::load("grigorchuk.system");
  System const&           s   = doc.system;
  auto const& G = dynamic_cast<AutomatonBackend const&>(s.group());
  GroupElement a = G.parse("a"), b = G.parse("b"), c = G.parse("c"),
               d = G.parse("d");
  CHECK(G.is_identity(G.identity()).is_yes());
  CHECK(G.is_identity(G.mul(a, a)).is_yes());
  CHECK(G.is_identity(a).is_no());
  CHECK(G.is_identity(G.mul(d, d)).is_yes());
  CHECK(G.is_identity(G.mul(b, G.mul(c, d))).is_yes());
  CHECK(G.equal(d, d).is_yes());
  CHECK(G.equal(G.mul(b, c), d).is_yes());
  CHECK(G.equal(b, c).is_no());
  CHECK(G.is_identity(G.parse("adadadad")).is_yes());
  CHECK(G.format(G.mul(a, G.inverse(b))) == "ab^-1");
  CHECK(G.format(G.identity()) == "1");
  CHECK(G.mul(a, G.inverse(a)).word().empty());
}

TEST_CASE("automaton parse and format round trip") {
  auto        doc = fixtures::load("grigorchuk.system");
  auto const& G   = doc.system.group();
  for (char const* w : {"abcd", "a^-1b", "d^3", "1", "b.c", "a b a"}) {
    GroupElement x = G.parse(w);
    CHECK(G.parse(G.format(x)) == x);
  }
  CHECK_THROWS_AS(G.parse("x"), Error);
}

TEST_CASE("automaton equality agrees with a brute-force depth oracle") {
  auto          doc = fixtures::load("grigorchuk.system");
  System const& s   = doc.system;
  auto const&   G   = dynamic_cast<AutomatonBackend const&>(s.group());
  TableWalker   oracle{s};
  std::mt19937  rng(3);
  int           yes = 0;
  for (int trial = 0; trial < 300; ++trial) {
    // Alphabet of size <= 3 as the property asks: a, b, c.
    Word x = random_word(rng, 3, rng() % 5);
    Word y = random_word(rng, 3, rng() % 5);
    Verdict v = G.equal(G.word(x), G.word(y));
    REQUIRE_FALSE(v.is_unknown());
    bool agree = oracle.agree_to_depth(x, y, 6);
    if (v.is_yes()) {
      ++yes;
      CHECK(agree);
    }
    if (!agree) {
      CHECK(v.is_no());
    }
  }
  CHECK(yes > 0);
}

TEST_CASE("group axioms hold up to equality") {
  auto          doc = fixtures::load("grigorchuk.system");
  auto const&   G   = dynamic_cast<AutomatonBackend const&>(doc.system.group());
  std::mt19937  rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    GroupElement x = G.word(random_word(rng, 4, rng() % 5));
    GroupElement y = G.word(random_word(rng, 4, rng() % 5));
    GroupElement z = G.word(random_word(rng, 4, rng() % 5));
    CHECK(G.equal(G.mul(G.mul(x, y), z), G.mul(x, G.mul(y, z))).is_yes());
    CHECK(G.equal(G.mul(x, G.identity()), x).is_yes());
    CHECK(G.is_identity(G.mul(x, G.inverse(x))).is_yes());
  }
}

TEST_CASE("integer backend") {
  IntegerBackend Z;
  CHECK(Z.mul(Z.integer(2), Z.integer(3)) == Z.integer(5));
  CHECK(Z.equal(Z.integer(2), Z.integer(3)).is_no());
  CHECK(Z.equal(Z.integer(-4), Z.inverse(Z.integer(4))).is_yes());
  CHECK(Z.parse("t^-3") == Z.integer(-3));
  CHECK(Z.parse("t") == Z.integer(1));
  CHECK(Z.parse("12") == Z.integer(12));
  CHECK(Z.mul(Z.identity(), Z.integer(7)) == Z.integer(7));
}

TEST_CASE("finite backend checks the group axioms") {
  // Z/3 written additively.
  std::vector<std::string> names{"0", "1", "2"};
  std::vector<std::vector<std::uint32_t>> t{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  FiniteBackend F(names, t, {1});
  CHECK(F.is_identity(F.element(0)).is_yes());
  CHECK(F.mul(F.element(1), F.element(2)) == F.element(0));
  CHECK(F.inverse(F.element(1)) == F.element(2));

  std::vector<std::vector<std::uint32_t>> bad{{0, 1, 2}, {1, 1, 0}, {2, 0, 1}};
  try {
    FiniteBackend broken(names, bad, {1});
    FAIL("expected NotAGroup");
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::not_a_group);
  }
}

TEST_CASE("backend mismatch") {
  IntegerBackend Z1, Z2;
  try {
    Z1.mul(Z1.integer(1), Z2.integer(1));
    FAIL("expected BackendMismatch");
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::backend_mismatch);
  }
}
