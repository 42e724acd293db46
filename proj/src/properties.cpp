#include "ssg/properties.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "ssg/sweep.hpp"

namespace ssg {

  ////////////////////////////////////////////////////////////////////////
  // Hausdorff
  ////////////////////////////////////////////////////////////////////////

  PropertyCheck check_hausdorff(System const& s, SearchBudget const& budget) {
    PseudoFreeResult pf = is_pseudo_free(s, budget);
    if (pf.verdict.is_yes()) {
      return {Verdict::yes("pseudo-free: " + pf.verdict.note),
              "pseudo-free systems have Hausdorff groupoids"};
    }
    std::string const rule = "finitely many minimal strongly fixed paths per element";
    Ball              ball = group_ball(s, budget);
    std::vector<GroupElement> rest(ball.elements.begin() + 1, ball.elements.end());
    std::vector<SfpReport>    reports = sfp_sweep(s, rest, budget);
    bool                      undecided = ball.undecided;
    for (SfpReport const& r : reports) {
      if (r.status == SfpStatus::infinite) {
        std::string w = s.format(r.element) + " has infinitely many";
        if (r.witness) {
          Graph const& G = s.graph();
          w += " (pump " + format_path(G, r.witness->prefix) + " | "
               + format_path(G, r.witness->cycle) + " | "
               + format_path(G, r.witness->exit) + ")";
        }
        return {Verdict::no(w), rule, r.element, r.witness};
      }
      undecided |= r.status == SfpStatus::unknown;
    }
    std::string cov = std::to_string(ball.elements.size()) + " elements";
    if (ball.exhausted && !undecided) {
      return {Verdict::yes("whole group swept: " + cov), rule};
    }
    return {Verdict::unknown(ball.exhausted ? "some search hit its budget"
                                            : "no witness in a ball of " + cov),
            rule};
  }

  ////////////////////////////////////////////////////////////////////////
  // Minimality
  ////////////////////////////////////////////////////////////////////////

  std::vector<VertexId> vertex_orbits(System const& s) {
    std::size_t const     n = s.graph().num_vertices();
    std::vector<VertexId> parent(n);
    std::iota(parent.begin(), parent.end(), VertexId(0));
    auto find = [&](VertexId v) {
      while (parent[v] != v) {
        v = parent[v] = parent[parent[v]];
      }
      return v;
    };
    GroupBackend const& G = s.group();
    for (std::size_t i = 0; i < G.num_generators(); ++i) {
      auto const& perm = G.generator_action(i).vertex;
      for (VertexId v = 0; v < n; ++v) {
        VertexId a = find(v), b = find(perm[v]);
        if (a != b) {
          parent[std::max(a, b)] = std::min(a, b);
        }
      }
    }
    std::vector<VertexId> rep(n);
    for (VertexId v = 0; v < n; ++v) {
      rep[v] = find(v);
    }
    return rep;
  }

  std::vector<std::vector<bool>> dominance_matrix(System const& s) {
    std::size_t const n     = s.graph().num_vertices();
    auto const        orbit = vertex_orbits(s);
    auto const        R     = reach_matrix(s.graph());
    std::vector<std::vector<bool>> D(n, std::vector<bool>(n, false));
    for (VertexId x = 0; x < n; ++x) {
      for (VertexId u = 0; u < n; ++u) {
        if (!R[x][u]) {
          continue;
        }
        for (VertexId y = 0; y < n; ++y) {
          if (orbit[u] == orbit[y]) {
            D[x][y] = true;
          }
        }
      }
    }
    return D;
  }

  PropertyCheck check_minimal(System const& s) {
    Graph const& G = s.graph();
    auto const   R = reach_matrix(G);
    auto const   D = dominance_matrix(s);
    // An infinite path eventually circles inside one component, and the
    // vertices visited late dominate those visited early, so it suffices
    // to look at vertices on circuits.
    for (VertexId w = 0; w < G.num_vertices(); ++w) {
      bool on_circuit = false;
      for (EdgeId e : G.edges_into(w)) {
        on_circuit = on_circuit || R[w][G.source(e)];
      }
      if (!on_circuit) {
        continue;
      }
      for (VertexId x = 0; x < G.num_vertices(); ++x) {
        if (!D[w][x]) {
          return {Verdict::no("an infinite path circling through "
                              + G.vertex_name(w) + " never dominates "
                              + G.vertex_name(x)),
                  "weak G-transitivity"};
        }
      }
    }
    return {Verdict::yes("every vertex on a circuit dominates every vertex"),
            "weak G-transitivity"};
  }

  ////////////////////////////////////////////////////////////////////////
  // Effectiveness
  ////////////////////////////////////////////////////////////////////////

  namespace {

    std::vector<std::size_t> prime_factors(std::size_t n) {
      std::vector<std::size_t> out;
      for (std::size_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
          out.push_back(p);
          while (n % p == 0) {
            n /= p;
          }
        }
      }
      if (n > 1) {
        out.push_back(n);
      }
      return out;
    }

    long long valuation(BigInt x, std::size_t p) {
      long long v = 0;
      while (x != 0 && x % p == 0) {
        x /= p;
        ++v;
      }
      return v;
    }

    // For the integer backend the elements fixing Z(x) pointwise form a
    // subgroup d_x Z.  An element m fixes e iff L_e | m, and then
    // phi(m, e) = (m / L_e) S_e.  Along a path the restriction of m is m
    // times a product of the ratios S_e / L_e, so for each prime p the
    // requirement on v_p(m) is a longest path problem with edge weights
    // v_p(L_e) - v_p(S_e), stopping at edges with S_e = 0.  A positive
    // cycle makes the requirement unbounded and d_x = 0.
    std::optional<BigInt> fixing_modulus(System const& s, IntegerBackend const& Z,
                                         VertexId x) {
      Graph const& G    = s.graph();
      auto const   live = live_vertices(G);
      std::vector<std::size_t> primes;
      for (EdgeId e = 0; e < G.num_edges(); ++e) {
        if (live[G.source(e)]) {
          for (std::size_t p : prime_factors(Z.edge_cycle_length(e))) {
            primes.push_back(p);
          }
        }
      }
      std::sort(primes.begin(), primes.end());
      primes.erase(std::unique(primes.begin(), primes.end()), primes.end());

      using Dist             = long long;
      Dist const        ninf = std::numeric_limits<Dist>::min() / 4;
      std::size_t const n    = G.num_vertices();
      BigInt            d    = 1;
      for (std::size_t p : primes) {
        std::vector<Dist> dist(n, ninf);
        dist[x]       = 0;
        bool improved = false;
        for (std::size_t round = 0; round <= n; ++round) {
          improved = false;
          for (EdgeId e = 0; e < G.num_edges(); ++e) {
            VertexId u = G.range(e), v = G.source(e);
            if (!live[v] || dist[u] == ninf || Z.edge_cycle_sum(e) == 0) {
              continue;
            }
            Dist w = valuation(BigInt(Z.edge_cycle_length(e)), p)
                     - valuation(Z.edge_cycle_sum(e), p);
            if (dist[u] + w > dist[v]) {
              dist[v]  = dist[u] + w;
              improved = true;
            }
          }
          if (!improved) {
            break;
          }
        }
        if (improved) {
          return std::nullopt;
        }
        Dist need = 0;
        for (VertexId y = 0; y < n; ++y) {
          if (dist[y] == ninf) {
            continue;
          }
          for (EdgeId e : G.edges_into(y)) {
            if (live[G.source(e)]) {
              need = std::max(need, dist[y] + valuation(BigInt(Z.edge_cycle_length(e)), p));
            }
          }
        }
        for (Dist k = 0; k < need; ++k) {
          d *= p;
        }
      }
      return d;
    }

    // Some circuit is reachable from x through edges with nonzero
    // cycle sum, so restrictions of a nonzero element never die out.
    bool restrictions_survive(System const& s, IntegerBackend const& Z, VertexId x) {
      Graph const&      G = s.graph();
      std::size_t const n = G.num_vertices();
      std::vector<int>  color(n, 0);
      bool              cyc = false;
      auto dfs = [&](auto&& self, VertexId v) -> void {
        color[v] = 1;
        for (EdgeId e : G.edges_into(v)) {
          if (cyc || Z.edge_cycle_sum(e) == 0) {
            continue;
          }
          VertexId w = G.source(e);
          if (color[w] == 1) {
            cyc = true;
          } else if (color[w] == 0) {
            self(self, w);
          }
        }
        color[v] = 2;
      };
      dfs(dfs, x);
      return cyc;
    }

    PropertyCheck effective_integer(System const& s, IntegerBackend const& Z,
                                    SearchBudget const& budget) {
      std::string const rule = "circuits have entries and cylinder-fixing elements are slack";
      Graph const&      G    = s.graph();
      std::string       vacuous;
      for (VertexId x = 0; x < G.num_vertices(); ++x) {
        auto d = fixing_modulus(s, Z, x);
        if (!d) {
          continue;  // only 0 fixes Z(x) pointwise
        }
        GroupElement m = Z.integer(*d);
        if (restrictions_survive(s, Z, x)) {
          return {Verdict::no(Z.format(m) + " fixes Z(" + G.vertex_name(x)
                              + ") pointwise but is not slack there"),
                  rule};
        }
        Verdict slack = analyze_cylinder(s, m, x, budget).slack;
        if (slack.is_no()) {
          return {Verdict::no(Z.format(m) + " fixes Z(" + G.vertex_name(x)
                              + ") pointwise but is not slack there: " + slack.note),
                  rule};
        }
        if (slack.is_unknown()) {
          return {Verdict::unknown("slackness of " + Z.format(m) + " at "
                                   + G.vertex_name(x) + ": " + slack.note),
                  rule};
        }
      }
      return {Verdict::yes("every circuit has an entry; the elements fixing a "
                           "cylinder pointwise form subgroups d Z whose "
                           "generators are slack"),
              rule};
    }

  }  // namespace

  PropertyCheck check_effective(System const& s, SearchBudget const& budget) {
    Graph const& G = s.graph();
    if (auto c = circuit_without_entry(G)) {
      return {Verdict::no("the circuit " + format_path(G, *c)
                          + " has no entry, so its fixed point is isolated"),
              "every circuit has an entry"};
    }
    if (G.num_vertices() == 1 && G.num_edges() >= 2 && s.assertions().faithful) {
      return {Verdict::yes("single vertex, " + std::to_string(G.num_edges())
                           + " edges, faithful action asserted"),
              "single vertex with a faithful action"};
    }
    if (auto const* Z = dynamic_cast<IntegerBackend const*>(&s.group())) {
      return effective_integer(s, *Z, budget);
    }
    std::string const rule = "circuits have entries and cylinder-fixing elements are slack";
    Ball              ball = group_ball(s, budget);
    std::vector<GroupElement> rest(ball.elements.begin() + 1, ball.elements.end());
    auto const        cyl = cylinder_sweep(s, rest, budget);
    bool              undecided = ball.undecided;
    std::size_t const nv        = G.num_vertices();
    for (std::size_t k = 0; k < cyl.size(); ++k) {
      CylinderAnalysis const& c = cyl[k];
      if (c.fixes_cylinder.is_yes() && c.slack.is_no()) {
        return {Verdict::no(s.format(rest[k / nv]) + " fixes Z("
                            + G.vertex_name(static_cast<VertexId>(k % nv))
                            + ") pointwise but is not slack there"),
                rule};
      }
      undecided |= c.fixes_cylinder.is_unknown()
                   || (c.fixes_cylinder.is_yes() && c.slack.is_unknown());
    }
    std::string cov = std::to_string(ball.elements.size()) + " elements";
    if (ball.exhausted && !undecided) {
      return {Verdict::yes("every circuit has an entry; whole group swept: " + cov),
              rule};
    }
    return {Verdict::unknown(ball.exhausted ? "some cylinder search hit its budget"
                                            : "no witness in a ball of " + cov),
            rule};
  }

  PropertyCheck check_locally_contracting(System const& s) {
    Graph const& G = s.graph();
    if (auto c = circuit_without_entry(G)) {
      return {Verdict::no("the circuit " + format_path(G, *c) + " has no entry"),
              "every circuit has an entry"};
    }
    return {Verdict::yes("every circuit has an entry"), "every circuit has an entry"};
  }

  ////////////////////////////////////////////////////////////////////////
  // Simplicity
  ////////////////////////////////////////////////////////////////////////

  PropertyReport simplicity_report(System const&           s,
                                   bool                    amenable,
                                   std::optional<unsigned> field_char,
                                   SearchBudget const&     budget) {
    PropertyReport r;
    r.amenable           = amenable;
    r.amenability_source = s.assertions().provenance;
    r.field_char         = field_char;
    r.budget             = budget;
    r.hausdorff          = check_hausdorff(s, budget);
    r.minimal            = check_minimal(s);
    r.effective          = check_effective(s, budget);
    r.locally_contracting = check_locally_contracting(s);

    bool const H = r.hausdorff.verdict.is_yes(), M = r.minimal.verdict.is_yes(),
               E = r.effective.verdict.is_yes();
    bool const notM = r.minimal.verdict.is_no(), notE = r.effective.verdict.is_no();

    // C*-algebra.
    if (notM || notE) {
      r.simple_cstar = {Verdict::no(notM ? "the groupoid is not minimal"
                                         : "the groupoid is not effective"),
                        "a simple full groupoid algebra forces minimal and effective"};
    } else if (H && M && E && amenable) {
      r.simple_cstar = {Verdict::yes("Hausdorff, minimal, effective, amenable"),
                        "Hausdorff criterion for amenable groups"};
    } else if (r.hausdorff.verdict.is_no()) {
      r.simple_cstar = {Verdict::unknown("non-Hausdorff: simplicity depends on "
                                         "whether singular functions vanish; extra "
                                         "conditions can still force it, as for "
                                         "Katsura algebras of Kirchberg type"),
                        "non-Hausdorff groupoids need the singular-function test"};
    } else if (H && M && E) {
      r.simple_cstar = {Verdict::unknown("amenability of G not asserted"),
                        "Hausdorff criterion for amenable groups"};
    } else {
      r.simple_cstar = {Verdict::unknown("a component check is undecided"),
                        "Hausdorff criterion for amenable groups"};
    }

    // Algebra over a field: the same criterion without amenability.
    if (H && (notM || notE)) {
      r.simple_algebraic = {Verdict::no(notM ? "the groupoid is not minimal"
                                             : "the groupoid is not effective"),
                            "Hausdorff criterion"};
    } else if (H && M && E) {
      r.simple_algebraic = {Verdict::yes("Hausdorff, minimal, effective"),
                            "Hausdorff criterion"};
    } else if (r.hausdorff.verdict.is_no()) {
      r.simple_algebraic = {Verdict::unknown("non-Hausdorff: the answer may "
                                             "depend on the field"),
                            "non-Hausdorff groupoids need the singular-function test"};
    } else {
      r.simple_algebraic = {Verdict::unknown("a component check is undecided"),
                            "Hausdorff criterion"};
    }

    if (r.simple_cstar.verdict.is_yes() && H) {
      r.purely_infinite = {Verdict::yes("simple, Hausdorff, amenable"),
                           "simple Hausdorff amenable case is purely infinite"};
    } else if (r.simple_cstar.verdict.is_no()) {
      r.purely_infinite = {Verdict::no("the algebra is not simple"),
                           "purely infinite simple requires simple"};
    } else {
      r.purely_infinite = {Verdict::unknown("simplicity undecided"),
                           "simple Hausdorff amenable case is purely infinite"};
    }

    if (r.hausdorff.verdict.is_no()) {
      r.warnings.push_back(
          "non-Hausdorff groupoid: algebraic simplicity can depend on the "
          "characteristic (the Grigorchuk algebra is simple over fields of "
          "characteristic other than 2 and not simple in characteristic 2)");
      if (field_char && *field_char == 2) {
        r.warnings.push_back("characteristic 2 requested: expect non-simplicity "
                             "phenomena of the Grigorchuk type");
      }
    }
    if (amenable && s.assertions().provenance.empty()) {
      r.warnings.push_back("amenability asserted without provenance");
    }
    return r;
  }

}  // namespace ssg
