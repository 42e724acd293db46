// Self-similar graph systems: a group acting on a graph by automorphisms
// together with a restriction cocycle phi, extended to finite paths by
//
//   g(ab) = (g a) phi(g, a) b,     phi(g, ab) = phi(phi(g, a), b).
//
// This header also hosts the searches over restriction states that the
// property checks are built from.

#ifndef SSG_SYSTEM_HPP_
#define SSG_SYSTEM_HPP_

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ssg/core.hpp"
#include "ssg/graph.hpp"
#include "ssg/group.hpp"

namespace ssg {

  // Facts about the group that the library cannot compute and takes on
  // the user's word.
  struct Assertions {
    bool        amenable = false;
    bool        faithful = false;
    std::string provenance;  // free text recorded in reports
  };

  class System {
   public:
    System(Graph                               graph,
           std::shared_ptr<GroupBackend const> group,
           Assertions                          assertions = {});

    Graph const& graph() const noexcept {
      return _graph;
    }
    GroupBackend const& group() const noexcept {
      return *_group;
    }
    std::shared_ptr<GroupBackend const> const& group_ptr() const noexcept {
      return _group;
    }
    Assertions const& assertions() const noexcept {
      return _assertions;
    }
    void set_assertions(Assertions a) {
      _assertions = std::move(a);
    }

    VertexId act(GroupElement const& g, VertexId v) const {
      return _group->act_vertex(g, v);
    }
    EdgeId act_edge(GroupElement const& g, EdgeId e) const {
      return _group->act_edge(g, e);
    }
    GroupElement restrict(GroupElement const& g, EdgeId e) const {
      return _group->restrict_edge(g, e);
    }

    GroupElement parse_element(std::string_view text) const {
      return _group->parse(text);
    }
    std::string format(GroupElement const& g) const {
      return _group->format(g);
    }

   private:
    Graph                               _graph;
    std::shared_ptr<GroupBackend const> _group;
    Assertions                          _assertions;
  };

  struct SystemReport {
    GraphReport graph;
    // True if only the weak standing hypothesis (at sources of edges) holds.
    bool weak_hypothesis_only = false;
  };

  // Throws NotAutomorphism or StandingHypothesisViolated.  With
  // allow_weak, the standing hypothesis is only required at d(e).
  SystemReport validate_system(System const& s, bool allow_weak = false);

  Path         act_path(System const& s, GroupElement const& g, Path const& p);
  GroupElement restrict_path(System const&       s,
                             GroupElement const& g,
                             Path const&         p);

  // g p = p and phi(g, p) = 1.
  Verdict strongly_fixes(System const&       s,
                         GroupElement const& g,
                         Path const&         p,
                         SearchBudget const& budget = {});

  ////////////////////////////////////////////////////////////////////////
  // Minimal strongly fixed paths
  ////////////////////////////////////////////////////////////////////////

  enum class SfpStatus { finite, infinite, unknown };

  char const* sfp_status_name(SfpStatus s) noexcept;

  // prefix . cycle^k . exit is a minimal strongly fixed path for every
  // k >= 0, and these paths are pairwise distinct.
  struct PumpCertificate {
    Path prefix;
    Path cycle;
    Path exit;
  };

  struct SfpReport {
    GroupElement                   element;
    std::vector<Path>              minimal_paths;  // by length, then edge ids
    SfpStatus                      status = SfpStatus::unknown;
    std::optional<PumpCertificate> witness;
    // The list stops at the first length where a pumpable path appears
    // (infinite case) or at the depth budget.
    bool        truncated       = false;
    std::size_t states_explored = 0;
    std::string note;
  };

  // Explores restriction states (h, v) reachable from (g, x) along edges
  // fixed by h.  A transition to the identity ends a minimal strongly
  // fixed path.  Finite when the exploration closes with no state cycle
  // that can still reach the identity; Infinite with a pump certificate
  // when such a cycle is found; Unknown otherwise.
  SfpReport minimal_strongly_fixed(System const&       s,
                                   GroupElement const& g,
                                   SearchBudget const& budget = {});

  // Recomputes a certificate from scratch; true iff it is valid.
  bool replay_pump(System const&          s,
                   GroupElement const&    g,
                   PumpCertificate const& cert,
                   std::size_t            repetitions = 3);

  ////////////////////////////////////////////////////////////////////////
  // Group balls
  ////////////////////////////////////////////////////////////////////////

  struct Ball {
    std::vector<GroupElement> elements;   // identity first, then BFS order
    bool                      exhausted = false;  // the whole group
    bool                      undecided = false;  // an equality was Unknown
  };

  // Elements reachable from the identity by multiplying with generators
  // and their inverses, up to equality, in breadth-first order.  Finite
  // backends always return the whole group.
  Ball group_ball(System const& s, SearchBudget const& budget = {});

  ////////////////////////////////////////////////////////////////////////
  // Pseudo-freeness, slackness, cylinders
  ////////////////////////////////////////////////////////////////////////

  struct PseudoFreeResult {
    Verdict                     verdict;
    std::optional<GroupElement> witness_element;
    std::optional<EdgeId>       witness_edge;
  };

  PseudoFreeResult is_pseudo_free(System const&       s,
                                  SearchBudget const& budget = {});

  struct CylinderAnalysis {
    // Does g fix every infinite path with range x?
    Verdict fixes_cylinder;
    // Is g slack at x?  On Yes, `level` is an n such that every path of
    // length >= n with range x is strongly fixed.
    Verdict     slack;
    std::size_t level = 0;
  };

  CylinderAnalysis analyze_cylinder(System const&       s,
                                    GroupElement const& g,
                                    VertexId            x,
                                    SearchBudget const& budget = {});

  struct SlackResult {
    Verdict     verdict;
    std::size_t level = 0;
  };

  SlackResult slack_at(System const&       s,
                       GroupElement const& g,
                       VertexId            x,
                       SearchBudget const& budget = {});

  ////////////////////////////////////////////////////////////////////////
  // G-circuits
  ////////////////////////////////////////////////////////////////////////

  struct CircuitFixedPoint {
    // Set when the recursion state repeated within the depth bound.
    std::optional<EventuallyPeriodicPath> path;
    // Always set: the concatenation of the blocks computed so far.
    Path computed_prefix;
  };

  // For a G-circuit (g, gamma), i.e. d(gamma) = g r(gamma), iterate
  //   gamma_{n+1} = g_n gamma_n,   g_{n+1} = phi(g_n, gamma_n)
  // and return gamma_1 gamma_2 ... .  Throws NotAGCircuit.
  CircuitFixedPoint g_circuit_fixed_point(System const&       s,
                                          GroupElement const& g,
                                          Path const&         gamma,
                                          std::size_t         depth = 64,
                                          SearchBudget const& budget = {});

}  // namespace ssg

#endif  // SSG_SYSTEM_HPP_
