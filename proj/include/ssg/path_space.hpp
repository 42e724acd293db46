// Eventually periodic infinite paths under the group and semigroup
// actions, fixed points of semigroup elements, and germs of the tight
// groupoid.
//
// An element s = (alpha, g, beta) acts on the cylinder Z(beta) by
// beta xi |-> alpha (g xi).  The germ [s; xi] is identified with [t; xi]
// when s and t agree on some cylinder Z(xi|n), i.e. when s f_gamma and
// t f_gamma coincide for a long enough prefix gamma of xi.

#ifndef SSG_PATH_SPACE_HPP_
#define SSG_PATH_SPACE_HPP_

#include <optional>
#include <string_view>

#include "ssg/semigroup.hpp"

namespace ssg {

  struct InfinitePathImage {
    // Set when a repeated restriction state certified periodicity.
    std::optional<EventuallyPeriodicPath> path;
    // The image of the part of the input that was processed.
    Path computed_prefix;
  };

  // g xi, computed edge by edge.  `depth` bounds the number of passes
  // through the cycle of xi.
  InfinitePathImage g_act_infinite(System const&                 s,
                                   GroupElement const&           g,
                                   EventuallyPeriodicPath const& xi,
                                   std::size_t                   depth  = 64,
                                   SearchBudget const&           budget = {});

  // s xi for xi in Z(beta); throws DomainMismatch when xi is outside it.
  InfinitePathImage sge_act_infinite(SgeElement const&             s,
                                     EventuallyPeriodicPath const& xi,
                                     std::size_t                   depth  = 64,
                                     SearchBudget const&           budget = {});

  class GermElement {
   public:
    // Throws DomainMismatch unless s is a nonzero triple (alpha, g, beta)
    // and base lies in Z(beta).
    GermElement(SgeElement s, EventuallyPeriodicPath base);

    SgeElement const& element() const noexcept {
      return _s;
    }
    EventuallyPeriodicPath const& base() const noexcept {
      return _base;
    }

   private:
    SgeElement             _s;
    EventuallyPeriodicPath _base;
  };

  // [f_{r(xi)}; xi], the unit at xi.
  GermElement unit_germ(System const& s, EventuallyPeriodicPath const& xi);

  // The range of a germ: s applied to its base.  Throws InvalidArgument
  // if periodicity of the image cannot be certified.
  EventuallyPeriodicPath germ_target(GermElement const& u,
                                     SearchBudget const& budget = {});

  // [s*; s xi].
  GermElement germ_inverse(GermElement const& u, SearchBudget const& budget = {});

  // [s; t xi] [t; xi] = [st; xi].  Throws NonComposableGerms unless the
  // base of u is the target of v.
  GermElement germ_compose(GermElement const& u,
                           GermElement const& v,
                           SearchBudget const& budget = {});

  // Yes when s f_gamma = t f_gamma for some prefix gamma of the common
  // base; No when the bases differ, the images part ways, or the joint
  // restriction state repeats without success; Unknown otherwise.
  Verdict germ_equal(GermElement const& u,
                     GermElement const& v,
                     SearchBudget const& budget = {});

  // For t = (alpha, g, beta) with |alpha| > |beta|, the only possible
  // fixed point: if alpha = beta gamma then (g, gamma) is a G-circuit and
  // beta gamma^1 gamma^2 ... is fixed.  Empty when alpha does not extend
  // beta, or when periodicity was not certified within the depth.
  // Throws WrongShape when |alpha| <= |beta|.
  std::optional<EventuallyPeriodicPath> unique_fixed_point(SgeElement const& t,
                                                           std::size_t depth = 64);

  // Whether that fixed point is isolated in the infinite path space,
  // which happens iff gamma has no entry.  Throws WrongShape when t has
  // no fixed point of this kind.
  Verdict isolated_fixed_point(SgeElement const& t);

  // "prefix(cycle)^inf", with paths as in parse_path; the prefix may be
  // empty.
  EventuallyPeriodicPath parse_infinite_path(Graph const& g, std::string_view text);

  // "[alpha; g; beta] @ prefix(cycle)^inf".
  GermElement parse_germ(System const& s, std::string_view text);

  std::string format_germ(GermElement const& u);

}  // namespace ssg

#endif  // SSG_PATH_SPACE_HPP_
