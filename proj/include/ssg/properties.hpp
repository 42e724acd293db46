// Decision procedures for properties of the tight groupoid of a
// self-similar graph and the simplicity of its algebras.
//
// Every check returns a three-valued verdict plus the name of the rule
// that produced it.  Yes and No are always backed by a certificate in the
// verdict's note; Unknown says which search ran out.

#ifndef SSG_PROPERTIES_HPP_
#define SSG_PROPERTIES_HPP_

#include <optional>
#include <string>
#include <vector>

#include "ssg/system.hpp"

namespace ssg {

  struct PropertyCheck {
    Verdict     verdict;
    std::string rule;
    // Set on a Hausdorff No: the element and its pump, for replay.
    std::optional<GroupElement>    witness = std::nullopt;
    std::optional<PumpCertificate> pump    = std::nullopt;
  };

  // Hausdorff iff every group element has finitely many minimal strongly
  // fixed paths.  No on the first element of the ball with infinitely
  // many; Yes for pseudo-free systems or when the whole group was swept.
  PropertyCheck check_hausdorff(System const& s, SearchBudget const& budget = {});

  // Minimal iff the graph is weakly G-transitive.  Decisive on finite
  // graphs: the orbit relation comes from the generators' vertex
  // permutations.
  PropertyCheck check_minimal(System const& s);

  // Effective iff every circuit has an entry and every g fixing Z(x)
  // pointwise is slack at x.  Exact for single-vertex systems with an
  // asserted faithful action, for the integer backend, and for finite
  // groups; ball-limited otherwise.
  PropertyCheck check_effective(System const& s, SearchBudget const& budget = {});

  // Locally contracting iff every circuit has an entry.
  PropertyCheck check_locally_contracting(System const& s);

  // x >> y: there is u with x -> u (a path from x to u) and u ~ y.
  std::vector<std::vector<bool>> dominance_matrix(System const& s);

  // Orbit representative of every vertex (the least vertex of its orbit).
  std::vector<VertexId> vertex_orbits(System const& s);

  struct PropertyReport {
    PropertyCheck hausdorff;
    PropertyCheck minimal;
    PropertyCheck effective;
    PropertyCheck locally_contracting;
    PropertyCheck simple_cstar;
    PropertyCheck simple_algebraic;
    PropertyCheck purely_infinite;

    bool                       amenable = false;
    std::string                amenability_source;
    std::optional<unsigned>    field_char;
    std::vector<std::string>   warnings;
    SearchBudget               budget;
  };

  // Assembles all checks.  `amenable` is the caller's assertion about G.
  PropertyReport simplicity_report(System const&           s,
                                   bool                    amenable,
                                   std::optional<unsigned> field_char = std::nullopt,
                                   SearchBudget const&     budget     = {});

}  // namespace ssg

#endif  // SSG_PROPERTIES_HPP_
