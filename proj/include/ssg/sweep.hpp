// Batch kernels over many group elements.  Each comes in an OpenMP
// version and a serial reference with identical output; the tests compare
// the two and bench/ times them.

#ifndef SSG_SWEEP_HPP_
#define SSG_SWEEP_HPP_

#include <vector>

#include "ssg/system.hpp"

namespace ssg {

  // minimal_strongly_fixed for every element, in input order.
  std::vector<SfpReport> sfp_sweep(System const&                    s,
                                   std::vector<GroupElement> const& elements,
                                   SearchBudget const&              budget = {});
  std::vector<SfpReport> sfp_sweep_serial(System const&                    s,
                                          std::vector<GroupElement> const& elements,
                                          SearchBudget const& budget = {});

  // analyze_cylinder for every (element, vertex) pair; entry
  // i * num_vertices + x belongs to elements[i] and vertex x.
  std::vector<CylinderAnalysis> cylinder_sweep(System const&                    s,
                                               std::vector<GroupElement> const& elements,
                                               SearchBudget const& budget = {});
  std::vector<CylinderAnalysis>
  cylinder_sweep_serial(System const&                    s,
                        std::vector<GroupElement> const& elements,
                        SearchBudget const&              budget = {});

}  // namespace ssg

#endif  // SSG_SWEEP_HPP_
