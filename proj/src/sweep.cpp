#include "ssg/sweep.hpp"

#include <exception>

namespace ssg {

  namespace {
    // Runs body(i) for i in [0, n) across threads.  The first exception
    // thrown by any iteration is rethrown once the loop has finished.
    template <typename Body>
    void parallel_for(std::size_t n, Body body) {
      std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
      for (std::size_t i = 0; i < n; ++i) {
        try {
          body(i);
        } catch (...) {
#pragma omp critical(ssg_sweep_error)
          if (!error) {
            error = std::current_exception();
          }
        }
      }
      if (error) {
        std::rethrow_exception(error);
      }
    }
  }  // namespace

  std::vector<SfpReport> sfp_sweep(System const&                    s,
                                   std::vector<GroupElement> const& elements,
                                   SearchBudget const&              budget) {
    std::vector<SfpReport> out(elements.size());
    parallel_for(elements.size(), [&](std::size_t i) {
      out[i] = minimal_strongly_fixed(s, elements[i], budget);
    });
    return out;
  }

  std::vector<SfpReport> sfp_sweep_serial(System const&                    s,
                                          std::vector<GroupElement> const& elements,
                                          SearchBudget const&              budget) {
    std::vector<SfpReport> out;
    out.reserve(elements.size());
    for (auto const& g : elements) {
      out.push_back(minimal_strongly_fixed(s, g, budget));
    }
    return out;
  }

  std::vector<CylinderAnalysis> cylinder_sweep(System const&                    s,
                                               std::vector<GroupElement> const& elements,
                                               SearchBudget const&              budget) {
    std::size_t const             nv = s.graph().num_vertices();
    std::vector<CylinderAnalysis> out(elements.size() * nv);
    parallel_for(out.size(), [&](std::size_t k) {
      out[k] = analyze_cylinder(s, elements[k / nv], static_cast<VertexId>(k % nv),
                                budget);
    });
    return out;
  }

  std::vector<CylinderAnalysis>
  cylinder_sweep_serial(System const&                    s,
                        std::vector<GroupElement> const& elements,
                        SearchBudget const&              budget) {
    std::size_t const             nv = s.graph().num_vertices();
    std::vector<CylinderAnalysis> out;
    out.reserve(elements.size() * nv);
    for (auto const& g : elements) {
      for (VertexId x = 0; x < nv; ++x) {
        out.push_back(analyze_cylinder(s, g, x, budget));
      }
    }
    return out;
  }

}  // namespace ssg
