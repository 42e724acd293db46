// The inverse semigroup of a self-similar graph: zero together with the
// triples (alpha, g, beta) with d(alpha) = g d(beta).  The triple stands
// for the partial map beta xi |-> alpha (g xi).

#ifndef SSG_SEMIGROUP_HPP_
#define SSG_SEMIGROUP_HPP_

#include <string>
#include <string_view>

#include "ssg/system.hpp"

namespace ssg {

  class SgeElement {
   public:
    // The zero of the semigroup of s.
    static SgeElement zero(System const& s);
    // Throws DomainMismatch unless d(alpha) = g d(beta).
    static SgeElement triple(System const& s, Path alpha, GroupElement g, Path beta);
    // f_alpha = (alpha, 1, alpha).
    static SgeElement idempotent(System const& s, Path alpha);

    bool is_zero() const noexcept {
      return _zero;
    }
    System const& system() const noexcept {
      return *_system;
    }
    Path const& alpha() const {
      return _alpha;
    }
    GroupElement const& g() const {
      return _g;
    }
    Path const& beta() const {
      return _beta;
    }

    // Same path components and syntactically equal group payloads.
    bool operator==(SgeElement const& o) const {
      return _system == o._system && _zero == o._zero
             && (_zero || (_alpha == o._alpha && _beta == o._beta && _g == o._g));
    }
    bool operator!=(SgeElement const& o) const {
      return !(*this == o);
    }

   private:
    SgeElement() = default;

    System const* _system = nullptr;
    bool          _zero   = true;
    Path          _alpha;
    GroupElement  _g;
    Path          _beta;
  };

  // Throws SystemMismatch for elements of different systems.
  SgeElement sge_mul(SgeElement const& s, SgeElement const& t);
  SgeElement sge_adjoint(SgeElement const& s);

  // Componentwise, with group equality from the backend.
  Verdict sge_equal(SgeElement const& s,
                    SgeElement const& t,
                    SearchBudget const& budget = {});

  // Is s of the form (alpha, 1, alpha) (or zero)?
  Verdict sge_is_idempotent(SgeElement const& s, SearchBudget const& budget = {});

  // For an idempotent e = f_gamma and s = (alpha, g, beta): e <= s iff
  // alpha = beta, gamma = alpha tau and tau is strongly fixed by g.
  // Throws NotIdempotent.
  Verdict leq_idempotent_under(SgeElement const&   e,
                               SgeElement const&   s,
                               SearchBudget const& budget = {});

  std::string format_sge(SgeElement const& s);

  // A path: edge names separated by '.' or blanks, or a vertex name for
  // a path of length zero.  Over a graph whose edge names are single
  // characters a token such as "0110" is read letter by letter.
  Path parse_path(Graph const& g, std::string_view text);

  // Expressions such as "(0, a, v) * (1, b, v)^*"; "0" is the zero.
  SgeElement parse_sge(System const& s, std::string_view text);

}  // namespace ssg

#endif  // SSG_SEMIGROUP_HPP_
