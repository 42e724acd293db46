// Self-similar graphs (Z, E_A, phi) built from Katsura's matrix pairs.
//
// The graph has vertices 1..N and A[i][j] edges e_{i,j,n} from j to i.
// The integer m acts trivially on vertices and on edges by
//
//   m B[i][j] + n = k A[i][j] + n',  0 <= n' < A[i][j],
//   m e_{i,j,n} = e_{i,j,n'},  phi(m, e_{i,j,n}) = k.

#ifndef SSG_KATSURA_HPP_
#define SSG_KATSURA_HPP_

#include <string>
#include <vector>

#include "ssg/system.hpp"
#include "ssg/system_file.hpp"

namespace ssg {

  // A nonnegative, B arbitrary, both N x N.
  using KatsuraData = MatrixPair;

  // Throws ShapeMismatch for non-square or differently sized matrices and
  // Condition0Violated when A has a negative entry or a zero row, or when
  // B[i][j] != 0 while A[i][j] == 0.
  void check_condition0(KatsuraData const& data);

  // Edge e_{i,j,n} is named "e<i>_<j>_<n>" with 1-based i and j.
  System build_katsura(KatsuraData const& data);

  // A irreducible, A[i][i] >= 2 and B[i][i] = 1 for all i: the conditions
  // under which the algebra is a Kirchberg algebra.
  bool kirchberg_precheck(KatsuraData const& data);

  // The action of the generator on every edge as "1.e12 = e12, phi(1, e12) = 2",
  // with the superscript n written only when A[i][j] > 1 ("e11^0").
  std::vector<std::string> katsura_generator_table(System const&      s,
                                                   KatsuraData const& data);

  // Floor division: returns (k, r) with x = k y + r and 0 <= r < y, for y > 0.
  std::pair<BigInt, BigInt> floor_divmod(BigInt const& x, BigInt const& y);

}  // namespace ssg

#endif  // SSG_KATSURA_HPP_
