// Exact integer linear algebra and the homology and K-theory formulas
// for Katsura algebras and self-similar group actions.

#ifndef SSG_ABELIAN_HPP_
#define SSG_ABELIAN_HPP_

#include <optional>
#include <string>
#include <vector>

#include "ssg/katsura.hpp"
#include "ssg/system.hpp"
#include "ssg/system_file.hpp"

namespace ssg {

  class IntMatrix {
   public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : _rows(rows), _cols(cols), _data(rows * cols) {}
    // Throws ShapeMismatch for ragged input.
    explicit IntMatrix(std::vector<std::vector<BigInt>> const& rows);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const noexcept {
      return _rows;
    }
    std::size_t cols() const noexcept {
      return _cols;
    }
    BigInt& operator()(std::size_t i, std::size_t j) {
      return _data[i * _cols + j];
    }
    BigInt const& operator()(std::size_t i, std::size_t j) const {
      return _data[i * _cols + j];
    }

    IntMatrix transpose() const;
    bool      operator==(IntMatrix const& o) const {
      return _rows == o._rows && _cols == o._cols && _data == o._data;
    }

   private:
    std::size_t         _rows = 0, _cols = 0;
    std::vector<BigInt> _data;
  };

  // Throw ShapeMismatch on incompatible sizes.
  IntMatrix operator*(IntMatrix const& a, IntMatrix const& b);
  IntMatrix operator-(IntMatrix const& a, IntMatrix const& b);

  std::string format_matrix(IntMatrix const& m);

  struct SmithForm {
    IntMatrix U, D, V;  // U M V = D
    std::size_t rank = 0;
  };

  // U and V are unimodular, D is diagonal with nonnegative entries
  // d_1 | d_2 | ... | d_rank and zeros after.
  SmithForm smith_normal_form(IntMatrix const& m);

  // Z^rank (+) Z/d_1 (+) ... with d_1 | d_2 | ... and every d_i >= 2.
  struct FgAbelianGroup {
    std::size_t         rank = 0;
    std::vector<BigInt> torsion;

    bool operator==(FgAbelianGroup const& o) const {
      return rank == o.rank && torsion == o.torsion;
    }
    bool is_zero() const {
      return rank == 0 && torsion.empty();
    }
  };

  // Brings arbitrary cyclic factors into invariant factor form.
  FgAbelianGroup make_abelian_group(std::size_t rank, std::vector<BigInt> orders);
  FgAbelianGroup direct_sum(FgAbelianGroup const& a, FgAbelianGroup const& b);

  // "0", "Z", "Z^2 + Z/2 + Z/6".
  std::string format_group(FgAbelianGroup const& g);

  // Z^rows / image(M).
  FgAbelianGroup coker(IntMatrix const& m);
  // The kernel of an integer matrix is free; its rank.
  FgAbelianGroup ker(IntMatrix const& m);

  // An integer solution of M x = b, if one exists.
  std::optional<std::vector<BigInt>> solve_integer(IntMatrix const&           m,
                                                   std::vector<BigInt> const& b);

  ////////////////////////////////////////////////////////////////////////
  // Katsura algebras
  ////////////////////////////////////////////////////////////////////////

  struct KGroups {
    FgAbelianGroup K0, K1;
    bool operator==(KGroups const& o) const {
      return K0 == o.K0 && K1 == o.K1;
    }
  };

  // K0 = coker(I - A) + ker(I - B), K1 = coker(I - B) + ker(I - A).
  // Throws Condition0Violated or ShapeMismatch.
  KGroups katsura_ktheory(KatsuraData const& data);

  // Many pairs at once: an OpenMP loop and its serial reference.
  std::vector<KGroups> katsura_ktheory_batch(std::vector<KatsuraData> const& data);
  std::vector<KGroups> katsura_ktheory_batch_serial(std::vector<KatsuraData> const& data);

  struct KatsuraHomology {
    FgAbelianGroup H0, H1, H2;  // H_n = 0 for n >= 3
    FgAbelianGroup K0, K1;
    std::vector<std::size_t> removed_rows;  // 0-based indices of zero rows of A
  };

  // Zero rows of A (and the same rows of B) are deleted to give A', B';
  // "id" is the rectangular matrix including the remaining indices.
  // Requires A[i][j] = 0 => B[i][j] = 0; zero rows are allowed here.
  KatsuraHomology katsura_homology(KatsuraData const& data);

  ////////////////////////////////////////////////////////////////////////
  // Self-similar group actions
  ////////////////////////////////////////////////////////////////////////

  struct PhiMaps {
    std::vector<VertexId> orbit_reps;    // T^0, least vertex of each orbit
    std::vector<VertexId> regular_reps;  // those receiving an edge
    IntMatrix             phi0;          // |T^0| x |T^0_reg|
    FgAbelianGroup        H0;            // coker(id - phi0)
    // Present when an abelianization was supplied: phi1 on Z^rank (acting
    // on column vectors), and for one-vertex graphs H1 = coker(id - phi1)
    // computed in Z^rank / relations.
    std::optional<IntMatrix>      phi1;
    std::optional<FgAbelianGroup> H1;
    std::string                   note;
  };

  // Throws AbelianizationInconsistent when phi1 is not well defined on the
  // supplied presentation, or when it disagrees with the restrictions on a
  // generator.
  PhiMaps phi_maps(System const& s, Abelianization const* ab = nullptr);

  // The class of g in Z^rank (modulo nothing): the sum of the images of
  // the letters of a word for g.
  std::vector<BigInt> abelian_image(System const& s, Abelianization const& ab,
                                    GroupElement const& g);

  struct LesResult {
    std::optional<KGroups> groups;
    std::string            note;
  };

  // The six-term sequence for a group action in the split case
  // K_1(C*(G)) = 0: K_0 = coker(1 - phi0) and K_1 = ker(1 - phi0).  Other
  // inputs are refused with a note, since extension problems are not
  // guessed.  K0G must be free of rank phi0.rows().
  LesResult les_assemble(FgAbelianGroup const& K0G,
                         FgAbelianGroup const& K1G,
                         IntMatrix const&      phi0,
                         IntMatrix const&      phi1);

}  // namespace ssg

#endif  // SSG_ABELIAN_HPP_
