// Independent reference computations used by several test files.  They
// favour obviousness over speed and share no code with the library.

#ifndef SSG_TESTS_ORACLES_HPP_
#define SSG_TESTS_ORACLES_HPP_

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

#include "ssg/abelian.hpp"

namespace oracles {

  using ssg::BigInt;
  using Dense = std::vector<std::vector<BigInt>>;

  // Fraction-free Gaussian elimination (Bareiss).
  inline BigInt det(Dense m) {
    std::size_t const n = m.size();
    if (n == 0) {
      return 1;
    }
    BigInt sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (m[k][k] == 0) {
        std::size_t p = k + 1;
        while (p < n && m[p][k] == 0) {
          ++p;
        }
        if (p == n) {
          return 0;
        }
        std::swap(m[k], m[p]);
        sign = -sign;
      }
      for (std::size_t i = k + 1; i < n; ++i) {
        for (std::size_t j = k + 1; j < n; ++j) {
          m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        }
      }
      prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
  }

  inline BigInt gcd(BigInt a, BigInt b) {
    a = a < 0 ? BigInt(-a) : a;
    b = b < 0 ? BigInt(-b) : b;
    while (b != 0) {
      BigInt t = a % b;
      a        = b;
      b        = t;
    }
    return a;
  }

  inline void subsets(std::size_t n, std::size_t k,
                      std::function<void(std::vector<std::size_t> const&)> const& f) {
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    if (k > n) {
      return;
    }
    while (true) {
      f(idx);
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == n - k + i - 1) {
        --i;
      }
      if (i == 0) {
        return;
      }
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) {
        idx[j] = idx[j - 1] + 1;
      }
    }
  }

  // The cokernel of an r x c matrix from determinantal divisors: d_k is
  // the gcd of all k x k minors and the invariant factors are d_k/d_{k-1}.
  inline ssg::FgAbelianGroup coker(Dense const& m, std::size_t rows, std::size_t cols) {
    std::vector<BigInt> d{1};
    for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
      BigInt g = 0;
      subsets(rows, k, [&](auto const& ri) {
        subsets(cols, k, [&](auto const& ci) {
          Dense sub(k, std::vector<BigInt>(k));
          for (std::size_t a = 0; a < k; ++a) {
            for (std::size_t b = 0; b < k; ++b) {
              sub[a][b] = m[ri[a]][ci[b]];
            }
          }
          g = gcd(g, det(sub));
        });
      });
      if (g == 0) {
        break;
      }
      d.push_back(g);
    }
    ssg::FgAbelianGroup out;
    std::size_t const   rank = d.size() - 1;
    out.rank                 = rows - rank;
    for (std::size_t k = 1; k <= rank; ++k) {
      BigInt f = d[k] / d[k - 1];
      if (f > 1) {
        out.torsion.push_back(f);
      }
    }
    return out;
  }

  inline std::size_t matrix_rank(Dense const& m, std::size_t rows, std::size_t cols) {
    return rows - coker(m, rows, cols).rank;
  }

  // I - M for a square matrix.
  inline Dense id_minus(Dense m) {
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t j = 0; j < m.size(); ++j) {
        m[i][j] = (i == j ? 1 : 0) - m[i][j];
      }
    }
    return m;
  }

  // K0 = coker(I - A) + ker(I - B), K1 = coker(I - B) + ker(I - A).
  inline ssg::KGroups katsura_k(Dense const& A, Dense const& B) {
    std::size_t const n  = A.size();
    Dense const       IA = id_minus(A), IB = id_minus(B);
    auto              plus = [](ssg::FgAbelianGroup g, std::size_t free) {
      g.rank += free;
      return g;
    };
    return {plus(coker(IA, n, n), n - matrix_rank(IB, n, n)),
            plus(coker(IB, n, n), n - matrix_rank(IA, n, n))};
  }

}  // namespace oracles

#endif
