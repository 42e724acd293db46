#include "ssg/abelian.hpp"

#include <map>
#include <numeric>
#include <deque>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

namespace ssg {

  ////////////////////////////////////////////////////////////////////////
  // Matrices
  ////////////////////////////////////////////////////////////////////////

  IntMatrix::IntMatrix(std::vector<std::vector<BigInt>> const& rows)
      : _rows(rows.size()), _cols(rows.empty() ? 0 : rows[0].size()) {
    _data.reserve(_rows * _cols);
    for (auto const& r : rows) {
      if (r.size() != _cols) {
        throw Error(ErrorCode::shape_mismatch, "ragged matrix");
      }
      _data.insert(_data.end(), r.begin(), r.end());
    }
  }

  IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m(i, i) = 1;
    }
    return m;
  }

  IntMatrix IntMatrix::transpose() const {
    IntMatrix t(_cols, _rows);
    for (std::size_t i = 0; i < _rows; ++i) {
      for (std::size_t j = 0; j < _cols; ++j) {
        t(j, i) = (*this)(i, j);
      }
    }
    return t;
  }

  IntMatrix operator*(IntMatrix const& a, IntMatrix const& b) {
    if (a.cols() != b.rows()) {
      throw Error(ErrorCode::shape_mismatch, "cannot multiply "
                                                 + std::to_string(a.rows()) + "x"
                                                 + std::to_string(a.cols()) + " by "
                                                 + std::to_string(b.rows()) + "x"
                                                 + std::to_string(b.cols()));
    }
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t k = 0; k < a.cols(); ++k) {
        if (a(i, k) == 0) {
          continue;
        }
        for (std::size_t j = 0; j < b.cols(); ++j) {
          c(i, j) += a(i, k) * b(k, j);
        }
      }
    }
    return c;
  }

  IntMatrix operator-(IntMatrix const& a, IntMatrix const& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
      throw Error(ErrorCode::shape_mismatch, "cannot subtract matrices of different shapes");
    }
    IntMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) {
        c(i, j) = a(i, j) - b(i, j);
      }
    }
    return c;
  }

  std::string format_matrix(IntMatrix const& m) {
    std::ostringstream out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      out << "[";
      for (std::size_t j = 0; j < m.cols(); ++j) {
        out << (j ? " " : "") << m(i, j);
      }
      out << "]\n";
    }
    return out.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // Smith normal form
  ////////////////////////////////////////////////////////////////////////

  namespace {
    using boost::multiprecision::abs;

    void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        std::swap(m(a, j), m(b, j));
      }
    }
    void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
      for (std::size_t i = 0; i < m.rows(); ++i) {
        std::swap(m(i, a), m(i, b));
      }
    }
    // row_a += q * row_b
    void add_row(IntMatrix& m, std::size_t a, std::size_t b, BigInt const& q) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        m(a, j) += q * m(b, j);
      }
    }
    // The integer nearest to x / y, so that |x - q y| <= |y| / 2.
    BigInt nearest_quotient(BigInt const& x, BigInt const& y) {
      BigInt q = x / y;
      BigInt r = x - q * y;
      if (2 * abs(r) > abs(y)) {
        q += ((r < 0) == (y < 0)) ? 1 : -1;
      }
      return q;
    }
    void add_col(IntMatrix& m, std::size_t a, std::size_t b, BigInt const& q) {
      for (std::size_t i = 0; i < m.rows(); ++i) {
        m(i, a) += q * m(i, b);
      }
    }
  }  // namespace

  SmithForm smith_normal_form(IntMatrix const& m) {
    std::size_t const r = m.rows(), c = m.cols();
    SmithForm         f{IntMatrix::identity(r), m, IntMatrix::identity(c), 0};
    IntMatrix&        D = f.D;
    for (std::size_t t = 0; t < std::min(r, c); ++t) {
      bool any = false;
      while (true) {
        // Move an entry of least absolute value in the remaining block to
        // (t, t).  Choosing it afresh on every pass keeps the entries
        // small; a fixed pivot lets them explode on 6 x 6 inputs.
        bool        found = false;
        std::size_t pi = t, pj = t;
        for (std::size_t i = t; i < r; ++i) {
          for (std::size_t j = t; j < c; ++j) {
            if (D(i, j) != 0 && (!found || abs(D(i, j)) < abs(D(pi, pj)))) {
              found = true;
              pi    = i;
              pj    = j;
            }
          }
        }
        if (!found) {
          break;
        }
        any = true;
        swap_rows(D, t, pi);
        swap_rows(f.U, t, pi);
        swap_cols(D, t, pj);
        swap_cols(f.V, t, pj);

        bool clean = true;
        for (std::size_t i = t + 1; i < r; ++i) {
          if (D(i, t) != 0) {
            BigInt q = nearest_quotient(D(i, t), D(t, t));
            add_row(D, i, t, -q);
            add_row(f.U, i, t, -q);
            clean = clean && D(i, t) == 0;
          }
        }
        for (std::size_t j = t + 1; j < c; ++j) {
          if (D(t, j) != 0) {
            BigInt q = nearest_quotient(D(t, j), D(t, t));
            add_col(D, j, t, -q);
            add_col(f.V, j, t, -q);
            clean = clean && D(t, j) == 0;
          }
        }
        if (!clean) {
          continue;  // a remainder is now the smallest entry
        }
        // Divisibility: fold a row with a non-multiple into the pivot row.
        bool divides = true;
        for (std::size_t i = t + 1; i < r && divides; ++i) {
          for (std::size_t j = t + 1; j < c; ++j) {
            if (D(i, j) % D(t, t) != 0) {
              add_row(D, t, i, 1);
              add_row(f.U, t, i, 1);
              divides = false;
              break;
            }
          }
        }
        if (divides) {
          break;
        }
      }
      if (!any) {
        break;
      }
      if (D(t, t) < 0) {
        for (std::size_t j = 0; j < c; ++j) {
          D(t, j) = -D(t, j);
        }
        for (std::size_t j = 0; j < r; ++j) {
          f.U(t, j) = -f.U(t, j);
        }
      }
      f.rank = t + 1;
    }
    return f;
  }

  ////////////////////////////////////////////////////////////////////////
  // Abelian groups
  ////////////////////////////////////////////////////////////////////////

  FgAbelianGroup make_abelian_group(std::size_t rank, std::vector<BigInt> orders) {
    FgAbelianGroup g;
    g.rank = rank;
    IntMatrix d(orders.size(), orders.size());
    for (std::size_t i = 0; i < orders.size(); ++i) {
      d(i, i) = orders[i];
    }
    SmithForm f = smith_normal_form(d);
    g.rank += orders.size() - f.rank;
    for (std::size_t i = 0; i < f.rank; ++i) {
      if (f.D(i, i) > 1) {
        g.torsion.push_back(f.D(i, i));
      }
    }
    return g;
  }

  FgAbelianGroup direct_sum(FgAbelianGroup const& a, FgAbelianGroup const& b) {
    std::vector<BigInt> t = a.torsion;
    t.insert(t.end(), b.torsion.begin(), b.torsion.end());
    return make_abelian_group(a.rank + b.rank, t);
  }

  std::string format_group(FgAbelianGroup const& g) {
    if (g.is_zero()) {
      return "0";
    }
    std::vector<std::string> parts;
    if (g.rank == 1) {
      parts.push_back("Z");
    } else if (g.rank > 1) {
      parts.push_back("Z^" + std::to_string(g.rank));
    }
    for (auto const& d : g.torsion) {
      parts.push_back("Z/" + d.str());
    }
    std::string out = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) {
      out += " + " + parts[i];
    }
    return out;
  }

  FgAbelianGroup coker(IntMatrix const& m) {
    SmithForm      f = smith_normal_form(m);
    FgAbelianGroup g;
    g.rank = m.rows() - f.rank;
    for (std::size_t i = 0; i < f.rank; ++i) {
      if (f.D(i, i) > 1) {
        g.torsion.push_back(f.D(i, i));
      }
    }
    return g;
  }

  FgAbelianGroup ker(IntMatrix const& m) {
    FgAbelianGroup g;
    g.rank = m.cols() - smith_normal_form(m).rank;
    return g;
  }

  std::optional<std::vector<BigInt>> solve_integer(IntMatrix const&           m,
                                                   std::vector<BigInt> const& b) {
    if (b.size() != m.rows()) {
      throw Error(ErrorCode::shape_mismatch, "right-hand side has the wrong length");
    }
    SmithForm f = smith_normal_form(m);
    IntMatrix bb(b.size(), 1);
    for (std::size_t i = 0; i < b.size(); ++i) {
      bb(i, 0) = b[i];
    }
    IntMatrix ub = f.U * bb;
    IntMatrix y(m.cols(), 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i < f.rank) {
        if (ub(i, 0) % f.D(i, i) != 0) {
          return std::nullopt;
        }
        y(i, 0) = ub(i, 0) / f.D(i, i);
      } else if (ub(i, 0) != 0) {
        return std::nullopt;
      }
    }
    IntMatrix           x = f.V * y;
    std::vector<BigInt> out(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out[j] = x(j, 0);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Katsura algebras
  ////////////////////////////////////////////////////////////////////////

  KGroups katsura_ktheory(KatsuraData const& data) {
    check_condition0(data);
    IntMatrix A(data.A), B(data.B);
    IntMatrix I  = IntMatrix::identity(A.rows());
    IntMatrix IA = I - A, IB = I - B;
    return {direct_sum(coker(IA), ker(IB)), direct_sum(coker(IB), ker(IA))};
  }

  std::vector<KGroups> katsura_ktheory_batch(std::vector<KatsuraData> const& data) {
    std::vector<KGroups>     out(data.size());
    std::vector<std::string> errors(data.size());
    std::vector<int>         codes(data.size(), -1);
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < data.size(); ++i) {
      try {
        out[i] = katsura_ktheory(data[i]);
      } catch (Error const& e) {
        codes[i]  = static_cast<int>(e.code());
        errors[i] = e.what();
      }
    }
    for (std::size_t i = 0; i < data.size(); ++i) {
      if (codes[i] >= 0) {
        throw Error(static_cast<ErrorCode>(codes[i]),
                    "pair " + std::to_string(i) + ": " + errors[i]);
      }
    }
    return out;
  }

  std::vector<KGroups> katsura_ktheory_batch_serial(std::vector<KatsuraData> const& data) {
    std::vector<KGroups> out;
    out.reserve(data.size());
    for (std::size_t i = 0; i < data.size(); ++i) {
      try {
        out.push_back(katsura_ktheory(data[i]));
      } catch (Error const& e) {
        throw Error(e.code(), "pair " + std::to_string(i) + ": " + e.what());
      }
    }
    return out;
  }

  KatsuraHomology katsura_homology(KatsuraData const& data) {
    IntMatrix A(data.A), B(data.B);
    std::size_t const N = A.rows();
    if (A.cols() != N || B.rows() != N || B.cols() != N) {
      throw Error(ErrorCode::shape_mismatch, "A and B must be square of the same size");
    }
    KatsuraHomology   h;
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < N; ++i) {
      bool zero = true;
      for (std::size_t j = 0; j < N; ++j) {
        if (A(i, j) < 0) {
          throw Error(ErrorCode::condition0_violated, "A has a negative entry");
        }
        if (A(i, j) == 0 && B(i, j) != 0) {
          throw Error(ErrorCode::condition0_violated,
                      "B is nonzero where A vanishes");
        }
        zero = zero && A(i, j) == 0;
      }
      (zero ? h.removed_rows : kept).push_back(i);
    }
    // (id - A'^T) and (id - B'^T) map Z^kept to Z^N.
    IntMatrix ta(N, kept.size()), tb(N, kept.size());
    for (std::size_t k = 0; k < kept.size(); ++k) {
      for (std::size_t j = 0; j < N; ++j) {
        ta(j, k) = -A(kept[k], j);
        tb(j, k) = -B(kept[k], j);
      }
      ta(kept[k], k) += 1;
      tb(kept[k], k) += 1;
    }
    h.H0 = coker(ta);
    h.H1 = direct_sum(ker(ta), coker(tb));
    h.H2 = ker(tb);
    h.K0 = direct_sum(coker(ta), ker(tb));
    h.K1 = direct_sum(ker(ta), coker(tb));
    return h;
  }

  ////////////////////////////////////////////////////////////////////////
  // Self-similar group actions
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::vector<VertexId> orbit_representatives(System const& s) {
      std::size_t const     n = s.graph().num_vertices();
      std::vector<VertexId> rep(n);
      std::iota(rep.begin(), rep.end(), VertexId(0));
      auto find = [&](VertexId v) {
        while (rep[v] != v) {
          v = rep[v] = rep[rep[v]];
        }
        return v;
      };
      GroupBackend const& G = s.group();
      for (std::size_t i = 0; i < G.num_generators(); ++i) {
        auto const& perm = G.generator_action(i).vertex;
        for (VertexId v = 0; v < n; ++v) {
          VertexId a = find(v), b = find(perm[v]);
          if (a != b) {
            rep[std::max(a, b)] = std::min(a, b);
          }
        }
      }
      for (VertexId v = 0; v < n; ++v) {
        rep[v] = find(v);
      }
      return rep;
    }

    // A word in the generators for g.
    Word word_for(GroupBackend const& G, GroupElement const& g) {
      if (auto const* A = dynamic_cast<AutomatonBackend const*>(&G)) {
        (void) A;
        return g.word();
      }
      if (G.kind() == BackendKind::integer) {
        BigInt m = g.integer();
        if (m > 100000 || m < -100000) {
          throw Error(ErrorCode::invalid_argument, "integer too large for a word");
        }
        int  k = static_cast<int>(m);
        Word w(static_cast<std::size_t>(k < 0 ? -k : k), k < 0 ? -1 : 1);
        return w;
      }
      // Finite: breadth-first search over generator words.
      auto const&                           F = dynamic_cast<FiniteBackend const&>(G);
      std::map<std::uint32_t, Word>         seen{{F.identity().index(), {}}};
      std::deque<std::uint32_t>             queue{F.identity().index()};
      while (!queue.empty()) {
        std::uint32_t x = queue.front();
        queue.pop_front();
        if (x == g.index()) {
          break;
        }
        for (std::size_t i = 0; i < F.num_generators(); ++i) {
          std::uint32_t y = F.mul(F.element(x), F.generator(i)).index();
          if (seen.emplace(y, seen[x]).second) {
            seen[y].push_back(static_cast<int>(i) + 1);
            queue.push_back(y);
          }
        }
      }
      auto it = seen.find(g.index());
      if (it == seen.end()) {
        throw Error(ErrorCode::invalid_argument,
                    "element not generated by the generators");
      }
      return it->second;
    }

    bool in_relation_span(Abelianization const& ab, std::vector<BigInt> const& v) {
      if (ab.relations.empty()) {
        for (auto const& x : v) {
          if (x != 0) {
            return false;
          }
        }
        return true;
      }
      IntMatrix M(ab.rank, ab.relations.size());
      for (std::size_t j = 0; j < ab.relations.size(); ++j) {
        for (std::size_t i = 0; i < ab.rank; ++i) {
          M(i, j) = ab.relations[j][i];
        }
      }
      return solve_integer(M, v).has_value();
    }
  }  // namespace

  std::vector<BigInt> abelian_image(System const& s, Abelianization const& ab,
                                    GroupElement const& g) {
    std::vector<BigInt> v(ab.rank);
    for (int letter : word_for(s.group(), g)) {
      auto const& img = ab.images.at(static_cast<std::size_t>(std::abs(letter)) - 1);
      for (std::size_t k = 0; k < ab.rank; ++k) {
        v[k] += letter > 0 ? img[k] : -img[k];
      }
    }
    return v;
  }

  PhiMaps phi_maps(System const& s, Abelianization const* ab) {
    Graph const& G = s.graph();
    PhiMaps      out;
    auto const   rep = orbit_representatives(s);
    std::map<VertexId, std::size_t> row_of;
    for (VertexId v = 0; v < G.num_vertices(); ++v) {
      if (rep[v] == v) {
        row_of[v] = out.orbit_reps.size();
        out.orbit_reps.push_back(v);
        if (!G.edges_into(v).empty()) {
          out.regular_reps.push_back(v);
        }
      }
    }
    // (phi0)_{w, v} = number of edges with range v and source in the orbit of w.
    out.phi0 = IntMatrix(out.orbit_reps.size(), out.regular_reps.size());
    IntMatrix incl(out.orbit_reps.size(), out.regular_reps.size());
    for (std::size_t k = 0; k < out.regular_reps.size(); ++k) {
      VertexId v = out.regular_reps[k];
      incl(row_of[v], k) = 1;
      for (EdgeId e : G.edges_into(v)) {
        out.phi0(row_of[rep[G.source(e)]], k) += 1;
      }
    }
    out.H0 = coker(incl - out.phi0);

    if (ab == nullptr) {
      return out;
    }
    GroupBackend const& Gr = s.group();
    std::size_t const   n  = ab->rank;
    std::size_t const   ng = Gr.num_generators();
    if (ab->images.size() != ng) {
      throw Error(ErrorCode::abelianization_inconsistent,
                  "need one image per generator");
    }
    // Sum of the images of all restrictions of generator i.
    std::vector<std::vector<BigInt>> target(ng, std::vector<BigInt>(n));
    for (std::size_t i = 0; i < ng; ++i) {
      GroupElement g = Gr.generator(i);
      for (EdgeId e = 0; e < G.num_edges(); ++e) {
        auto img = abelian_image(s, *ab, s.restrict(g, e));
        for (std::size_t k = 0; k < n; ++k) {
          target[i][k] += img[k];
        }
      }
    }
    // Write each basis vector of Z^n as a combination of generator images
    // modulo the relations, and push the combination through phi1.
    std::size_t const nr = ab->relations.size();
    IntMatrix         span(n, ng + nr);
    for (std::size_t i = 0; i < ng; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        span(k, i) = ab->images[i][k];
      }
    }
    for (std::size_t j = 0; j < nr; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        span(k, ng + j) = ab->relations[j][k];
      }
    }
    IntMatrix phi1(n, n);
    for (std::size_t b = 0; b < n; ++b) {
      std::vector<BigInt> unit(n);
      unit[b] = 1;
      auto x  = solve_integer(span, unit);
      if (!x) {
        throw Error(ErrorCode::abelianization_inconsistent,
                    "the generator images do not generate Z^" + std::to_string(n)
                        + " modulo the relations");
      }
      for (std::size_t i = 0; i < ng; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
          phi1(k, b) += (*x)[i] * target[i][k];
        }
      }
    }
    auto apply = [&](std::vector<BigInt> const& v) {
      std::vector<BigInt> w(n);
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t b = 0; b < n; ++b) {
          w[k] += phi1(k, b) * v[b];
        }
      }
      return w;
    };
    for (std::size_t j = 0; j < nr; ++j) {
      if (!in_relation_span(*ab, apply(ab->relations[j]))) {
        throw Error(ErrorCode::abelianization_inconsistent,
                    "phi1 does not preserve relation " + std::to_string(j + 1));
      }
    }
    for (std::size_t i = 0; i < ng; ++i) {
      auto w = apply(ab->images[i]);
      for (std::size_t k = 0; k < n; ++k) {
        w[k] -= target[i][k];
      }
      if (!in_relation_span(*ab, w)) {
        throw Error(ErrorCode::abelianization_inconsistent,
                    "the image of " + Gr.generator_names()[i]
                        + " is not compatible with its restrictions");
      }
    }
    out.phi1 = phi1;
    if (G.num_vertices() == 1) {
      IntMatrix rel(n, n + nr);
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t b = 0; b < n; ++b) {
          rel(k, b) = (k == b ? 1 : 0) - phi1(k, b);
        }
        for (std::size_t j = 0; j < nr; ++j) {
          rel(k, n + j) = ab->relations[j][k];
        }
      }
      out.H1 = coker(rel);
    } else {
      out.note = "H1 from phi1 needs a single vertex; only phi1 is reported";
    }
    return out;
  }

  LesResult les_assemble(FgAbelianGroup const& K0G,
                         FgAbelianGroup const& K1G,
                         IntMatrix const&      phi0,
                         IntMatrix const&      phi1) {
    if (phi0.rows() != phi0.cols() || phi0.rows() != K0G.rank) {
      throw Error(ErrorCode::shape_mismatch,
                  "phi0 must be square of size rank K0(C*(G))");
    }
    if (phi1.rows() != phi1.cols() || phi1.rows() != K1G.rank) {
      throw Error(ErrorCode::shape_mismatch,
                  "phi1 must be square of size rank K1(C*(G))");
    }
    if (!K0G.torsion.empty()) {
      return {std::nullopt, "K0(C*(G)) has torsion; a basis of a free group is required"};
    }
    if (!K1G.is_zero()) {
      return {std::nullopt,
              "K1(C*(G)) is nonzero: the six-term sequence leaves an extension "
              "problem that is not solved here"};
    }
    IntMatrix m = IntMatrix::identity(phi0.rows()) - phi0;
    return {KGroups{coker(m), ker(m)}, "split case K1(C*(G)) = 0"};
  }

}  // namespace ssg
