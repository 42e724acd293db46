#include "ssg/katsura.hpp"

#include <memory>

namespace ssg {

  namespace {
    constexpr std::size_t max_edges = 1u << 20;

    std::string pos(std::size_t i, std::size_t j) {
      return "(" + std::to_string(i + 1) + ", " + std::to_string(j + 1) + ")";
    }

    std::string edge_name(std::size_t i, std::size_t j, std::size_t n) {
      return "e" + std::to_string(i + 1) + "_" + std::to_string(j + 1) + "_"
             + std::to_string(n);
    }

    // e12 or e11^0, as the edges are usually written for small N.
    std::string short_name(KatsuraData const& d, std::size_t i, std::size_t j,
                           std::size_t n) {
      std::string sep = d.A.size() > 9 ? "," : "";
      std::string s   = "e" + std::to_string(i + 1) + sep + std::to_string(j + 1);
      if (d.A[i][j] > 1) {
        s += "^" + std::to_string(n);
      }
      return s;
    }
  }  // namespace

  std::pair<BigInt, BigInt> floor_divmod(BigInt const& x, BigInt const& y) {
    BigInt k = x / y, r = x % y;
    if (r < 0) {
      r += y;
      k -= 1;
    }
    return {k, r};
  }

  void check_condition0(KatsuraData const& d) {
    std::size_t const N = d.A.size();
    if (N == 0) {
      throw Error(ErrorCode::shape_mismatch, "empty matrices");
    }
    if (d.B.size() != N) {
      throw Error(ErrorCode::shape_mismatch, "A and B have different sizes");
    }
    for (std::size_t i = 0; i < N; ++i) {
      if (d.A[i].size() != N || d.B[i].size() != N) {
        throw Error(ErrorCode::shape_mismatch, "the matrices must be square");
      }
    }
    for (std::size_t i = 0; i < N; ++i) {
      bool nonzero = false;
      for (std::size_t j = 0; j < N; ++j) {
        if (d.A[i][j] < 0) {
          throw Error(ErrorCode::condition0_violated,
                      "A has a negative entry at " + pos(i, j));
        }
        nonzero = nonzero || d.A[i][j] > 0;
        if (d.A[i][j] == 0 && d.B[i][j] != 0) {
          throw Error(ErrorCode::condition0_violated,
                      "B is nonzero at " + pos(i, j) + " where A vanishes");
        }
      }
      if (!nonzero) {
        throw Error(ErrorCode::condition0_violated,
                    "row " + std::to_string(i + 1) + " of A is zero");
      }
    }
  }

  System build_katsura(KatsuraData const& d) {
    check_condition0(d);
    std::size_t const N = d.A.size();
    BigInt            total = 0;
    for (auto const& row : d.A) {
      for (auto const& a : row) {
        total += a;
      }
    }
    if (total > max_edges) {
      throw Error(ErrorCode::invalid_argument,
                  "A describes " + total.str() + " edges, more than supported");
    }
    Graph g;
    for (std::size_t i = 0; i < N; ++i) {
      g.add_vertex(std::to_string(i + 1));
    }
    GeneratorAction one;
    auto            Z = std::make_shared<IntegerBackend>("t");
    for (std::size_t i = 0; i < N; ++i) {
      for (std::size_t j = 0; j < N; ++j) {
        auto const a     = static_cast<std::size_t>(d.A[i][j]);
        EdgeId     first = static_cast<EdgeId>(g.num_edges());
        for (std::size_t n = 0; n < a; ++n) {
          g.add_edge(edge_name(i, j, n), static_cast<VertexId>(j),
                     static_cast<VertexId>(i));
        }
        for (std::size_t n = 0; n < a; ++n) {
          auto [k, r] = floor_divmod(d.B[i][j] + n, d.A[i][j]);
          one.edge.push_back(first + static_cast<EdgeId>(r));
          one.cocycle.push_back(Z->integer(k));
        }
      }
    }
    for (std::size_t v = 0; v < N; ++v) {
      one.vertex.push_back(static_cast<VertexId>(v));
    }
    Z->bind_action(g.num_vertices(), g.num_edges(), {one});
    Assertions as;
    as.amenable   = true;
    as.provenance = "Z is abelian, hence amenable";
    System s(std::move(g), Z, as);
    validate_system(s);
    return s;
  }

  bool kirchberg_precheck(KatsuraData const& d) {
    check_condition0(d);
    std::size_t const N = d.A.size();
    for (std::size_t i = 0; i < N; ++i) {
      if (d.A[i][i] < 2 || d.B[i][i] != 1) {
        return false;
      }
    }
    // Irreducible: the graph of A is strongly connected.
    std::vector<std::vector<bool>> R(N, std::vector<bool>(N, false));
    for (std::size_t i = 0; i < N; ++i) {
      R[i][i] = true;
      for (std::size_t j = 0; j < N; ++j) {
        R[i][j] = R[i][j] || d.A[i][j] > 0;
      }
    }
    for (std::size_t k = 0; k < N; ++k) {
      for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = 0; j < N; ++j) {
          R[i][j] = R[i][j] || (R[i][k] && R[k][j]);
        }
      }
    }
    for (std::size_t i = 0; i < N; ++i) {
      for (std::size_t j = 0; j < N; ++j) {
        if (!R[i][j]) {
          return false;
        }
      }
    }
    return true;
  }

  std::vector<std::string> katsura_generator_table(System const&      s,
                                                   KatsuraData const& d) {
    std::vector<std::string> out;
    Graph const&             g   = s.graph();
    GroupElement             one = s.group().generator(0);
    std::size_t const        N   = d.A.size();
    for (std::size_t i = 0; i < N; ++i) {
      for (std::size_t j = 0; j < N; ++j) {
        auto const a = static_cast<std::size_t>(d.A[i][j]);
        for (std::size_t n = 0; n < a; ++n) {
          EdgeId e     = *g.find_edge(edge_name(i, j, n));
          EdgeId image = s.act_edge(one, e);
          // Edges of one block are consecutive, so the offset is n'.
          std::size_t np = n + image - e;
          std::string x = short_name(d, i, j, n);
          out.push_back("1." + x + " = " + short_name(d, i, j, np) + ", phi(1, " + x
                        + ") = " + s.format(s.restrict(one, e)));
        }
      }
    }
    return out;
  }

}  // namespace ssg
