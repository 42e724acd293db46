// Finite directed graphs and finite paths.
//
// Conventions follow the self-similar graph literature: an edge e points
// from its source d(e) to its range r(e), and a path a1 a2 ... an is
// composable when d(ai) = r(ai+1).  Paths therefore grow "backwards", away
// from their range, and an infinite path heads towards the sources of the
// graph.

#ifndef SSG_GRAPH_HPP_
#define SSG_GRAPH_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ssg/core.hpp"

namespace ssg {

  using VertexId = std::uint32_t;
  using EdgeId   = std::uint32_t;

  class Graph {
   public:
    VertexId add_vertex(std::string name);
    // Throws DanglingEdge if either endpoint is unknown.
    EdgeId add_edge(std::string name, VertexId source, VertexId range);
    EdgeId add_edge(std::string        name,
                    std::string const& source,
                    std::string const& range);

    std::size_t num_vertices() const noexcept {
      return _vertex_names.size();
    }
    std::size_t num_edges() const noexcept {
      return _edge_names.size();
    }

    VertexId range(EdgeId e) const {
      return _range.at(e);
    }
    VertexId source(EdgeId e) const {
      return _source.at(e);
    }

    std::string const& vertex_name(VertexId v) const {
      return _vertex_names.at(v);
    }
    std::string const& edge_name(EdgeId e) const {
      return _edge_names.at(e);
    }

    std::optional<VertexId> find_vertex(std::string_view name) const;
    std::optional<EdgeId>   find_edge(std::string_view name) const;

    // r^{-1}(v) and d^{-1}(v), in edge insertion order.
    std::vector<EdgeId> const& edges_into(VertexId v) const {
      return _into.at(v);
    }
    std::vector<EdgeId> const& edges_out_of(VertexId v) const {
      return _out_of.at(v);
    }

    bool is_source(VertexId v) const {
      return edges_into(v).empty();
    }
    bool is_sink(VertexId v) const {
      return edges_out_of(v).empty();
    }
    bool is_simple(VertexId v) const {
      return edges_into(v).size() == 1;
    }

    // True when every edge name is a single character; paths over such
    // an alphabet are written as plain words.
    bool letter_edges() const noexcept {
      return _letter_edges;
    }

   private:
    void check_fresh(std::string const& name) const;

    std::vector<std::string>                  _vertex_names;
    std::vector<std::string>                  _edge_names;
    std::vector<VertexId>                     _range;
    std::vector<VertexId>                     _source;
    std::vector<std::vector<EdgeId>>          _into;
    std::vector<std::vector<EdgeId>>          _out_of;
    std::unordered_map<std::string, VertexId> _vertex_index;
    std::unordered_map<std::string, EdgeId>   _edge_index;
    bool                                      _letter_edges = true;
  };

  // A finite path.  The empty path is anchored at a vertex, so range and
  // source are always defined.
  class Path {
   public:
    Path() = default;

    static Path vertex(VertexId v) {
      Path p;
      p._range = p._source = v;
      return p;
    }
    static Path edge(Graph const& g, EdgeId e);
    // Throws NonComposable if consecutive edges do not meet.
    static Path from_edges(Graph const& g, std::vector<EdgeId> edges);

    VertexId range() const noexcept {
      return _range;
    }
    VertexId source() const noexcept {
      return _source;
    }
    std::size_t length() const noexcept {
      return _edges.size();
    }
    bool empty() const noexcept {
      return _edges.empty();
    }
    std::vector<EdgeId> const& edges() const noexcept {
      return _edges;
    }
    EdgeId operator[](std::size_t i) const {
      return _edges[i];
    }

    // Append one edge at the source end; throws NonComposable.
    void push_back(Graph const& g, EdgeId e);

    // First n edges, as a path anchored at the range.
    Path prefix(Graph const& g, std::size_t n) const;
    // Everything after the first n edges.
    Path suffix(Graph const& g, std::size_t n) const;

    bool is_prefix_of(Path const& other) const;

    bool operator==(Path const& other) const noexcept {
      return _edges == other._edges
             && (!_edges.empty() || _range == other._range);
    }
    bool operator!=(Path const& other) const noexcept {
      return !(*this == other);
    }
    bool operator<(Path const& other) const noexcept;

   private:
    VertexId            _range  = 0;
    VertexId            _source = 0;
    std::vector<EdgeId> _edges;
  };

  // p followed by q; requires d(p) = r(q).
  Path compose(Graph const& g, Path const& p, Path const& q);

  // Edge names joined by '.' (or juxtaposed when letter_edges()), or the
  // vertex name for an empty path.
  std::string format_path(Graph const& g, Path const& p);

  struct GraphReport {
    bool                  no_sources   = true;
    bool                  no_sinks     = true;
    bool                  row_finite   = true;
    std::vector<VertexId> sources;
    std::vector<VertexId> sinks;
    std::vector<VertexId> simple_vertices;
  };

  GraphReport validate_graph(Graph const& g);

  // A circuit is a path of positive length whose source equals its range.
  bool is_circuit(Path const& c) noexcept;

  // True iff some d(c_i) receives at least two edges.
  bool circuit_has_entry(Graph const& g, Path const& c);

  // Every circuit has an entry.
  bool condition_L(Graph const& g);

  // A circuit without entry, if one exists.
  std::optional<Path> circuit_without_entry(Graph const& g);

  // There is a path with source x and range y.
  bool reach(Graph const& g, VertexId x, VertexId y);

  // reach_matrix(g)[x][y] == reach(g, x, y).
  std::vector<std::vector<bool>> reach_matrix(Graph const& g);

  // Vertices that begin at least one infinite path, i.e. from which a
  // circuit can be reached by walking from range to source.
  std::vector<bool> live_vertices(Graph const& g);

  // An infinite path of the form prefix . cycle . cycle . ...
  //
  // The representation is normalised on construction: the cycle is
  // primitive and the prefix is as short as possible, so two values
  // describe the same infinite path iff they compare equal.
  class EventuallyPeriodicPath {
   public:
    EventuallyPeriodicPath() = default;
    // Throws NonComposable unless cycle is a circuit with r(cycle) = d(prefix).
    EventuallyPeriodicPath(Graph const& g, Path prefix, Path cycle);

    Path const& prefix() const noexcept {
      return _prefix;
    }
    Path const& cycle() const noexcept {
      return _cycle;
    }
    VertexId range() const noexcept {
      return _prefix.range();
    }

    EdgeId at(std::size_t i) const;
    // The first n edges.
    Path take(Graph const& g, std::size_t n) const;
    // The path with its first n edges removed.
    EventuallyPeriodicPath drop(Graph const& g, std::size_t n) const;

    bool operator==(EventuallyPeriodicPath const& other) const noexcept {
      return _prefix == other._prefix && _cycle == other._cycle;
    }
    bool operator!=(EventuallyPeriodicPath const& other) const noexcept {
      return !(*this == other);
    }

   private:
    Path _prefix;
    Path _cycle;
  };

  // "prefix(cycle)^inf" with '.'-separated edge names.
  std::string format_infinite(Graph const& g, EventuallyPeriodicPath const& p);

}  // namespace ssg

#endif  // SSG_GRAPH_HPP_
