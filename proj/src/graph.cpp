#include "ssg/graph.hpp"

#include <algorithm>
#include <deque>

namespace ssg {

  void Graph::check_fresh(std::string const& name) const {
    if (name.empty()) {
      throw Error(ErrorCode::invalid_argument, "empty identifier");
    }
    if (_vertex_index.count(name) || _edge_index.count(name)) {
      throw Error(ErrorCode::duplicate_id, "identifier '" + name + "' reused");
    }
  }

  VertexId Graph::add_vertex(std::string name) {
    check_fresh(name);
    auto id = static_cast<VertexId>(_vertex_names.size());
    _vertex_index.emplace(name, id);
    _vertex_names.push_back(std::move(name));
    _into.emplace_back();
    _out_of.emplace_back();
    return id;
  }

  EdgeId Graph::add_edge(std::string name, VertexId source, VertexId range) {
    check_fresh(name);
    if (source >= num_vertices() || range >= num_vertices()) {
      throw Error(ErrorCode::dangling_edge,
                  "edge '" + name + "' references an unknown vertex");
    }
    auto id = static_cast<EdgeId>(_edge_names.size());
    _edge_index.emplace(name, id);
    _letter_edges = _letter_edges && name.size() == 1;
    _edge_names.push_back(std::move(name));
    _source.push_back(source);
    _range.push_back(range);
    _into[range].push_back(id);
    _out_of[source].push_back(id);
    return id;
  }

  EdgeId Graph::add_edge(std::string        name,
                         std::string const& source,
                         std::string const& range) {
    auto s = find_vertex(source);
    auto r = find_vertex(range);
    if (!s || !r) {
      throw Error(ErrorCode::dangling_edge,
                  "edge '" + name + "' references unknown vertex '"
                      + (s ? range : source) + "'");
    }
    return add_edge(std::move(name), *s, *r);
  }

  std::optional<VertexId> Graph::find_vertex(std::string_view name) const {
    auto it = _vertex_index.find(std::string(name));
    if (it == _vertex_index.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  std::optional<EdgeId> Graph::find_edge(std::string_view name) const {
    auto it = _edge_index.find(std::string(name));
    if (it == _edge_index.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  ////////////////////////////////////////////////////////////////////////
  // Path
  ////////////////////////////////////////////////////////////////////////

  Path Path::edge(Graph const& g, EdgeId e) {
    Path p;
    p._range  = g.range(e);
    p._source = g.source(e);
    p._edges.push_back(e);
    return p;
  }

  Path Path::from_edges(Graph const& g, std::vector<EdgeId> edges) {
    if (edges.empty()) {
      throw Error(ErrorCode::invalid_argument,
                  "an empty path needs an anchoring vertex");
    }
    Path p = edge(g, edges[0]);
    for (std::size_t i = 1; i < edges.size(); ++i) {
      p.push_back(g, edges[i]);
    }
    return p;
  }

  void Path::push_back(Graph const& g, EdgeId e) {
    if (g.range(e) != _source) {
      throw Error(ErrorCode::non_composable,
                  "edge '" + g.edge_name(e) + "' does not continue the path");
    }
    _edges.push_back(e);
    _source = g.source(e);
  }

  Path Path::prefix(Graph const& g, std::size_t n) const {
    Path p = vertex(_range);
    for (std::size_t i = 0; i < n && i < _edges.size(); ++i) {
      p.push_back(g, _edges[i]);
    }
    return p;
  }

  Path Path::suffix(Graph const& g, std::size_t n) const {
    if (n >= _edges.size()) {
      return vertex(_source);
    }
    Path p = vertex(g.range(_edges[n]));
    for (std::size_t i = n; i < _edges.size(); ++i) {
      p.push_back(g, _edges[i]);
    }
    return p;
  }

  bool Path::is_prefix_of(Path const& other) const {
    if (_range != other._range || _edges.size() > other._edges.size()) {
      return false;
    }
    return std::equal(_edges.begin(), _edges.end(), other._edges.begin());
  }

  bool Path::operator<(Path const& other) const noexcept {
    if (_edges.size() != other._edges.size()) {
      return _edges.size() < other._edges.size();
    }
    if (_edges != other._edges) {
      return _edges < other._edges;
    }
    return _edges.empty() && _range < other._range;
  }

  Path compose(Graph const& g, Path const& p, Path const& q) {
    if (p.source() != q.range()) {
      throw Error(ErrorCode::non_composable,
                  "source of '" + format_path(g, p) + "' is not the range of '"
                      + format_path(g, q) + "'");
    }
    Path result = p;
    for (EdgeId e : q.edges()) {
      result.push_back(g, e);
    }
    return result;
  }

  std::string format_path(Graph const& g, Path const& p) {
    if (p.empty()) {
      return g.vertex_name(p.range());
    }
    std::string out;
    for (std::size_t i = 0; i < p.length(); ++i) {
      if (i > 0 && !g.letter_edges()) {
        out += '.';
      }
      out += g.edge_name(p[i]);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Graph-level checks
  ////////////////////////////////////////////////////////////////////////

  GraphReport validate_graph(Graph const& g) {
    GraphReport rep;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      if (g.is_source(v)) {
        rep.no_sources = false;
        rep.sources.push_back(v);
      }
      if (g.is_sink(v)) {
        rep.no_sinks = false;
        rep.sinks.push_back(v);
      }
      if (g.is_simple(v)) {
        rep.simple_vertices.push_back(v);
      }
    }
    return rep;
  }

  bool is_circuit(Path const& c) noexcept {
    return c.length() > 0 && c.source() == c.range();
  }

  bool circuit_has_entry(Graph const& g, Path const& c) {
    if (!is_circuit(c)) {
      throw Error(ErrorCode::invalid_argument, "not a circuit");
    }
    return std::any_of(c.edges().begin(), c.edges().end(), [&](EdgeId e) {
      return !g.is_simple(g.source(e));
    });
  }

  std::optional<Path> circuit_without_entry(Graph const& g) {
    // On simple vertices x with r^{-1}(x) = {e}, follow x -> d(e).  A
    // circuit without entry is exactly a cycle of this partial function.
    std::size_t const    n = g.num_vertices();
    std::vector<uint8_t> colour(n, 0);  // 0 new, 1 on stack, 2 done
    for (VertexId start = 0; start < n; ++start) {
      if (colour[start] != 0) {
        continue;
      }
      std::vector<VertexId> stack;
      VertexId              x = start;
      while (colour[x] == 0 && g.is_simple(x)) {
        colour[x] = 1;
        stack.push_back(x);
        x = g.source(g.edges_into(x)[0]);
      }
      if (colour[x] == 1) {
        Path c = Path::vertex(x);
        VertexId y = x;
        do {
          EdgeId e = g.edges_into(y)[0];
          c.push_back(g, e);
          y = g.source(e);
        } while (y != x);
        return c;
      }
      for (VertexId y : stack) {
        colour[y] = 2;
      }
    }
    return std::nullopt;
  }

  bool condition_L(Graph const& g) {
    return !circuit_without_entry(g).has_value();
  }

  bool reach(Graph const& g, VertexId x, VertexId y) {
    std::vector<bool>    seen(g.num_vertices(), false);
    std::deque<VertexId> queue{x};
    seen[x] = true;
    while (!queue.empty()) {
      VertexId u = queue.front();
      queue.pop_front();
      if (u == y) {
        return true;
      }
      for (EdgeId e : g.edges_out_of(u)) {
        if (!seen[g.range(e)]) {
          seen[g.range(e)] = true;
          queue.push_back(g.range(e));
        }
      }
    }
    return false;
  }

  std::vector<std::vector<bool>> reach_matrix(Graph const& g) {
    std::size_t const              n = g.num_vertices();
    std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
    for (VertexId x = 0; x < n; ++x) {
      std::deque<VertexId> queue{x};
      m[x][x] = true;
      while (!queue.empty()) {
        VertexId u = queue.front();
        queue.pop_front();
        for (EdgeId e : g.edges_out_of(u)) {
          if (!m[x][g.range(e)]) {
            m[x][g.range(e)] = true;
            queue.push_back(g.range(e));
          }
        }
      }
    }
    return m;
  }

  std::vector<bool> live_vertices(Graph const& g) {
    std::size_t const        n = g.num_vertices();
    std::vector<bool>        live(n, true);
    std::vector<std::size_t> count(n);
    std::deque<VertexId>     dead;
    for (VertexId v = 0; v < n; ++v) {
      count[v] = g.edges_into(v).size();
      if (count[v] == 0) {
        dead.push_back(v);
        live[v] = false;
      }
    }
    while (!dead.empty()) {
      VertexId v = dead.front();
      dead.pop_front();
      for (EdgeId e : g.edges_out_of(v)) {
        VertexId r = g.range(e);
        if (live[r] && --count[r] == 0) {
          live[r] = false;
          dead.push_back(r);
        }
      }
    }
    return live;
  }

  ////////////////////////////////////////////////////////////////////////
  // EventuallyPeriodicPath
  ////////////////////////////////////////////////////////////////////////

  EventuallyPeriodicPath::EventuallyPeriodicPath(Graph const& g,
                                                 Path         prefix,
                                                 Path         cycle) {
    if (!is_circuit(cycle) || prefix.source() != cycle.range()) {
      throw Error(ErrorCode::non_composable,
                  "an eventually periodic path needs a circuit starting at "
                  "the source of its prefix");
    }
    std::vector<EdgeId> c = cycle.edges();
    std::size_t const   L = c.size();
    for (std::size_t p = 1; p <= L; ++p) {
      if (L % p != 0) {
        continue;
      }
      bool periodic = true;
      for (std::size_t i = p; i < L && periodic; ++i) {
        periodic = c[i] == c[i - p];
      }
      if (periodic) {
        c.resize(p);
        break;
      }
    }
    std::vector<EdgeId> pre = prefix.edges();
    while (!pre.empty() && pre.back() == c.back()) {
      pre.pop_back();
      std::rotate(c.rbegin(), c.rbegin() + 1, c.rend());
    }
    _prefix = Path::vertex(prefix.range());
    for (EdgeId e : pre) {
      _prefix.push_back(g, e);
    }
    _cycle = Path::from_edges(g, c);
  }

  EdgeId EventuallyPeriodicPath::at(std::size_t i) const {
    if (i < _prefix.length()) {
      return _prefix[i];
    }
    return _cycle[(i - _prefix.length()) % _cycle.length()];
  }

  Path EventuallyPeriodicPath::take(Graph const& g, std::size_t n) const {
    Path p = Path::vertex(range());
    for (std::size_t i = 0; i < n; ++i) {
      p.push_back(g, at(i));
    }
    return p;
  }

  EventuallyPeriodicPath EventuallyPeriodicPath::drop(Graph const& g,
                                                      std::size_t  n) const {
    if (n <= _prefix.length()) {
      return EventuallyPeriodicPath(g, _prefix.suffix(g, n), _cycle);
    }
    std::size_t         shift = (n - _prefix.length()) % _cycle.length();
    std::vector<EdgeId> c     = _cycle.edges();
    std::rotate(c.begin(), c.begin() + shift, c.end());
    Path cyc = Path::from_edges(g, c);
    return EventuallyPeriodicPath(g, Path::vertex(cyc.range()), cyc);
  }

  std::string format_infinite(Graph const& g, EventuallyPeriodicPath const& p) {
    std::string out;
    if (!p.prefix().empty()) {
      out = format_path(g, p.prefix());
    }
    return out + "(" + format_path(g, p.cycle()) + ")^inf";
  }

}  // namespace ssg
