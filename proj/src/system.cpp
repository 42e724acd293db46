#include "ssg/system.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>

namespace ssg {

  System::System(Graph                               graph,
                 std::shared_ptr<GroupBackend const> group,
                 Assertions                          assertions)
      : _graph(std::move(graph)),
        _group(std::move(group)),
        _assertions(std::move(assertions)) {
    if (!_group || !_group->has_action()
        || _group->action_vertices() != _graph.num_vertices()
        || _group->action_edges() != _graph.num_edges()) {
      throw Error(ErrorCode::domain_mismatch,
                  "the group action does not match the graph");
    }
  }

  SystemReport validate_system(System const& s, bool allow_weak) {
    Graph const&        g = s.graph();
    GroupBackend const& G = s.group();
    SystemReport        rep;
    rep.graph = validate_graph(g);
    for (std::size_t i = 0; i < G.num_generators(); ++i) {
      auto const&        a    = G.generator_action(i);
      std::string const& name = G.generator_names()[i];
      for (EdgeId e = 0; e < g.num_edges(); ++e) {
        if (g.range(a.edge[e]) != a.vertex[g.range(e)]
            || g.source(a.edge[e]) != a.vertex[g.source(e)]) {
          throw Error(ErrorCode::not_automorphism,
                      "generator '" + name + "' does not commute with r and d "
                          "at edge '" + g.edge_name(e) + "'");
        }
      }
    }
    bool weak_only = false;
    for (std::size_t i = 0; i < G.num_generators(); ++i) {
      auto const&        a    = G.generator_action(i);
      std::string const& name = G.generator_names()[i];
      for (EdgeId e = 0; e < g.num_edges(); ++e) {
        GroupElement const& h = a.cocycle[e];
        for (VertexId x = 0; x < g.num_vertices(); ++x) {
          if (G.act_vertex(h, x) == a.vertex[x]) {
            continue;
          }
          bool const at_source = x == g.source(e);
          if (!allow_weak || at_source) {
            throw Error(ErrorCode::standing_hypothesis_violated,
                        "(" + name + ", " + g.edge_name(e) + ", "
                            + g.vertex_name(x) + "): phi(" + name + ", "
                            + g.edge_name(e) + ") = " + G.format(h)
                            + " and " + name + " act differently on "
                            + g.vertex_name(x));
          }
          weak_only = true;
        }
      }
    }
    rep.weak_hypothesis_only = weak_only;
    return rep;
  }

  Path act_path(System const& s, GroupElement const& g, Path const& p) {
    if (p.empty()) {
      return Path::vertex(s.act(g, p.range()));
    }
    Graph const& G = s.graph();
    GroupElement h = g;
    Path         out;
    for (std::size_t i = 0; i < p.length(); ++i) {
      EdgeId e = s.act_edge(h, p[i]);
      if (i == 0) {
        out = Path::edge(G, e);
      } else {
        out.push_back(G, e);
      }
      h = s.restrict(h, p[i]);
    }
    return out;
  }

  GroupElement restrict_path(System const&       s,
                             GroupElement const& g,
                             Path const&         p) {
    GroupElement h = g;
    for (EdgeId e : p.edges()) {
      h = s.restrict(h, e);
    }
    return h;
  }

  Verdict strongly_fixes(System const&       s,
                         GroupElement const& g,
                         Path const&         p,
                         SearchBudget const& budget) {
    if (act_path(s, g, p) != p) {
      return Verdict::no("path is moved");
    }
    return s.group().is_identity(restrict_path(s, g, p), budget);
  }

  char const* sfp_status_name(SfpStatus st) noexcept {
    switch (st) {
      case SfpStatus::finite: return "Finite";
      case SfpStatus::infinite: return "Infinite";
      case SfpStatus::unknown: return "Unknown";
    }
    return "Unknown";
  }

  namespace {

    // The reachable part of the restriction-state graph.  A state (h, v)
    // stands for "we have read a path with source v and the current
    // restriction is h"; h is never the identity.
    struct StateGraph {
      enum class Kind { exit, state, moved, unknown };
      struct Move {
        EdgeId      edge;
        Kind        kind;
        std::size_t target = 0;
      };
      struct State {
        std::size_t cls;
        VertexId    vertex;
        std::size_t depth;
        std::size_t parent;
        EdgeId      via;
      };
      std::vector<State>             states;
      std::vector<std::vector<Move>> moves;
      bool                           complete  = true;
      bool                           undecided = false;
    };

    StateGraph explore(System const&                                      s,
                       ElementRegistry&                                   reg,
                       std::vector<std::pair<GroupElement, VertexId>> const& starts,
                       SearchBudget const& budget) {
      using Kind = StateGraph::Kind;
      Graph const&        G     = s.graph();
      GroupBackend const& group = s.group();
      StateGraph          sg;
      std::map<std::pair<std::size_t, VertexId>, std::size_t> index;
      std::deque<std::size_t>                                  queue;
      for (auto const& [g, x] : starts) {
        auto cls = reg.intern(g);
        if (!cls) {
          sg.undecided = true;
          continue;
        }
        if (index.emplace(std::make_pair(*cls, x), sg.states.size()).second) {
          sg.states.push_back({*cls, x, 0, SIZE_MAX, 0});
          sg.moves.emplace_back();
          queue.push_back(sg.states.size() - 1);
        }
      }
      while (!queue.empty()) {
        std::size_t i = queue.front();
        queue.pop_front();
        if (sg.states[i].depth >= budget.max_depth) {
          sg.complete = false;
          continue;
        }
        GroupElement const h = reg.representative(sg.states[i].cls);
        VertexId const     v = sg.states[i].vertex;
        std::vector<StateGraph::Move> out;
        for (EdgeId e : G.edges_into(v)) {
          if (s.act_edge(h, e) != e) {
            out.push_back({e, Kind::moved});
            continue;
          }
          GroupElement h2 = s.restrict(h, e);
          Verdict      id = group.is_identity(h2, budget);
          if (id.is_yes()) {
            out.push_back({e, Kind::exit});
            continue;
          }
          auto cls = id.is_no() ? reg.intern(h2) : std::nullopt;
          if (!cls) {
            sg.undecided = true;
            out.push_back({e, Kind::unknown});
            continue;
          }
          auto key = std::make_pair(*cls, G.source(e));
          auto it  = index.find(key);
          if (it == index.end()) {
            if (sg.states.size() >= budget.max_states) {
              sg.complete = false;
              out.push_back({e, Kind::unknown});
              continue;
            }
            it = index.emplace(key, sg.states.size()).first;
            sg.states.push_back({*cls, G.source(e), sg.states[i].depth + 1, i, e});
            sg.moves.emplace_back();
            queue.push_back(it->second);
          }
          out.push_back({e, Kind::state, it->second});
        }
        sg.moves[i] = std::move(out);
      }
      return sg;
    }

    // States that can reach an exit.
    std::vector<bool> coreachable(StateGraph const& sg) {
      std::size_t const                     n = sg.states.size();
      std::vector<std::vector<std::size_t>> rev(n);
      std::vector<bool>                     ok(n, false);
      std::deque<std::size_t>               queue;
      for (std::size_t i = 0; i < n; ++i) {
        for (auto const& m : sg.moves[i]) {
          if (m.kind == StateGraph::Kind::state) {
            rev[m.target].push_back(i);
          } else if (m.kind == StateGraph::Kind::exit && !ok[i]) {
            ok[i] = true;
            queue.push_back(i);
          }
        }
      }
      while (!queue.empty()) {
        std::size_t i = queue.front();
        queue.pop_front();
        for (std::size_t j : rev[i]) {
          if (!ok[j]) {
            ok[j] = true;
            queue.push_back(j);
          }
        }
      }
      return ok;
    }

    // Finds a cycle inside the states selected by `keep`; returns the
    // cycle as a list of (state, edge taken) pairs starting at the
    // smallest-index state that lies on a surviving cycle.
    std::optional<std::vector<std::pair<std::size_t, EdgeId>>>
    find_cycle(StateGraph const& sg, std::vector<bool> keep) {
      std::size_t const n = sg.states.size();
      // Peel states with no incoming or no outgoing edges inside `keep`.
      bool changed = true;
      while (changed) {
        changed = false;
        std::vector<std::size_t> indeg(n, 0), outdeg(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
          if (!keep[i]) {
            continue;
          }
          for (auto const& m : sg.moves[i]) {
            if (m.kind == StateGraph::Kind::state && keep[m.target]) {
              ++outdeg[i];
              ++indeg[m.target];
            }
          }
        }
        for (std::size_t i = 0; i < n; ++i) {
          if (keep[i] && (indeg[i] == 0 || outdeg[i] == 0)) {
            keep[i] = false;
            changed = true;
          }
        }
      }
      std::size_t start = 0;
      while (start < n && !keep[start]) {
        ++start;
      }
      if (start == n) {
        return std::nullopt;
      }
      std::vector<std::size_t> seen_at(n, SIZE_MAX);
      std::vector<std::pair<std::size_t, EdgeId>> walk;
      std::size_t cur = start;
      while (seen_at[cur] == SIZE_MAX) {
        seen_at[cur] = walk.size();
        for (auto const& m : sg.moves[cur]) {
          if (m.kind == StateGraph::Kind::state && keep[m.target]) {
            walk.emplace_back(cur, m.edge);
            cur = m.target;
            break;
          }
        }
      }
      return std::vector<std::pair<std::size_t, EdgeId>>(
          walk.begin() + seen_at[cur], walk.end());
    }

    Path path_to_state(Graph const& G, StateGraph const& sg, std::size_t i) {
      std::vector<EdgeId> edges;
      while (sg.states[i].parent != SIZE_MAX) {
        edges.push_back(sg.states[i].via);
        i = sg.states[i].parent;
      }
      Path p = Path::vertex(sg.states[i].vertex);
      for (auto it = edges.rbegin(); it != edges.rend(); ++it) {
        p.push_back(G, *it);
      }
      return p;
    }

    // Shortest continuation from state i to an exit through `ok` states.
    std::vector<EdgeId> path_to_exit(StateGraph const&        sg,
                                     std::size_t              i,
                                     std::vector<bool> const& ok) {
      std::size_t const n = sg.states.size();
      std::vector<std::pair<std::size_t, EdgeId>> parent(n, {SIZE_MAX, 0});
      std::vector<bool>                           seen(n, false);
      std::deque<std::size_t>                     queue{i};
      seen[i] = true;
      while (!queue.empty()) {
        std::size_t u = queue.front();
        queue.pop_front();
        for (auto const& m : sg.moves[u]) {
          if (m.kind == StateGraph::Kind::exit) {
            std::vector<EdgeId> edges{m.edge};
            for (std::size_t w = u; w != i; w = parent[w].first) {
              edges.push_back(parent[w].second);
            }
            std::reverse(edges.begin(), edges.end());
            return edges;
          }
          if (m.kind == StateGraph::Kind::state && ok[m.target]
              && !seen[m.target]) {
            seen[m.target]   = true;
            parent[m.target] = {u, m.edge};
            queue.push_back(m.target);
          }
        }
      }
      return {};
    }

    Path extend(Graph const& G, Path p, std::vector<EdgeId> const& edges) {
      for (EdgeId e : edges) {
        p.push_back(G, e);
      }
      return p;
    }

    std::vector<std::pair<GroupElement, VertexId>>
    fixed_starts(System const& s, GroupElement const& g) {
      std::vector<std::pair<GroupElement, VertexId>> starts;
      for (VertexId x = 0; x < s.graph().num_vertices(); ++x) {
        if (s.act(g, x) == x) {
          starts.emplace_back(g, x);
        }
      }
      return starts;
    }

  }  // namespace

  SfpReport minimal_strongly_fixed(System const&       s,
                                   GroupElement const& g,
                                   SearchBudget const& budget) {
    Graph const& G = s.graph();
    SfpReport    rep;
    rep.element = g;
    Verdict id  = s.group().is_identity(g, budget);
    if (id.is_unknown()) {
      rep.note = "could not decide whether the element is trivial: " + id.note;
      return rep;
    }
    if (id.is_yes()) {
      // Every vertex is strongly fixed by the identity.
      for (VertexId x = 0; x < G.num_vertices(); ++x) {
        rep.minimal_paths.push_back(Path::vertex(x));
      }
      rep.status = SfpStatus::finite;
      rep.note   = "identity element";
      return rep;
    }

    ElementRegistry reg(s.group(), budget);
    StateGraph      sg = explore(s, reg, fixed_starts(s, g), budget);
    rep.states_explored = sg.states.size();
    std::vector<bool> ok    = coreachable(sg);
    auto              cycle = find_cycle(sg, ok);

    if (cycle) {
      std::size_t c = cycle->front().first;
      PumpCertificate cert;
      cert.prefix = path_to_state(G, sg, c);
      Path cyc    = Path::vertex(sg.states[c].vertex);
      for (auto const& [state, edge] : *cycle) {
        cyc.push_back(G, edge);
      }
      cert.cycle  = cyc;
      cert.exit   = extend(G, Path::vertex(sg.states[c].vertex),
                         path_to_exit(sg, c, ok));
      rep.witness = cert;
      rep.status  = SfpStatus::infinite;
    } else if (sg.complete && !sg.undecided) {
      rep.status = SfpStatus::finite;
    } else {
      rep.status = SfpStatus::unknown;
      rep.note   = sg.undecided ? "an equality test was undecided"
                                : "state budget or depth exhausted";
    }

    // List minimal strongly fixed paths by length.  In the infinite case
    // stop after the first length at which a listed path repeats a state,
    // i.e. the first length at which the list visibly pumps.
    struct Node {
      std::size_t state;
      std::size_t parent;
      EdgeId      via;
    };
    std::vector<Node>        nodes;
    std::vector<std::size_t> layer;
    for (std::size_t i = 0; i < sg.states.size(); ++i) {
      if (sg.states[i].parent == SIZE_MAX && ok[i]) {
        nodes.push_back({i, SIZE_MAX, 0});
        layer.push_back(nodes.size() - 1);
      }
    }
    auto node_path = [&](std::size_t k, EdgeId last) {
      std::vector<EdgeId> edges{last};
      std::size_t         root = k;
      for (std::size_t w = k; w != SIZE_MAX; w = nodes[w].parent) {
        root = w;
        if (nodes[w].parent != SIZE_MAX) {
          edges.push_back(nodes[w].via);
        }
      }
      std::reverse(edges.begin(), edges.end());
      return extend(G, Path::vertex(sg.states[nodes[root].state].vertex), edges);
    };
    auto repeats_state = [&](std::size_t k) {
      std::vector<std::size_t> seen;
      for (std::size_t w = k; w != SIZE_MAX; w = nodes[w].parent) {
        if (std::find(seen.begin(), seen.end(), nodes[w].state) != seen.end()) {
          return true;
        }
        seen.push_back(nodes[w].state);
      }
      return false;
    };
    std::size_t length = 0;
    bool        pumped = false;
    while (!layer.empty() && !pumped) {
      ++length;
      if (length > budget.max_depth) {
        rep.truncated = true;
        break;
      }
      std::vector<std::size_t> next;
      for (std::size_t k : layer) {
        for (auto const& m : sg.moves[nodes[k].state]) {
          if (m.kind == StateGraph::Kind::exit) {
            rep.minimal_paths.push_back(node_path(k, m.edge));
            pumped = pumped || repeats_state(k);
          } else if (m.kind == StateGraph::Kind::state && ok[m.target]) {
            if (nodes.size() >= budget.max_states) {
              rep.truncated = true;
              continue;
            }
            nodes.push_back({m.target, k, m.edge});
            next.push_back(nodes.size() - 1);
          }
        }
      }
      layer = std::move(next);
    }
    if (pumped && !layer.empty()) {
      rep.truncated = true;
    }
    std::sort(rep.minimal_paths.begin(), rep.minimal_paths.end());
    return rep;
  }

  bool replay_pump(System const&          s,
                   GroupElement const&    g,
                   PumpCertificate const& cert,
                   std::size_t            repetitions) {
    Graph const& G = s.graph();
    try {
      for (std::size_t k = 0; k < repetitions; ++k) {
        Path p = cert.prefix;
        for (std::size_t j = 0; j < k; ++j) {
          p = compose(G, p, cert.cycle);
        }
        p = compose(G, p, cert.exit);
        if (act_path(s, g, p) != p) {
          return false;
        }
        // Minimal: every proper prefix has a nontrivial restriction.
        GroupElement h = g;
        for (std::size_t i = 0; i <= p.length(); ++i) {
          Verdict id = s.group().is_identity(h);
          if (i < p.length() ? !id.is_no() : !id.is_yes()) {
            return false;
          }
          if (i < p.length()) {
            h = s.restrict(h, p[i]);
          }
        }
      }
    } catch (Error const&) {
      return false;
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Balls
  ////////////////////////////////////////////////////////////////////////

  Ball group_ball(System const& s, SearchBudget const& budget) {
    GroupBackend const& group = s.group();
    std::size_t         limit = budget.max_elements;
    if (auto const* fin = dynamic_cast<FiniteBackend const*>(&group)) {
      limit = std::max(limit, fin->order());
    }
    Ball            ball;
    ElementRegistry reg(group, budget);
    reg.intern(group.identity());
    ball.elements.push_back(group.identity());
    bool overflow = false;
    for (std::size_t i = 0; i < ball.elements.size(); ++i) {
      for (std::size_t k = 0; k < group.num_generators(); ++k) {
        GroupElement gen = group.generator(k);
        for (GroupElement const& step : {gen, group.inverse(gen)}) {
          GroupElement x      = group.mul(step, ball.elements[i]);
          std::size_t  before = reg.size();
          if (ball.elements.size() >= limit) {
            bool undecided = false;
            if (!reg.find(x, undecided)) {
              overflow = true;
              ball.undecided |= undecided;
            }
            continue;
          }
          auto cls = reg.intern(x);
          if (!cls) {
            ball.undecided = true;
          } else if (reg.size() > before) {
            ball.elements.push_back(x);
          }
        }
      }
    }
    ball.exhausted = !overflow && !ball.undecided;
    return ball;
  }

  ////////////////////////////////////////////////////////////////////////
  // Pseudo-freeness
  ////////////////////////////////////////////////////////////////////////

  PseudoFreeResult is_pseudo_free(System const& s, SearchBudget const& budget) {
    Graph const&     G = s.graph();
    PseudoFreeResult res;
    if (auto const* Z = dynamic_cast<IntegerBackend const*>(&s.group())) {
      // m != 0 strongly fixes e iff L_e | m and (m / L_e) S_e = 0.
      for (EdgeId e = 0; e < G.num_edges(); ++e) {
        if (Z->edge_cycle_sum(e) == 0) {
          res.witness_element = Z->integer(BigInt(Z->edge_cycle_length(e)));
          res.witness_edge    = e;
          res.verdict = Verdict::no(Z->format(*res.witness_element)
                                    + " strongly fixes edge " + G.edge_name(e));
          return res;
        }
      }
      res.verdict = Verdict::yes("every edge orbit has nonzero cocycle sum");
      return res;
    }
    Ball ball      = group_ball(s, budget);
    bool undecided = ball.undecided;
    for (std::size_t i = 1; i < ball.elements.size(); ++i) {
      GroupElement const& g = ball.elements[i];
      for (EdgeId e = 0; e < G.num_edges(); ++e) {
        if (s.act_edge(g, e) != e) {
          continue;
        }
        Verdict id = s.group().is_identity(s.restrict(g, e), budget);
        if (id.is_yes()) {
          res.witness_element = g;
          res.witness_edge    = e;
          res.verdict = Verdict::no(s.format(g) + " strongly fixes edge "
                                    + G.edge_name(e));
          return res;
        }
        undecided |= id.is_unknown();
      }
    }
    if (ball.exhausted && !undecided) {
      res.verdict = Verdict::yes("checked all "
                                 + std::to_string(ball.elements.size())
                                 + " group elements");
    } else {
      res.verdict = Verdict::unknown(
          "no witness among " + std::to_string(ball.elements.size())
          + " ball elements; the group was not exhausted");
    }
    return res;
  }

  ////////////////////////////////////////////////////////////////////////
  // Cylinders and slackness
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // Longest path with range v, for v that begins no infinite path.
    std::size_t height(Graph const&               G,
                       VertexId                   v,
                       std::vector<std::size_t>&  memo) {
      if (memo[v] != SIZE_MAX) {
        return memo[v];
      }
      std::size_t h = 0;
      for (EdgeId e : G.edges_into(v)) {
        h = std::max(h, 1 + height(G, G.source(e), memo));
      }
      return memo[v] = h;
    }
  }  // namespace

  CylinderAnalysis analyze_cylinder(System const&       s,
                                    GroupElement const& g,
                                    VertexId            x,
                                    SearchBudget const& budget) {
    Graph const&     G = s.graph();
    CylinderAnalysis res;
    Verdict          id = s.group().is_identity(g, budget);
    if (id.is_yes()) {
      res.fixes_cylinder = Verdict::yes("identity");
      res.slack          = Verdict::yes("identity strongly fixes every edge");
      res.level          = 1;
      return res;
    }
    if (id.is_unknown()) {
      res.fixes_cylinder = res.slack = Verdict::unknown(id.note);
      return res;
    }
    std::vector<bool>        live = live_vertices(G);
    std::vector<std::size_t> memo(G.num_vertices(), SIZE_MAX);
    if (s.act(g, x) != x) {
      if (live[x]) {
        res.fixes_cylinder = Verdict::no("moves the vertex " + G.vertex_name(x));
        res.slack          = Verdict::no("moves the vertex " + G.vertex_name(x));
      } else {
        res.fixes_cylinder = Verdict::yes("no infinite path has range "
                                          + G.vertex_name(x));
        res.slack = Verdict::yes("paths with range " + G.vertex_name(x)
                                 + " are bounded in length");
        res.level = 1 + height(G, x, memo);
      }
      return res;
    }

    ElementRegistry reg(s.group(), budget);
    StateGraph      sg = explore(s, reg, {{g, x}}, budget);
    for (std::size_t i = 0; i < sg.states.size(); ++i) {
      for (auto const& m : sg.moves[i]) {
        if (m.kind == StateGraph::Kind::moved && live[G.source(m.edge)]) {
          Path p = path_to_state(G, sg, i);
          p.push_back(G, m.edge);
          std::string w = "moves every infinite path through "
                          + format_path(G, p);
          res.fixes_cylinder = Verdict::no(w);
          res.slack          = Verdict::no(w);
          return res;
        }
      }
    }
    bool const decided = sg.complete && !sg.undecided;
    res.fixes_cylinder = decided ? Verdict::yes("no reachable restriction "
                                                "moves a live edge")
                                 : Verdict::unknown("state budget exhausted");
    auto cycle = find_cycle(sg, std::vector<bool>(sg.states.size(), true));
    if (cycle) {
      std::size_t c = cycle->front().first;
      Path        p = path_to_state(G, sg, c);
      Path        cyc = Path::vertex(sg.states[c].vertex);
      for (auto const& [state, edge] : *cycle) {
        cyc.push_back(G, edge);
      }
      res.slack = Verdict::no("restriction-state cycle: no prefix of "
                              + format_infinite(G, EventuallyPeriodicPath(
                                                       G, p, cyc))
                              + " is strongly fixed");
      return res;
    }
    if (!decided) {
      res.slack = Verdict::unknown("state budget exhausted");
      return res;
    }
    // Acyclic: the longest path that is not strongly fixed is finite.
    std::vector<std::size_t> longest(sg.states.size(), 0);
    std::vector<std::size_t> order;  // topological
    {
      std::vector<std::size_t> indeg(sg.states.size(), 0);
      for (auto const& ms : sg.moves) {
        for (auto const& m : ms) {
          if (m.kind == StateGraph::Kind::state) {
            ++indeg[m.target];
          }
        }
      }
      std::deque<std::size_t> queue;
      for (std::size_t i = 0; i < sg.states.size(); ++i) {
        if (indeg[i] == 0) {
          queue.push_back(i);
        }
      }
      while (!queue.empty()) {
        std::size_t i = queue.front();
        queue.pop_front();
        order.push_back(i);
        for (auto const& m : sg.moves[i]) {
          if (m.kind == StateGraph::Kind::state && --indeg[m.target] == 0) {
            queue.push_back(m.target);
          }
        }
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      std::size_t best = 0;
      for (auto const& m : sg.moves[*it]) {
        if (m.kind == StateGraph::Kind::state) {
          best = std::max(best, 1 + longest[m.target]);
        } else if (m.kind == StateGraph::Kind::moved) {
          best = std::max(best, 1 + height(G, G.source(m.edge), memo));
        }
      }
      longest[*it] = best;
    }
    res.level = sg.states.empty() ? 1 : 1 + longest[0];
    res.slack = Verdict::yes("every path of length >= "
                             + std::to_string(res.level) + " with range "
                             + G.vertex_name(x) + " is strongly fixed");
    return res;
  }

  SlackResult slack_at(System const&       s,
                       GroupElement const& g,
                       VertexId            x,
                       SearchBudget const& budget) {
    CylinderAnalysis a = analyze_cylinder(s, g, x, budget);
    return {a.slack, a.level};
  }

  ////////////////////////////////////////////////////////////////////////
  // G-circuits
  ////////////////////////////////////////////////////////////////////////

  CircuitFixedPoint g_circuit_fixed_point(System const&       s,
                                          GroupElement const& g,
                                          Path const&         gamma,
                                          std::size_t         depth,
                                          SearchBudget const& budget) {
    Graph const& G = s.graph();
    if (gamma.empty() || gamma.source() != s.act(g, gamma.range())) {
      throw Error(ErrorCode::not_a_g_circuit,
                  "need a path of positive length with d(gamma) = g r(gamma)");
    }
    ElementRegistry   reg(s.group(), budget);
    CircuitFixedPoint res;
    std::vector<Path> blocks;
    std::map<std::pair<std::size_t, std::vector<EdgeId>>, std::size_t> seen;
    GroupElement h     = g;
    Path         block = gamma;
    for (std::size_t n = 0; n < depth; ++n) {
      auto cls = reg.intern(h);
      if (!cls) {
        break;
      }
      auto key = std::make_pair(*cls, block.edges());
      auto it  = seen.find(key);
      if (it != seen.end()) {
        Path prefix = Path::vertex(gamma.range());
        for (std::size_t i = 0; i < it->second; ++i) {
          prefix = compose(G, prefix, blocks[i]);
        }
        Path cyc = blocks[it->second];
        for (std::size_t i = it->second + 1; i < blocks.size(); ++i) {
          cyc = compose(G, cyc, blocks[i]);
        }
        res.path = EventuallyPeriodicPath(G, prefix, cyc);
        break;
      }
      seen.emplace(key, n);
      blocks.push_back(block);
      Path next = act_path(s, h, block);
      h         = restrict_path(s, h, block);
      block     = next;
    }
    res.computed_prefix = Path::vertex(gamma.range());
    for (auto const& b : blocks) {
      res.computed_prefix = compose(G, res.computed_prefix, b);
    }
    return res;
  }

}  // namespace ssg
