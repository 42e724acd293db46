#include "ssg/desingularize.hpp"

#include <deque>

namespace ssg {

  namespace {

    // An unbound backend with the same generators and group.
    std::shared_ptr<GroupBackend> fresh_backend(GroupBackend const& b) {
      switch (b.kind()) {
        case BackendKind::automaton:
          return std::make_shared<AutomatonBackend>(b.generator_names());
        case BackendKind::integer:
          return std::make_shared<IntegerBackend>(b.generator_names().at(0));
        case BackendKind::finite: {
          auto const&              f = dynamic_cast<FiniteBackend const&>(b);
          std::vector<std::string> names;
          for (std::uint32_t i = 0; i < f.order(); ++i) {
            names.push_back(f.element_name(i));
          }
          return std::make_shared<FiniteBackend>(names, f.table(), f.generator_indices());
        }
      }
      throw Error(ErrorCode::invalid_argument, "unknown backend kind");
    }

    std::string tail_name(Graph const& g, VertexId y, char kind, std::size_t i) {
      return g.vertex_name(y) + "_" + kind + std::to_string(i);
    }

  }  // namespace

  std::pair<std::vector<VertexId>, std::vector<GroupElement>>
  vertex_orbit(System const& s, VertexId x) {
    GroupBackend const&                      G = s.group();
    std::vector<VertexId>                    orbit{x};
    std::vector<GroupElement>                reps{G.identity()};
    std::map<VertexId, std::size_t>          seen{{x, 0}};
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      for (std::size_t k = 0; k < G.num_generators(); ++k) {
        VertexId y = G.generator_action(k).vertex[orbit[head]];
        if (seen.emplace(y, orbit.size()).second) {
          orbit.push_back(y);
          reps.push_back(G.mul(G.generator(k), reps[head]));
        }
      }
    }
    return {orbit, reps};
  }

  TailSystem::TailSystem(System core, std::vector<TailDescriptor> tails)
      : _core(std::move(core)), _tails(std::move(tails)) {}

  std::shared_ptr<System const> TailSystem::materialize(std::size_t n) const {
    if (n == 0) {
      throw Error(ErrorCode::invalid_argument, "tail length must be at least 1");
    }
    std::lock_guard<std::mutex> lock(_mutex);
    auto                        it = _cache.find(n);
    if (it == _cache.end()) {
      it = _cache.emplace(n, build(n)).first;
    }
    return it->second;
  }

  std::shared_ptr<System const> TailSystem::build(std::size_t n) const {
    Graph const&        E  = _core.graph();
    GroupBackend const& G  = _core.group();
    std::size_t const   ng = G.num_generators();
    Graph               F;
    for (VertexId v = 0; v < E.num_vertices(); ++v) {
      F.add_vertex(E.vertex_name(v));
    }
    for (EdgeId e = 0; e < E.num_edges(); ++e) {
      F.add_edge(E.edge_name(e), E.source(e), E.range(e));
    }
    std::vector<GeneratorAction> actions(ng);
    for (std::size_t k = 0; k < ng; ++k) {
      actions[k] = G.generator_action(k);
    }

    // Tail vertex and edge ids by (orbit vertex, index), filled first so
    // that the generator images can be looked up afterwards.
    std::map<std::pair<VertexId, std::size_t>, VertexId> tv;
    std::map<std::pair<VertexId, std::size_t>, EdgeId>   te, tf, tc;
    for (auto const& t : _tails) {
      for (VertexId y : t.orbit) {
        for (std::size_t i = 1; i <= n; ++i) {
          tv[{y, i}] = F.add_vertex(tail_name(E, y, 't', i));
        }
        for (std::size_t i = 1; i <= n; ++i) {
          te[{y, i}] = F.add_edge(tail_name(E, y, 'e', i), tv[{y, i}],
                                  i == 1 ? y : tv[{y, i - 1}]);
        }
        if (t.kind == TailDescriptor::Kind::source) {
          for (std::size_t c = 0; c < 2; ++c) {
            tc[{y, c}] = F.add_edge(tail_name(E, y, 'c', c), tv[{y, n}], tv[{y, n}]);
          }
        } else {
          for (std::size_t i = 1; i <= n + 1; ++i) {
            tf[{y, i}] = F.add_edge(tail_name(E, y, 'f', i), t.family.source(y, i),
                                    i == 1 ? y : tv[{y, i - 1}]);
          }
        }
      }
    }
    for (std::size_t k = 0; k < ng; ++k) {
      GeneratorAction& a   = actions[k];
      GroupElement     gen = G.generator(k);
      a.vertex.resize(F.num_vertices());
      a.edge.resize(F.num_edges());
      a.cocycle.resize(F.num_edges(), gen);
      for (auto const& t : _tails) {
        for (VertexId y : t.orbit) {
          VertexId ky = G.generator_action(k).vertex[y];
          for (std::size_t i = 1; i <= n; ++i) {
            a.vertex[tv[{y, i}]] = tv.at({ky, i});
            a.edge[te[{y, i}]]   = te.at({ky, i});
            a.cocycle[te[{y, i}]] = gen;
          }
          if (t.kind == TailDescriptor::Kind::source) {
            for (std::size_t c = 0; c < 2; ++c) {
              a.edge[tc[{y, c}]]    = tc.at({ky, c});
              a.cocycle[tc[{y, c}]] = gen;
            }
          } else {
            for (std::size_t i = 1; i <= n + 1; ++i) {
              a.edge[tf[{y, i}]]    = tf.at({ky, i});
              a.cocycle[tf[{y, i}]] = t.family.restriction(k, y, i);
            }
          }
        }
      }
    }
    auto backend = fresh_backend(G);
    std::size_t const nv = F.num_vertices(), ne = F.num_edges();
    backend->bind_action(nv, ne, std::move(actions));
    auto out = std::make_shared<System>(std::move(F), backend, _core.assertions());
    validate_system(*out);
    return out;
  }

  namespace {
    TailDescriptor source_descriptor(System const& s, VertexId x) {
      if (x >= s.graph().num_vertices() || !s.graph().is_source(x)) {
        throw Error(ErrorCode::not_a_source,
                    "vertex " + (x < s.graph().num_vertices() ? s.graph().vertex_name(x)
                                                              : std::to_string(x))
                        + " receives an edge");
      }
      TailDescriptor t;
      t.kind = TailDescriptor::Kind::source;
      t.base = x;
      std::tie(t.orbit, t.representatives) = vertex_orbit(s, x);
      return t;
    }
  }  // namespace

  TailSystem desingularize_source(System const& s, VertexId x) {
    return TailSystem(s, {source_descriptor(s, x)});
  }

  TailSystem desingularize_sources(System const& s) {
    std::vector<TailDescriptor> tails;
    std::vector<bool>           done(s.graph().num_vertices());
    for (VertexId x = 0; x < s.graph().num_vertices(); ++x) {
      if (s.graph().is_source(x) && !done[x]) {
        tails.push_back(source_descriptor(s, x));
        for (VertexId y : tails.back().orbit) {
          done[y] = true;
        }
      }
    }
    if (tails.empty()) {
      throw Error(ErrorCode::not_a_source, "the graph has no sources");
    }
    return TailSystem(s, std::move(tails));
  }

  TailSystem desingularize_infinite_receiver(System const&  s,
                                             VertexId       x,
                                             ReceiverFamily family) {
    if (x >= s.graph().num_vertices()) {
      throw Error(ErrorCode::invalid_argument, "no such vertex");
    }
    if (!family.source || !family.restriction) {
      throw Error(ErrorCode::not_infinite_receiver,
                  "no edge family given for " + s.graph().vertex_name(x));
    }
    TailDescriptor t;
    t.kind                               = TailDescriptor::Kind::receiver;
    t.base                               = x;
    t.family                             = std::move(family);
    std::tie(t.orbit, t.representatives) = vertex_orbit(s, x);
    for (VertexId y : t.orbit) {
      if (!s.graph().is_source(y)) {
        throw Error(ErrorCode::not_infinite_receiver,
                    s.graph().vertex_name(y)
                        + " receives finitely many edges of the graph");
      }
    }
    return TailSystem(s, {std::move(t)});
  }

  PropertyReport countable_property_bridge(TailSystem const&       t,
                                           std::size_t             level,
                                           std::optional<unsigned> field_char,
                                           SearchBudget const&     budget) {
    auto           s = t.materialize(level);
    PropertyReport r = simplicity_report(*s, s->assertions().amenable, field_char, budget);
    r.warnings.insert(r.warnings.begin(),
                      "about the desingularized system cut at tail length "
                          + std::to_string(level)
                          + "; the original system is related to it by Morita "
                            "equivalence");
    return r;
  }

}  // namespace ssg
