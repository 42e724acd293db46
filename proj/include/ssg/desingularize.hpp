// Desingularization of a self-similar graph at sources and infinite
// receivers by adding tails, orbit by orbit.
//
// The tails are infinite, so a TailSystem is a finite core together with
// tail descriptors, and materialize(n) cuts every tail after n vertices.
// The vertex v_{i,y} of the tail into y is named "<y>_t<i>", the tail edge
// v_{i,y} -> v_{i-1,y} (or -> y when i = 1) "<y>_e<i>", and a connector
// replacing the i-th edge into an infinite receiver "<y>_f<i>".
//
// Source tails are closed at v_{n,y} by two loops "<y>_c0" and "<y>_c1"
// so that every level is source-free.  Two loops rather than one keep
// the caps from introducing a circuit without an entry.  Caps are the only
// part of level n that is not also part of level n + 1.

#ifndef SSG_DESINGULARIZE_HPP_
#define SSG_DESINGULARIZE_HPP_

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "ssg/properties.hpp"
#include "ssg/system.hpp"

namespace ssg {

  // The edges a_1, a_2, ... into each vertex y of the orbit of an infinite
  // receiver, presented by index.  The listing must be equivariant: a
  // generator k maps the i-th edge into y to the i-th edge into k y.
  struct ReceiverFamily {
    // s(a_i) for the edges into y, i >= 1.
    std::function<VertexId(VertexId y, std::size_t i)> source;
    // phi(k, a_i) for generator k and the i-th edge into y.
    std::function<GroupElement(std::size_t k, VertexId y, std::size_t i)> restriction;
  };

  struct TailDescriptor {
    enum class Kind { source, receiver };
    Kind     kind = Kind::source;
    VertexId base = 0;
    // The orbit of base in first-seen order of a breadth-first search over
    // the generators, and for each orbit vertex y an element g with
    // g base = y (the representative set).
    std::vector<VertexId>     orbit;
    std::vector<GroupElement> representatives;
    ReceiverFamily            family;  // receivers only
  };

  class TailSystem {
   public:
    TailSystem(System core, std::vector<TailDescriptor> tails);

    System const& core() const noexcept {
      return _core;
    }
    std::vector<TailDescriptor> const& tails() const noexcept {
      return _tails;
    }

    // The system cut at tail length n >= 1.  Validated; cached, and safe
    // to call from several threads.
    std::shared_ptr<System const> materialize(std::size_t n) const;

   private:
    std::shared_ptr<System const> build(std::size_t n) const;

    System                      _core;
    std::vector<TailDescriptor> _tails;
    mutable std::mutex          _mutex;
    mutable std::map<std::size_t, std::shared_ptr<System const>> _cache;
  };

  // Throws NotASource unless nothing has range x.
  TailSystem desingularize_source(System const& s, VertexId x);

  // Every source of s, one descriptor per orbit.  Throws NotASource when
  // there is none.
  TailSystem desingularize_sources(System const& s);

  // The core is s itself, which must contain no edge into the orbit of x:
  // those edges are given by the family.  Throws NotInfiniteReceiver when
  // x receives an edge of s, since such a vertex is finitely received.
  TailSystem desingularize_infinite_receiver(System const&  s,
                                             VertexId       x,
                                             ReceiverFamily family);

  // The orbit of x under the generators' vertex permutations, in
  // first-seen order, with an element reaching each orbit vertex.
  std::pair<std::vector<VertexId>, std::vector<GroupElement>>
  vertex_orbit(System const& s, VertexId x);

  // simplicity_report on materialize(level), with a warning recording
  // that the report is about the desingularized system.
  PropertyReport countable_property_bridge(TailSystem const&       t,
                                           std::size_t             level  = 3,
                                           std::optional<unsigned> field_char = std::nullopt,
                                           SearchBudget const&     budget = {});

}  // namespace ssg

#endif  // SSG_DESINGULARIZE_HPP_
