// Group backends.  A backend knows how to multiply, invert and compare its
// elements, and (once an action is bound) how generators act on the
// vertices and edges of a graph together with the restriction cocycle.
//
// Three backends are provided:
//  * AutomatonBackend: elements are free-reduced words in the generators
//    and their inverses; equality is decided by bisimulation on the bound
//    action, so it is equality in the quotient acting faithfully on paths
//    together with the cocycle.
//  * IntegerBackend: the group Z with a single generator.
//  * FiniteBackend: an explicit multiplication table.

#ifndef SSG_GROUP_HPP_
#define SSG_GROUP_HPP_

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "ssg/core.hpp"
#include "ssg/graph.hpp"

namespace ssg {

  enum class BackendKind { automaton, integer, finite };

  char const* backend_kind_name(BackendKind k) noexcept;

  // Letter +(i+1) is generator i, -(i+1) its inverse.
  using Word = std::vector<int>;

  class GroupBackend;

  class GroupElement {
   public:
    GroupElement() = default;

    GroupBackend const* backend() const noexcept {
      return _backend;
    }
    bool valid() const noexcept {
      return _backend != nullptr;
    }

    Word const& word() const {
      return std::get<Word>(_payload);
    }
    BigInt const& integer() const {
      return std::get<BigInt>(_payload);
    }
    std::uint32_t index() const {
      return std::get<std::uint32_t>(_payload);
    }

    // Syntactic equality of payloads (not group equality for words).
    bool operator==(GroupElement const& other) const {
      return _backend == other._backend && _payload == other._payload;
    }
    bool operator!=(GroupElement const& other) const {
      return !(*this == other);
    }

    // A string determined by the payload; canonical when the backend has
    // exact equality.
    std::string key() const;

   private:
    friend class GroupBackend;
    using Payload = std::variant<Word, BigInt, std::uint32_t>;

    GroupElement(GroupBackend const* b, Payload p)
        : _backend(b), _payload(std::move(p)) {}

    GroupBackend const* _backend = nullptr;
    Payload             _payload;
  };

  // How one generator acts: permutations of vertices and edges plus the
  // cocycle value phi(s, e) for every edge.
  struct GeneratorAction {
    std::vector<VertexId>     vertex;
    std::vector<EdgeId>       edge;
    std::vector<GroupElement> cocycle;
  };

  class GroupBackend {
   public:
    GroupBackend(GroupBackend const&)            = delete;
    GroupBackend& operator=(GroupBackend const&) = delete;
    virtual ~GroupBackend()                      = default;

    virtual BackendKind kind() const noexcept = 0;

    std::vector<std::string> const& generator_names() const noexcept {
      return _generator_names;
    }
    std::size_t num_generators() const noexcept {
      return _generator_names.size();
    }

    virtual GroupElement identity() const                   = 0;
    virtual GroupElement generator(std::size_t i) const     = 0;
    virtual GroupElement mul(GroupElement const& a,
                             GroupElement const& b) const   = 0;
    virtual GroupElement inverse(GroupElement const& a) const = 0;
    virtual std::string  format(GroupElement const& a) const  = 0;
    // Throws ParseError.
    virtual GroupElement parse(std::string_view text) const = 0;

    // True when key() equality coincides with group equality.
    virtual bool exact_equality() const noexcept = 0;

    // Integer and finite backends answer exactly.  The automaton backend
    // runs a bisimulation over restriction states and returns Unknown
    // only when the budget is exhausted.
    virtual Verdict is_identity(GroupElement const& a,
                                SearchBudget const& budget = {}) const = 0;

    Verdict equal(GroupElement const& a,
                  GroupElement const& b,
                  SearchBudget const& budget = {}) const;

    // Action.  Throws DomainMismatch when no action has been bound.
    bool has_action() const noexcept {
      return _action_bound;
    }
    std::size_t action_vertices() const noexcept {
      return _num_vertices;
    }
    std::size_t action_edges() const noexcept {
      return _num_edges;
    }
    GeneratorAction const& generator_action(std::size_t i) const {
      return _actions.at(i);
    }

    virtual VertexId     act_vertex(GroupElement const& g, VertexId v) const = 0;
    virtual EdgeId       act_edge(GroupElement const& g, EdgeId e) const     = 0;
    virtual GroupElement restrict_edge(GroupElement const& g,
                                       EdgeId              e) const = 0;

    // Installs generator actions for a graph with the given sizes.  Must
    // be called at most once, before the backend is shared.
    void bind_action(std::size_t                  num_vertices,
                     std::size_t                  num_edges,
                     std::vector<GeneratorAction> actions);

    // Re-wraps an element of a compatible backend (same kind and
    // generators) as an element of this one.
    GroupElement adopt(GroupElement const& a) const;

    void check_owner(GroupElement const& a) const;

   protected:
    explicit GroupBackend(std::vector<std::string> generator_names)
        : _generator_names(std::move(generator_names)) {}

    GroupElement make(GroupElement::Payload p) const {
      return GroupElement(this, std::move(p));
    }
    void require_action() const;

    // Called once the action is bound; backends precompute here.
    virtual void prepare() {}

    std::vector<std::string>     _generator_names;
    std::vector<GeneratorAction> _actions;
    std::size_t                  _num_vertices = 0;
    std::size_t                  _num_edges    = 0;
    bool                         _action_bound = false;
  };

  class AutomatonBackend final : public GroupBackend {
   public:
    explicit AutomatonBackend(std::vector<std::string> generator_names);

    BackendKind kind() const noexcept override {
      return BackendKind::automaton;
    }
    GroupElement identity() const override;
    GroupElement generator(std::size_t i) const override;
    GroupElement word(Word w) const;  // free-reduces
    GroupElement mul(GroupElement const& a,
                     GroupElement const& b) const override;
    GroupElement inverse(GroupElement const& a) const override;
    std::string  format(GroupElement const& a) const override;
    GroupElement parse(std::string_view text) const override;
    bool         exact_equality() const noexcept override {
      return false;
    }
    Verdict is_identity(GroupElement const& a,
                        SearchBudget const& budget = {}) const override;

    VertexId     act_vertex(GroupElement const& g, VertexId v) const override;
    EdgeId       act_edge(GroupElement const& g, EdgeId e) const override;
    GroupElement restrict_edge(GroupElement const& g,
                               EdgeId              e) const override;

   private:
    void prepare() override;

    Word restrict_word(Word const& w, EdgeId e) const;

    std::vector<std::vector<VertexId>> _inverse_vertex;
    std::vector<std::vector<EdgeId>>   _inverse_edge;
  };

  class IntegerBackend final : public GroupBackend {
   public:
    explicit IntegerBackend(std::string generator_name = "t");

    BackendKind kind() const noexcept override {
      return BackendKind::integer;
    }
    GroupElement identity() const override;
    GroupElement generator(std::size_t i) const override;
    GroupElement integer(BigInt m) const;
    GroupElement mul(GroupElement const& a,
                     GroupElement const& b) const override;
    GroupElement inverse(GroupElement const& a) const override;
    std::string  format(GroupElement const& a) const override;
    GroupElement parse(std::string_view text) const override;
    bool         exact_equality() const noexcept override {
      return true;
    }
    Verdict is_identity(GroupElement const& a,
                        SearchBudget const& budget = {}) const override;

    VertexId     act_vertex(GroupElement const& g, VertexId v) const override;
    EdgeId       act_edge(GroupElement const& g, EdgeId e) const override;
    GroupElement restrict_edge(GroupElement const& g,
                               EdgeId              e) const override;

    // Orbit data of the generator on edges: the length L of the cycle
    // through e and the cocycle sum S over that cycle.  An integer m fixes
    // e iff L divides m, and then phi(m, e) = (m / L) * S.
    std::size_t   edge_cycle_length(EdgeId e) const;
    BigInt const& edge_cycle_sum(EdgeId e) const;

   private:
    struct Cycles {
      std::vector<std::size_t>              cycle_of;
      std::vector<std::size_t>              position;
      std::vector<std::vector<std::size_t>> members;
    };
    static Cycles cycles_of(std::vector<std::uint32_t> const& perm);
    static std::size_t shift(std::size_t pos, std::size_t len, BigInt const& m);

    void prepare() override;

    Cycles                           _vertex_cycles;
    Cycles                           _edge_cycles;
    std::vector<std::vector<BigInt>> _prefix;  // doubled prefix sums per cycle
    std::vector<BigInt>              _cycle_sum;
  };

  class FiniteBackend final : public GroupBackend {
   public:
    // table[a][b] is the index of a*b.  Throws NotAGroup unless the table
    // is a group.  Generators are element indices.
    FiniteBackend(std::vector<std::string>                element_names,
                  std::vector<std::vector<std::uint32_t>> table,
                  std::vector<std::uint32_t>              generators);

    BackendKind kind() const noexcept override {
      return BackendKind::finite;
    }
    std::size_t order() const noexcept {
      return _names.size();
    }
    std::string const& element_name(std::uint32_t i) const {
      return _names.at(i);
    }
    GroupElement identity() const override;
    GroupElement generator(std::size_t i) const override;
    GroupElement element(std::uint32_t i) const;
    GroupElement mul(GroupElement const& a,
                     GroupElement const& b) const override;
    GroupElement inverse(GroupElement const& a) const override;
    std::string  format(GroupElement const& a) const override;
    GroupElement parse(std::string_view text) const override;
    bool         exact_equality() const noexcept override {
      return true;
    }
    Verdict is_identity(GroupElement const& a,
                        SearchBudget const& budget = {}) const override;

    VertexId     act_vertex(GroupElement const& g, VertexId v) const override;
    EdgeId       act_edge(GroupElement const& g, EdgeId e) const override;
    GroupElement restrict_edge(GroupElement const& g,
                               EdgeId              e) const override;

    std::vector<std::uint32_t> const& generator_indices() const noexcept {
      return _generators;
    }
    std::vector<std::vector<std::uint32_t>> const& table() const noexcept {
      return _table;
    }

   private:
    static std::vector<std::string>
    generator_names_of(std::vector<std::string> const&   names,
                       std::vector<std::uint32_t> const& gens);
    void prepare() override;

    std::vector<std::string>                _names;
    std::vector<std::vector<std::uint32_t>> _table;
    std::vector<std::uint32_t>              _generators;
    std::vector<std::uint32_t>              _inverse;
    std::uint32_t                           _identity = 0;
    // Per element: vertex permutation, edge permutation, cocycle indices.
    std::vector<std::vector<VertexId>>      _vact;
    std::vector<std::vector<EdgeId>>        _eact;
    std::vector<std::vector<std::uint32_t>> _coc;
  };

  // Deduplicates group elements up to backend equality.  For backends with
  // exact equality this is a hash lookup; for automaton words, candidates
  // are bucketed by their action on vertices, edges and edges after one
  // restriction, and compared by bisimulation.
  class ElementRegistry {
   public:
    ElementRegistry(GroupBackend const& backend, SearchBudget budget)
        : _backend(&backend), _budget(budget) {}

    // The class id of g, or nullopt if equality with some candidate could
    // not be decided within budget.
    std::optional<std::size_t> intern(GroupElement const& g);

    // As intern but never adds a new class.
    std::optional<std::size_t> find(GroupElement const& g, bool& undecided);

    GroupElement const& representative(std::size_t id) const {
      return _reps[id];
    }
    std::size_t size() const noexcept {
      return _reps.size();
    }
    bool had_unknown() const noexcept {
      return _had_unknown;
    }

   private:
    std::string signature(GroupElement const& g) const;

    GroupBackend const*                                       _backend;
    SearchBudget                                              _budget;
    std::vector<GroupElement>                                 _reps;
    std::unordered_map<std::string, std::size_t>              _by_key;
    std::unordered_map<std::string, std::vector<std::size_t>> _by_signature;
    bool                                                      _had_unknown
        = false;
  };

}  // namespace ssg

#endif  // SSG_GROUP_HPP_
