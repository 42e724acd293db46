#include "ssg/group.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <unordered_set>

namespace ssg {

  char const* backend_kind_name(BackendKind k) noexcept {
    switch (k) {
      case BackendKind::automaton: return "automaton";
      case BackendKind::integer: return "integer";
      case BackendKind::finite: return "finite";
    }
    return "?";
  }

  std::string GroupElement::key() const {
    if (auto const* w = std::get_if<Word>(&_payload)) {
      std::string out;
      for (int l : *w) {
        out += std::to_string(l);
        out += ',';
      }
      return out;
    }
    if (auto const* m = std::get_if<BigInt>(&_payload)) {
      return m->str();
    }
    return "#" + std::to_string(std::get<std::uint32_t>(_payload));
  }

  ////////////////////////////////////////////////////////////////////////
  // GroupBackend
  ////////////////////////////////////////////////////////////////////////

  Verdict GroupBackend::equal(GroupElement const& a,
                              GroupElement const& b,
                              SearchBudget const& budget) const {
    check_owner(a);
    check_owner(b);
    if (a == b) {
      return Verdict::yes("syntactically equal");
    }
    return is_identity(mul(a, inverse(b)), budget);
  }

  void GroupBackend::check_owner(GroupElement const& a) const {
    if (a.backend() != this) {
      throw Error(ErrorCode::backend_mismatch,
                  "element does not belong to this group backend");
    }
  }

  void GroupBackend::require_action() const {
    if (!_action_bound) {
      throw Error(ErrorCode::domain_mismatch,
                  "no action is bound to this group backend");
    }
  }

  GroupElement GroupBackend::adopt(GroupElement const& a) const {
    if (a.backend() == this) {
      return a;
    }
    if (a.backend() == nullptr || a.backend()->kind() != kind()
        || a.backend()->generator_names() != generator_names()) {
      throw Error(ErrorCode::backend_mismatch,
                  "element comes from an incompatible group backend");
    }
    return make(a._payload);
  }

  namespace {
    template <typename T>
    bool is_permutation_of_size(std::vector<T> const& p, std::size_t n) {
      if (p.size() != n) {
        return false;
      }
      std::vector<bool> hit(n, false);
      for (T x : p) {
        if (x >= n || hit[x]) {
          return false;
        }
        hit[x] = true;
      }
      return true;
    }
  }  // namespace

  void GroupBackend::bind_action(std::size_t                  num_vertices,
                                 std::size_t                  num_edges,
                                 std::vector<GeneratorAction> actions) {
    if (_action_bound) {
      throw Error(ErrorCode::invalid_argument, "action already bound");
    }
    if (actions.size() != num_generators()) {
      throw Error(ErrorCode::invalid_argument,
                  "expected an action for each of the "
                      + std::to_string(num_generators()) + " generators");
    }
    for (std::size_t i = 0; i < actions.size(); ++i) {
      auto& a = actions[i];
      if (!is_permutation_of_size(a.vertex, num_vertices)
          || !is_permutation_of_size(a.edge, num_edges)) {
        throw Error(ErrorCode::not_automorphism,
                    "generator '" + _generator_names[i]
                        + "' is not a bijection on vertices and edges");
      }
      if (a.cocycle.size() != num_edges) {
        throw Error(ErrorCode::invalid_argument,
                    "generator '" + _generator_names[i]
                        + "' lacks a cocycle value for some edge");
      }
      for (auto& c : a.cocycle) {
        c = adopt(c);
      }
    }
    _actions      = std::move(actions);
    _num_vertices = num_vertices;
    _num_edges    = num_edges;
    _action_bound = true;
    prepare();
  }

  ////////////////////////////////////////////////////////////////////////
  // Word helpers
  ////////////////////////////////////////////////////////////////////////

  namespace {
    void push_reduced(Word& w, int letter) {
      if (!w.empty() && w.back() == -letter) {
        w.pop_back();
      } else {
        w.push_back(letter);
      }
    }

    Word reduce(Word const& w) {
      Word out;
      for (int l : w) {
        push_reduced(out, l);
      }
      return out;
    }

    Word inverse_word(Word const& w) {
      Word out(w.rbegin(), w.rend());
      for (int& l : out) {
        l = -l;
      }
      return out;
    }

    bool is_space_or_separator(char c) {
      return std::isspace(static_cast<unsigned char>(c)) || c == '.'
             || c == '*';
    }

    std::string trim(std::string_view s) {
      std::size_t b = 0, e = s.size();
      while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) {
        ++b;
      }
      while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) {
        --e;
      }
      return std::string(s.substr(b, e - b));
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // AutomatonBackend
  ////////////////////////////////////////////////////////////////////////

  AutomatonBackend::AutomatonBackend(std::vector<std::string> generator_names)
      : GroupBackend(std::move(generator_names)) {
    std::unordered_set<std::string> seen;
    for (auto const& n : _generator_names) {
      if (n.empty() || !seen.insert(n).second) {
        throw Error(ErrorCode::duplicate_id,
                    "generator names must be distinct and nonempty");
      }
    }
  }

  GroupElement AutomatonBackend::identity() const {
    return make(Word{});
  }

  GroupElement AutomatonBackend::generator(std::size_t i) const {
    if (i >= num_generators()) {
      throw Error(ErrorCode::invalid_argument, "generator index out of range");
    }
    return make(Word{static_cast<int>(i) + 1});
  }

  GroupElement AutomatonBackend::word(Word w) const {
    for (int l : w) {
      if (l == 0 || static_cast<std::size_t>(std::abs(l)) > num_generators()) {
        throw Error(ErrorCode::invalid_argument, "letter out of range");
      }
    }
    return make(reduce(w));
  }

  GroupElement AutomatonBackend::mul(GroupElement const& a,
                                     GroupElement const& b) const {
    check_owner(a);
    check_owner(b);
    Word w = a.word();
    for (int l : b.word()) {
      push_reduced(w, l);
    }
    return make(std::move(w));
  }

  GroupElement AutomatonBackend::inverse(GroupElement const& a) const {
    check_owner(a);
    return make(inverse_word(a.word()));
  }

  std::string AutomatonBackend::format(GroupElement const& a) const {
    check_owner(a);
    if (a.word().empty()) {
      return "1";
    }
    bool compact = std::all_of(_generator_names.begin(),
                               _generator_names.end(),
                               [](auto const& n) { return n.size() == 1; });
    std::string out;
    bool        first = true;
    for (int l : a.word()) {
      if (!first && !compact) {
        out += '.';
      }
      first = false;
      out += _generator_names[std::abs(l) - 1];
      if (l < 0) {
        out += "^-1";
      }
    }
    return out;
  }

  GroupElement AutomatonBackend::parse(std::string_view text) const {
    std::string s = trim(text);
    if (s.empty() || s == "1" || s == "id"
        || (s == "e"
            && std::find(_generator_names.begin(), _generator_names.end(), "e")
                   == _generator_names.end())) {
      return identity();
    }
    Word        w;
    std::size_t i = 0;
    while (i < s.size()) {
      if (is_space_or_separator(s[i])) {
        ++i;
        continue;
      }
      // Longest generator name matching at position i.
      std::size_t best = 0, best_len = 0;
      for (std::size_t g = 0; g < _generator_names.size(); ++g) {
        auto const& n = _generator_names[g];
        if (n.size() > best_len && s.compare(i, n.size(), n) == 0) {
          best     = g;
          best_len = n.size();
        }
      }
      if (best_len == 0) {
        throw Error(ErrorCode::parse_error,
                    "unknown generator at '" + s.substr(i) + "' in word '" + s
                        + "'");
      }
      i += best_len;
      long long power = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::size_t j = i;
        if (j < s.size() && (s[j] == '-' || s[j] == '+')) {
          ++j;
        }
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) {
          ++j;
        }
        if (j == i || (j == i + 1 && !std::isdigit(s[i]))) {
          throw Error(ErrorCode::parse_error, "bad exponent in word '" + s + "'");
        }
        power = std::stoll(s.substr(i, j - i));
        i     = j;
      }
      int letter = static_cast<int>(best) + 1;
      if (power < 0) {
        letter = -letter;
        power  = -power;
      }
      for (long long k = 0; k < power; ++k) {
        push_reduced(w, letter);
      }
    }
    return make(std::move(w));
  }

  void AutomatonBackend::prepare() {
    _inverse_vertex.assign(num_generators(), {});
    _inverse_edge.assign(num_generators(), {});
    for (std::size_t g = 0; g < num_generators(); ++g) {
      auto const& a = _actions[g];
      _inverse_vertex[g].resize(_num_vertices);
      _inverse_edge[g].resize(_num_edges);
      for (std::size_t v = 0; v < _num_vertices; ++v) {
        _inverse_vertex[g][a.vertex[v]] = static_cast<VertexId>(v);
      }
      for (std::size_t e = 0; e < _num_edges; ++e) {
        _inverse_edge[g][a.edge[e]] = static_cast<EdgeId>(e);
      }
    }
  }

  VertexId AutomatonBackend::act_vertex(GroupElement const& g,
                                        VertexId            v) const {
    check_owner(g);
    require_action();
    auto const& w = g.word();
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      std::size_t s = std::abs(*it) - 1;
      v = *it > 0 ? _actions[s].vertex[v] : _inverse_vertex[s][v];
    }
    return v;
  }

  EdgeId AutomatonBackend::act_edge(GroupElement const& g, EdgeId e) const {
    check_owner(g);
    require_action();
    auto const& w = g.word();
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      std::size_t s = std::abs(*it) - 1;
      e = *it > 0 ? _actions[s].edge[e] : _inverse_edge[s][e];
    }
    return e;
  }

  Word AutomatonBackend::restrict_word(Word const& w, EdgeId e) const {
    // phi(s1 ... sk, e) = phi(s1, s2...sk e) ... phi(sk, e)
    std::vector<Word const*> pieces(w.size(), nullptr);
    std::vector<Word>        inverted;
    inverted.reserve(w.size());
    EdgeId cur = e;
    for (std::size_t i = w.size(); i-- > 0;) {
      std::size_t s = std::abs(w[i]) - 1;
      if (w[i] > 0) {
        pieces[i] = &_actions[s].cocycle[cur].word();
        cur       = _actions[s].edge[cur];
      } else {
        // phi(s^-1, e) = phi(s, s^-1 e)^-1
        EdgeId pre = _inverse_edge[s][cur];
        inverted.push_back(inverse_word(_actions[s].cocycle[pre].word()));
        pieces[i] = &inverted.back();
        cur       = pre;
      }
    }
    Word out;
    for (auto const* p : pieces) {
      for (int l : *p) {
        push_reduced(out, l);
      }
    }
    return out;
  }

  GroupElement AutomatonBackend::restrict_edge(GroupElement const& g,
                                               EdgeId              e) const {
    check_owner(g);
    require_action();
    return make(restrict_word(g.word(), e));
  }

  Verdict AutomatonBackend::is_identity(GroupElement const& a,
                                        SearchBudget const& budget) const {
    check_owner(a);
    if (a.word().empty()) {
      return Verdict::yes("empty word");
    }
    require_action();
    // Bisimulation: a ~ 1 iff a fixes every vertex and edge and every
    // restriction a|e ~ 1.  Restrictions of a word never outgrow it when
    // generator restrictions are letters, so the state set is finite.
    struct Node {
      Word        word;
      std::size_t parent;
      EdgeId      via;
    };
    std::vector<Node>               nodes{{a.word(), SIZE_MAX, 0}};
    std::unordered_set<std::string> seen{make(a.word()).key()};
    auto chain = [&](std::size_t i) {
      std::vector<EdgeId> edges;
      while (nodes[i].parent != SIZE_MAX) {
        edges.push_back(nodes[i].via);
        i = nodes[i].parent;
      }
      std::reverse(edges.begin(), edges.end());
      std::string out;
      for (EdgeId e : edges) {
        out += "#" + std::to_string(e) + " ";
      }
      return out.empty() ? std::string("(none)") : out;
    };
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      GroupElement u = make(nodes[i].word);
      for (VertexId v = 0; v < _num_vertices; ++v) {
        if (act_vertex(u, v) != v) {
          return Verdict::no("restriction " + format(u) + " along edges "
                             + chain(i) + "moves vertex #" + std::to_string(v));
        }
      }
      for (EdgeId e = 0; e < _num_edges; ++e) {
        if (act_edge(u, e) != e) {
          return Verdict::no("restriction " + format(u) + " along edges "
                             + chain(i) + "moves edge #" + std::to_string(e));
        }
      }
      for (EdgeId e = 0; e < _num_edges; ++e) {
        Word r = restrict_word(nodes[i].word, e);
        if (r.empty()) {
          continue;
        }
        if (seen.insert(make(r).key()).second) {
          if (seen.size() > budget.max_states) {
            return Verdict::unknown("bisimulation exceeded "
                                    + std::to_string(budget.max_states)
                                    + " states");
          }
          nodes.push_back({std::move(r), i, e});
        }
      }
    }
    return Verdict::yes("bisimulation closed after "
                        + std::to_string(nodes.size()) + " states");
  }

  ////////////////////////////////////////////////////////////////////////
  // IntegerBackend
  ////////////////////////////////////////////////////////////////////////

  IntegerBackend::IntegerBackend(std::string generator_name)
      : GroupBackend({std::move(generator_name)}) {}

  GroupElement IntegerBackend::identity() const {
    return make(BigInt(0));
  }

  GroupElement IntegerBackend::generator(std::size_t i) const {
    if (i != 0) {
      throw Error(ErrorCode::invalid_argument, "Z has one generator");
    }
    return make(BigInt(1));
  }

  GroupElement IntegerBackend::integer(BigInt m) const {
    return make(std::move(m));
  }

  GroupElement IntegerBackend::mul(GroupElement const& a,
                                   GroupElement const& b) const {
    check_owner(a);
    check_owner(b);
    return make(BigInt(a.integer() + b.integer()));
  }

  GroupElement IntegerBackend::inverse(GroupElement const& a) const {
    check_owner(a);
    return make(BigInt(-a.integer()));
  }

  std::string IntegerBackend::format(GroupElement const& a) const {
    check_owner(a);
    return a.integer().str();
  }

  GroupElement IntegerBackend::parse(std::string_view text) const {
    std::string s = trim(text);
    std::string const& t = _generator_names[0];
    if (s.rfind(t, 0) == 0) {
      std::string rest = s.substr(t.size());
      if (rest.empty()) {
        return generator(0);
      }
      if (rest[0] == '^') {
        s = rest.substr(1);
      }
    }
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()
        || !std::all_of(s.begin() + i, s.end(), [](unsigned char c) {
             return std::isdigit(c);
           })) {
      throw Error(ErrorCode::parse_error, "not an integer: '" + s + "'");
    }
    if (s[0] == '+') {
      s = s.substr(1);
    }
    return make(BigInt(s));
  }

  Verdict IntegerBackend::is_identity(GroupElement const& a,
                                      SearchBudget const&) const {
    check_owner(a);
    return a.integer() == 0 ? Verdict::yes("zero") : Verdict::no("nonzero integer");
  }

  IntegerBackend::Cycles
  IntegerBackend::cycles_of(std::vector<std::uint32_t> const& perm) {
    Cycles c;
    c.cycle_of.assign(perm.size(), SIZE_MAX);
    c.position.assign(perm.size(), 0);
    for (std::size_t x = 0; x < perm.size(); ++x) {
      if (c.cycle_of[x] != SIZE_MAX) {
        continue;
      }
      std::size_t id = c.members.size();
      c.members.emplace_back();
      std::size_t y = x;
      do {
        c.cycle_of[y] = id;
        c.position[y] = c.members[id].size();
        c.members[id].push_back(y);
        y = perm[y];
      } while (y != x);
    }
    return c;
  }

  std::size_t IntegerBackend::shift(std::size_t   pos,
                                    std::size_t   len,
                                    BigInt const& m) {
    BigInt r = m % len;
    if (r < 0) {
      r += len;
    }
    return (pos + r.convert_to<std::size_t>()) % len;
  }

  void IntegerBackend::prepare() {
    auto const& a  = _actions[0];
    _vertex_cycles = cycles_of(a.vertex);
    _edge_cycles   = cycles_of(a.edge);
    _prefix.clear();
    _cycle_sum.clear();
    for (auto const& members : _edge_cycles.members) {
      std::size_t const   L = members.size();
      std::vector<BigInt> pre(2 * L + 1, 0);
      for (std::size_t i = 0; i < 2 * L; ++i) {
        pre[i + 1] = pre[i] + a.cocycle[members[i % L]].integer();
      }
      _cycle_sum.push_back(pre[L]);
      _prefix.push_back(std::move(pre));
    }
  }

  VertexId IntegerBackend::act_vertex(GroupElement const& g, VertexId v) const {
    check_owner(g);
    require_action();
    auto const& c  = _vertex_cycles;
    auto const& ms = c.members[c.cycle_of[v]];
    return static_cast<VertexId>(ms[shift(c.position[v], ms.size(), g.integer())]);
  }

  EdgeId IntegerBackend::act_edge(GroupElement const& g, EdgeId e) const {
    check_owner(g);
    require_action();
    auto const& c  = _edge_cycles;
    auto const& ms = c.members[c.cycle_of[e]];
    return static_cast<EdgeId>(ms[shift(c.position[e], ms.size(), g.integer())]);
  }

  GroupElement IntegerBackend::restrict_edge(GroupElement const& g,
                                             EdgeId              e) const {
    check_owner(g);
    require_action();
    BigInt const& m = g.integer();
    if (m < 0) {
      // 0 = phi(-m + m, e) = phi(-m, m e) + phi(m, e)
      GroupElement back = restrict_edge(make(BigInt(-m)), act_edge(g, e));
      return make(BigInt(-back.integer()));
    }
    std::size_t const cyc = _edge_cycles.cycle_of[e];
    std::size_t const L   = _edge_cycles.members[cyc].size();
    std::size_t const p   = _edge_cycles.position[e];
    BigInt            q   = m / L;
    std::size_t       r   = BigInt(m % L).convert_to<std::size_t>();
    auto const&       pre = _prefix[cyc];
    return make(BigInt(q * _cycle_sum[cyc] + pre[p + r] - pre[p]));
  }

  std::size_t IntegerBackend::edge_cycle_length(EdgeId e) const {
    require_action();
    return _edge_cycles.members[_edge_cycles.cycle_of.at(e)].size();
  }

  BigInt const& IntegerBackend::edge_cycle_sum(EdgeId e) const {
    require_action();
    return _cycle_sum[_edge_cycles.cycle_of.at(e)];
  }

  ////////////////////////////////////////////////////////////////////////
  // FiniteBackend
  ////////////////////////////////////////////////////////////////////////

  std::vector<std::string>
  FiniteBackend::generator_names_of(std::vector<std::string> const&   names,
                                    std::vector<std::uint32_t> const& gens) {
    std::vector<std::string> out;
    for (auto g : gens) {
      if (g >= names.size()) {
        throw Error(ErrorCode::not_a_group, "generator index out of range");
      }
      out.push_back(names[g]);
    }
    return out;
  }

  FiniteBackend::FiniteBackend(std::vector<std::string>                names,
                               std::vector<std::vector<std::uint32_t>> table,
                               std::vector<std::uint32_t>              gens)
      : GroupBackend(generator_names_of(names, gens)),
        _names(std::move(names)),
        _table(std::move(table)),
        _generators(std::move(gens)) {
    std::size_t const n = _names.size();
    if (n == 0) {
      throw Error(ErrorCode::not_a_group, "a group has at least one element");
    }
    std::unordered_set<std::string> seen;
    for (auto const& nm : _names) {
      if (nm.empty() || !seen.insert(nm).second) {
        throw Error(ErrorCode::duplicate_id,
                    "element names must be distinct and nonempty");
      }
    }
    if (_table.size() != n) {
      throw Error(ErrorCode::not_a_group, "table must be square");
    }
    for (auto const& row : _table) {
      if (row.size() != n
          || std::any_of(row.begin(), row.end(), [n](auto x) { return x >= n; })) {
        throw Error(ErrorCode::not_a_group, "table entries out of range");
      }
    }
    bool found = false;
    for (std::uint32_t e = 0; e < n && !found; ++e) {
      bool ok = true;
      for (std::uint32_t x = 0; x < n && ok; ++x) {
        ok = _table[e][x] == x && _table[x][e] == x;
      }
      if (ok) {
        _identity = e;
        found     = true;
      }
    }
    if (!found) {
      throw Error(ErrorCode::not_a_group, "no identity element");
    }
    _inverse.assign(n, 0);
    for (std::uint32_t x = 0; x < n; ++x) {
      bool ok = false;
      for (std::uint32_t y = 0; y < n && !ok; ++y) {
        if (_table[x][y] == _identity && _table[y][x] == _identity) {
          _inverse[x] = y;
          ok          = true;
        }
      }
      if (!ok) {
        throw Error(ErrorCode::not_a_group,
                    "element '" + _names[x] + "' has no inverse");
      }
    }
    for (std::uint32_t x = 0; x < n; ++x) {
      for (std::uint32_t y = 0; y < n; ++y) {
        for (std::uint32_t z = 0; z < n; ++z) {
          if (_table[_table[x][y]][z] != _table[x][_table[y][z]]) {
            throw Error(ErrorCode::not_a_group,
                        "multiplication is not associative at ("
                            + _names[x] + ", " + _names[y] + ", " + _names[z]
                            + ")");
          }
        }
      }
    }
  }

  GroupElement FiniteBackend::identity() const {
    return make(_identity);
  }

  GroupElement FiniteBackend::generator(std::size_t i) const {
    return make(_generators.at(i));
  }

  GroupElement FiniteBackend::element(std::uint32_t i) const {
    if (i >= order()) {
      throw Error(ErrorCode::invalid_argument, "element index out of range");
    }
    return make(i);
  }

  GroupElement FiniteBackend::mul(GroupElement const& a,
                                  GroupElement const& b) const {
    check_owner(a);
    check_owner(b);
    return make(_table[a.index()][b.index()]);
  }

  GroupElement FiniteBackend::inverse(GroupElement const& a) const {
    check_owner(a);
    return make(_inverse[a.index()]);
  }

  std::string FiniteBackend::format(GroupElement const& a) const {
    check_owner(a);
    return _names[a.index()];
  }

  GroupElement FiniteBackend::parse(std::string_view text) const {
    std::string s = trim(text);
    for (std::uint32_t i = 0; i < _names.size(); ++i) {
      if (_names[i] == s) {
        return make(i);
      }
    }
    if (s == "1" || s == "id") {
      return identity();
    }
    throw Error(ErrorCode::parse_error, "unknown group element '" + s + "'");
  }

  Verdict FiniteBackend::is_identity(GroupElement const& a,
                                     SearchBudget const&) const {
    check_owner(a);
    return a.index() == _identity ? Verdict::yes("identity element")
                                  : Verdict::no("non-identity element");
  }

  void FiniteBackend::prepare() {
    std::size_t const n = order();
    std::vector<bool> known(n, false);
    _vact.assign(n, {});
    _eact.assign(n, {});
    _coc.assign(n, {});
    _vact[_identity].resize(_num_vertices);
    _eact[_identity].resize(_num_edges);
    _coc[_identity].assign(_num_edges, _identity);
    for (std::size_t v = 0; v < _num_vertices; ++v) {
      _vact[_identity][v] = static_cast<VertexId>(v);
    }
    for (std::size_t e = 0; e < _num_edges; ++e) {
      _eact[_identity][e] = static_cast<EdgeId>(e);
    }
    known[_identity] = true;
    std::deque<std::uint32_t> queue{_identity};
    while (!queue.empty()) {
      std::uint32_t y = queue.front();
      queue.pop_front();
      for (std::size_t i = 0; i < _generators.size(); ++i) {
        auto const&           a = _actions[i];
        std::uint32_t         x = _table[_generators[i]][y];
        std::vector<VertexId> va(_num_vertices);
        std::vector<EdgeId>   ea(_num_edges);
        std::vector<std::uint32_t> ca(_num_edges);
        for (std::size_t v = 0; v < _num_vertices; ++v) {
          va[v] = a.vertex[_vact[y][v]];
        }
        for (std::size_t e = 0; e < _num_edges; ++e) {
          EdgeId ye = _eact[y][e];
          ea[e]     = a.edge[ye];
          // phi(s y, e) = phi(s, y e) phi(y, e)
          ca[e] = _table[a.cocycle[ye].index()][_coc[y][e]];
        }
        if (known[x]) {
          if (va != _vact[x] || ea != _eact[x] || ca != _coc[x]) {
            throw Error(ErrorCode::not_automorphism,
                        "generator actions are inconsistent with the "
                        "multiplication table at element '"
                            + _names[x] + "'");
          }
          continue;
        }
        known[x] = true;
        _vact[x] = std::move(va);
        _eact[x] = std::move(ea);
        _coc[x]  = std::move(ca);
        queue.push_back(x);
      }
    }
    for (std::uint32_t x = 0; x < n; ++x) {
      if (!known[x]) {
        throw Error(ErrorCode::not_a_group,
                    "element '" + _names[x] + "' is not generated");
      }
    }
  }

  VertexId FiniteBackend::act_vertex(GroupElement const& g, VertexId v) const {
    check_owner(g);
    require_action();
    return _vact[g.index()].at(v);
  }

  EdgeId FiniteBackend::act_edge(GroupElement const& g, EdgeId e) const {
    check_owner(g);
    require_action();
    return _eact[g.index()].at(e);
  }

  GroupElement FiniteBackend::restrict_edge(GroupElement const& g,
                                            EdgeId              e) const {
    check_owner(g);
    require_action();
    return make(_coc[g.index()].at(e));
  }

  ////////////////////////////////////////////////////////////////////////
  // ElementRegistry
  ////////////////////////////////////////////////////////////////////////

  std::string ElementRegistry::signature(GroupElement const& g) const {
    if (!_backend->has_action()) {
      return {};
    }
    std::string out;
    for (VertexId v = 0; v < _backend->action_vertices(); ++v) {
      out += std::to_string(_backend->act_vertex(g, v)) + ",";
    }
    out += "|";
    for (EdgeId e = 0; e < _backend->action_edges(); ++e) {
      out += std::to_string(_backend->act_edge(g, e)) + ",";
    }
    for (EdgeId e = 0; e < _backend->action_edges(); ++e) {
      out += "|";
      GroupElement r = _backend->restrict_edge(g, e);
      for (EdgeId f = 0; f < _backend->action_edges(); ++f) {
        out += std::to_string(_backend->act_edge(r, f)) + ",";
      }
    }
    return out;
  }

  std::optional<std::size_t> ElementRegistry::find(GroupElement const& g,
                                                   bool& undecided) {
    undecided = false;
    std::string k  = g.key();
    auto        it = _by_key.find(k);
    if (it != _by_key.end()) {
      return it->second;
    }
    if (_backend->exact_equality()) {
      return std::nullopt;
    }
    auto sit = _by_signature.find(signature(g));
    if (sit == _by_signature.end()) {
      return std::nullopt;
    }
    for (std::size_t id : sit->second) {
      Verdict v = _backend->equal(g, _reps[id], _budget);
      if (v.is_yes()) {
        _by_key.emplace(k, id);
        return id;
      }
      if (v.is_unknown()) {
        undecided = true;
      }
    }
    return std::nullopt;
  }

  std::optional<std::size_t> ElementRegistry::intern(GroupElement const& g) {
    bool undecided = false;
    if (auto id = find(g, undecided)) {
      return id;
    }
    if (undecided) {
      _had_unknown = true;
      return std::nullopt;
    }
    std::size_t id = _reps.size();
    _reps.push_back(g);
    _by_key.emplace(g.key(), id);
    if (!_backend->exact_equality()) {
      _by_signature[signature(g)].push_back(id);
    }
    return id;
  }

}  // namespace ssg
