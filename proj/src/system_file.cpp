#include "ssg/system_file.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace ssg {

  namespace {

    struct Token {
      enum class Kind { ident, string, lbrace, rbrace, semi, colon, arrow, end };
      Kind        kind;
      std::string text;
      std::size_t line;
      std::size_t column;
    };

    bool is_word_char(char c) {
      return !std::isspace(static_cast<unsigned char>(c)) && c != '{'
             && c != '}' && c != ';' && c != ':' && c != '"' && c != '#';
    }

    class Lexer {
     public:
      explicit Lexer(std::string_view text) : _text(text) {}

      std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
          skip();
          std::size_t line = _line, col = _col;
          if (_pos >= _text.size()) {
            out.push_back({Token::Kind::end, "end of input", line, col});
            return out;
          }
          char c = _text[_pos];
          switch (c) {
            case '{': out.push_back({Token::Kind::lbrace, "{", line, col}); advance(); continue;
            case '}': out.push_back({Token::Kind::rbrace, "}", line, col}); advance(); continue;
            case ';': out.push_back({Token::Kind::semi, ";", line, col}); advance(); continue;
            case ':': out.push_back({Token::Kind::colon, ":", line, col}); advance(); continue;
            default: break;
          }
          if (c == '"') {
            advance();
            std::string s;
            while (_pos < _text.size() && _text[_pos] != '"') {
              if (_text[_pos] == '\\' && _pos + 1 < _text.size()) {
                advance();
              }
              s += _text[_pos];
              advance();
            }
            if (_pos >= _text.size()) {
              throw Error(ErrorCode::parse_error,
                          position(line, col) + ": unterminated string");
            }
            advance();
            out.push_back({Token::Kind::string, s, line, col});
            continue;
          }
          if (c == '-' && _pos + 1 < _text.size() && _text[_pos + 1] == '>') {
            advance();
            advance();
            out.push_back({Token::Kind::arrow, "->", line, col});
            continue;
          }
          std::string s;
          while (_pos < _text.size() && is_word_char(_text[_pos])) {
            if (_text[_pos] == '-' && _pos + 1 < _text.size()
                && _text[_pos + 1] == '>') {
              break;
            }
            s += _text[_pos];
            advance();
          }
          out.push_back({Token::Kind::ident, s, line, col});
        }
      }

      static std::string position(std::size_t line, std::size_t col) {
        return "line " + std::to_string(line) + ", column " + std::to_string(col);
      }

     private:
      void advance() {
        if (_text[_pos] == '\n') {
          ++_line;
          _col = 1;
        } else {
          ++_col;
        }
        ++_pos;
      }
      void skip() {
        while (_pos < _text.size()) {
          char c = _text[_pos];
          if (c == '#') {
            while (_pos < _text.size() && _text[_pos] != '\n') {
              advance();
            }
          } else if (std::isspace(static_cast<unsigned char>(c))) {
            advance();
          } else {
            break;
          }
        }
      }

      std::string_view _text;
      std::size_t      _pos  = 0;
      std::size_t      _line = 1;
      std::size_t      _col  = 1;
    };

    struct RawAction {
      std::vector<std::pair<Token, Token>> vertex;
      std::vector<std::pair<Token, Token>> edge;
      Token                                where;
    };

    class Parser {
     public:
      explicit Parser(std::string_view text) : _toks(Lexer(text).run()) {}

      SystemDocument run(bool allow_weak) {
        while (peek().kind != Token::Kind::end) {
          Token kw = expect_ident();
          _block   = kw.text;
          if (kw.text == "graph") {
            graph_block();
          } else if (kw.text == "backend") {
            backend_block();
          } else if (kw.text == "action") {
            action_block();
          } else if (kw.text == "cocycle") {
            cocycle_block();
          } else if (kw.text == "assertions") {
            assertions_block();
          } else if (kw.text == "abelianization") {
            abelianization_block();
          } else {
            fail(kw, "unknown block '" + kw.text + "'");
          }
          _block = "top level";
        }
        return assemble(allow_weak);
      }

     private:
      // ---- token helpers --------------------------------------------------
      Token const& peek() const {
        return _toks[_i];
      }
      Token next() {
        Token t = _toks[_i];
        if (t.kind != Token::Kind::end) {
          ++_i;
        }
        return t;
      }
      [[noreturn]] void fail(Token const& t,
                             std::string const& msg,
                             ErrorCode code = ErrorCode::parse_error) const {
        throw Error(code, Lexer::position(t.line, t.column) + " (" + _block
                              + "): " + msg);
      }
      Token expect(Token::Kind k, char const* what) {
        Token t = next();
        if (t.kind != k) {
          fail(t, std::string("expected ") + what + ", found '" + t.text + "'");
        }
        return t;
      }
      Token expect_ident() {
        return expect(Token::Kind::ident, "an identifier");
      }
      void expect_keyword(char const* kw) {
        Token t = expect_ident();
        if (t.text != kw) {
          fail(t, std::string("expected '") + kw + "', found '" + t.text + "'");
        }
      }
      bool accept(Token::Kind k) {
        if (peek().kind == k) {
          next();
          return true;
        }
        return false;
      }
      std::vector<Token> idents_until_semi() {
        std::vector<Token> out;
        while (peek().kind == Token::Kind::ident) {
          out.push_back(next());
        }
        expect(Token::Kind::semi, "';'");
        return out;
      }
      BigInt integer(Token const& t) {
        std::string s = t.text;
        std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (i == s.size()
            || !std::all_of(s.begin() + i, s.end(), [](char c) {
                 return std::isdigit(static_cast<unsigned char>(c));
               })) {
          fail(t, "expected an integer, found '" + s + "'");
        }
        return BigInt(s[0] == '+' ? s.substr(1) : s);
      }
      template <typename F>
      void guarded(Token const& t, F&& f) {
        try {
          f();
        } catch (Error const& e) {
          std::string what = e.what();
          auto        pos  = what.find(": ");
          fail(t, pos == std::string::npos ? what : what.substr(pos + 2),
               e.code());
        }
      }

      // ---- blocks ---------------------------------------------------------
      void graph_block() {
        if (_graph_seen) {
          fail(peek(), "graph block given twice");
        }
        _graph_seen = true;
        expect(Token::Kind::lbrace, "'{'");
        while (!accept(Token::Kind::rbrace)) {
          Token kw = expect_ident();
          if (kw.text == "vertices") {
            expect(Token::Kind::colon, "':'");
            for (Token const& v : idents_until_semi()) {
              guarded(v, [&] { _graph.add_vertex(v.text); });
            }
          } else if (kw.text == "edge") {
            Token id = expect_ident();
            expect(Token::Kind::colon, "':'");
            Token src = expect_ident();
            expect(Token::Kind::arrow, "'->'");
            Token rng = expect_ident();
            expect(Token::Kind::semi, "';'");
            guarded(id, [&] { _graph.add_edge(id.text, src.text, rng.text); });
          } else {
            fail(kw, "expected 'vertices' or 'edge'");
          }
        }
      }

      void backend_block() {
        if (_backend) {
          fail(peek(), "backend block given twice");
        }
        Token kind = expect_ident();
        expect(Token::Kind::lbrace, "'{'");
        if (kind.text == "automaton") {
          expect_keyword("generators");
          expect(Token::Kind::colon, "':'");
          std::vector<std::string> names;
          for (Token const& t : idents_until_semi()) {
            names.push_back(t.text);
          }
          guarded(kind, [&] {
            _backend = std::make_shared<AutomatonBackend>(names);
          });
        } else if (kind.text == "integer") {
          std::string name = "t";
          if (peek().kind == Token::Kind::ident) {
            expect_keyword("generator");
            expect(Token::Kind::colon, "':'");
            name = expect_ident().text;
            expect(Token::Kind::semi, "';'");
          }
          _backend = std::make_shared<IntegerBackend>(name);
        } else if (kind.text == "finite") {
          finite_backend(kind);
        } else {
          fail(kind, "backend must be automaton, integer or finite");
        }
        expect(Token::Kind::rbrace, "'}'");
      }

      void finite_backend(Token const& where) {
        expect_keyword("elements");
        expect(Token::Kind::colon, "':'");
        std::vector<std::string>             names;
        std::map<std::string, std::uint32_t> index;
        for (Token const& t : idents_until_semi()) {
          if (!index.emplace(t.text, names.size()).second) {
            fail(t, "element '" + t.text + "' listed twice",
                 ErrorCode::duplicate_id);
          }
          names.push_back(t.text);
        }
        auto lookup = [&](Token const& t) {
          auto it = index.find(t.text);
          if (it == index.end()) {
            fail(t, "unknown element '" + t.text + "'");
          }
          return it->second;
        };
        expect_keyword("table");
        expect(Token::Kind::lbrace, "'{'");
        std::vector<std::vector<std::uint32_t>> table(names.size());
        std::vector<bool>                       have(names.size(), false);
        while (!accept(Token::Kind::rbrace)) {
          Token         row = expect_ident();
          std::uint32_t r   = lookup(row);
          expect(Token::Kind::colon, "':'");
          for (Token const& t : idents_until_semi()) {
            table[r].push_back(lookup(t));
          }
          if (table[r].size() != names.size()) {
            fail(row, "row must list " + std::to_string(names.size())
                          + " products", ErrorCode::not_a_group);
          }
          have[r] = true;
        }
        for (std::size_t r = 0; r < names.size(); ++r) {
          if (!have[r]) {
            fail(where, "missing table row for '" + names[r] + "'",
                 ErrorCode::not_a_group);
          }
        }
        expect_keyword("generators");
        expect(Token::Kind::colon, "':'");
        std::vector<std::uint32_t> gens;
        for (Token const& t : idents_until_semi()) {
          gens.push_back(lookup(t));
        }
        guarded(where, [&] {
          _backend = std::make_shared<FiniteBackend>(names, table, gens);
        });
      }

      std::size_t generator_index(Token const& t) {
        if (!_backend) {
          fail(t, "the backend block must come first");
        }
        auto const& names = _backend->generator_names();
        auto        it    = std::find(names.begin(), names.end(), t.text);
        if (it == names.end()) {
          fail(t, "unknown generator '" + t.text + "'");
        }
        return static_cast<std::size_t>(it - names.begin());
      }

      void action_block() {
        Token       gen = expect_ident();
        std::size_t g   = generator_index(gen);
        if (!_actions.emplace(g, RawAction{{}, {}, gen}).second) {
          fail(gen, "action of '" + gen.text + "' given twice",
               ErrorCode::duplicate_id);
        }
        RawAction& a = _actions.at(g);
        expect(Token::Kind::lbrace, "'{'");
        while (!accept(Token::Kind::rbrace)) {
          Token kw = expect_ident();
          if (kw.text != "vertex" && kw.text != "edge") {
            fail(kw, "expected 'vertex' or 'edge'");
          }
          Token from = expect_ident();
          expect(Token::Kind::arrow, "'->'");
          Token to = expect_ident();
          expect(Token::Kind::semi, "';'");
          (kw.text == "vertex" ? a.vertex : a.edge).emplace_back(from, to);
        }
      }

      void cocycle_block() {
        Token       gen = expect_ident();
        std::size_t g   = generator_index(gen);
        auto&       m   = _cocycles[g];
        expect(Token::Kind::lbrace, "'{'");
        while (!accept(Token::Kind::rbrace)) {
          Token e = expect_ident();
          expect(Token::Kind::colon, "':'");
          std::string word;
          Token       first = peek();
          while (peek().kind == Token::Kind::ident) {
            word += (word.empty() ? "" : " ") + next().text;
          }
          expect(Token::Kind::semi, "';'");
          if (!m.emplace(e.text, std::make_pair(first, word)).second) {
            fail(e, "cocycle value for edge '" + e.text + "' given twice",
                 ErrorCode::duplicate_id);
          }
          _cocycle_pos[g].emplace(e.text, e);
        }
      }

      bool boolean(Token const& t) {
        if (t.text == "true" || t.text == "yes") {
          return true;
        }
        if (t.text == "false" || t.text == "no") {
          return false;
        }
        fail(t, "expected true or false");
      }

      void assertions_block() {
        expect(Token::Kind::lbrace, "'{'");
        while (!accept(Token::Kind::rbrace)) {
          Token kw = expect_ident();
          expect(Token::Kind::colon, "':'");
          if (kw.text == "amenable") {
            _assertions.amenable = boolean(expect_ident());
          } else if (kw.text == "faithful") {
            _assertions.faithful = boolean(expect_ident());
          } else if (kw.text == "provenance") {
            _assertions.provenance = expect(Token::Kind::string, "a string").text;
          } else {
            fail(kw, "unknown assertion '" + kw.text + "'");
          }
          expect(Token::Kind::semi, "';'");
        }
      }

      std::vector<BigInt> int_row() {
        std::vector<BigInt> row;
        for (Token const& t : idents_until_semi()) {
          row.push_back(integer(t));
        }
        return row;
      }

      void abelianization_block() {
        Abelianization ab;
        Token          where = peek();
        expect(Token::Kind::lbrace, "'{'");
        expect_keyword("rank");
        expect(Token::Kind::colon, "':'");
        Token r = expect_ident();
        ab.rank = static_cast<std::size_t>(integer(r));
        expect(Token::Kind::semi, "';'");
        std::map<std::size_t, std::vector<BigInt>> images;
        while (!accept(Token::Kind::rbrace)) {
          Token kw = expect_ident();
          if (kw.text == "relation") {
            expect(Token::Kind::colon, "':'");
            ab.relations.push_back(int_row());
            if (ab.relations.back().size() != ab.rank) {
              fail(kw, "relation length differs from rank",
                   ErrorCode::shape_mismatch);
            }
          } else if (kw.text == "image") {
            Token gen = expect_ident();
            expect(Token::Kind::colon, "':'");
            auto row = int_row();
            if (row.size() != ab.rank) {
              fail(gen, "image length differs from rank",
                   ErrorCode::shape_mismatch);
            }
            images[generator_index(gen)] = std::move(row);
          } else {
            fail(kw, "expected 'relation' or 'image'");
          }
        }
        for (std::size_t g = 0; g < _backend->num_generators(); ++g) {
          auto it = images.find(g);
          if (it == images.end()) {
            fail(where, "no image for generator '"
                            + _backend->generator_names()[g] + "'");
          }
          ab.images.push_back(it->second);
        }
        _ab = std::move(ab);
      }

      // ---- assembly -------------------------------------------------------
      SystemDocument assemble(bool allow_weak) {
        _block = "assembly";
        Token const& end = peek();
        if (!_graph_seen) {
          fail(end, "missing graph block");
        }
        if (!_backend) {
          fail(end, "missing backend block");
        }
        std::size_t const            ng = _backend->num_generators();
        std::vector<GeneratorAction> actions(ng);
        for (std::size_t g = 0; g < ng; ++g) {
          GeneratorAction& a = actions[g];
          a.vertex.resize(_graph.num_vertices());
          a.edge.resize(_graph.num_edges());
          for (VertexId v = 0; v < a.vertex.size(); ++v) {
            a.vertex[v] = v;
          }
          for (EdgeId e = 0; e < a.edge.size(); ++e) {
            a.edge[e] = e;
          }
          auto it = _actions.find(g);
          if (it != _actions.end()) {
            _block = "action " + _backend->generator_names()[g];
            for (auto const& [from, to] : it->second.vertex) {
              a.vertex[vertex(from)] = vertex(to);
            }
            for (auto const& [from, to] : it->second.edge) {
              a.edge[edge(from)] = edge(to);
            }
          }
          _block     = "cocycle " + _backend->generator_names()[g];
          auto& vals = _cocycles[g];
          for (auto const& [name, val] : vals) {
            edge(_cocycle_pos[g].at(name));
          }
          a.cocycle.resize(_graph.num_edges());
          for (EdgeId e = 0; e < _graph.num_edges(); ++e) {
            auto v = vals.find(_graph.edge_name(e));
            if (v == vals.end()) {
              fail(end, "missing cocycle value for edge '"
                            + _graph.edge_name(e) + "'");
            }
            guarded(v->second.first,
                    [&] { a.cocycle[e] = _backend->parse(v->second.second); });
          }
        }
        _block = "assembly";
        guarded(end, [&] {
          _backend->bind_action(_graph.num_vertices(), _graph.num_edges(),
                                std::move(actions));
        });
        if (_ab && _ab->images.size() != ng) {
          fail(end, "abelianization must give an image for each generator",
               ErrorCode::shape_mismatch);
        }
        System       sys(std::move(_graph), _backend, _assertions);
        SystemReport rep;
        _block = "validation";
        guarded(end, [&] { rep = validate_system(sys, allow_weak); });
        return SystemDocument{std::move(sys), std::move(_ab), rep};
      }

      VertexId vertex(Token const& t) {
        auto v = _graph.find_vertex(t.text);
        if (!v) {
          fail(t, "unknown vertex '" + t.text + "'", ErrorCode::dangling_edge);
        }
        return *v;
      }
      EdgeId edge(Token const& t) {
        auto e = _graph.find_edge(t.text);
        if (!e) {
          fail(t, "unknown edge '" + t.text + "'", ErrorCode::dangling_edge);
        }
        return *e;
      }

      std::vector<Token>              _toks;
      std::size_t                     _i     = 0;
      std::string                     _block = "top level";
      bool                            _graph_seen = false;
      Graph                           _graph;
      std::shared_ptr<GroupBackend>   _backend;
      std::map<std::size_t, RawAction> _actions;
      std::map<std::size_t, std::map<std::string, std::pair<Token, std::string>>>
                                                      _cocycles;
      std::map<std::size_t, std::map<std::string, Token>> _cocycle_pos;
      Assertions                                      _assertions;
      std::optional<Abelianization>                   _ab;
    };

    std::string quote(std::string const& s) {
      std::string out = "\"";
      for (char c : s) {
        if (c == '"' || c == '\\') {
          out += '\\';
        }
        out += c;
      }
      return out + "\"";
    }

    std::string row_text(std::vector<BigInt> const& row) {
      std::string out;
      for (std::size_t i = 0; i < row.size(); ++i) {
        out += (i ? " " : "") + row[i].str();
      }
      return out;
    }

  }  // namespace

  SystemDocument parse_system(std::string_view text, bool allow_weak) {
    return Parser(text).run(allow_weak);
  }

  std::string read_file(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw Error(ErrorCode::parse_error, "cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  SystemDocument load_system(std::string const& path, bool allow_weak) {
    return parse_system(read_file(path), allow_weak);
  }

  std::string write_system(System const& s, Abelianization const* ab) {
    Graph const&        g = s.graph();
    GroupBackend const& G = s.group();
    std::ostringstream  out;
    out << "graph {\n  vertices:";
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      out << ' ' << g.vertex_name(v);
    }
    out << ";\n";
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      out << "  edge " << g.edge_name(e) << ": " << g.vertex_name(g.source(e))
          << " -> " << g.vertex_name(g.range(e)) << ";\n";
    }
    out << "}\n\n";
    auto names = [](std::vector<std::string> const& v) {
      std::string r;
      for (auto const& n : v) {
        r += " " + n;
      }
      return r;
    };
    switch (G.kind()) {
      case BackendKind::automaton:
        out << "backend automaton {\n  generators:" << names(G.generator_names())
            << ";\n}\n";
        break;
      case BackendKind::integer:
        out << "backend integer {\n  generator: " << G.generator_names()[0]
            << ";\n}\n";
        break;
      case BackendKind::finite: {
        auto const&              F = dynamic_cast<FiniteBackend const&>(G);
        std::vector<std::string> all;
        for (std::uint32_t i = 0; i < F.order(); ++i) {
          all.push_back(F.element_name(i));
        }
        out << "backend finite {\n  elements:" << names(all) << ";\n  table {\n";
        for (std::uint32_t i = 0; i < F.order(); ++i) {
          out << "    " << all[i] << ":";
          for (auto j : F.table()[i]) {
            out << ' ' << all[j];
          }
          out << ";\n";
        }
        out << "  }\n  generators:" << names(G.generator_names()) << ";\n}\n";
        break;
      }
    }
    for (std::size_t i = 0; i < G.num_generators(); ++i) {
      auto const&        a    = G.generator_action(i);
      std::string const& name = G.generator_names()[i];
      out << "\naction " << name << " {\n";
      for (VertexId v = 0; v < g.num_vertices(); ++v) {
        if (a.vertex[v] != v) {
          out << "  vertex " << g.vertex_name(v) << " -> "
              << g.vertex_name(a.vertex[v]) << ";\n";
        }
      }
      for (EdgeId e = 0; e < g.num_edges(); ++e) {
        if (a.edge[e] != e) {
          out << "  edge " << g.edge_name(e) << " -> " << g.edge_name(a.edge[e])
              << ";\n";
        }
      }
      out << "}\ncocycle " << name << " {\n";
      for (EdgeId e = 0; e < g.num_edges(); ++e) {
        out << "  " << g.edge_name(e) << ": " << G.format(a.cocycle[e]) << ";\n";
      }
      out << "}\n";
    }
    Assertions const& as = s.assertions();
    out << "\nassertions {\n  amenable: " << (as.amenable ? "true" : "false")
        << ";\n  faithful: " << (as.faithful ? "true" : "false") << ";\n";
    if (!as.provenance.empty()) {
      out << "  provenance: " << quote(as.provenance) << ";\n";
    }
    out << "}\n";
    if (ab) {
      out << "\nabelianization {\n  rank: " << ab->rank << ";\n";
      for (auto const& r : ab->relations) {
        out << "  relation: " << row_text(r) << ";\n";
      }
      for (std::size_t i = 0; i < ab->images.size(); ++i) {
        out << "  image " << G.generator_names()[i] << ": "
            << row_text(ab->images[i]) << ";\n";
      }
      out << "}\n";
    }
    return out.str();
  }

  std::string fingerprint(std::string_view text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
      h ^= c;
      h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
  }

  MatrixPair parse_matrix_pair(std::string_view text) {
    MatrixPair                        m;
    std::vector<std::vector<BigInt>>* cur = nullptr;
    std::istringstream                in{std::string(text)};
    std::string                       line;
    std::size_t                       lineno = 0;
    auto fail = [&](std::string const& msg) {
      throw Error(ErrorCode::parse_error,
                  "line " + std::to_string(lineno) + ": " + msg);
    };
    bool        seen_a = false, seen_b = false;
    std::size_t row_line = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (auto h = line.find('#'); h != std::string::npos) {
        line.resize(h);
      }
      std::istringstream ls(line);
      std::string        tok;
      while (ls >> tok) {
        if (tok == "A:" || tok == "B:") {
          bool& seen = tok == "A:" ? seen_a : seen_b;
          if (seen) {
            fail("block " + tok + " given twice");
          }
          seen = true;
          cur      = tok == "A:" ? &m.A : &m.B;
          row_line = 0;
          continue;
        }
        if (!cur) {
          fail("expected 'A:' or 'B:' before '" + tok + "'");
        }
        std::size_t i = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
        if (i == tok.size()
            || !std::all_of(tok.begin() + i, tok.end(), [](char c) {
                 return std::isdigit(static_cast<unsigned char>(c));
               })) {
          fail("not an integer: '" + tok + "'");
        }
        if (row_line != lineno) {
          cur->emplace_back();
          row_line = lineno;
        }
        cur->back().push_back(BigInt(tok[0] == '+' ? tok.substr(1) : tok));
      }
    }
    if (!seen_a || !seen_b) {
      throw Error(ErrorCode::parse_error, "both 'A:' and 'B:' are required");
    }
    auto square = [&](std::vector<std::vector<BigInt>> const& M, char const* n) {
      for (auto const& r : M) {
        if (r.size() != M.size()) {
          throw Error(ErrorCode::shape_mismatch,
                      std::string("matrix ") + n + " is not square");
        }
      }
    };
    square(m.A, "A");
    square(m.B, "B");
    if (m.A.size() != m.B.size()) {
      throw Error(ErrorCode::shape_mismatch, "A and B differ in size");
    }
    return m;
  }

  MatrixPair load_matrix_pair(std::string const& path) {
    return parse_matrix_pair(read_file(path));
  }

  std::string write_matrix_pair(MatrixPair const& m) {
    std::string out = "A:\n";
    for (auto const& r : m.A) {
      out += row_text(r) + "\n";
    }
    out += "B:\n";
    for (auto const& r : m.B) {
      out += row_text(r) + "\n";
    }
    return out;
  }

}  // namespace ssg
