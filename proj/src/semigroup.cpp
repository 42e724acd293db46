#include "ssg/semigroup.hpp"

#include <cctype>

namespace ssg {

  SgeElement SgeElement::zero(System const& s) {
    SgeElement z;
    z._system = &s;
    return z;
  }

  SgeElement SgeElement::triple(System const& s,
                                Path          alpha,
                                GroupElement  g,
                                Path          beta) {
    s.group().check_owner(g);
    if (alpha.source() != s.act(g, beta.source())) {
      throw Error(ErrorCode::domain_mismatch,
                  "(" + format_path(s.graph(), alpha) + ", " + s.format(g) + ", "
                      + format_path(s.graph(), beta)
                      + ") violates d(alpha) = g d(beta)");
    }
    SgeElement t;
    t._system = &s;
    t._zero   = false;
    t._alpha  = std::move(alpha);
    t._g      = std::move(g);
    t._beta   = std::move(beta);
    return t;
  }

  SgeElement SgeElement::idempotent(System const& s, Path alpha) {
    Path beta = alpha;
    return triple(s, std::move(alpha), s.group().identity(), std::move(beta));
  }

  SgeElement sge_mul(SgeElement const& s, SgeElement const& t) {
    if (&s.system() != &t.system()) {
      throw Error(ErrorCode::system_mismatch,
                  "semigroup elements of different systems");
    }
    System const& S = s.system();
    if (s.is_zero() || t.is_zero()) {
      return SgeElement::zero(S);
    }
    Graph const&        G     = S.graph();
    GroupBackend const& group = S.group();
    Path const &        beta = s.beta(), &gamma = t.alpha();
    if (beta.is_prefix_of(gamma)) {
      // gamma = beta eps
      Path eps = gamma.suffix(G, beta.length());
      return SgeElement::triple(
          S, compose(G, s.alpha(), act_path(S, s.g(), eps)),
          group.mul(restrict_path(S, s.g(), eps), t.g()), t.beta());
    }
    if (gamma.is_prefix_of(beta)) {
      // beta = gamma eps
      Path         eps  = beta.suffix(G, gamma.length());
      GroupElement hinv = group.inverse(t.g());
      return SgeElement::triple(
          S, s.alpha(),
          group.mul(s.g(), group.inverse(restrict_path(S, hinv, eps))),
          compose(G, t.beta(), act_path(S, hinv, eps)));
    }
    return SgeElement::zero(S);
  }

  SgeElement sge_adjoint(SgeElement const& s) {
    if (s.is_zero()) {
      return s;
    }
    return SgeElement::triple(s.system(), s.beta(),
                              s.system().group().inverse(s.g()), s.alpha());
  }

  Verdict sge_equal(SgeElement const&   s,
                    SgeElement const&   t,
                    SearchBudget const& budget) {
    if (&s.system() != &t.system()) {
      throw Error(ErrorCode::system_mismatch,
                  "semigroup elements of different systems");
    }
    if (s.is_zero() || t.is_zero()) {
      return s.is_zero() == t.is_zero() ? Verdict::yes() : Verdict::no("zero");
    }
    if (s.alpha() != t.alpha() || s.beta() != t.beta()) {
      return Verdict::no("path components differ");
    }
    return s.system().group().equal(s.g(), t.g(), budget);
  }

  Verdict sge_is_idempotent(SgeElement const& s, SearchBudget const& budget) {
    if (s.is_zero()) {
      return Verdict::yes("zero");
    }
    if (s.alpha() != s.beta()) {
      return Verdict::no("alpha differs from beta");
    }
    return s.system().group().is_identity(s.g(), budget);
  }

  Verdict leq_idempotent_under(SgeElement const&   e,
                               SgeElement const&   s,
                               SearchBudget const& budget) {
    Verdict idem = sge_is_idempotent(e, budget);
    if (!idem.is_yes()) {
      throw Error(ErrorCode::not_idempotent,
                  format_sge(e) + " is not of the form (gamma, 1, gamma)");
    }
    if (e.is_zero()) {
      return Verdict::yes("zero is below everything");
    }
    if (s.is_zero()) {
      return Verdict::no("a nonzero idempotent is not below zero");
    }
    if (s.alpha() != s.beta()) {
      return Verdict::no("alpha differs from beta");
    }
    if (!s.alpha().is_prefix_of(e.alpha())) {
      return Verdict::no("alpha is not a prefix of gamma");
    }
    Graph const& G   = s.system().graph();
    Path         tau = e.alpha().suffix(G, s.alpha().length());
    Verdict      v   = strongly_fixes(s.system(), s.g(), tau, budget);
    std::string  t   = format_path(G, tau);
    switch (v.answer) {
      case Answer::yes:
        return Verdict::yes(t + " is strongly fixed");
      case Answer::no:
        return Verdict::no(t + " is not strongly fixed");
      default:
        return v;
    }
  }

  std::string format_sge(SgeElement const& s) {
    if (s.is_zero()) {
      return "0";
    }
    Graph const& G = s.system().graph();
    return "(" + format_path(G, s.alpha()) + ", " + s.system().format(s.g())
           + ", " + format_path(G, s.beta()) + ")";
  }

  namespace {
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

  Path parse_path(Graph const& g, std::string_view text) {
    std::string s = trim(text);
    if (s.empty()) {
      throw Error(ErrorCode::parse_error, "empty path");
    }
    if (auto v = g.find_vertex(s)) {
      return Path::vertex(*v);
    }
    std::vector<EdgeId> edges;
    std::string         tok;
    auto flush = [&] {
      if (tok.empty()) {
        return;
      }
      if (auto e = g.find_edge(tok)) {
        edges.push_back(*e);
      } else if (g.letter_edges()) {
        for (char c : tok) {
          auto e1 = g.find_edge(std::string(1, c));
          if (!e1) {
            throw Error(ErrorCode::parse_error,
                        "unknown edge '" + std::string(1, c) + "' in '" + s + "'");
          }
          edges.push_back(*e1);
        }
      } else {
        throw Error(ErrorCode::parse_error,
                    "unknown edge or vertex '" + tok + "'");
      }
      tok.clear();
    };
    for (char c : s) {
      if (c == '.' || std::isspace(static_cast<unsigned char>(c))) {
        flush();
      } else {
        tok += c;
      }
    }
    flush();
    return Path::from_edges(g, edges);
  }

  SgeElement parse_sge(System const& s, std::string_view text) {
    std::string str = trim(text);
    std::size_t i   = 0;
    auto        err = [&](std::string const& msg) {
      throw Error(ErrorCode::parse_error,
                  "column " + std::to_string(i + 1) + ": " + msg);
    };
    auto skip = [&] {
      while (i < str.size() && std::isspace(static_cast<unsigned char>(str[i]))) {
        ++i;
      }
    };
    auto atom = [&]() -> SgeElement {
      skip();
      if (i < str.size() && str[i] == '0'
          && (i + 1 == str.size() || str[i + 1] != ',')) {
        ++i;
        return SgeElement::zero(s);
      }
      if (i >= str.size() || str[i] != '(') {
        err("expected '(' or '0'");
      }
      std::size_t close = str.find(')', i);
      if (close == std::string::npos) {
        err("missing ')'");
      }
      std::string              inner = str.substr(i + 1, close - i - 1);
      std::vector<std::string> parts;
      std::size_t              start = 0;
      for (std::size_t k = 0; k <= inner.size(); ++k) {
        if (k == inner.size() || inner[k] == ',') {
          parts.push_back(trim(inner.substr(start, k - start)));
          start = k + 1;
        }
      }
      if (parts.size() != 3) {
        err("a triple needs three components");
      }
      i = close + 1;
      return SgeElement::triple(s, parse_path(s.graph(), parts[0]),
                                s.parse_element(parts[1]),
                                parse_path(s.graph(), parts[2]));
    };
    auto term = [&]() {
      SgeElement x = atom();
      skip();
      while (str.compare(i, 2, "^*") == 0) {
        i += 2;
        x = sge_adjoint(x);
        skip();
      }
      return x;
    };
    SgeElement result = term();
    while (true) {
      skip();
      if (i >= str.size()) {
        break;
      }
      if (str[i] != '*') {
        err("expected '*'");
      }
      ++i;
      result = sge_mul(result, term());
    }
    return result;
  }

}  // namespace ssg
