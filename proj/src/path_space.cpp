#include "ssg/path_space.hpp"

#include <cctype>
#include <map>
#include <set>
#include <tuple>

namespace ssg {

  InfinitePathImage g_act_infinite(System const&                 s,
                                   GroupElement const&           g,
                                   EventuallyPeriodicPath const& xi,
                                   std::size_t                   depth,
                                   SearchBudget const&           budget) {
    Graph const&      G = s.graph();
    InfinitePathImage res;
    GroupElement      h   = g;
    Path              out = Path::vertex(s.act(g, xi.range()));
    for (EdgeId e : xi.prefix().edges()) {
      out.push_back(G, s.act_edge(h, e));
      h = s.restrict(h, e);
    }
    std::size_t const P = xi.prefix().length(), L = xi.cycle().length();
    ElementRegistry   reg(s.group(), budget);
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> seen;
    for (std::size_t k = 0; k < depth * L; ++k) {
      std::size_t pos = k % L;
      auto        cls = reg.intern(h);
      if (!cls) {
        break;
      }
      auto [it, fresh] = seen.emplace(std::make_pair(*cls, pos), k);
      if (!fresh) {
        std::size_t const   k0 = it->second;
        std::vector<EdgeId> cyc(out.edges().begin() + P + k0,
                                out.edges().begin() + P + k);
        res.path = EventuallyPeriodicPath(G, out.prefix(G, P + k0),
                                          Path::from_edges(G, cyc));
        break;
      }
      EdgeId e = xi.cycle()[pos];
      out.push_back(G, s.act_edge(h, e));
      h = s.restrict(h, e);
    }
    res.computed_prefix = std::move(out);
    return res;
  }

  namespace {
    bool in_cylinder(Graph const& G, EventuallyPeriodicPath const& xi, Path const& beta) {
      return xi.range() == beta.range()
             && xi.take(G, beta.length()) == beta;
    }
  }  // namespace

  InfinitePathImage sge_act_infinite(SgeElement const&             s,
                                     EventuallyPeriodicPath const& xi,
                                     std::size_t                   depth,
                                     SearchBudget const&           budget) {
    if (s.is_zero()) {
      throw Error(ErrorCode::domain_mismatch, "zero acts on no path");
    }
    System const& S = s.system();
    Graph const&  G = S.graph();
    if (!in_cylinder(G, xi, s.beta())) {
      throw Error(ErrorCode::domain_mismatch,
                  format_infinite(G, xi) + " does not start with "
                      + format_path(G, s.beta()));
    }
    InfinitePathImage img
        = g_act_infinite(S, s.g(), xi.drop(G, s.beta().length()), depth, budget);
    InfinitePathImage res;
    res.computed_prefix = compose(G, s.alpha(), img.computed_prefix);
    if (img.path) {
      res.path = EventuallyPeriodicPath(
          G, compose(G, s.alpha(), img.path->prefix()), img.path->cycle());
    }
    return res;
  }

  GermElement::GermElement(SgeElement s, EventuallyPeriodicPath base)
      : _s(std::move(s)), _base(std::move(base)) {
    if (_s.is_zero()) {
      throw Error(ErrorCode::domain_mismatch, "a germ needs a nonzero element");
    }
    Graph const& G = _s.system().graph();
    if (!in_cylinder(G, _base, _s.beta())) {
      throw Error(ErrorCode::domain_mismatch,
                  format_infinite(G, _base) + " is not in Z("
                      + format_path(G, _s.beta()) + ")");
    }
  }

  GermElement unit_germ(System const& s, EventuallyPeriodicPath const& xi) {
    return GermElement(SgeElement::idempotent(s, Path::vertex(xi.range())), xi);
  }

  EventuallyPeriodicPath germ_target(GermElement const& u, SearchBudget const& budget) {
    InfinitePathImage img = sge_act_infinite(u.element(), u.base(), 64, budget);
    if (!img.path) {
      throw Error(ErrorCode::invalid_argument,
                  "could not certify the image of " + format_germ(u)
                      + " as eventually periodic");
    }
    return *img.path;
  }

  GermElement germ_inverse(GermElement const& u, SearchBudget const& budget) {
    return GermElement(sge_adjoint(u.element()), germ_target(u, budget));
  }

  GermElement germ_compose(GermElement const& u,
                           GermElement const& v,
                           SearchBudget const& budget) {
    if (&u.element().system() != &v.element().system()) {
      throw Error(ErrorCode::system_mismatch, "germs of different systems");
    }
    if (germ_target(v, budget) != u.base()) {
      throw Error(ErrorCode::non_composable_germs,
                  "the base of " + format_germ(u) + " is not the target of "
                      + format_germ(v));
    }
    SgeElement st = sge_mul(u.element(), v.element());
    if (st.is_zero()) {
      throw Error(ErrorCode::non_composable_germs, "the product is zero");
    }
    return GermElement(st, v.base());
  }

  Verdict germ_equal(GermElement const& u,
                     GermElement const& v,
                     SearchBudget const& budget) {
    if (&u.element().system() != &v.element().system()) {
      throw Error(ErrorCode::system_mismatch, "germs of different systems");
    }
    if (u.base() != v.base()) {
      return Verdict::no("different base points");
    }
    System const&                 S  = u.element().system();
    Graph const&                  G  = S.graph();
    GroupBackend const&           Gr = S.group();
    SgeElement const &            s = u.element(), &t = v.element();
    EventuallyPeriodicPath const& xi = u.base();
    using Offset                     = long long;
    auto offset = [](SgeElement const& x) {
      return static_cast<Offset>(x.alpha().length())
             - static_cast<Offset>(x.beta().length());
    };
    if (offset(s) != offset(t)) {
      return Verdict::no("the germs shift path length differently");
    }
    std::size_t const n0    = std::max(s.beta().length(), t.beta().length());
    Path const        gamma = xi.take(G, n0);
    Path              tau   = gamma.suffix(G, s.beta().length());
    Path              tau2  = gamma.suffix(G, t.beta().length());
    if (compose(G, s.alpha(), act_path(S, s.g(), tau))
        != compose(G, t.alpha(), act_path(S, t.g(), tau2))) {
      return Verdict::no("images differ on Z(" + format_path(G, gamma) + ")");
    }
    GroupElement h  = restrict_path(S, s.g(), tau);
    GroupElement h2 = restrict_path(S, t.g(), tau2);

    std::size_t const P = xi.prefix().length(), L = xi.cycle().length();
    ElementRegistry   reg(Gr, budget);
    std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
    bool undecided = false;
    for (std::size_t n = n0; n < n0 + budget.max_states; ++n) {
      Verdict eq = Gr.equal(h, h2, budget);
      if (eq.is_yes()) {
        return Verdict::yes("s f_gamma = t f_gamma for gamma = "
                            + format_path(G, xi.take(G, n)));
      }
      undecided |= eq.is_unknown();
      if (n >= P) {
        auto c1 = reg.intern(h), c2 = reg.intern(h2);
        if (!c1 || !c2) {
          return Verdict::unknown("restriction equality undecided");
        }
        if (!seen.emplace(*c1, *c2, (n - P) % L).second) {
          if (undecided) {
            return Verdict::unknown("restriction equality undecided");
          }
          return Verdict::no("joint restriction state repeats at depth "
                             + std::to_string(n) + " without agreement");
        }
      }
      EdgeId e = xi.at(n);
      if (S.act_edge(h, e) != S.act_edge(h2, e)) {
        return Verdict::no("images part at depth " + std::to_string(n + 1));
      }
      h  = S.restrict(h, e);
      h2 = S.restrict(h2, e);
    }
    return Verdict::unknown("state budget exhausted");
  }

  std::optional<EventuallyPeriodicPath> unique_fixed_point(SgeElement const& t,
                                                           std::size_t depth) {
    if (t.is_zero() || t.alpha().length() <= t.beta().length()) {
      throw Error(ErrorCode::wrong_shape, "need (alpha, g, beta) with |alpha| > |beta|");
    }
    System const& S = t.system();
    Graph const&  G = S.graph();
    if (!t.beta().is_prefix_of(t.alpha())) {
      return std::nullopt;
    }
    Path gamma = t.alpha().suffix(G, t.beta().length());
    // d(gamma) = d(alpha) = g d(beta) = g r(gamma), so (g, gamma) is a
    // G-circuit by membership alone.
    CircuitFixedPoint fp = g_circuit_fixed_point(S, t.g(), gamma, depth);
    if (!fp.path) {
      return std::nullopt;
    }
    return EventuallyPeriodicPath(G, compose(G, t.beta(), fp.path->prefix()),
                                  fp.path->cycle());
  }

  Verdict isolated_fixed_point(SgeElement const& t) {
    if (t.is_zero() || t.alpha().length() <= t.beta().length()
        || !t.beta().is_prefix_of(t.alpha())) {
      throw Error(ErrorCode::wrong_shape,
                  "the element has no fixed point built from a G-circuit");
    }
    Graph const& G     = t.system().graph();
    Path         gamma = t.alpha().suffix(G, t.beta().length());
    for (EdgeId e : gamma.edges()) {
      if (!G.is_simple(G.source(e))) {
        return Verdict::no("entry at " + G.vertex_name(G.source(e)));
      }
    }
    return Verdict::yes(format_path(G, gamma) + " has no entry");
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

  EventuallyPeriodicPath parse_infinite_path(Graph const& g, std::string_view text) {
    std::string s     = trim(text);
    std::size_t open  = s.rfind('(');
    std::size_t close = s.rfind(")^inf");
    if (open == std::string::npos || close == std::string::npos || close < open
        || close + 5 != s.size()) {
      throw Error(ErrorCode::parse_error,
                  "expected prefix(cycle)^inf, found '" + s + "'");
    }
    Path cycle = parse_path(g, s.substr(open + 1, close - open - 1));
    if (!is_circuit(cycle)) {
      throw Error(ErrorCode::parse_error, "the repeated part must be a circuit");
    }
    std::string pre    = trim(s.substr(0, open));
    Path        prefix = pre.empty() ? Path::vertex(cycle.range()) : parse_path(g, pre);
    if (prefix.source() != cycle.range()) {
      throw Error(ErrorCode::non_composable,
                  "the cycle does not continue the prefix");
    }
    return EventuallyPeriodicPath(g, prefix, cycle);
  }

  GermElement parse_germ(System const& s, std::string_view text) {
    std::string str   = trim(text);
    std::size_t open  = str.find('[');
    std::size_t close = str.find(']');
    std::size_t at    = str.find('@');
    if (open != 0 || close == std::string::npos || at == std::string::npos
        || at < close) {
      throw Error(ErrorCode::parse_error,
                  "expected [alpha; g; beta] @ prefix(cycle)^inf");
    }
    std::string inner = str.substr(1, close - 1);
    std::size_t p1 = inner.find(';'), p2 = inner.rfind(';');
    if (p1 == std::string::npos || p1 == p2) {
      throw Error(ErrorCode::parse_error, "a germ needs three components");
    }
    SgeElement t = SgeElement::triple(
        s, parse_path(s.graph(), inner.substr(0, p1)),
        s.parse_element(trim(inner.substr(p1 + 1, p2 - p1 - 1))),
        parse_path(s.graph(), inner.substr(p2 + 1)));
    return GermElement(t, parse_infinite_path(s.graph(), str.substr(at + 1)));
  }

  std::string format_germ(GermElement const& u) {
    SgeElement const& t = u.element();
    Graph const&      G = t.system().graph();
    return "[" + format_path(G, t.alpha()) + "; " + t.system().format(t.g()) + "; "
           + format_path(G, t.beta()) + "] @ " + format_infinite(G, u.base());
  }

}  // namespace ssg
