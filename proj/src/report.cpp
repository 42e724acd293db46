#include "ssg/report.hpp"

#include <sstream>

#include "ssg/abelian.hpp"
#include "ssg/desingularize.hpp"
#include "ssg/katsura.hpp"
#include "ssg/path_space.hpp"
#include "ssg/properties.hpp"
#include "ssg/semigroup.hpp"
#include "ssg/system_file.hpp"

namespace ssg {

  std::string Report::str() const {
    std::ostringstream out;
    out << "ssg " << _command << "\n";
    for (auto const& l : _lines) {
      out << l << "\n";
    }
    out << "\n[machine]\n";
    for (auto const& [k, v] : _machine) {
      out << k << "=" << v << "\n";
    }
    return out.str();
  }

  namespace {

    std::string budget_text(SearchBudget const& b) {
      return "states=" + std::to_string(b.max_states) + " depth="
             + std::to_string(b.max_depth) + " elements=" + std::to_string(b.max_elements);
    }

    void header(Report& r, std::string const& name, std::string const& text) {
      r.line("input: " + name);
      r.line("fingerprint: " + fingerprint(text));
      r.kv("input", name);
      r.kv("fingerprint", fingerprint(text));
    }

    void budget(Report& r, SearchBudget const& b) {
      r.line("budget: " + budget_text(b));
      r.kv("budget.states", std::to_string(b.max_states));
      r.kv("budget.depth", std::to_string(b.max_depth));
      r.kv("budget.elements", std::to_string(b.max_elements));
    }

    std::string pad(std::string s, std::size_t n) {
      if (s.size() < n) {
        s.append(n - s.size(), ' ');
      }
      return s;
    }

    void check(Report& r, std::string const& key, PropertyCheck const& c) {
      std::string answer = answer_name(c.verdict.answer);
      r.line(pad(key, 22) + pad(answer, 9) + c.rule);
      if (!c.verdict.note.empty()) {
        r.line("    " + c.verdict.note);
      }
      r.kv(key, answer);
    }

    SystemDocument load(std::string const& text, ReportOptions const& opts) {
      SystemDocument doc = parse_system(text);
      if (opts.assume_faithful || opts.assume_amenable) {
        Assertions a = doc.system.assertions();
        if (opts.assume_faithful) {
          a.faithful = true;
        }
        if (opts.assume_amenable && !a.amenable) {
          a.amenable   = true;
          a.provenance = a.provenance.empty() ? "asserted on the command line"
                                              : a.provenance;
        }
        doc.system.set_assertions(a);
      }
      return doc;
    }

    void property_block(Report& r, System const& s, PropertyReport const& p,
                        ReportOptions const& opts) {
      r.line(std::string("amenable: ") + (p.amenable ? "asserted" : "not asserted")
             + (s.assertions().provenance.empty() ? ""
                                                  : " (" + s.assertions().provenance + ")"));
      r.line("field characteristic: "
             + (p.field_char ? std::to_string(*p.field_char) : std::string("unspecified")));
      r.line();
      check(r, "hausdorff", p.hausdorff);
      check(r, "minimal", p.minimal);
      check(r, "effective", p.effective);
      check(r, "locally_contracting", p.locally_contracting);
      check(r, "simple_cstar", p.simple_cstar);
      check(r, "simple_algebraic", p.simple_algebraic);
      check(r, "purely_infinite", p.purely_infinite);
      if (p.hausdorff.witness) {
        r.kv("hausdorff.witness", s.format(*p.hausdorff.witness));
      }
      if (opts.verify && p.hausdorff.witness && p.hausdorff.pump) {
        bool ok = replay_pump(s, *p.hausdorff.witness, *p.hausdorff.pump);
        r.line(std::string("verify: Hausdorff pump ") + (ok ? "replayed" : "FAILED to replay"));
        r.kv("verify.hausdorff", ok ? "ok" : "failed");
      }
      if (!p.warnings.empty()) {
        r.line();
        r.line("warnings:");
        for (auto const& w : p.warnings) {
          r.line("  - " + w);
        }
      }
      r.kv("warnings", std::to_string(p.warnings.size()));
    }

    std::string path_or_vertex(Graph const& g, Path const& p) {
      return format_path(g, p);
    }

  }  // namespace

  bool looks_like_matrices(std::string const& text) {
    std::istringstream in(text);
    std::string        l;
    while (std::getline(in, l)) {
      auto b = l.find_first_not_of(" \t\r");
      if (b == std::string::npos || l[b] == '#') {
        continue;
      }
      return l.compare(b, 2, "A:") == 0;
    }
    return false;
  }

  std::string report_validate(std::string const& name, std::string const& text) {
    Report r("validate");
    header(r, name, text);
    if (looks_like_matrices(text)) {
      MatrixPair m = parse_matrix_pair(text);
      check_condition0(m);
      r.line("matrix pair: " + std::to_string(m.A.size()) + " x "
             + std::to_string(m.A.size()) + ", condition (0) holds");
      r.kv("kind", "matrices");
      r.kv("valid", "true");
      return r.str();
    }
    SystemDocument doc = parse_system(text);
    Graph const&   g   = doc.system.graph();
    r.line("graph: " + std::to_string(g.num_vertices()) + " vertices, "
           + std::to_string(g.num_edges()) + " edges");
    r.line(std::string("backend: ") + backend_kind_name(doc.system.group().kind()) + ", "
           + std::to_string(doc.system.group().num_generators()) + " generators");
    r.line("standing hypothesis: holds");
    std::size_t sources = 0, sinks = 0;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      sources += g.is_source(v);
      sinks += g.is_sink(v);
    }
    r.line("sources: " + std::to_string(sources) + ", sinks: " + std::to_string(sinks));
    r.kv("kind", "system");
    r.kv("vertices", std::to_string(g.num_vertices()));
    r.kv("edges", std::to_string(g.num_edges()));
    r.kv("backend", backend_kind_name(doc.system.group().kind()));
    r.kv("sources", std::to_string(sources));
    r.kv("valid", "true");
    return r.str();
  }

  std::string report_props(std::string const&   name,
                           std::string const&   text,
                           ReportOptions const& opts) {
    Report r("props");
    header(r, name, text);
    budget(r, opts.budget);
    SystemDocument doc = load(text, opts);
    System const&  s   = doc.system;
    PropertyReport p   = simplicity_report(s, s.assertions().amenable, opts.field_char, opts.budget);
    property_block(r, s, p, opts);
    return r.str();
  }

  std::string report_sfp(std::string const&   name,
                         std::string const&   text,
                         std::string const&   element,
                         ReportOptions const& opts) {
    Report r("sfp");
    header(r, name, text);
    budget(r, opts.budget);
    SystemDocument doc = load(text, opts);
    System const&  s   = doc.system;
    Graph const&   g   = s.graph();
    GroupElement   x   = s.parse_element(element);
    SfpReport      rep = minimal_strongly_fixed(s, x, opts.budget);
    r.line("element: " + s.format(x));
    r.line(std::string("status: ") + sfp_status_name(rep.status));
    r.line("minimal strongly fixed paths" + std::string(rep.truncated ? " (list truncated)" : "")
           + ":");
    std::string joined;
    for (Path const& p : rep.minimal_paths) {
      r.line("  " + path_or_vertex(g, p));
      joined += (joined.empty() ? "" : ",") + path_or_vertex(g, p);
    }
    if (rep.witness) {
      r.line("pump: prefix " + format_path(g, rep.witness->prefix) + ", cycle "
             + format_path(g, rep.witness->cycle) + ", exit "
             + format_path(g, rep.witness->exit));
    }
    if (!rep.note.empty()) {
      r.line("note: " + rep.note);
    }
    r.line("states explored: " + std::to_string(rep.states_explored));
    r.kv("element", s.format(x));
    r.kv("status", sfp_status_name(rep.status));
    r.kv("paths", joined);
    r.kv("truncated", rep.truncated ? "true" : "false");
    if (opts.verify && rep.witness) {
      bool ok = replay_pump(s, x, *rep.witness);
      r.line(std::string("verify: pump ") + (ok ? "replayed" : "FAILED to replay"));
      r.kv("verify.pump", ok ? "ok" : "failed");
    }
    return r.str();
  }

  std::string report_ktheory(std::string const& name, std::string const& text) {
    Report r("ktheory");
    header(r, name, text);
    MatrixPair m = parse_matrix_pair(text);
    KGroups    k = katsura_ktheory(m);
    r.line("K0 = " + format_group(k.K0));
    r.line("K1 = " + format_group(k.K1));
    bool kb = kirchberg_precheck(m);
    r.line(std::string("Kirchberg conditions (A irreducible, A_ii >= 2, B_ii = 1): ")
           + (kb ? "hold" : "do not hold"));
    r.kv("K0", format_group(k.K0));
    r.kv("K1", format_group(k.K1));
    r.kv("kirchberg", kb ? "true" : "false");
    return r.str();
  }

  std::string report_homology(std::string const& name, std::string const& text) {
    Report r("homology");
    header(r, name, text);
    if (looks_like_matrices(text)) {
      KatsuraHomology h = katsura_homology(parse_matrix_pair(text));
      if (!h.removed_rows.empty()) {
        std::string rows;
        for (auto i : h.removed_rows) {
          rows += (rows.empty() ? "" : " ") + std::to_string(i + 1);
        }
        r.line("zero rows removed: " + rows);
      }
      r.line("H0 = " + format_group(h.H0));
      r.line("H1 = " + format_group(h.H1));
      r.line("H2 = " + format_group(h.H2));
      r.line("Hn = 0 for n >= 3");
      r.line("K0 = " + format_group(h.K0));
      r.line("K1 = " + format_group(h.K1));
      r.kv("H0", format_group(h.H0));
      r.kv("H1", format_group(h.H1));
      r.kv("H2", format_group(h.H2));
      r.kv("K0", format_group(h.K0));
      r.kv("K1", format_group(h.K1));
      return r.str();
    }
    SystemDocument doc = parse_system(text);
    Abelianization const* ab = doc.abelianization ? &*doc.abelianization : nullptr;
    PhiMaps        pm  = phi_maps(doc.system, ab);
    Graph const&   g   = doc.system.graph();
    std::string    reps, regs;
    for (VertexId v : pm.orbit_reps) {
      reps += (reps.empty() ? "" : " ") + g.vertex_name(v);
    }
    for (VertexId v : pm.regular_reps) {
      regs += (regs.empty() ? "" : " ") + g.vertex_name(v);
    }
    r.line("orbit representatives: " + reps);
    r.line("regular representatives: " + regs);
    r.line("phi0 =");
    std::istringstream m(format_matrix(pm.phi0));
    for (std::string l; std::getline(m, l);) {
      r.line("  " + l);
    }
    r.line("H0 = " + format_group(pm.H0));
    r.kv("H0", format_group(pm.H0));
    if (pm.phi1) {
      r.line("phi1 =");
      std::istringstream m1(format_matrix(*pm.phi1));
      for (std::string l; std::getline(m1, l);) {
        r.line("  " + l);
      }
    }
    if (pm.H1) {
      r.line("H1 = " + format_group(*pm.H1));
      r.kv("H1", format_group(*pm.H1));
    }
    if (!pm.note.empty()) {
      r.line("note: " + pm.note);
    }
    return r.str();
  }

  std::string report_sge(std::string const&   name,
                         std::string const&   text,
                         std::string const&   expression,
                         ReportOptions const& opts) {
    Report         r("sge");
    header(r, name, text);
    SystemDocument doc = load(text, opts);
    System const&  s   = doc.system;
    SgeElement     x   = parse_sge(s, expression);
    r.line("expression: " + expression);
    r.line("value: " + format_sge(x));
    Verdict idem = sge_is_idempotent(x, opts.budget);
    r.line(std::string("idempotent: ") + answer_name(idem.answer));
    r.kv("value", format_sge(x));
    r.kv("idempotent", answer_name(idem.answer));
    if (!x.is_zero() && x.alpha().length() > x.beta().length()) {
      auto fp = unique_fixed_point(x);
      r.line("fixed point: " + (fp ? format_infinite(s.graph(), *fp) : std::string("none")));
      r.kv("fixed_point", fp ? format_infinite(s.graph(), *fp) : "none");
      if (fp) {
        Verdict iso = isolated_fixed_point(x);
        r.line(std::string("isolated: ") + answer_name(iso.answer));
        r.kv("isolated", answer_name(iso.answer));
      }
    }
    return r.str();
  }

  std::string report_germ(std::string const&                name,
                          std::string const&                text,
                          std::string const&                germ,
                          std::optional<std::string> const& other,
                          ReportOptions const&              opts) {
    Report         r("germ");
    header(r, name, text);
    SystemDocument doc = load(text, opts);
    System const&  s   = doc.system;
    GermElement    u   = parse_germ(s, germ);
    r.line("germ: " + format_germ(u));
    r.line("source: " + format_infinite(s.graph(), u.base()));
    r.line("target: " + format_infinite(s.graph(), germ_target(u, opts.budget)));
    Verdict unit = germ_equal(u, unit_germ(s, u.base()), opts.budget);
    r.line(std::string("is a unit: ") + answer_name(unit.answer));
    r.kv("germ", format_germ(u));
    r.kv("target", format_infinite(s.graph(), germ_target(u, opts.budget)));
    r.kv("unit", answer_name(unit.answer));
    if (other) {
      GermElement v  = parse_germ(s, *other);
      Verdict     eq = germ_equal(u, v, opts.budget);
      r.line("other: " + format_germ(v));
      r.line(std::string("equal: ") + answer_name(eq.answer)
             + (eq.note.empty() ? "" : " (" + eq.note + ")"));
      r.kv("equal", answer_name(eq.answer));
    }
    return r.str();
  }

  std::string katsura_system_text(std::string const& matrices_text) {
    return write_system(build_katsura(parse_matrix_pair(matrices_text)));
  }

  std::string katsura_table_text(std::string const& matrices_text) {
    MatrixPair  m = parse_matrix_pair(matrices_text);
    System      s = build_katsura(m);
    std::string out;
    for (auto const& l : katsura_generator_table(s, m)) {
      out += l + "\n";
    }
    return out;
  }

  namespace {
    TailSystem tails_for(System const& s, std::optional<std::string> const& vertex) {
      if (!vertex) {
        return desingularize_sources(s);
      }
      auto v = s.graph().find_vertex(*vertex);
      if (!v) {
        throw Error(ErrorCode::invalid_argument, "no vertex named '" + *vertex + "'");
      }
      return desingularize_source(s, *v);
    }
  }  // namespace

  std::string desingularized_text(std::string const&                text,
                                  std::optional<std::string> const& vertex,
                                  std::size_t                       level) {
    SystemDocument doc = parse_system(text);
    TailSystem     t   = tails_for(doc.system, vertex);
    return write_system(*t.materialize(level));
  }

  std::string report_desing_props(std::string const&                name,
                                  std::string const&                text,
                                  std::optional<std::string> const& vertex,
                                  std::size_t                       level,
                                  ReportOptions const&              opts) {
    Report r("desing --props");
    header(r, name, text);
    budget(r, opts.budget);
    r.line("tail length: " + std::to_string(level));
    r.kv("level", std::to_string(level));
    SystemDocument doc = load(text, opts);
    TailSystem     t   = tails_for(doc.system, vertex);
    auto           s   = t.materialize(level);
    PropertyReport p   = countable_property_bridge(t, level, opts.field_char, opts.budget);
    property_block(r, *s, p, opts);
    return r.str();
  }

}  // namespace ssg
