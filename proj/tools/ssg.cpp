// Command-line front end.  Exit codes: 0 when the command ran (Unknown
// verdicts included), 2 for unreadable, unparsable or invalid input, 3 when
// a valid input is outside the command's domain.

#include <filesystem>
#include <iostream>

#include "CLI11.hpp"
#include "ssg/report.hpp"
#include "ssg/system_file.hpp"

namespace {

  std::string base_name(std::string const& path) {
    return std::filesystem::path(path).filename().string();
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Self-similar graphs: properties of their groupoids and algebras"};
  app.require_subcommand(1);
  app.fallthrough();

  ssg::ReportOptions opts;
  std::size_t        states = opts.budget.max_states, depth = opts.budget.max_depth,
              elements = opts.budget.max_elements;
  unsigned field_char = 0;
  app.add_option("--budget-states", states, "Distinct states per search")
      ->capture_default_str();
  app.add_option("--budget-depth", depth, "Path length and recursion depth")
      ->capture_default_str();
  app.add_option("--budget-elements", elements, "Group elements in a ball sweep")
      ->capture_default_str();
  auto* fc = app.add_option("--field-char", field_char,
                            "Characteristic of the coefficient field");
  app.add_flag("--assume-amenable", opts.assume_amenable, "Treat the group as amenable");
  app.add_flag("--assume-faithful", opts.assume_faithful,
               "Treat the action on infinite paths as faithful");
  app.add_flag("--verify", opts.verify, "Replay certificates");

  std::string file, element, expression, other, vertex;
  std::size_t level = 3;
  bool        table = false, props = false;

  auto* validate = app.add_subcommand("validate", "Parse and validate a system or matrix file");
  validate->add_option("file", file)->required();
  auto* cprops = app.add_subcommand("props", "Property and simplicity report");
  cprops->add_option("file", file)->required();
  auto* sfp = app.add_subcommand("sfp", "Minimal strongly fixed paths of an element");
  sfp->add_option("file", file)->required();
  sfp->add_option("element", element)->required();
  auto* kth = app.add_subcommand("ktheory", "K-theory of a Katsura algebra");
  kth->add_option("file", file)->required();
  auto* hom = app.add_subcommand("homology", "Groupoid homology (matrix pair or system)");
  hom->add_option("file", file)->required();
  auto* kat = app.add_subcommand("katsura", "Write the self-similar graph of a matrix pair");
  kat->add_option("file", file)->required();
  kat->add_flag("--table", table, "Print the generator's action and cocycle instead");
  auto* des = app.add_subcommand("desing", "Desingularize sources by adding tails");
  des->add_option("file", file)->required();
  des->add_option("--vertex", vertex, "A single source (default: all sources)");
  des->add_option("--level", level, "Tail length of the materialization")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  des->add_flag("--props", props, "Report properties instead of writing the system");
  auto* sge = app.add_subcommand("sge", "Evaluate an inverse semigroup expression");
  sge->add_option("file", file)->required();
  sge->add_option("expression", expression)->required();
  auto* germ = app.add_subcommand("germ", "Inspect a germ, optionally comparing with another");
  germ->add_option("file", file)->required();
  germ->add_option("germ", expression)->required();
  germ->add_option("--equal", other, "A second germ at the same point");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  opts.budget = {states, depth, elements};
  if (*fc) {
    opts.field_char = field_char;
  }

  try {
    std::string const text = ssg::read_file(file);
    std::string const name = base_name(file);
    std::optional<std::string> v;
    if (!vertex.empty()) {
      v = vertex;
    }
    std::string out;
    if (*validate) {
      out = ssg::report_validate(name, text);
    } else if (*cprops) {
      out = ssg::report_props(name, text, opts);
    } else if (*sfp) {
      out = ssg::report_sfp(name, text, element, opts);
    } else if (*kth) {
      out = ssg::report_ktheory(name, text);
    } else if (*hom) {
      out = ssg::report_homology(name, text);
    } else if (*kat) {
      out = table ? ssg::katsura_table_text(text) : ssg::katsura_system_text(text);
    } else if (*des) {
      out = props ? ssg::report_desing_props(name, text, v, level, opts)
                  : ssg::desingularized_text(text, v, level);
    } else if (*sge) {
      out = ssg::report_sge(name, text, expression, opts);
    } else if (*germ) {
      out = ssg::report_germ(name, text, expression,
                             other.empty() ? std::nullopt : std::optional<std::string>(other),
                             opts);
    }
    std::cout << out;
    return 0;
  } catch (ssg::Error const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return ssg::is_validation_error(e.code()) ? 2 : 3;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
