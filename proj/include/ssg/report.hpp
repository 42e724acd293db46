// Deterministic text reports behind the command-line tool.  Each report
// is a human-readable part followed by a "[machine]" block of key=value
// lines; identical input and options give identical bytes.

#ifndef SSG_REPORT_HPP_
#define SSG_REPORT_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ssg/core.hpp"

namespace ssg {

  struct ReportOptions {
    SearchBudget            budget;
    std::optional<unsigned> field_char;
    bool                    assume_amenable = false;
    bool                    assume_faithful = false;
    bool                    verify          = false;  // replay certificates
  };

  class Report {
   public:
    explicit Report(std::string command) : _command(std::move(command)) {}

    void line(std::string text = {}) {
      _lines.push_back(std::move(text));
    }
    void kv(std::string key, std::string value) {
      _machine.emplace_back(std::move(key), std::move(value));
    }
    std::string str() const;

   private:
    std::string                                      _command;
    std::vector<std::string>                         _lines;
    std::vector<std::pair<std::string, std::string>> _machine;
  };

  // `name` is how the input is echoed (usually the file's base name) and
  // `text` its content.  All throw ssg::Error on bad input.
  std::string report_validate(std::string const& name, std::string const& text);
  std::string report_props(std::string const&   name,
                           std::string const&   text,
                           ReportOptions const& opts);
  std::string report_sfp(std::string const&   name,
                         std::string const&   text,
                         std::string const&   element,
                         ReportOptions const& opts);
  std::string report_ktheory(std::string const& name, std::string const& text);
  // Matrix pairs get the Katsura formulas; system files get phi0, H0 and,
  // with an abelianization block, phi1 and H1.
  std::string report_homology(std::string const& name, std::string const& text);
  std::string report_sge(std::string const&   name,
                         std::string const&   text,
                         std::string const&   expression,
                         ReportOptions const& opts);
  std::string report_germ(std::string const&                name,
                          std::string const&                text,
                          std::string const&                germ,
                          std::optional<std::string> const& other,
                          ReportOptions const&              opts);

  // System files.
  std::string katsura_system_text(std::string const& matrices_text);
  std::string katsura_table_text(std::string const& matrices_text);
  std::string desingularized_text(std::string const&                text,
                                  std::optional<std::string> const& vertex,
                                  std::size_t                       level);
  std::string report_desing_props(std::string const&                name,
                                  std::string const&                text,
                                  std::optional<std::string> const& vertex,
                                  std::size_t                       level,
                                  ReportOptions const&              opts);

  // True when the text holds a matrix pair rather than a system.
  bool looks_like_matrices(std::string const& text);

}  // namespace ssg

#endif  // SSG_REPORT_HPP_
