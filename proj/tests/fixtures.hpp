// Shared test fixtures and small independent oracles.

#ifndef SSG_TESTS_FIXTURES_HPP_
#define SSG_TESTS_FIXTURES_HPP_

#include <string>

#include "ssg/system_file.hpp"

namespace fixtures {

  inline std::string data(std::string const& name) {
    return std::string(SSG_DATA_DIR) + "/" + name;
  }

  inline ssg::SystemDocument load(std::string const& name) {
    return ssg::load_system(data(name));
  }

  inline ssg::Path word_path(ssg::Graph const& g, std::string const& w) {
    ssg::Path p = ssg::Path::vertex(0);
    for (char c : w) {
      p.push_back(g, *g.find_edge(std::string(1, c)));
    }
    return p;
  }

}  // namespace fixtures

#endif
