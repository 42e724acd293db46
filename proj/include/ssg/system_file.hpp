// Text formats: the system file and the Katsura matrix-pair file.  The
// grammar is documented in docs/system-format.md.

#ifndef SSG_SYSTEM_FILE_HPP_
#define SSG_SYSTEM_FILE_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ssg/core.hpp"
#include "ssg/system.hpp"

namespace ssg {

  // A presentation of the abelianisation of G as Z^rank / <relations>,
  // together with the image of every generator.
  struct Abelianization {
    std::size_t                      rank = 0;
    std::vector<std::vector<BigInt>> relations;  // each of length rank
    std::vector<std::vector<BigInt>> images;     // one per generator
  };

  struct SystemDocument {
    System                        system;
    std::optional<Abelianization> abelianization;
    SystemReport                  report;
  };

  // Throws Error with a message of the form "line L, column C (block):
  // ...".  The system is validated; with allow_weak the weak standing
  // hypothesis suffices.
  SystemDocument parse_system(std::string_view text, bool allow_weak = false);
  SystemDocument load_system(std::string const& path, bool allow_weak = false);

  std::string write_system(System const&         s,
                           Abelianization const* ab = nullptr);

  // 64-bit FNV-1a of the text, as 16 hex digits.
  std::string fingerprint(std::string_view text);

  struct MatrixPair {
    std::vector<std::vector<BigInt>> A;
    std::vector<std::vector<BigInt>> B;
  };

  // Blocks "A:" and "B:" followed by whitespace-separated integer rows.
  MatrixPair  parse_matrix_pair(std::string_view text);
  MatrixPair  load_matrix_pair(std::string const& path);
  std::string write_matrix_pair(MatrixPair const& m);

  std::string read_file(std::string const& path);

}  // namespace ssg

#endif  // SSG_SYSTEM_FILE_HPP_
