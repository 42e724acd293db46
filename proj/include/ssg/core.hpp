// Shared vocabulary: exact integers, errors, three-valued verdicts, budgets.

#ifndef SSG_CORE_HPP_
#define SSG_CORE_HPP_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace ssg {

  using BigInt = boost::multiprecision::cpp_int;

  enum class ErrorCode {
    duplicate_id,
    dangling_edge,
    non_composable,
    backend_mismatch,
    domain_mismatch,
    not_automorphism,
    standing_hypothesis_violated,
    not_a_group,
    not_idempotent,
    not_a_g_circuit,
    wrong_shape,
    non_composable_germs,
    condition0_violated,
    shape_mismatch,
    abelianization_inconsistent,
    not_a_source,
    not_infinite_receiver,
    orbit_not_computable,
    parse_error,
    system_mismatch,
    invalid_argument
  };

  char const* error_code_name(ErrorCode code) noexcept;

  // True for errors that mean "the input did not describe a valid object"
  // as opposed to "a valid object was used outside an operation's domain".
  bool is_validation_error(ErrorCode code) noexcept;

  class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, std::string const& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
          _code(code) {}

    ErrorCode code() const noexcept {
      return _code;
    }

   private:
    ErrorCode _code;
  };

  enum class Answer { yes, no, unknown };

  char const* answer_name(Answer a) noexcept;

  // A Yes/No carries the certificate or witness in `note`; Unknown carries
  // the reason the search stopped.
  struct Verdict {
    Answer      answer = Answer::unknown;
    std::string note;

    static Verdict yes(std::string note = {}) {
      return {Answer::yes, std::move(note)};
    }
    static Verdict no(std::string note = {}) {
      return {Answer::no, std::move(note)};
    }
    static Verdict unknown(std::string note = {}) {
      return {Answer::unknown, std::move(note)};
    }

    bool is_yes() const noexcept {
      return answer == Answer::yes;
    }
    bool is_no() const noexcept {
      return answer == Answer::no;
    }
    bool is_unknown() const noexcept {
      return answer == Answer::unknown;
    }
  };

  struct SearchBudget {
    std::size_t max_states   = 100000;  // distinct states per search
    std::size_t max_depth    = 64;      // path length / recursion depth
    std::size_t max_elements = 256;     // group elements in a ball sweep
  };

}  // namespace ssg

#endif  // SSG_CORE_HPP_
