#ifndef EXPANSE_ERRORS_HPP
#define EXPANSE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace expanse {

/// A precondition on an argument was violated (bad index, length mismatch, ...).
class InvalidArgument : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A size cap was exceeded; callers running randomized suites count these as skipped.
class CapExceeded : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Three-valued answer for searches that may hit a cap.
enum class Decision { No, Yes, Undecided };

inline const char* toString(Decision d) {
    switch (d) {
        case Decision::Yes: return "yes";
        case Decision::No: return "no";
        case Decision::Undecided: return "undecided";
    }
    return "?";
}

}  // namespace expanse

#endif  // EXPANSE_ERRORS_HPP
