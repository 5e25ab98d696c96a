#ifndef ICL_ERRORS_HPP
#define ICL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace icl {

// Thrown on malformed caller input (bad degrees, non-congruences, invalid pairs).
struct InputError : std::runtime_error {
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when an enumeration would exceed a configured cap.
struct ResourceError : std::runtime_error {
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a structural invariant fails; always a bug.
struct InternalError : std::logic_error {
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

inline void internal_check(bool ok, const char* what) {
  if (!ok)
    throw InternalError(what);
}

}  // namespace icl

#endif
