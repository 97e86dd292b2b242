#pragma once

#include <stdexcept>
#include <string>

namespace genruns {

/// Thrown when a caller breaks a documented precondition of the public API.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace detail {
[[noreturn]] void contract_failed(const char* expr, const char* file, int line,
                                  const std::string& what);
}  // namespace detail

}  // namespace genruns

// Always-on precondition check for API boundaries. Hot inner loops use assert.
#define GENRUNS_EXPECTS(cond, what)                                         \
  do {                                                                      \
    if (!(cond)) {                                                          \
      ::genruns::detail::contract_failed(#cond, __FILE__, __LINE__, (what)); \
    }                                                                       \
  } while (false)
