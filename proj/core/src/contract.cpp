#include "genruns/contract.hpp"

namespace genruns::detail {

void contract_failed(const char* expr, const char* file, int line, const std::string& what) {
  throw ContractViolation(what + " [" + expr + " at " + file + ":" + std::to_string(line) + "]");
}

}  // namespace genruns::detail
