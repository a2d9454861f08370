#include "sepmc/config.hpp"

#include <cstdlib>
#include <string>

namespace sepmc {

int oracle_limit() {
  const char* env = std::getenv("SEPMC_ORACLE_LIMIT");
  if (env == nullptr || *env == '\0') return 20;
  try {
    int v = std::stoi(env);
    return v > 0 ? v : 20;
  } catch (...) {
    return 20;
  }
}

}  // namespace sepmc
