#include "funayama/budget.hpp"

#include <cstdlib>
#include <string>

namespace funayama {

Budget Budget::from_env() {
  Budget b;
  if (const char* v = std::getenv("FUNAYAMA_BUDGET")) {
    std::string s(v);
    // stoull would wrap negative input around
    if (!s.empty() && s.find('-') == std::string::npos) {
      try {
        b.max_join_evals = std::stoull(s);
      } catch (...) {
        // unparsable values keep the default
      }
    }
  }
  return b;
}

}  // namespace funayama
