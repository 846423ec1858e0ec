#include "minimax_lab/common.hpp"

#include <cstdlib>

namespace minimax_lab {

namespace {
std::optional<std::uint64_t> g_budget_override;
}

std::uint64_t enumeration_budget() {
  if (g_budget_override) return *g_budget_override;
  if (const char* env = std::getenv("MINIMAX_LAB_BUDGET")) {
    char* end = nullptr;
    const unsigned long long parsed = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && parsed > 0) return parsed;
  }
  return 1'000'000;
}

void set_enumeration_budget(std::optional<std::uint64_t> value) {
  g_budget_override = value;
}

}  // namespace minimax_lab
