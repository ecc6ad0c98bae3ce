#include "exalg/stats.hpp"

namespace exalg::stats {

std::atomic<std::uint64_t> scalar_muls{0};
std::atomic<std::uint64_t> scalar_invs{0};

void reset() noexcept {
  scalar_muls.store(0, std::memory_order_relaxed);
  scalar_invs.store(0, std::memory_order_relaxed);
}

}  // namespace exalg::stats
