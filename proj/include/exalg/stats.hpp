// Global scalar-operation counters. The benchmark reports them, and one
// test uses the inversion counter to confirm Berkowitz never divides.
#pragma once

#include <atomic>
#include <cstdint>

namespace exalg::stats {

extern std::atomic<std::uint64_t> scalar_muls;
extern std::atomic<std::uint64_t> scalar_invs;

void reset() noexcept;

}  // namespace exalg::stats
