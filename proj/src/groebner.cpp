#include "multisecant/groebner.hpp"

namespace msec {

namespace {
std::atomic<std::uint64_t> g_pair_budget{2'000'000};
}

std::uint64_t default_pair_budget() { return g_pair_budget.load(); }
void set_default_pair_budget(std::uint64_t pairs) { g_pair_budget.store(pairs ? pairs : 1); }

std::uint64_t& pair_counter() {
  thread_local std::uint64_t counter = 0;
  return counter;
}

}  // namespace msec
