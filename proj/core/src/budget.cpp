#include "egh/budget.hpp"

#include <atomic>

namespace egh {

namespace {
std::atomic<std::size_t> g_budget{1'000'000};
}

std::size_t slice_budget() noexcept { return g_budget.load(std::memory_order_relaxed); }

void set_slice_budget(std::size_t max_monomials) noexcept {
  g_budget.store(max_monomials, std::memory_order_relaxed);
}

BudgetExceededError::BudgetExceededError(const std::string& what_arg, BigInt required,
                                         std::size_t budget)
    : std::runtime_error(what_arg + ": needs " + required.str() + " monomials, budget is " +
                         std::to_string(budget)),
      required_(std::move(required)),
      budget_(budget) {}

void require_within_budget(const BigInt& required, const std::string& what) {
  const std::size_t budget = slice_budget();
  if (required > budget) throw BudgetExceededError(what, required, budget);
}

}  // namespace egh
