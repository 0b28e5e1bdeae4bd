#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "egh/bigint.hpp"

namespace egh {

// Degree-slice enumerations refuse to materialize more monomials than this.
// Desk-scale tool: fail loudly instead of paging.
std::size_t slice_budget() noexcept;
void set_slice_budget(std::size_t max_monomials) noexcept;

class BudgetExceededError : public std::runtime_error {
 public:
  BudgetExceededError(const std::string& what_arg, BigInt required, std::size_t budget);
  const BigInt& required() const noexcept { return required_; }
  std::size_t budget() const noexcept { return budget_; }

 private:
  BigInt required_;
  std::size_t budget_;
};

// Throws BudgetExceededError if `required` monomials exceed the current budget.
void require_within_budget(const BigInt& required, const std::string& what);

}  // namespace egh
