#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace goswf {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Inputs that are individually valid but inconsistent with each other
/// (e.g. a sampled function living on a rule with a different weight).
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computation could not reach its accuracy target.
class PrecisionError : public std::runtime_error {
 public:
  PrecisionError(const std::string& what, double residual,
                 std::optional<std::size_t> index = std::nullopt)
      : std::runtime_error(what), residual_(residual), index_(index) {}

  double residual() const noexcept { return residual_; }
  std::optional<std::size_t> index() const noexcept { return index_; }

 private:
  double residual_;
  std::optional<std::size_t> index_;
};

/// Iterative kernel failed to converge; carries the offending index.
class InternalError : public std::runtime_error {
 public:
  InternalError(const std::string& what, std::size_t index)
      : std::runtime_error(what), index_(index) {}

  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

}  // namespace goswf
