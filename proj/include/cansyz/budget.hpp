#pragma once

#include <chrono>
#include <optional>

namespace cansyz {

/// Cooperative per-thread time budget. Long-running kernels call
/// budget::check(), which throws ResourceExhausted once the deadline passes.
namespace budget {

using Clock = std::chrono::steady_clock;

void check();
std::optional<Clock::time_point> deadline();

/// Installs a deadline for the current thread for the lifetime of the scope.
/// Nested scopes keep the earlier of the two deadlines.
class Scope {
 public:
  explicit Scope(std::optional<std::chrono::duration<double>> limit);
  ~Scope();
  Scope(const Scope&) = delete;
  Scope& operator=(const Scope&) = delete;

 private:
  std::optional<Clock::time_point> saved_;
};

}  // namespace budget
}  // namespace cansyz
