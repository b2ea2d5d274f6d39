#include "cansyz/budget.hpp"

#include "cansyz/error.hpp"

namespace cansyz::budget {

namespace {
thread_local std::optional<Clock::time_point> t_deadline;
thread_local unsigned t_counter = 0;
}  // namespace

void check() {
  if (!t_deadline) return;
  // the clock read is not free; sample it every 256 calls
  if ((++t_counter & 0xff) != 0) return;
  if (Clock::now() > *t_deadline) throw ResourceExhausted("time budget exhausted");
}

std::optional<Clock::time_point> deadline() { return t_deadline; }

Scope::Scope(std::optional<std::chrono::duration<double>> limit) : saved_(t_deadline) {
  if (!limit) return;
  auto d = Clock::now() + std::chrono::duration_cast<Clock::duration>(*limit);
  if (!t_deadline || d < *t_deadline) t_deadline = d;
}

Scope::~Scope() { t_deadline = saved_; }

}  // namespace cansyz::budget
