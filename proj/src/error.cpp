#include "holam/error.hpp"

#include <cstdlib>
#include <string>

#include "holam/limits.hpp"

namespace holam {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnboundVariable: return "UnboundVariable";
    case ErrorKind::TypeMismatch: return "TypeMismatch";
    case ErrorKind::IllTyped: return "IllTyped";
    case ErrorKind::TypeDisagreement: return "TypeDisagreement";
    case ErrorKind::UnknownLetter: return "UnknownLetter";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::UnknownBuiltin: return "UnknownBuiltin";
    case ErrorKind::BadParameters: return "BadParameters";
    case ErrorKind::ResourceExhausted: return "ResourceExhausted";
    case ErrorKind::SizeOverflow: return "SizeOverflow";
    case ErrorKind::SpaceMismatch: return "SpaceMismatch";
    case ErrorKind::StateCountDecrease: return "StateCountDecrease";
    case ErrorKind::NormalizationNeedsDefs: return "NormalizationNeedsDefs";
    case ErrorKind::BudgetExhausted: return "BudgetExhausted";
    case ErrorKind::NotWordType: return "NotWordType";
    case ErrorKind::NotTreeType: return "NotTreeType";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::Cancelled: return "Cancelled";
    case ErrorKind::BadFormat: return "BadFormat";
  }
  return "Error";
}

namespace {

Limits initial_limits() {
  Limits limits;
  if (const char* env = std::getenv("HOLAM_BUDGET")) {
    char* end = nullptr;
    unsigned long long value = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) limits.space_budget = value;
  }
  return limits;
}

const Limits& process_defaults() {
  static const Limits defaults = initial_limits();
  return defaults;
}

thread_local const Limits* active_limits = nullptr;

}  // namespace

const Limits& current_limits() {
  return active_limits ? *active_limits : process_defaults();
}

ScopedLimits::ScopedLimits(const Limits& limits) : previous_(active_limits), limits_(limits) {
  active_limits = &limits_;
}

ScopedLimits::~ScopedLimits() { active_limits = previous_; }

void check_cancelled() {
  const auto* flag = current_limits().cancel;
  if (flag && flag->load(std::memory_order_relaxed)) {
    throw Error(ErrorKind::Cancelled, "operation cancelled");
  }
}

}  // namespace holam
