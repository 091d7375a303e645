#include "muonkit/schedule.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace muonkit {

const char* schedule_name(ScheduleKind kind) {
  switch (kind) {
    case ScheduleKind::Constant: return "constant";
    case ScheduleKind::Cosine: return "cosine";
    case ScheduleKind::Wsd: return "wsd";
  }
  return "?";
}

std::optional<ScheduleKind> schedule_from_name(const std::string& name) {
  if (name == "constant") return ScheduleKind::Constant;
  if (name == "cosine") return ScheduleKind::Cosine;
  if (name == "wsd") return ScheduleKind::Wsd;
  return std::nullopt;
}

void ScheduleSpec::validate() const {
  if (!(base_lr > 0.0) || !std::isfinite(base_lr)) {
    throw std::invalid_argument("schedule.base_lr must be positive and finite");
  }
  if (total_steps <= 0) {
    throw std::invalid_argument("schedule.total_steps must be positive");
  }
  if (warmup_steps < 0) {
    throw std::invalid_argument("schedule.warmup_steps must be non-negative");
  }
  if (!(min_lr >= 0.0) || min_lr > base_lr) {
    throw std::invalid_argument("schedule.min_lr must lie in [0, base_lr]");
  }
  if (kind == ScheduleKind::Wsd &&
      (decay_start < warmup_steps || decay_start > total_steps)) {
    throw std::invalid_argument(
        "schedule.decay_start must lie in [warmup_steps, total_steps]");
  }
  if (warmup_steps > total_steps) {
    throw std::invalid_argument("schedule.warmup_steps exceeds total_steps");
  }
}

double lr_at(const ScheduleSpec& spec, long step) {
  if (step < 0 || step >= spec.total_steps) {
    throw std::invalid_argument("schedule step " + std::to_string(step) +
                                " outside [0, " + std::to_string(spec.total_steps) + ")");
  }
  if (step < spec.warmup_steps) {
    return spec.base_lr * static_cast<double>(step + 1) /
           static_cast<double>(spec.warmup_steps);
  }
  switch (spec.kind) {
    case ScheduleKind::Constant:
      return spec.base_lr;
    case ScheduleKind::Cosine: {
      const double progress = static_cast<double>(step - spec.warmup_steps) /
                              static_cast<double>(spec.total_steps - spec.warmup_steps);
      return spec.min_lr + (spec.base_lr - spec.min_lr) * 0.5 *
                               (1.0 + std::cos(std::numbers::pi * progress));
    }
    case ScheduleKind::Wsd: {
      if (step < spec.decay_start) return spec.base_lr;
      const double progress = static_cast<double>(step - spec.decay_start) /
                              static_cast<double>(spec.total_steps - spec.decay_start);
      return spec.base_lr + (spec.min_lr - spec.base_lr) * progress;
    }
  }
  throw std::logic_error("unreachable schedule kind");
}

}  // namespace muonkit
