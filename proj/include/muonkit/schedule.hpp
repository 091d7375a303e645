#pragma once

#include <optional>
#include <string>

namespace muonkit {

enum class ScheduleKind { Constant, Cosine, Wsd };

const char* schedule_name(ScheduleKind kind);
std::optional<ScheduleKind> schedule_from_name(const std::string& name);

/// Learning-rate schedule: linear warmup into either a constant plateau, a
/// half-cosine decay, or the warmup-stable-decay shape (plateau followed by a
/// linear ramp down to min_lr over the final stretch).
struct ScheduleSpec {
  ScheduleKind kind = ScheduleKind::Wsd;
  double base_lr = 0.0;
  long warmup_steps = 0;
  long total_steps = 0;
  long decay_start = 0;  ///< Wsd only; must lie in [warmup_steps, total_steps]
  double min_lr = 0.0;

  void validate() const;
};

/// Learning rate at the given 0-based step. Warmup ramps as
/// base_lr * (step + 1) / warmup_steps so the first step is nonzero.
/// Throws when step is outside [0, total_steps).
double lr_at(const ScheduleSpec& spec, long step);

}  // namespace muonkit
