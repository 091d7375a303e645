#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "muonkit/matrix.hpp"
#include "muonkit/newton_schulz.hpp"

namespace muonkit {

enum class OptimizerKind { AdaMuon, Muon, AdamW, SgdMomentum };
enum class ShapeClass { Matrix2D, Vector1D };

const char* optimizer_name(OptimizerKind kind);
std::optional<OptimizerKind> optimizer_from_name(const std::string& name);

/// Every tunable knob shared by the four optimizers.
struct HyperParams {
  double eta = 0.02;     ///< base learning rate (schedules scale from this)
  double lambda = 0.0;   ///< decoupled weight decay
  double beta = 0.95;    ///< first-moment coefficient (Muon/AdaMuon/SGD)
  double beta2 = 0.999;  ///< second-moment decay (AdaMuon/AdamW)
  double eps = 1e-8;
  int ns_steps = 5;
  NsCoefficients ns_coeffs = NsCoefficients::quintic();
  /// Momentum form: dampened M = b*M + (1-b)*G versus raw M = b*M + G.
  /// Unset picks the per-optimizer default (AdaMuon dampened, Muon raw);
  /// setting it forces that form for either.
  std::optional<bool> momentum_dampening;
  double adam_beta1 = 0.9;  ///< AdamW first-moment coefficient

  void validate() const;
};

/// AdaMuon per-parameter state: first-moment matrix, flattened second-moment
/// vector over the orthogonalized update, and the 1-based step counter.
/// Buffers start at zero.
struct AdaMuonState {
  Matrix m_buf;
  std::vector<double> v_buf;
  long step = 0;

  AdaMuonState(int rows, int cols)
      : m_buf(rows, cols), v_buf(static_cast<std::size_t>(rows) * cols, 0.0) {}
};

/// Momentum-only state, shared by Muon and SGD-momentum.
struct MuonState {
  Matrix m_buf;
  long step = 0;

  MuonState(int rows, int cols) : m_buf(rows, cols) {}
};

struct AdamState {
  Matrix m_buf;
  Matrix v_buf;
  long step = 0;

  AdamState(int rows, int cols) : m_buf(rows, cols), v_buf(rows, cols) {}
};

/// One AdaMuon update: dampened momentum, Newton-Schulz orthogonalization,
/// element-wise second-moment modulation of the flattened direction with
/// bias correction, then RMS-aligned rescaling to a 0.2 target and decoupled
/// decay. Mutates state; returns the new parameter matrix.
///
/// When the momentum buffer is numerically zero (Frobenius norm <= 1e-12)
/// the orthogonalization is undefined, so only the decay term is applied.
///
/// update_dir, when given, receives the pre-decay, pre-learning-rate update
/// direction (zero for guarded steps).
Matrix adamuon_step(const Matrix& w, const Matrix& g, AdaMuonState& state,
                    const HyperParams& hp, double lr, Matrix* update_dir = nullptr);

/// One Muon update: raw momentum by default, Newton-Schulz orthogonalization,
/// then the dimension-aware 0.2*sqrt(max(n,m)) rescale and decoupled decay.
Matrix muon_step(const Matrix& w, const Matrix& g, MuonState& state,
                 const HyperParams& hp, double lr, Matrix* update_dir = nullptr);

/// Standard AdamW with decoupled weight decay.
Matrix adamw_step(const Matrix& w, const Matrix& g, AdamState& state,
                  const HyperParams& hp, double lr, Matrix* update_dir = nullptr);

/// SGD with (raw) momentum and decoupled weight decay.
Matrix sgdm_step(const Matrix& w, const Matrix& g, MuonState& state,
                 const HyperParams& hp, double lr, Matrix* update_dir = nullptr);

struct NamedShape {
  std::string name;
  int rows = 0;
  int cols = 0;
};

struct ParamGroup {
  std::string name;
  ShapeClass shape_class = ShapeClass::Matrix2D;
  OptimizerKind optimizer = OptimizerKind::AdamW;
};

/// Hybrid grouping rule: true 2-D parameters go to the configured matrix
/// optimizer, 1-D parameters (min(rows, cols) == 1) fall back to AdamW when
/// the matrix optimizer is orthogonalization-based. Explicit per-name
/// overrides win, but Muon/AdaMuon stay restricted to 2-D shapes. Throws on
/// duplicate names.
std::vector<ParamGroup> assign_param_groups(
    const std::vector<NamedShape>& params, OptimizerKind matrix_optimizer,
    const std::map<std::string, OptimizerKind>& overrides = {});

}  // namespace muonkit
