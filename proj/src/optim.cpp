#include "muonkit/optim.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

namespace muonkit {

namespace {

// Momentum below this is treated as zero; Newton-Schulz is undefined at 0,
// so the step degrades to decay only.
constexpr double kZeroGuard = 1e-12;

// x^n by repeated squaring for integer n >= 1. Returns x itself at n == 1,
// which keeps the first bias-correction denominator exactly 1 - beta2.
double pow_int(double x, long n) {
  double result = 1.0;
  double base = x;
  while (n > 0) {
    if (n & 1) result *= base;
    base *= base;
    n >>= 1;
  }
  return result;
}

void check_step_args(const Matrix& w, const Matrix& g, const Matrix& m_buf, double lr) {
  if (!w.same_shape(g)) {
    throw std::invalid_argument("optimizer step shape mismatch: parameter " + w.shape_str() +
                                " vs gradient " + g.shape_str());
  }
  if (!w.same_shape(m_buf)) {
    throw std::invalid_argument("optimizer state shape " + m_buf.shape_str() +
                                " does not match parameter " + w.shape_str());
  }
  if (lr < 0.0) {
    throw std::invalid_argument("learning rate must be non-negative");
  }
  require_finite(g, "gradient");
}

Matrix decay_only(const Matrix& w, const HyperParams& hp, double lr) {
  Matrix out = w;
  for (double& x : out.data()) x -= lr * hp.lambda * x;
  return out;
}

}  // namespace

const char* optimizer_name(OptimizerKind kind) {
  switch (kind) {
    case OptimizerKind::AdaMuon: return "adamuon";
    case OptimizerKind::Muon: return "muon";
    case OptimizerKind::AdamW: return "adamw";
    case OptimizerKind::SgdMomentum: return "sgdm";
  }
  return "?";
}

std::optional<OptimizerKind> optimizer_from_name(const std::string& name) {
  if (name == "adamuon") return OptimizerKind::AdaMuon;
  if (name == "muon") return OptimizerKind::Muon;
  if (name == "adamw") return OptimizerKind::AdamW;
  if (name == "sgdm") return OptimizerKind::SgdMomentum;
  return std::nullopt;
}

void HyperParams::validate() const {
  if (!(eta > 0.0) || !std::isfinite(eta)) {
    throw std::invalid_argument("hyper.eta must be positive and finite");
  }
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw std::invalid_argument("hyper.lambda must be non-negative and finite");
  }
  if (!(beta >= 0.0 && beta < 1.0)) {
    throw std::invalid_argument("hyper.beta must lie in [0, 1)");
  }
  if (!(beta2 >= 0.0 && beta2 < 1.0)) {
    throw std::invalid_argument("hyper.beta2 must lie in [0, 1)");
  }
  if (!(adam_beta1 >= 0.0 && adam_beta1 < 1.0)) {
    throw std::invalid_argument("hyper.adam_beta1 must lie in [0, 1)");
  }
  if (!(eps > 0.0) || !std::isfinite(eps)) {
    throw std::invalid_argument("hyper.eps must be positive and finite");
  }
  if (ns_steps <= 0) {
    throw std::invalid_argument("hyper.ns_steps must be positive");
  }
  ns_coeffs.validate();
}

Matrix adamuon_step(const Matrix& w, const Matrix& g, AdaMuonState& state,
                    const HyperParams& hp, double lr, Matrix* update_dir) {
  check_step_args(w, g, state.m_buf, lr);
  if (state.v_buf.size() != w.size()) {
    throw std::invalid_argument("AdaMuon second-moment buffer length does not match parameter");
  }

  const bool dampen = hp.momentum_dampening.value_or(true);
  const double grad_weight = dampen ? 1.0 - hp.beta : 1.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    state.m_buf.data()[i] = hp.beta * state.m_buf.data()[i] + grad_weight * g.data()[i];
  }
  state.step += 1;

  if (frobenius_norm(state.m_buf) <= kZeroGuard) {
    if (update_dir) *update_dir = Matrix(w.rows(), w.cols());
    return decay_only(w, hp, lr);
  }

  const Matrix ortho = newton_schulz(state.m_buf, hp.ns_steps, hp.ns_coeffs);

  // Bias-corrected second moment of the flattened direction, computed as
  // (b2/bc)*v + ((1-b2)/bc)*o^2. The second weight is exactly 1 when
  // step == 1, so the first corrected moment equals o^2 bit-for-bit.
  const double bc = 1.0 - pow_int(hp.beta2, state.step);
  const double w_prev = hp.beta2 / bc;
  const double w_curr = (1.0 - hp.beta2) / bc;

  Matrix adapted(w.rows(), w.cols());
  for (std::size_t i = 0; i < w.size(); ++i) {
    const double o = ortho.data()[i];
    const double o2 = o * o;
    const double vhat = w_prev * state.v_buf[i] + w_curr * o2;
    state.v_buf[i] = hp.beta2 * state.v_buf[i] + (1.0 - hp.beta2) * o2;
    adapted.data()[i] = o / (std::sqrt(vhat) + hp.eps);
  }

  const double scale = 0.2 / (rms(adapted) + hp.eps);
  if (update_dir) {
    *update_dir = adapted;
    for (double& x : update_dir->data()) x *= scale;
  }

  Matrix out = w;
  for (std::size_t i = 0; i < w.size(); ++i) {
    out.data()[i] = w.data()[i] - lr * (scale * adapted.data()[i] + hp.lambda * w.data()[i]);
  }
  return out;
}

Matrix muon_step(const Matrix& w, const Matrix& g, MuonState& state,
                 const HyperParams& hp, double lr, Matrix* update_dir) {
  check_step_args(w, g, state.m_buf, lr);

  const bool dampen = hp.momentum_dampening.value_or(false);
  const double grad_weight = dampen ? 1.0 - hp.beta : 1.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    state.m_buf.data()[i] = hp.beta * state.m_buf.data()[i] + grad_weight * g.data()[i];
  }
  state.step += 1;

  if (frobenius_norm(state.m_buf) <= kZeroGuard) {
    if (update_dir) *update_dir = Matrix(w.rows(), w.cols());
    return decay_only(w, hp, lr);
  }

  const Matrix ortho = newton_schulz(state.m_buf, hp.ns_steps, hp.ns_coeffs);
  const double gamma = 0.2 * std::sqrt(static_cast<double>(std::max(w.rows(), w.cols())));
  if (update_dir) {
    *update_dir = ortho;
    for (double& x : update_dir->data()) x *= gamma;
  }

  Matrix out = w;
  for (std::size_t i = 0; i < w.size(); ++i) {
    out.data()[i] = w.data()[i] - lr * (gamma * ortho.data()[i] + hp.lambda * w.data()[i]);
  }
  return out;
}

Matrix adamw_step(const Matrix& w, const Matrix& g, AdamState& state,
                  const HyperParams& hp, double lr, Matrix* update_dir) {
  check_step_args(w, g, state.m_buf, lr);
  state.step += 1;
  if (update_dir) *update_dir = Matrix(w.rows(), w.cols());

  const double bc1 = 1.0 - pow_int(hp.adam_beta1, state.step);
  const double bc2 = 1.0 - pow_int(hp.beta2, state.step);

  Matrix out = w;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const double gi = g.data()[i];
    double& m = state.m_buf.data()[i];
    double& v = state.v_buf.data()[i];
    m = hp.adam_beta1 * m + (1.0 - hp.adam_beta1) * gi;
    v = hp.beta2 * v + (1.0 - hp.beta2) * gi * gi;
    const double dir = (m / bc1) / (std::sqrt(v / bc2) + hp.eps);
    if (update_dir) update_dir->data()[i] = dir;
    out.data()[i] = w.data()[i] - lr * (dir + hp.lambda * w.data()[i]);
  }
  return out;
}

Matrix sgdm_step(const Matrix& w, const Matrix& g, MuonState& state,
                 const HyperParams& hp, double lr, Matrix* update_dir) {
  check_step_args(w, g, state.m_buf, lr);
  state.step += 1;
  if (update_dir) *update_dir = Matrix(w.rows(), w.cols());

  Matrix out = w;
  for (std::size_t i = 0; i < w.size(); ++i) {
    double& v = state.m_buf.data()[i];
    v = hp.beta * v + g.data()[i];
    if (update_dir) update_dir->data()[i] = v;
    out.data()[i] = w.data()[i] - lr * (v + hp.lambda * w.data()[i]);
  }
  return out;
}

std::vector<ParamGroup> assign_param_groups(
    const std::vector<NamedShape>& params, OptimizerKind matrix_optimizer,
    const std::map<std::string, OptimizerKind>& overrides) {
  std::set<std::string> seen;
  std::vector<ParamGroup> groups;
  groups.reserve(params.size());
  for (const NamedShape& p : params) {
    if (!seen.insert(p.name).second) {
      throw std::invalid_argument("duplicate parameter name: " + p.name);
    }
    const ShapeClass shape =
        std::min(p.rows, p.cols) == 1 ? ShapeClass::Vector1D : ShapeClass::Matrix2D;

    OptimizerKind opt = matrix_optimizer;
    if (auto it = overrides.find(p.name); it != overrides.end()) {
      opt = it->second;
    } else if (shape == ShapeClass::Vector1D &&
               (opt == OptimizerKind::AdaMuon || opt == OptimizerKind::Muon)) {
      opt = OptimizerKind::AdamW;
    }
    if (shape == ShapeClass::Vector1D &&
        (opt == OptimizerKind::AdaMuon || opt == OptimizerKind::Muon)) {
      throw std::invalid_argument("parameter '" + p.name +
                                  "' is one-dimensional and cannot use " +
                                  optimizer_name(opt));
    }
    groups.push_back(ParamGroup{p.name, shape, opt});
  }
  return groups;
}

}  // namespace muonkit
