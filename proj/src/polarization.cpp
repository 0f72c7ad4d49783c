#include "qfchub/polarization.hpp"

#include <cmath>
#include <numbers>

#include <nlohmann/json.hpp>

#include "qfchub/errors.hpp"

namespace qfchub {

namespace {

constexpr double kStateTolerance = 1e-12;
constexpr double kClipTolerance = 1e-9;
const Complex kI{0.0, 1.0};
const double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

Matrix2c projector(Complex alpha, Complex beta) {
  Eigen::Vector2cd v(alpha, beta);
  v.normalize();
  return v * v.adjoint();
}

}  // namespace

PolarizationState::PolarizationState(const Matrix2c& rho) : rho_(rho) {
  if ((rho_ - rho_.adjoint()).norm() > 1e-9) {
    throw DomainError("density matrix is not Hermitian");
  }
  if (std::abs(rho_.trace() - Complex(1.0)) > 1e-9) {
    throw DomainError("density matrix does not have unit trace");
  }
  const Eigen::SelfAdjointEigenSolver<Matrix2c> es(rho_);
  if (es.eigenvalues().minCoeff() < -kStateTolerance) {
    throw DomainError("density matrix is not positive semidefinite");
  }
}

PolarizationState PolarizationState::pure(Complex alpha, Complex beta) {
  if (std::norm(alpha) + std::norm(beta) == 0.0) {
    throw DomainError("state amplitudes are both zero");
  }
  return PolarizationState(projector(alpha, beta));
}

PolarizationState PolarizationState::from_label(const std::string& label) {
  const double r = kInvSqrt2;
  if (label == "H") return pure(1.0, 0.0);
  if (label == "V") return pure(0.0, 1.0);
  if (label == "D") return pure(r, r);
  if (label == "A") return pure(r, -r);
  if (label == "R") return pure(r, kI * r);
  if (label == "L") return pure(r, -kI * r);
  throw DomainError("unknown polarization label '" + label + "'");
}

std::array<double, 3> PolarizationState::bloch() const {
  const auto& p = pauli_basis();
  return {(rho_ * p[1]).trace().real(), (rho_ * p[2]).trace().real(),
          (rho_ * p[3]).trace().real()};
}

double PolarizationState::overlap(const PolarizationState& other) const {
  return (rho_ * other.rho_).trace().real();
}

void QfcChannelModel::validate() const {
  auto in_unit = [](double v) { return v >= 0.0 && v <= 1.0; };
  if (!in_unit(eta_cw) || !in_unit(eta_ccw)) {
    throw DomainError("conversion efficiencies must lie in [0, 1]");
  }
  if (!in_unit(depolarizing_mix)) throw DomainError("depolarizing mix must lie in [0, 1]");
  if (!std::isfinite(phase_rad)) throw DomainError("phase must be finite");
}

Matrix2c kraus_operator(const QfcChannelModel& model) {
  model.validate();
  Matrix2c k = Matrix2c::Zero();
  k(0, 1) = std::sqrt(model.eta_cw);                                    // |H⟩⟨V|
  k(1, 0) = std::sqrt(model.eta_ccw) * std::exp(kI * model.phase_rad);  // |V⟩⟨H|
  return k;
}

ChannelOutput apply_channel(const PolarizationState& input, const QfcChannelModel& model) {
  const Matrix2c k = kraus_operator(model);
  const Matrix2c out = k * input.density() * k.adjoint();
  const double p = out.trace().real();
  if (p < 1e-15) throw DegenerateError("channel success probability vanishes for this input");
  Matrix2c rho = out / p;
  rho = 0.5 * (rho + rho.adjoint()).eval();
  if (model.depolarizing_mix > 0.0) {
    rho = (1.0 - model.depolarizing_mix) * rho +
          model.depolarizing_mix * 0.5 * Matrix2c::Identity();
  }
  return {PolarizationState(rho), p};
}

const std::array<Matrix2c, 4>& pauli_basis() {
  static const std::array<Matrix2c, 4> basis = [] {
    std::array<Matrix2c, 4> b;
    b[0] << 1, 0, 0, 1;
    b[1] << 0, 1, 1, 0;
    b[2] << 0, -kI, kI, 0;
    b[3] << 1, 0, 0, -1;
    return b;
  }();
  return basis;
}

bool ProcessMatrix::is_hermitian(double tol) const {
  return (chi_ - chi_.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool ProcessMatrix::is_positive(double tol) const {
  const Eigen::SelfAdjointEigenSolver<Matrix4c> es(0.5 * (chi_ + chi_.adjoint()));
  return es.eigenvalues().minCoeff() >= -tol;
}

Matrix2c ProcessMatrix::apply(const Matrix2c& rho) const {
  const auto& p = pauli_basis();
  Matrix2c out = Matrix2c::Zero();
  for (int m = 0; m < 4; ++m) {
    for (int n = 0; n < 4; ++n) {
      if (chi_(m, n) != Complex(0.0)) out += chi_(m, n) * p[m] * rho * p[n];
    }
  }
  return out;
}

ProcessMatrix ideal_process() {
  Matrix4c chi = Matrix4c::Zero();
  chi(1, 1) = 1.0;
  return ProcessMatrix(chi);
}

ProcessMatrix chi_from_kraus(const std::vector<Matrix2c>& kraus) {
  const auto& p = pauli_basis();
  Matrix4c chi = Matrix4c::Zero();
  for (const auto& a : kraus) {
    Eigen::Vector4cd v;
    for (int m = 0; m < 4; ++m) v(m) = 0.5 * (p[m] * a).trace();
    chi += v * v.adjoint();
  }
  return ProcessMatrix(chi);
}

ProcessMatrix kraus_to_chi(const QfcChannelModel& model) {
  model.validate();
  // K = aX + i·bY with a = (√η_cw + √η_ccw e^{iφ})/2, b = (√η_cw − √η_ccw e^{iφ})/2.
  const Complex cw = std::sqrt(model.eta_cw);
  const Complex ccw = std::sqrt(model.eta_ccw) * std::exp(kI * model.phase_rad);
  const Complex a = 0.5 * (cw + ccw);
  const Complex b = 0.5 * (cw - ccw);
  const Eigen::Vector4cd v(0.0, a, kI * b, 0.0);
  Matrix4c chi = v * v.adjoint();

  const double eps = model.depolarizing_mix;
  if (eps > 0.0) {
    // ρ ↦ tr(Mρ)·I/2 with M = K†K = diag(η_ccw, η_cw); Kraus |i⟩⟨j|√M/√2.
    const double s_h = std::sqrt(model.eta_ccw);
    const double s_v = std::sqrt(model.eta_cw);
    std::vector<Matrix2c> noise;
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        Matrix2c op = Matrix2c::Zero();
        op(i, j) = kInvSqrt2 * (j == 0 ? s_h : s_v);
        noise.push_back(op);
      }
    }
    chi = (1.0 - eps) * chi + eps * chi_from_kraus(noise).chi();
  }
  return ProcessMatrix(chi);
}

std::vector<TomographyRecord> simulate_tomography(const QfcChannelModel& model) {
  std::vector<TomographyRecord> out;
  for (const char* label : {"H", "V", "D", "R"}) {
    const auto input = PolarizationState::from_label(label);
    auto result = apply_channel(input, model);
    out.push_back({label, input, result.state, result.success_probability});
  }
  return out;
}

ProcessMatrix reconstruct_chi(const std::vector<TomographyRecord>& records) {
  const auto& p = pauli_basis();
  const auto rows = static_cast<Eigen::Index>(4 * records.size());
  Eigen::MatrixXcd design(rows, 16);
  Eigen::VectorXcd observed(rows);
  for (std::size_t j = 0; j < records.size(); ++j) {
    const Matrix2c& rho = records[j].input.density();
    const Matrix2c out = records[j].success_probability * records[j].output.density();
    for (int m = 0; m < 4; ++m) {
      for (int n = 0; n < 4; ++n) {
        const Matrix2c term = p[m] * rho * p[n];
        for (int e = 0; e < 4; ++e) design(4 * j + e, 4 * m + n) = term(e / 2, e % 2);
      }
    }
    for (int e = 0; e < 4; ++e) observed(4 * j + e) = out(e / 2, e % 2);
  }

  Eigen::FullPivLU<Eigen::MatrixXcd> lu(design);
  lu.setThreshold(1e-10);
  if (records.size() < 4 || lu.rank() < 16) {
    throw SingularityError("tomography inputs are not informationally complete");
  }
  const Eigen::VectorXcd x = design.colPivHouseholderQr().solve(observed);

  Matrix4c chi;
  for (int m = 0; m < 4; ++m) {
    for (int n = 0; n < 4; ++n) chi(m, n) = x(4 * m + n);
  }
  chi = 0.5 * (chi + chi.adjoint()).eval();

  // Rounding can leave eigenvalues slightly below zero; zero those only.
  Eigen::SelfAdjointEigenSolver<Matrix4c> es(chi);
  Eigen::Vector4d lambda = es.eigenvalues();
  bool clipped = false;
  for (int i = 0; i < 4; ++i) {
    if (lambda(i) < 0.0 && lambda(i) >= -kClipTolerance) {
      lambda(i) = 0.0;
      clipped = true;
    }
  }
  if (clipped) {
    chi = es.eigenvectors() * lambda.cast<Complex>().asDiagonal() * es.eigenvectors().adjoint();
  }
  return ProcessMatrix(chi);
}

double process_fidelity(const ProcessMatrix& chi) {
  const double tr = chi.trace();
  if (std::abs(tr) < 1e-15) throw DegenerateError("process matrix has zero trace");
  return chi.chi()(1, 1).real() / tr;
}

double closed_form_fidelity(const QfcChannelModel& model) {
  model.validate();
  const double total = model.eta_cw + model.eta_ccw;
  if (!(total > 0.0)) throw DegenerateError("both conversion efficiencies are zero");
  const Complex sum =
      std::sqrt(model.eta_cw) + std::sqrt(model.eta_ccw) * std::exp(kI * model.phase_rad);
  const double f0 = std::norm(sum) / (2.0 * total);
  return (1.0 - model.depolarizing_mix) * f0 + model.depolarizing_mix / 4.0;
}

nlohmann::json to_json(const ProcessMatrix& chi) {
  nlohmann::json entries = nlohmann::json::array();
  for (int m = 0; m < 4; ++m) {
    for (int n = 0; n < 4; ++n) {
      entries.push_back({chi.chi()(m, n).real(), chi.chi()(m, n).imag()});
    }
  }
  return {{"basis", {"I", "X", "Y", "Z"}},
          {"layout", "row-major, [re, im] per element"},
          {"chi", entries},
          {"trace", chi.trace()}};
}

ProcessMatrix process_matrix_from_json(const nlohmann::json& j) {
  const auto& entries = j.at("chi");
  if (entries.size() != 16) throw DomainError("process matrix JSON needs 16 entries");
  Matrix4c chi;
  for (int k = 0; k < 16; ++k) {
    chi(k / 4, k % 4) = Complex(entries[k].at(0).get<double>(), entries[k].at(1).get<double>());
  }
  return ProcessMatrix(chi);
}

}  // namespace qfchub
