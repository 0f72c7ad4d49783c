#pragma once

#include <array>
#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json_fwd.hpp>

namespace qfchub {

using Complex = std::complex<double>;
using Matrix2c = Eigen::Matrix2cd;
using Matrix4c = Eigen::Matrix4cd;

/// Polarization qubit as a 2×2 density matrix over {|H⟩, |V⟩}.
class PolarizationState {
 public:
  /// Validates Hermiticity, unit trace and positivity (eigenvalues ≥ −1e-12).
  explicit PolarizationState(const Matrix2c& rho);

  /// α|H⟩ + β|V⟩, normalized.
  static PolarizationState pure(Complex alpha, Complex beta);
  /// H, V, D, A, R or L.
  static PolarizationState from_label(const std::string& label);

  const Matrix2c& density() const { return rho_; }
  /// (⟨X⟩, ⟨Y⟩, ⟨Z⟩) with Z = |H⟩⟨H| − |V⟩⟨V|.
  std::array<double, 3> bloch() const;
  /// tr(ρσ) for pure σ given by amplitudes.
  double overlap(const PolarizationState& other) const;

 private:
  Matrix2c rho_;
};

/// Sagnac-type polarization-insensitive converter. `phase_rad` is the
/// composite optical-circuit plus pump phase.
struct QfcChannelModel {
  double eta_cw = 1.0;
  double eta_ccw = 1.0;
  double phase_rad = 0.0;
  /// Fraction of output replaced by white noise; 0 by default.
  double depolarizing_mix = 0.0;

  void validate() const;
};

/// K = √η_cw |H⟩⟨V| + √η_ccw e^{iφ} |V⟩⟨H|.
Matrix2c kraus_operator(const QfcChannelModel& model);

struct ChannelOutput {
  PolarizationState state;
  double success_probability = 0.0;
};

/// Throws DegenerateError when the success probability is below 1e-15.
ChannelOutput apply_channel(const PolarizationState& input, const QfcChannelModel& model);

/// χ in the Pauli basis (I, X, Y, Z): E(ρ) = Σ χ_mn σ_m ρ σ_n.
class ProcessMatrix {
 public:
  ProcessMatrix() : chi_(Matrix4c::Zero()) {}
  explicit ProcessMatrix(const Matrix4c& chi) : chi_(chi) {}

  const Matrix4c& chi() const { return chi_; }
  double trace() const { return chi_.trace().real(); }
  bool is_hermitian(double tol = 1e-9) const;
  bool is_positive(double tol = 1e-9) const;

  /// Unnormalized output Σ χ_mn σ_m ρ σ_n.
  Matrix2c apply(const Matrix2c& rho) const;

 private:
  Matrix4c chi_;
};

/// σ_0..σ_3 = I, X, Y, Z.
const std::array<Matrix2c, 4>& pauli_basis();

ProcessMatrix ideal_process();

/// χ of a set of Kraus operators by Pauli decomposition.
ProcessMatrix chi_from_kraus(const std::vector<Matrix2c>& kraus);

/// Closed-form χ of the channel, including the depolarizing admixture
/// E(ρ) = (1 − ε)KρK† + ε·tr(KρK†)·I/2.
ProcessMatrix kraus_to_chi(const QfcChannelModel& model);

struct TomographyRecord {
  std::string label;
  PolarizationState input;
  PolarizationState output;
  double success_probability = 0.0;
};

/// Outputs for the inputs H, V, D, R, in that order.
std::vector<TomographyRecord> simulate_tomography(const QfcChannelModel& model);

/// Linear-inversion χ from input/output pairs. Throws SingularityError when
/// the inputs do not determine the channel.
ProcessMatrix reconstruct_chi(const std::vector<TomographyRecord>& records);

/// χ_XX / tr χ. Throws DegenerateError on zero trace.
double process_fidelity(const ProcessMatrix& chi);

/// |√η_cw + √η_ccw e^{iφ}|² / (2(η_cw + η_ccw)) scaled by the depolarizing mix.
double closed_form_fidelity(const QfcChannelModel& model);

nlohmann::json to_json(const ProcessMatrix& chi);
ProcessMatrix process_matrix_from_json(const nlohmann::json& j);

}  // namespace qfchub
