// Single-qudit operators and dense n-qudit state vectors.
//
// Conventions, fixed across the library:
//   - computational basis |0>, ..., |d-1>; site 1 is the MOST significant
//     base-d digit of a flat amplitude index;
//   - omega = exp(2 pi i / d);
//   - X|k> = |k+1 mod d>,  Z|k> = omega^k |k>,  H[j][k] = omega^{k j}/sqrt(d)
//     (so H† Z H = X and H Z H† = X†);
//   - P(phi) = diag(e^{i k phi}), hence P(2 pi / d) = Z;
//   - fractional powers: Z^a = diag(omega^{a k}), X^a = H† Z^a H.

#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "nsghz/kernels.hpp"

namespace nsghz {

inline constexpr double kPi = 3.14159265358979323846264338327950288;

// exp(2 pi i * exponent / d), reduced in long double before sin/cos so large
// accumulated exponents (controlled-phase digit products) stay accurate.
Cx omega_power(int d, double exponent);
Cx omega_power(int d, double weight, long long digit_product);

// Thrown when a requested state would exceed the amplitude cap.
class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Global cap on d^n (default 2^20); the CLI maps NSGHZ_CAP onto this.
std::size_t amplitude_cap();
void set_amplitude_cap(std::size_t cap);

// d^n with overflow and cap checks; throws CapExceeded past the cap.
std::size_t dimension_pow(int d, int n);

// Dense d x d operator, row-major.
class LocalOperator {
 public:
  explicit LocalOperator(int d);  // zero matrix
  static LocalOperator identity(int d);

  int dim() const { return d_; }
  Cx& at(int row, int col) { return m_[static_cast<std::size_t>(row) * d_ + col]; }
  const Cx& at(int row, int col) const {
    return m_[static_cast<std::size_t>(row) * d_ + col];
  }
  const std::vector<Cx>& entries() const { return m_; }
  const Cx* data() const { return m_.data(); }

  LocalOperator operator*(const LocalOperator& rhs) const;
  LocalOperator adjoint() const;
  // Integer power; negative exponents require a unitary operator.
  LocalOperator power(long long exponent) const;

  double max_abs_diff(const LocalOperator& rhs) const;
  double unitarity_defect() const;  // max entry of |A†A - I|
  bool is_unitary(double tol = 1e-12) const { return unitarity_defect() < tol; }

 private:
  int d_;
  std::vector<Cx> m_;
};

// Dense state vector of n qudits of dimension d.
class StateVector {
 public:
  StateVector(int d, int n);  // |0...0>

  int qudit_dim() const { return d_; }
  int sites() const { return n_; }
  std::size_t size() const { return amps_.size(); }

  Cx amp(std::size_t index) const { return amps_[index]; }
  Cx& amp(std::size_t index) { return amps_[index]; }
  const std::vector<Cx>& amplitudes() const { return amps_; }
  Cx* data() { return amps_.data(); }
  const Cx* data() const { return amps_.data(); }

  // Base-d digit of `index` at 1-based `site` (site 1 most significant).
  int digit(std::size_t index, int site) const;
  // Index distance between consecutive digit values at `site`.
  std::size_t stride(int site) const;
  // Digits concatenated, e.g. "010"; dot-separated once d > 10.
  std::string basis_label(std::size_t index) const;

  double norm() const;
  void normalize();

  // Set when a non-unitary local operator forced renormalization.
  bool was_renormalized() const { return renormalized_; }
  void mark_renormalized() { renormalized_ = true; }

 private:
  int d_;
  int n_;
  std::vector<Cx> amps_;
  bool renormalized_ = false;
};

// psi <- (op on `site`) psi.  Non-unitary operators renormalize the result
// and set the renormalized flag.  site is 1-based.
void apply_local_inplace(StateVector& psi, const LocalOperator& op, int site);
StateVector apply_local(StateVector psi, const LocalOperator& op, int site);

Cx inner_product(const StateVector& a, const StateVector& b);
double fidelity(const StateVector& a, const StateVector& b);  // |<a|b>|^2
double max_amp_diff(const StateVector& a, const StateVector& b);

// Gate constructors.
LocalOperator pauli_x(int d);
LocalOperator pauli_z(int d);
LocalOperator hadamard(int d);
LocalOperator phase_gate(int d, double phi);            // diag(e^{i k phi})
LocalOperator rz_gate(double phi);                      // two-level only
LocalOperator pauli_z_power(int d, double alpha);       // diag(omega^{a k})
// Two-level fractional shift power ((1+e^{i pi a})I + (1-e^{i pi a})X)/2,
// equal to H† Z^a H; a=0 gives I, a=1 gives X, eigenvalues {1, e^{i pi a}}.
LocalOperator x_alpha_qubit(double alpha);
// d-level fractional shift power H† Z^a H; cross-checked in the constructor
// against the closed form entry (row,col) = (1/d) sum_k omega^{k(col-row+a)}.
LocalOperator x_alpha_qudit(int d, double alpha);

}  // namespace nsghz
