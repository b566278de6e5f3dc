#include "nsghz/qudit_core.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <limits>

namespace nsghz {

namespace {

constexpr long double kPiL = 3.14159265358979323846264338327950288L;

std::atomic<std::size_t> g_amplitude_cap{std::size_t{1} << 20};

Cx unit_phase_from_turns(long double turns) {
  // Reduce in long double so sin/cos see a small argument.
  turns -= std::floor(turns);
  const long double angle = 2.0L * kPiL * turns;
  return {static_cast<double>(std::cos(angle)),
          static_cast<double>(std::sin(angle))};
}

}  // namespace

Cx omega_power(int d, double exponent) {
  return unit_phase_from_turns(static_cast<long double>(exponent) / d);
}

Cx omega_power(int d, double weight, long long digit_product) {
  return unit_phase_from_turns(static_cast<long double>(weight) *
                               static_cast<long double>(digit_product) / d);
}

std::size_t amplitude_cap() { return g_amplitude_cap.load(); }
void set_amplitude_cap(std::size_t cap) { g_amplitude_cap.store(cap); }

std::size_t dimension_pow(int d, int n) {
  if (d < 2) throw std::invalid_argument("qudit dimension must be >= 2");
  if (n < 1) throw std::invalid_argument("site count must be >= 1");
  const std::size_t cap = amplitude_cap();
  std::size_t total = 1;
  for (int i = 0; i < n; ++i) {
    if (total > cap / static_cast<std::size_t>(d)) {
      throw CapExceeded("state of " + std::to_string(n) + " qudits of dimension " +
                        std::to_string(d) + " exceeds the amplitude cap of " +
                        std::to_string(cap));
    }
    total *= static_cast<std::size_t>(d);
  }
  if (total > cap) {
    throw CapExceeded("state exceeds the amplitude cap of " + std::to_string(cap));
  }
  return total;
}

LocalOperator::LocalOperator(int d) : d_(d) {
  if (d < 2) throw std::invalid_argument("operator dimension must be >= 2");
  m_.assign(static_cast<std::size_t>(d) * d, Cx{0.0, 0.0});
}

LocalOperator LocalOperator::identity(int d) {
  LocalOperator id(d);
  for (int k = 0; k < d; ++k) id.at(k, k) = Cx{1.0, 0.0};
  return id;
}

LocalOperator LocalOperator::operator*(const LocalOperator& rhs) const {
  if (d_ != rhs.d_) throw std::invalid_argument("operator dimension mismatch");
  LocalOperator out(d_);
  for (int r = 0; r < d_; ++r) {
    for (int k = 0; k < d_; ++k) {
      const Cx v = at(r, k);
      if (v == Cx{0.0, 0.0}) continue;
      for (int c = 0; c < d_; ++c) out.at(r, c) += v * rhs.at(k, c);
    }
  }
  return out;
}

LocalOperator LocalOperator::adjoint() const {
  LocalOperator out(d_);
  for (int r = 0; r < d_; ++r) {
    for (int c = 0; c < d_; ++c) out.at(r, c) = std::conj(at(c, r));
  }
  return out;
}

LocalOperator LocalOperator::power(long long exponent) const {
  if (exponent < 0) {
    if (!is_unitary(1e-10)) {
      throw std::domain_error("negative power of a non-unitary operator");
    }
    return adjoint().power(-exponent);
  }
  LocalOperator result = identity(d_);
  LocalOperator base = *this;
  long long e = exponent;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

double LocalOperator::max_abs_diff(const LocalOperator& rhs) const {
  if (d_ != rhs.d_) throw std::invalid_argument("operator dimension mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < m_.size(); ++i) {
    m = std::max(m, std::abs(m_[i] - rhs.m_[i]));
  }
  return m;
}

double LocalOperator::unitarity_defect() const {
  double m = 0.0;
  for (int r = 0; r < d_; ++r) {
    for (int c = 0; c < d_; ++c) {
      Cx acc{0.0, 0.0};
      for (int k = 0; k < d_; ++k) acc += std::conj(at(k, r)) * at(k, c);
      if (r == c) acc -= Cx{1.0, 0.0};
      m = std::max(m, std::abs(acc));
    }
  }
  return m;
}

StateVector::StateVector(int d, int n) : d_(d), n_(n) {
  amps_.assign(dimension_pow(d, n), Cx{0.0, 0.0});
  amps_[0] = Cx{1.0, 0.0};
}

int StateVector::digit(std::size_t index, int site) const {
  return static_cast<int>((index / stride(site)) % static_cast<std::size_t>(d_));
}

std::size_t StateVector::stride(int site) const {
  if (site < 1 || site > n_) throw std::invalid_argument("site out of range");
  std::size_t s = 1;
  for (int k = n_; k > site; --k) s *= static_cast<std::size_t>(d_);
  return s;
}

std::string StateVector::basis_label(std::size_t index) const {
  std::string label;
  for (int site = 1; site <= n_; ++site) {
    const int dig = digit(index, site);
    if (d_ <= 10) {
      label.push_back(static_cast<char>('0' + dig));
    } else {
      if (site > 1) label.push_back('.');
      label += std::to_string(dig);
    }
  }
  return label;
}

double StateVector::norm() const {
  return std::sqrt(
      kernels::norm_squared(amps_.data(), amps_.size(), kernels::run_parallel(amps_.size())));
}

void StateVector::normalize() {
  const double nrm = norm();
  if (nrm < std::numeric_limits<double>::min() * 1e6) {
    throw std::domain_error("cannot normalize a (near-)zero state");
  }
  kernels::scale(amps_.data(), amps_.size(), Cx{1.0 / nrm, 0.0},
                 kernels::run_parallel(amps_.size()));
}

void apply_local_inplace(StateVector& psi, const LocalOperator& op, int site) {
  if (op.dim() != psi.qudit_dim()) {
    throw std::invalid_argument("operator dimension does not match qudit dimension");
  }
  if (site < 1 || site > psi.sites()) {
    throw std::invalid_argument("site out of range");
  }
  kernels::apply_single_site(psi.data(), psi.size(), psi.qudit_dim(),
                             psi.stride(site), op.data(),
                             kernels::run_parallel(psi.size()));
  if (!op.is_unitary(1e-12)) {
    psi.normalize();
    psi.mark_renormalized();
  }
}

StateVector apply_local(StateVector psi, const LocalOperator& op, int site) {
  apply_local_inplace(psi, op, site);
  return psi;
}

Cx inner_product(const StateVector& a, const StateVector& b) {
  if (a.qudit_dim() != b.qudit_dim() || a.sites() != b.sites()) {
    throw std::invalid_argument("state shape mismatch");
  }
  return kernels::inner_product(a.data(), b.data(), a.size(),
                                kernels::run_parallel(a.size()));
}

double fidelity(const StateVector& a, const StateVector& b) {
  return std::norm(inner_product(a, b));
}

double max_amp_diff(const StateVector& a, const StateVector& b) {
  if (a.qudit_dim() != b.qudit_dim() || a.sites() != b.sites()) {
    throw std::invalid_argument("state shape mismatch");
  }
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    m = std::max(m, std::abs(a.amp(i) - b.amp(i)));
  }
  return m;
}

LocalOperator pauli_x(int d) {
  LocalOperator x(d);
  for (int k = 0; k < d; ++k) x.at((k + 1) % d, k) = Cx{1.0, 0.0};
  return x;
}

LocalOperator pauli_z(int d) {
  LocalOperator z(d);
  for (int k = 0; k < d; ++k) z.at(k, k) = omega_power(d, k);
  return z;
}

LocalOperator hadamard(int d) {
  LocalOperator h(d);
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  for (int j = 0; j < d; ++j) {
    for (int k = 0; k < d; ++k) {
      h.at(j, k) = scale * omega_power(d, static_cast<double>(k) * j);
    }
  }
  return h;
}

LocalOperator phase_gate(int d, double phi) {
  LocalOperator p(d);
  for (int k = 0; k < d; ++k) {
    p.at(k, k) = std::polar(1.0, static_cast<double>(k) * phi);
  }
  return p;
}

LocalOperator rz_gate(double phi) {
  LocalOperator r(2);
  r.at(0, 0) = std::polar(1.0, -phi / 2.0);
  r.at(1, 1) = std::polar(1.0, phi / 2.0);
  return r;
}

LocalOperator pauli_z_power(int d, double alpha) {
  LocalOperator z(d);
  for (int k = 0; k < d; ++k) z.at(k, k) = omega_power(d, alpha * k);
  return z;
}

LocalOperator x_alpha_qubit(double alpha) {
  const Cx e = std::polar(1.0, kPi * alpha);
  LocalOperator x(2);
  x.at(0, 0) = 0.5 * (1.0 + e);
  x.at(0, 1) = 0.5 * (1.0 - e);
  x.at(1, 0) = 0.5 * (1.0 - e);
  x.at(1, 1) = 0.5 * (1.0 + e);
  return x;
}

LocalOperator x_alpha_qudit(int d, double alpha) {
  const LocalOperator h = hadamard(d);
  LocalOperator x = h.adjoint() * pauli_z_power(d, alpha) * h;
  // Closed form (row,col) = (1/d) sum_k omega^{k (col - row + alpha)}; keep
  // both routes honest against each other.
  LocalOperator closed(d);
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < d; ++c) {
      Cx acc{0.0, 0.0};
      for (int k = 0; k < d; ++k) {
        acc += omega_power(d, k * (static_cast<double>(c) - r + alpha));
      }
      closed.at(r, c) = acc / static_cast<double>(d);
    }
  }
  if (x.max_abs_diff(closed) > 1e-12) {
    throw std::logic_error("x_alpha_qudit: closed form disagrees with H† Z^a H");
  }
  return x;
}

}  // namespace nsghz
