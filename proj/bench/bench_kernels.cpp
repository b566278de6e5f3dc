// Compares the naive reference implementations against the serial and
// OpenMP-parallel kernels, and verifies that both optimized paths agree with
// the reference (elementwise kernels bitwise, reductions to rounding).

#include <chrono>
#include <cstdio>
#include <cstring>
#include <random>
#include <vector>

#include <CLI11.hpp>

#include "nsghz/kernels.hpp"
#include "nsghz/qudit_core.hpp"
#include "nsghz/state_builder.hpp"

namespace {

using namespace nsghz;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<Cx> random_state(std::size_t total, unsigned long long seed) {
  std::mt19937_64 gen(seed);
  std::vector<Cx> amps(total);
  for (Cx& a : amps) {
    const double re =
        2.0 * (static_cast<double>(gen() >> 11) * (1.0 / 9007199254740992.0)) - 1.0;
    const double im =
        2.0 * (static_cast<double>(gen() >> 11) * (1.0 / 9007199254740992.0)) - 1.0;
    a = {re, im};
  }
  return amps;
}

template <class Fn>
double best_of(int reps, Fn&& fn) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto start = Clock::now();
    fn();
    best = std::min(best, seconds_since(start));
  }
  return best;
}

void print_row(const char* name, double ref_s, double serial_s, double parallel_s,
               std::size_t total) {
  const double scale = 1e9 / static_cast<double>(total);
  std::printf("%-22s", name);
  if (ref_s > 0) {
    std::printf("  %10.2f", ref_s * scale);
  } else {
    std::printf("  %10s", "-");
  }
  std::printf("  %10.2f", serial_s * scale);
  if (parallel_s > 0) {
    std::printf("  %10.2f  %7.2fx", parallel_s * scale, serial_s / parallel_s);
  } else {
    std::printf("  %10s  %8s", "-", "-");
  }
  std::printf("\n");
}

bool bitwise_equal(const std::vector<Cx>& a, const std::vector<Cx>& b) {
  return a.size() == b.size() &&
         std::memcmp(a.data(), b.data(), a.size() * sizeof(Cx)) == 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"kernel benchmark: reference vs serial vs OpenMP"};
  int n = 20;
  int d = 2;
  int reps = 5;
  bool quick = false;
  app.add_option("--n", n, "number of sites");
  app.add_option("--d", d, "qudit dimension");
  app.add_option("--reps", reps, "repetitions (best time wins)");
  app.add_flag("--quick", quick, "small state, few reps (for ctest)");
  CLI11_PARSE(app, argc, argv);
  if (quick) {
    n = 14;
    reps = 2;
  }

  set_amplitude_cap(std::size_t{1} << 26);
  const std::size_t total = dimension_pow(d, n);
  const int mid_site = (n + 1) / 2;
  std::printf("kernel benchmark: d=%d n=%d amplitudes=%zu openmp=%s\n", d, n,
              total, kernels::compiled_with_openmp() ? "on" : "off");
  std::printf("%-22s  %10s  %10s  %10s  %8s\n", "kernel (ns/amplitude)", "ref",
              "serial", "parallel", "speedup");

  const bool have_parallel = kernels::compiled_with_openmp();
  const std::vector<Cx> base = random_state(total, 42);
  const LocalOperator h = hadamard(d);
  bool ok = true;

  StateVector proto(d, n);
  const std::size_t mid_stride = proto.stride(mid_site);

  // Single-site update.
  {
    std::vector<Cx> ref_out;
    const double t_ref = best_of(reps, [&] {
      ref_out = kernels::ref::apply_single_site(base, d, n, mid_site, h.entries());
    });
    std::vector<Cx> serial_out;
    const double t_serial = best_of(reps, [&] {
      serial_out = base;
      kernels::apply_single_site(serial_out.data(), total, d, mid_stride,
                                 h.data(), false);
    });
    double t_par = 0.0;
    std::vector<Cx> par_out;
    if (have_parallel) {
      t_par = best_of(reps, [&] {
        par_out = base;
        kernels::apply_single_site(par_out.data(), total, d, mid_stride,
                                   h.data(), true);
      });
      ok = ok && bitwise_equal(serial_out, par_out);
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < total; ++i) {
      worst = std::max(worst, std::abs(ref_out[i] - serial_out[i]));
    }
    ok = ok && worst < 1e-12;
    print_row("single-site update", t_ref, t_serial, t_par, total);
  }

  // Diagonal controlled-phase (3-vertex edge through the state builder).
  {
    const std::vector<int> edge = n >= 3 ? std::vector<int>{1, mid_site, n}
                                         : std::vector<int>{1, n};
    StateVector serial_state(d, n);
    const double t_serial = best_of(reps, [&] {
      std::copy(base.begin(), base.end(), serial_state.data());
      kernels::set_exec_mode(kernels::ExecMode::ForceSerial);
      apply_cz_power_inplace(serial_state, edge, 0.7);
    });
    double t_par = 0.0;
    if (have_parallel) {
      StateVector par_state(d, n);
      t_par = best_of(reps, [&] {
        std::copy(base.begin(), base.end(), par_state.data());
        kernels::set_exec_mode(kernels::ExecMode::ForceParallel);
        apply_cz_power_inplace(par_state, edge, 0.7);
      });
      ok = ok && bitwise_equal(
                     std::vector<Cx>(serial_state.data(),
                                     serial_state.data() + total),
                     std::vector<Cx>(par_state.data(), par_state.data() + total));
    }
    kernels::set_exec_mode(kernels::ExecMode::Auto);
    print_row("edge phase (3 sites)", 0.0, t_serial, t_par, total);
  }

  // Controlled shift from site 1 to the middle site.
  {
    const ControlledGateSpec gate{{1}, mid_site == 1 ? n : mid_site, pauli_x(d)};
    StateVector serial_state(d, n);
    const double t_serial = best_of(reps, [&] {
      std::copy(base.begin(), base.end(), serial_state.data());
      kernels::set_exec_mode(kernels::ExecMode::ForceSerial);
      apply_controlled_u_inplace(serial_state, gate);
    });
    double t_par = 0.0;
    if (have_parallel) {
      StateVector par_state(d, n);
      t_par = best_of(reps, [&] {
        std::copy(base.begin(), base.end(), par_state.data());
        kernels::set_exec_mode(kernels::ExecMode::ForceParallel);
        apply_controlled_u_inplace(par_state, gate);
      });
      ok = ok && bitwise_equal(
                     std::vector<Cx>(serial_state.data(),
                                     serial_state.data() + total),
                     std::vector<Cx>(par_state.data(), par_state.data() + total));
    }
    kernels::set_exec_mode(kernels::ExecMode::Auto);
    print_row("controlled shift", 0.0, t_serial, t_par, total);
  }

  // Norm reduction.
  {
    double ref_val = 0.0;
    const double t_ref =
        best_of(reps, [&] { ref_val = kernels::ref::norm_squared(base); });
    double serial_val = 0.0;
    const double t_serial = best_of(
        reps, [&] { serial_val = kernels::norm_squared(base.data(), total, false); });
    double t_par = 0.0;
    if (have_parallel) {
      double par_val = 0.0;
      t_par = best_of(reps, [&] {
        par_val = kernels::norm_squared(base.data(), total, true);
      });
      ok = ok && std::abs(par_val - ref_val) <= 1e-9 * std::abs(ref_val);
    }
    ok = ok && std::abs(serial_val - ref_val) <= 1e-9 * std::abs(ref_val);
    print_row("norm reduction", t_ref, t_serial, t_par, total);
  }

  std::printf("cross-check: %s\n", ok ? "pass" : "FAIL");
  return ok ? 0 : 1;
}
