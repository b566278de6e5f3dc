// Amplitude-array kernels shared by all state operations.
//
// Every mutating kernel has an OpenMP-parallel path and a serial path; the
// serial path is also what runs when the caller is already inside a parallel
// region (nested parallelism is never spawned).  kernels::ref holds naive
// per-amplitude implementations kept solely as oracles for tests and the
// benchmark target.

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace nsghz {

using Cx = std::complex<double>;

namespace kernels {

enum class ExecMode {
  Auto,           // parallel iff OpenMP is compiled in, the array is large
                  // enough, and we are not already inside a parallel region
  ForceSerial,
  ForceParallel,
};

ExecMode exec_mode();
void set_exec_mode(ExecMode mode);

// Minimum amplitude count before Auto mode goes parallel.
std::size_t parallel_grain();
void set_parallel_grain(std::size_t amplitudes);

bool compiled_with_openmp();

// Resolves the current policy for an array of `total` amplitudes.
bool run_parallel(std::size_t total);

// In-place psi <- (op on one site) psi for a d-level site.  `stride` is the
// index distance between consecutive values of the target digit, i.e.
// d^(number of sites to the right of the target).  `op` is d*d row-major.
void apply_single_site(Cx* amps, std::size_t total, int d, std::size_t stride,
                       const Cx* op, bool parallel);

// amps[i] *= fn(i).  Template so the phase functor inlines; both paths apply
// exactly one multiplication per element, so serial and parallel results are
// bitwise identical.
template <class Fn>
void map_amplitudes(Cx* amps, std::size_t total, bool parallel, Fn&& fn) {
#ifdef _OPENMP
  if (parallel) {
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(total); ++i) {
      amps[i] *= fn(static_cast<std::size_t>(i));
    }
    return;
  }
#endif
  (void)parallel;
  for (std::size_t i = 0; i < total; ++i) amps[i] *= fn(i);
}

void scale(Cx* amps, std::size_t total, Cx factor, bool parallel);

// Reductions.  Parallel summation order differs from serial, so these agree
// with ref:: only to rounding, not bitwise.
double norm_squared(const Cx* amps, std::size_t total, bool parallel);
Cx inner_product(const Cx* a, const Cx* b, std::size_t total, bool parallel);

namespace ref {

// Naive reference: builds the output one amplitude at a time straight from
// the definition sum_j op[row,j] psi(..., j, ...).
std::vector<Cx> apply_single_site(const std::vector<Cx>& amps, int d, int n,
                                  int site, const std::vector<Cx>& op);
double norm_squared(const std::vector<Cx>& amps);
Cx inner_product(const std::vector<Cx>& a, const std::vector<Cx>& b);

}  // namespace ref

}  // namespace kernels
}  // namespace nsghz
