#include "nsghz/kernels.hpp"

#include <array>
#include <atomic>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace nsghz::kernels {

namespace {

std::atomic<ExecMode> g_mode{ExecMode::Auto};
std::atomic<std::size_t> g_grain{4096};

bool inside_parallel_region() {
#ifdef _OPENMP
  return omp_in_parallel() != 0;
#else
  return false;
#endif
}

}  // namespace

ExecMode exec_mode() { return g_mode.load(); }
void set_exec_mode(ExecMode mode) { g_mode.store(mode); }

std::size_t parallel_grain() { return g_grain.load(); }
void set_parallel_grain(std::size_t amplitudes) { g_grain.store(amplitudes); }

bool compiled_with_openmp() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

bool run_parallel(std::size_t total) {
  if (!compiled_with_openmp()) return false;
  if (inside_parallel_region()) return false;  // never nest
  switch (g_mode.load()) {
    case ExecMode::ForceSerial:
      return false;
    case ExecMode::ForceParallel:
      return true;
    case ExecMode::Auto:
    default:
      return total >= g_grain.load();
  }
}

namespace {

// One update group: the d amplitudes at base, base+stride, ..., mixed by op.
template <int MaxD>
inline void update_group_small(Cx* amps, std::size_t base, int d,
                               std::size_t stride, const Cx* op) {
  std::array<Cx, MaxD> in;
  for (int k = 0; k < d; ++k) in[k] = amps[base + k * stride];
  for (int r = 0; r < d; ++r) {
    Cx acc{0.0, 0.0};
    const Cx* row = op + static_cast<std::size_t>(r) * d;
    for (int k = 0; k < d; ++k) acc += row[k] * in[k];
    amps[base + r * stride] = acc;
  }
}

inline void update_group_heap(Cx* amps, std::size_t base, int d,
                              std::size_t stride, const Cx* op,
                              std::vector<Cx>& in) {
  for (int k = 0; k < d; ++k) in[k] = amps[base + k * stride];
  for (int r = 0; r < d; ++r) {
    Cx acc{0.0, 0.0};
    const Cx* row = op + static_cast<std::size_t>(r) * d;
    for (int k = 0; k < d; ++k) acc += row[k] * in[k];
    amps[base + r * stride] = acc;
  }
}

inline std::size_t group_base(std::size_t g, int d, std::size_t stride) {
  return (g / stride) * stride * static_cast<std::size_t>(d) + g % stride;
}

}  // namespace

void apply_single_site(Cx* amps, std::size_t total, int d, std::size_t stride,
                       const Cx* op, bool parallel) {
  if (d < 2) throw std::invalid_argument("apply_single_site: d must be >= 2");
  if (total % static_cast<std::size_t>(d) != 0) {
    throw std::invalid_argument("apply_single_site: total not a multiple of d");
  }
  const std::size_t groups = total / static_cast<std::size_t>(d);
  constexpr int kSmallD = 16;

  if (d <= kSmallD) {
#ifdef _OPENMP
    if (parallel) {
#pragma omp parallel for schedule(static)
      for (long long g = 0; g < static_cast<long long>(groups); ++g) {
        update_group_small<kSmallD>(
            amps, group_base(static_cast<std::size_t>(g), d, stride), d, stride,
            op);
      }
      return;
    }
#endif
    for (std::size_t g = 0; g < groups; ++g) {
      update_group_small<kSmallD>(amps, group_base(g, d, stride), d, stride, op);
    }
    return;
  }

#ifdef _OPENMP
  if (parallel) {
#pragma omp parallel
    {
      std::vector<Cx> in(static_cast<std::size_t>(d));
#pragma omp for schedule(static)
      for (long long g = 0; g < static_cast<long long>(groups); ++g) {
        update_group_heap(amps,
                          group_base(static_cast<std::size_t>(g), d, stride), d,
                          stride, op, in);
      }
    }
    return;
  }
#endif
  std::vector<Cx> in(static_cast<std::size_t>(d));
  for (std::size_t g = 0; g < groups; ++g) {
    update_group_heap(amps, group_base(g, d, stride), d, stride, op, in);
  }
}

void scale(Cx* amps, std::size_t total, Cx factor, bool parallel) {
  map_amplitudes(amps, total, parallel, [factor](std::size_t) { return factor; });
}

double norm_squared(const Cx* amps, std::size_t total, bool parallel) {
#ifdef _OPENMP
  if (parallel) {
    double acc = 0.0;
#pragma omp parallel for schedule(static) reduction(+ : acc)
    for (long long i = 0; i < static_cast<long long>(total); ++i) {
      acc += std::norm(amps[i]);
    }
    return acc;
  }
#endif
  (void)parallel;
  double acc = 0.0;
  for (std::size_t i = 0; i < total; ++i) acc += std::norm(amps[i]);
  return acc;
}

Cx inner_product(const Cx* a, const Cx* b, std::size_t total, bool parallel) {
#ifdef _OPENMP
  if (parallel) {
    double re = 0.0;
    double im = 0.0;
#pragma omp parallel for schedule(static) reduction(+ : re, im)
    for (long long i = 0; i < static_cast<long long>(total); ++i) {
      const Cx t = std::conj(a[i]) * b[i];
      re += t.real();
      im += t.imag();
    }
    return {re, im};
  }
#endif
  (void)parallel;
  Cx acc{0.0, 0.0};
  for (std::size_t i = 0; i < total; ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

namespace ref {

std::vector<Cx> apply_single_site(const std::vector<Cx>& amps, int d, int n,
                                  int site, const std::vector<Cx>& op) {
  if (site < 1 || site > n) throw std::invalid_argument("ref: bad site");
  std::size_t stride = 1;
  for (int s = n; s > site; --s) stride *= static_cast<std::size_t>(d);
  std::vector<Cx> out(amps.size(), Cx{0.0, 0.0});
  for (std::size_t i = 0; i < amps.size(); ++i) {
    const int row = static_cast<int>((i / stride) % static_cast<std::size_t>(d));
    // out[i] = sum_k op[row][k] * amps[i with digit(site) = k]
    const std::size_t base = i - static_cast<std::size_t>(row) * stride;
    Cx acc{0.0, 0.0};
    for (int k = 0; k < d; ++k) {
      acc += op[static_cast<std::size_t>(row) * d + k] *
             amps[base + static_cast<std::size_t>(k) * stride];
    }
    out[i] = acc;
  }
  return out;
}

double norm_squared(const std::vector<Cx>& amps) {
  double acc = 0.0;
  for (const Cx& a : amps) acc += std::norm(a);
  return acc;
}

Cx inner_product(const std::vector<Cx>& a, const std::vector<Cx>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("ref: size mismatch");
  Cx acc{0.0, 0.0};
  for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

}  // namespace ref

}  // namespace nsghz::kernels
