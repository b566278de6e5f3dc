// Strided single-site kernels against the naive reference, plus the
// serial/parallel equivalence guarantees the library leans on everywhere.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <cstring>
#include <random>
#include <vector>

#include "nsghz/kernels.hpp"

using nsghz::Cx;
namespace kernels = nsghz::kernels;

namespace {

double unit_double(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

std::vector<Cx> random_amps(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::vector<Cx> amps(count);
  for (auto& a : amps) a = Cx(unit_double(gen) - 0.5, unit_double(gen) - 0.5);
  return amps;
}

std::vector<Cx> random_op(int d, std::uint64_t seed) {
  return random_amps(static_cast<std::size_t>(d) * d, seed);
}

std::size_t pow_sz(int d, int n) {
  std::size_t r = 1;
  for (int i = 0; i < n; ++i) r *= static_cast<std::size_t>(d);
  return r;
}

std::size_t stride_of(int d, int n, int site) {
  return pow_sz(d, n - site);
}

double max_diff(const std::vector<Cx>& a, const std::vector<Cx>& b) {
  REQUIRE(a.size() == b.size());
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

struct ExecGuard {
  kernels::ExecMode mode = kernels::exec_mode();
  std::size_t grain = kernels::parallel_grain();
  ~ExecGuard() {
    kernels::set_exec_mode(mode);
    kernels::set_parallel_grain(grain);
  }
};

}  // namespace

TEST_CASE("single-site kernel matches the naive reference across (d, n, site)") {
  std::uint64_t seed = 11;
  for (int d : {2, 3, 5}) {
    for (int n = 1; n <= 4; ++n) {
      const std::size_t total = pow_sz(d, n);
      for (int site = 1; site <= n; ++site) {
        const auto op = random_op(d, seed++);
        const auto in = random_amps(total, seed++);
        const auto expected = kernels::ref::apply_single_site(in, d, n, site, op);

        auto serial = in;
        kernels::apply_single_site(serial.data(), total, d, stride_of(d, n, site),
                                   op.data(), false);
        CHECK(max_diff(serial, expected) < 1e-14);

        auto parallel = in;
        kernels::apply_single_site(parallel.data(), total, d,
                                   stride_of(d, n, site), op.data(), true);
        // Identical per-element arithmetic on both paths: bitwise equal.
        CHECK(std::memcmp(parallel.data(), serial.data(),
                          total * sizeof(Cx)) == 0);
      }
    }
  }
}

TEST_CASE("single-site kernel handles a large local dimension (heap path)") {
  const int d = 31;  // past the stack-array fast path
  const int n = 2;
  const std::size_t total = pow_sz(d, n);
  const auto op = random_op(d, 77);
  const auto in = random_amps(total, 78);
  const auto expected = kernels::ref::apply_single_site(in, d, n, 1, op);

  for (bool parallel : {false, true}) {
    auto got = in;
    kernels::apply_single_site(got.data(), total, d, stride_of(d, n, 1),
                               op.data(), parallel);
    CHECK(max_diff(got, expected) < 1e-14);
  }
}

TEST_CASE("map_amplitudes applies the same factors on both paths") {
  const std::size_t total = 4096 + 17;  // not a multiple of any chunking
  const auto in = random_amps(total, 5);
  auto phase = [](std::size_t i) {
    return std::polar(1.0, 1e-3 * static_cast<double>(i % 977));
  };

  auto serial = in;
  kernels::map_amplitudes(serial.data(), total, false, phase);
  auto parallel = in;
  kernels::map_amplitudes(parallel.data(), total, true, phase);

  CHECK(std::memcmp(serial.data(), parallel.data(), total * sizeof(Cx)) == 0);
  for (std::size_t i : {std::size_t{0}, std::size_t{1000}, total - 1}) {
    CHECK(std::abs(serial[i] - in[i] * phase(i)) < 1e-15);
  }
}

TEST_CASE("scale multiplies every amplitude by the same factor") {
  const std::size_t total = 513;
  const auto in = random_amps(total, 6);
  const Cx factor(0.25, -1.5);
  for (bool parallel : {false, true}) {
    auto got = in;
    kernels::scale(got.data(), total, factor, parallel);
    for (std::size_t i = 0; i < total; ++i) {
      CHECK(std::abs(got[i] - in[i] * factor) < 1e-15);
    }
  }
}

TEST_CASE("reductions agree with the reference implementations") {
  const std::size_t total = 10000;
  const auto a = random_amps(total, 21);
  const auto b = random_amps(total, 22);

  const double n_ref = kernels::ref::norm_squared(a);
  const Cx ip_ref = kernels::ref::inner_product(a, b);
  for (bool parallel : {false, true}) {
    CHECK(kernels::norm_squared(a.data(), total, parallel) ==
          doctest::Approx(n_ref).epsilon(1e-12));
    CHECK(std::abs(kernels::inner_product(a.data(), b.data(), total, parallel) -
                   ip_ref) < 1e-9);
  }
}

TEST_CASE("inner product conjugates the left argument") {
  const auto a = random_amps(64, 31);
  const auto b = random_amps(64, 32);
  const Cx ab = kernels::ref::inner_product(a, b);
  const Cx ba = kernels::ref::inner_product(b, a);
  CHECK(std::abs(ab - std::conj(ba)) < 1e-15);
}

TEST_CASE("run_parallel respects the execution policy") {
  ExecGuard guard;
  const std::size_t big = kernels::parallel_grain() * 4;
  const std::size_t small = 8;

  kernels::set_exec_mode(kernels::ExecMode::ForceSerial);
  CHECK_FALSE(kernels::run_parallel(big));

  kernels::set_exec_mode(kernels::ExecMode::ForceParallel);
  CHECK(kernels::run_parallel(small) == kernels::compiled_with_openmp());

  kernels::set_exec_mode(kernels::ExecMode::Auto);
  CHECK_FALSE(kernels::run_parallel(small));
  CHECK(kernels::run_parallel(big) == kernels::compiled_with_openmp());

  kernels::set_parallel_grain(2);
  CHECK(kernels::run_parallel(4) == kernels::compiled_with_openmp());
}

TEST_CASE("reference kernel rejects an out-of-range site") {
  const auto in = random_amps(8, 40);
  CHECK_THROWS_AS(kernels::ref::apply_single_site(in, 2, 3, 0, random_op(2, 41)),
                  std::invalid_argument);
  CHECK_THROWS_AS(kernels::ref::apply_single_site(in, 2, 3, 4, random_op(2, 42)),
                  std::invalid_argument);
}
