// Argument parsing helpers used by the command-line tool.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <stdexcept>
#include <vector>

#include "nsghz/cli_util.hpp"

using nsghz::Cx;
namespace cli = nsghz::cli;

TEST_CASE("strict scalar parsing consumes the whole token") {
  CHECK(cli::parse_double_strict("0.25") == 0.25);
  CHECK(cli::parse_double_strict("-1e-3") == -1e-3);
  CHECK_THROWS_AS(cli::parse_double_strict("1.5x"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_double_strict(""), std::invalid_argument);

  CHECK(cli::parse_long_strict("-42") == -42);
  CHECK_THROWS_AS(cli::parse_long_strict("3.5"), std::invalid_argument);
}

TEST_CASE("grids are inclusive and allow single values") {
  const auto grid = cli::parse_grid("0:1:21");
  REQUIRE(grid.size() == 21);
  CHECK(grid.front() == 0.0);
  CHECK(grid.back() == 1.0);
  CHECK(grid[1] == doctest::Approx(0.05).epsilon(1e-14));

  const auto single = cli::parse_grid("0.7");
  REQUIRE(single.size() == 1);
  CHECK(single[0] == 0.7);

  const auto degenerate = cli::parse_grid("0.3:0.9:1");
  REQUIRE(degenerate.size() == 1);
  CHECK(degenerate[0] == 0.3);

  CHECK_THROWS_AS(cli::parse_grid("0:1"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_grid("0:1:0"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_grid("a:1:3"), std::invalid_argument);
}

TEST_CASE("integer ranges are inclusive") {
  const auto range = cli::parse_int_range("2..5");
  CHECK(range == std::vector<int>{2, 3, 4, 5});
  CHECK(cli::parse_int_range("3") == std::vector<int>{3});
  CHECK(cli::parse_int_range("4..4") == std::vector<int>{4});
  CHECK_THROWS_AS(cli::parse_int_range("5..2"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_int_range("2..b"), std::invalid_argument);
}

TEST_CASE("complex literals cover pure, mixed, and exponent forms") {
  CHECK(cli::parse_complex("1.5") == Cx(1.5, 0));
  CHECK(cli::parse_complex("2i") == Cx(0, 2));
  CHECK(cli::parse_complex("-i") == Cx(0, -1));
  CHECK(cli::parse_complex("i") == Cx(0, 1));
  CHECK(cli::parse_complex("0.5+0.5i") == Cx(0.5, 0.5));
  CHECK(cli::parse_complex("-0.25-0.1i") == Cx(-0.25, -0.1));
  CHECK(cli::parse_complex("1e-3+2.5e-2i") == Cx(1e-3, 2.5e-2));
  CHECK(cli::parse_complex("-1.5e2") == Cx(-150, 0));
  CHECK_THROWS_AS(cli::parse_complex("1+2"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_complex("blah"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_complex(""), std::invalid_argument);
}

TEST_CASE("complex lists split on commas") {
  const auto list = cli::parse_complex_list("0.6,0.8i");
  REQUIRE(list.size() == 2);
  CHECK(list[0] == Cx(0.6, 0));
  CHECK(list[1] == Cx(0, 0.8));
  CHECK_THROWS_AS(cli::parse_complex_list(""), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_complex_list("1,,2"), std::invalid_argument);
}

TEST_CASE("cap parsing enforces the minimum") {
  CHECK(cli::parse_cap("1024") == 1024);
  CHECK(cli::parse_cap("2") == 2);
  CHECK_THROWS_AS(cli::parse_cap("1"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_cap("-4"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_cap("big"), std::invalid_argument);
}
