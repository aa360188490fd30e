#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "zetanu/config.hpp"

using namespace zetanu;

TEST_CASE("defaults are valid") {
  const Config c;
  CHECK_NOTHROW(c.validate());
  CHECK(c.em_truncation == 0);
  CHECK(c.jobs == 0);
}

TEST_CASE("parsing") {
  const Config c = parse_config(
      "# comment\n"
      "\n"
      "em_truncation = 120\n"
      "grid_h=0.05\n"
      "census_rect = -4, 4.3, 0.01, 200\n"
      "output_dir = out/figs  \n"
      "jobs=2\n");
  CHECK(c.em_truncation == 120);
  CHECK(c.grid_h == 0.05);
  CHECK(c.census_rect.sigma_min == -4.0);
  CHECK(c.census_rect.t_max == 200.0);
  CHECK(c.output_dir == "out/figs");
  CHECK(c.jobs == 2);
}

TEST_CASE("later keys override earlier ones and the base") {
  Config base;
  base.jobs = 3;
  const Config c = parse_config("grid_h = 0.02\ngrid_h = 0.01\n", base);
  CHECK(c.grid_h == 0.01);
  CHECK(c.jobs == 3);
}

TEST_CASE("validation against module preconditions") {
  CHECK_THROWS_AS(parse_config("grid_h = 0.5\n"), Error);
  CHECK_THROWS_AS(parse_config("grid_h = 0\n"), Error);
  CHECK_THROWS_AS(parse_config("census_rect = 1, 0, 0, 1\n"), Error);
  CHECK_THROWS_AS(parse_config("census_rect = 0, 1, 0, 30000\n"), Error);
  CHECK_THROWS_AS(parse_config("census_rect = 0, 1, 0\n"), Error);
  CHECK_THROWS_AS(parse_config("jobs = -1\n"), Error);
  CHECK_THROWS_AS(parse_config("jobs = two\n"), Error);
  CHECK_THROWS_AS(parse_config("em_truncation = 1.5\n"), Error);
  CHECK_THROWS_AS(parse_config("output_dir =\n"), Error);
  CHECK_THROWS_AS(parse_config("colour = red\n"), Error);
  CHECK_THROWS_AS(parse_config("grid_h 0.1\n"), Error);
}

TEST_CASE("rectangles and pairs") {
  const Rectangle r = parse_rect("-9.5,10.5,0,100");
  CHECK(r.sigma_min == -9.5);
  CHECK(r.t_max == 100.0);
  CHECK(parse_pair("0.5, 50") == std::pair<double, double>(0.5, 50.0));
  CHECK_THROWS_AS(parse_rect("1,2,3"), Error);
  CHECK_THROWS_AS(parse_pair("1;2"), Error);
}

TEST_CASE("loading from a file") {
  const auto path = (std::filesystem::temp_directory_path() / "zetanu_test.cfg").string();
  {
    std::ofstream out(path);
    out << "jobs = 1\n";
  }
  CHECK(load_config(path).jobs == 1);
  std::filesystem::remove(path);
  try {
    load_config(path);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::io_error);
  }
}
