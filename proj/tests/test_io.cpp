#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "popuc/io.hpp"

using namespace popuc;
using namespace popuc::io;

TEST_CASE("parse_complex literal forms") {
  CHECK(parse_complex("1") == Complex(1.0, 0.0));
  CHECK(parse_complex("-2.5") == Complex(-2.5, 0.0));
  CHECK(parse_complex("2i") == Complex(0.0, 2.0));
  CHECK(parse_complex("i") == Complex(0.0, 1.0));
  CHECK(parse_complex("-i") == Complex(0.0, -1.0));
  CHECK(parse_complex("1-2i") == Complex(1.0, -2.0));
  CHECK(parse_complex("0.5+0.25i") == Complex(0.5, 0.25));
  CHECK(parse_complex("1e-3+2e-4i") == Complex(1e-3, 2e-4));
  CHECK(parse_complex(" 3+4i ") == Complex(3.0, 4.0));
  CHECK_THROWS_AS((void)parse_complex(""), InputError);
  CHECK_THROWS_AS((void)parse_complex("abc"), InputError);
  CHECK_THROWS_AS((void)parse_complex("1+2j"), InputError);
}

TEST_CASE("format_complex round trips") {
  for (Complex z : {Complex(0.1, -0.7), Complex(-1.0 / 3.0, 1e-17), Complex(0.0, 2.0)}) {
    Complex back = parse_complex(format_complex(z));
    CHECK(std::abs(back - z) < 1e-16);
  }
}

TEST_CASE("parse_range and grid") {
  Range r = parse_range("0:1:0.25");
  CHECK(r.start == 0.0);
  CHECK(r.end == 1.0);
  CHECK(r.step == 0.25);
  auto g = r.grid();
  REQUIRE(g.size() == 5);
  CHECK(g.back() == doctest::Approx(1.0));
  CHECK_THROWS_AS((void)parse_range("0:1"), InputError);
  CHECK_THROWS_AS((void)parse_range("1:0:0.1"), InputError);
  CHECK_THROWS_AS((void)parse_range("0:1:-0.1"), InputError);
  CHECK_THROWS_AS((void)parse_range("a:b:c"), InputError);
}

TEST_CASE("parameter text parsing") {
  auto p = parse_parameters_text("# comment\nalphas = 0.5, -0.25i, 0.1+0.1i\ntau = -1\n");
  REQUIRE(p.n() == 3);
  CHECK(p.alphas[1] == Complex(0.0, -0.25));
  CHECK(p.tau == Complex(-1.0, 0.0));

  // errors carry line numbers
  try {
    (void)parse_parameters_text("alphas = 0.1\nbogus line\n");
    FAIL("expected InputError");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  CHECK_THROWS_AS((void)parse_parameters_text("alphas = 0.5\n"), InputError);   // missing tau
  CHECK_THROWS_AS((void)parse_parameters_text("alphas = 2\ntau = 1\n"), InputError);  // invariant
}

TEST_CASE("parameter file round trip") {
  auto p = schur::random_parameters(5, 314);
  const char* path = "roundtrip.params";
  write_parameters_file(path, p);
  auto back = read_parameters_file(path);
  for (int j = 0; j < p.n(); ++j) CHECK(std::abs(back.alphas[j] - p.alphas[j]) < 1e-16);
  CHECK(std::abs(back.tau - p.tau) < 1e-16);
  std::remove(path);
  CHECK_THROWS_AS((void)read_parameters_file("does_not_exist.params"), InputError);
}

TEST_CASE("write_file_atomic leaves no temporary behind") {
  const char* path = "atomic.txt";
  write_file_atomic(path, "hello\n");
  std::ifstream f(path);
  std::string s;
  std::getline(f, s);
  CHECK(s == "hello");
  std::ifstream tmp(std::string(path) + ".tmp");
  CHECK_FALSE(tmp.good());
  std::remove(path);
}

TEST_CASE("format_number prints 9 significant digits") {
  CHECK(format_number(3.141592653589793) == "3.14159265");
  CHECK(format_number(0.5) == "0.5");
}
