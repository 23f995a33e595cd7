#include <doctest.h>

#include <set>
#include <stdexcept>

#include "nnoracle/encode.hpp"
#include "nnoracle/rng.hpp"

using namespace nno;
using encode::Abstraction;
using encode::AbstractionSpec;

namespace {

AbstractionSpec spec_of(Abstraction kind, int n) {
  AbstractionSpec s;
  s.kind = kind;
  s.n = n;
  return s;
}

}  // namespace

TEST_CASE("normalize_input: both scaling modes") {
  const subject::CustomerRecord zero{};
  CHECK(encode::normalize_input(zero).isZero());

  const subject::CustomerRecord x{1, 0, 3, 1, 99, 0, 4, 3};
  const Vector v = encode::normalize_input(x);
  CHECK(v.size() == 8);
  CHECK(v[0] == 1.0);
  CHECK(v[2] == doctest::Approx(0.5));  // region 3 of 6
  CHECK(v[4] == 1.0);                   // age 99
  CHECK(v[6] == 1.0);
  CHECK(v[7] == 1.0);

  const Vector raw = encode::normalize_input(x, encode::InputScaling::Identity);
  CHECK(raw[4] == 99.0);
  CHECK(raw[2] == 3.0);
}

TEST_CASE("stretch functions: frozen values") {
  CHECK(encode::stretch_low(0.0) == 0.0);
  CHECK(encode::stretch_low(18000.0) == doctest::Approx(41587.97625012661).epsilon(1e-12));
  CHECK(encode::stretch_low(100.0) == doctest::Approx(5545.177444479562).epsilon(1e-12));
  CHECK_THROWS_AS(encode::stretch_low(-1.0), std::domain_error);

  CHECK(encode::stretch_center(9000.0) == doctest::Approx(9000.0));
  CHECK(encode::stretch_center(0.0) == doctest::Approx(80.9329168969413).epsilon(1e-12));
  CHECK(encode::stretch_center(18000.0) == doctest::Approx(17919.06708310306).epsilon(1e-12));
}

TEST_CASE("stretch functions: strictly increasing") {
  Rng rng(7);
  for (int i = 0; i < 500; ++i) {
    double a = uniform_range(rng, 0.0, 18000.0);
    double b = uniform_range(rng, 0.0, 18000.0);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    CHECK(encode::stretch_low(a) < encode::stretch_low(b));
    CHECK(encode::stretch_center(a) < encode::stretch_center(b));
  }
}

TEST_CASE("encode_output: direct and uniform examples") {
  const auto direct = spec_of(Abstraction::Direct, 1);
  CHECK(encode::encode_output(direct, 18000.0).size() == 1);
  CHECK(encode::encode_output(direct, 18000.0)[0] == 1.0);
  CHECK(encode::encode_output(direct, 0.0)[0] == 0.0);
  CHECK(encode::encode_output(direct, 9000.0)[0] == doctest::Approx(0.5));

  const auto uni10 = spec_of(Abstraction::Uniform, 10);
  CHECK(encode::winner(encode::encode_output(uni10, 0.0)) == 0);
  CHECK(encode::winner(encode::encode_output(uni10, 17999.0)) == 9);
  CHECK(encode::winner(encode::encode_output(uni10, 18000.0)) == 9);  // top clamp
  CHECK(encode::winner(encode::encode_output(uni10, 1799.0)) == 0);
  CHECK(encode::winner(encode::encode_output(uni10, 1800.0)) == 1);

  const auto low10 = spec_of(Abstraction::LowStretch, 10);
  CHECK(encode::winner(encode::encode_output(low10, 18000.0)) == 9);
  CHECK(encode::winner(encode::encode_output(low10, 0.0)) == 0);
  // the log stretch pushes modest amounts well up the partition
  CHECK(encode::winner(encode::encode_output(low10, 100.0)) == 1);

  CHECK_THROWS_AS(encode::encode_output(uni10, -1.0), std::domain_error);
  CHECK_THROWS_AS(encode::encode_output(uni10, 18001.0), std::domain_error);
}

TEST_CASE("encode_output: one-hot shape for ground truth") {
  Rng rng(13);
  for (Abstraction kind :
       {Abstraction::Uniform, Abstraction::LowStretch, Abstraction::CenterStretch}) {
    const auto spec = spec_of(kind, 17);
    for (int i = 0; i < 100; ++i) {
      const double y = std::floor(uniform_range(rng, 0.0, 18001.0));
      const Vector v = encode::encode_output(spec, std::min(y, 18000.0));
      CHECK(v.size() == 17);
      CHECK(v.sum() == 1.0);
      CHECK(v.maxCoeff() == 1.0);
      CHECK(v.minCoeff() == 0.0);
    }
  }
}

TEST_CASE("interval_index: monotone in y and covers all intervals") {
  for (Abstraction kind :
       {Abstraction::Uniform, Abstraction::LowStretch, Abstraction::CenterStretch}) {
    for (int n : {2, 10, 30, 60}) {
      const auto spec = spec_of(kind, n);
      int prev = 0;
      std::set<int> seen;
      for (int y = 0; y <= 18000; ++y) {
        const int k = encode::interval_index(spec, y);
        REQUIRE(k >= 0);
        REQUIRE(k < n);
        REQUIRE(k >= prev);
        prev = k;
        seen.insert(k);
      }
      CHECK(static_cast<int>(seen.size()) == n);
    }
  }
}

TEST_CASE("uniform partition: step size moves to the adjacent interval") {
  // for n dividing 18000, y and y + 18000/n land in adjacent intervals
  // except at the top clamp
  for (int n : {10, 30, 60}) {
    const auto spec = spec_of(Abstraction::Uniform, n);
    const double step = 18000.0 / n;
    Rng rng(99);
    for (int i = 0; i < 200; ++i) {
      const double y = uniform_range(rng, 0.0, 18000.0 - step);
      CHECK(encode::interval_index(spec, y + step) == encode::interval_index(spec, y) + 1);
    }
    CHECK(encode::interval_index(spec, 18000.0) == n - 1);
  }
}

TEST_CASE("winner: max index with low tie-break") {
  Vector v(3);
  v << 0.1, 0.9, 0.3;
  CHECK(encode::winner(v) == 1);
  Vector tie(2);
  tie << 0.5, 0.5;
  CHECK(encode::winner(tie) == 0);
  Vector single(1);
  single << 0.0;
  CHECK(encode::winner(single) == 0);
  CHECK_THROWS_AS(encode::winner(Vector{}), std::domain_error);

  const auto uni = spec_of(Abstraction::Uniform, 12);
  for (int k = 0; k < 12; ++k) {
    Vector onehot = Vector::Zero(12);
    onehot[k] = 1.0;
    CHECK(encode::winner(onehot) == k);
  }
  (void)uni;
}

TEST_CASE("winner(encode_output) is non-decreasing in y") {
  Rng rng(5);
  for (Abstraction kind :
       {Abstraction::Uniform, Abstraction::LowStretch, Abstraction::CenterStretch}) {
    const auto spec = spec_of(kind, 23);
    for (int i = 0; i < 300; ++i) {
      double a = uniform_range(rng, 0.0, 18000.0);
      double b = uniform_range(rng, 0.0, 18000.0);
      if (a > b) std::swap(a, b);
      CHECK(encode::winner(encode::encode_output(spec, a)) <=
            encode::winner(encode::encode_output(spec, b)));
    }
  }
}
