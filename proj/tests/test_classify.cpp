#include <cmath>

#include <doctest.h>

#include "nlslab/classify.hpp"
#include "nlslab/direct.hpp"
#include "test_util.hpp"

using namespace nlslab;
using nlslab::testing::kPi;

TEST_CASE("zero transforms mean bidirectional invisibility") {
  const auto c = classify_transforms({}, {}, {}, {}, 1.0, 1e-6);
  CHECK(c.invisible_left);
  CHECK(c.invisible_right);
  CHECK(c.unidirectional == Unidirectional::None);
  CHECK(c.residual_reflection_right == 0.0);
}

TEST_CASE("left transforms vanish, right reflection does not") {
  const double k = 1.0;
  const auto c = classify_transforms(/*tX0=*/{0.0, 0.0}, /*tX2k=*/{0.5, 0.0},
                                     /*tYm2k=*/{0.0, 0.0}, /*tY0=*/{0.0, 0.0},
                                     k, 1e-6);
  CHECK(c.invisible_left);
  CHECK_FALSE(c.invisible_right);
  CHECK(c.unidirectional == Unidirectional::LeftInvisible);
  CHECK(c.reflectionless_left);
  CHECK_FALSE(c.reflectionless_right);
  CHECK(c.transparent_right);  // tX0 = 0
}

TEST_CASE("trivial amplitudes classify as invisible") {
  Amplitudes a;
  a.Rr = a.Rl = {0.0, 0.0};
  a.Tr = a.Tl = {1.0, 0.0};
  const auto c = classify_amplitudes(a, 1e-6);
  CHECK(c.invisible_left);
  CHECK(c.invisible_right);
  CHECK(c.unidirectional == Unidirectional::None);
}

TEST_CASE("one-sided reflection makes one-sided invisibility") {
  Amplitudes a;
  a.Rr = {0.01, 0.0};
  a.Rl = {0.0, 0.0};
  a.Tr = a.Tl = {1.0, 0.0};
  const auto c = classify_amplitudes(a, 1e-3);
  CHECK(c.invisible_left);
  CHECK_FALSE(c.invisible_right);
  CHECK(c.unidirectional == Unidirectional::LeftInvisible);
}

TEST_CASE("tightening the threshold never turns flags on") {
  Amplitudes a;
  a.Rr = {2e-5, 0.0};
  a.Rl = {5e-8, 0.0};
  a.Tr = {1.0, 3e-6};
  a.Tl = {1.0, 2e-9};
  const double tols[] = {1e-3, 1e-4, 1e-5, 1e-6, 1e-7, 1e-8, 1e-9};
  Classification prev = classify_amplitudes(a, tols[0]);
  for (double tol : tols) {
    const auto cur = classify_amplitudes(a, tol);
    CHECK((!cur.reflectionless_right || prev.reflectionless_right));
    CHECK((!cur.reflectionless_left || prev.reflectionless_left));
    CHECK((!cur.transparent_right || prev.transparent_right));
    CHECK((!cur.transparent_left || prev.transparent_left));
    prev = cur;
  }
}

TEST_CASE("transform and amplitude classifiers agree on solver data") {
  // linear three-harmonic slab at the left-reflectionless resonance k = 2K
  const double k = 2.0, zhat = 1e-4;
  const auto pot = testing::example_potential(k, zhat);
  SolveOptions opt;
  opt.grid_size = 2048;
  opt.tol = 1e-11;
  const auto r = direct_scattering(pot, NonlinearitySpec::none(), k, {1.0, 0.0},
                                   {1.0, 0.0}, opt);
  const double tol = 1e-6;
  const auto ct = classify_transforms(r.transforms.X0, r.transforms.X2k,
                                      r.transforms.Ym2k, r.transforms.Y0, k,
                                      tol);
  const auto ca = classify_amplitudes(r.jost, tol);
  CHECK(ct.reflectionless_left);
  CHECK_FALSE(ct.reflectionless_right);
  CHECK(ca.reflectionless_left == ct.reflectionless_left);
  CHECK(ca.reflectionless_right == ct.reflectionless_right);
  CHECK(ca.transparent_left == ct.transparent_left);
  CHECK(ca.transparent_right == ct.transparent_right);
  CHECK(ca.unidirectional == ct.unidirectional);
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(classify_transforms({}, {}, {}, {}, 1.0, 0.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(classify_transforms({}, {}, {}, {}, 0.0, 1e-6),
                  std::invalid_argument);
  CHECK_THROWS_AS(classify_amplitudes({}, -1.0), std::invalid_argument);
}
