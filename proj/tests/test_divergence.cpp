//------------------------------------------------------------------------------
//
//   Copyright 2026 The divseq Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

#include "divseq/divergence.hpp"
#include "divseq/errors.hpp"

#include "doctest.h"
#include "oracles.hpp"

#include <cmath>

using namespace divseq;

namespace {

FDivergenceSpec const kKLGenerator{[](double u) { return u * std::log(u); },
                                   [](double u) { return std::log(u) + 1.0; }};
FDivergenceSpec const kPearsonGenerator{[](double u) { return (u - 1.0) * (u - 1.0); },
                                        [](double u) { return 2.0 * (u - 1.0); }};
FDivergenceSpec const kReverseKLGenerator{[](double u) { return -std::log(u); },
                                          [](double u) { return -1.0 / u; }};
FDivergenceSpec const kJeffreysGenerator{[](double u) { return (u - 1.0) * std::log(u); },
                                         [](double u) { return std::log(u) + 1.0 - 1.0 / u; }};
BregmanSpec const     kSquare{[](double x) { return x * x; }, [](double x) { return 2.0 * x; }};
BregmanSpec const     kEntropy{[](double x) { return x * std::log(x); }, [](double x) { return std::log(x) + 1.0; }};

// Plain central difference of t -> D(P||R(t)), independent of the library's stencil.
double central_difference(DivergenceFunctional const &d, std::vector<double> const &p, std::vector<double> const &q,
                          double t)
{
  double const h  = 1e-5;
  double const lo = std::max(0.0, t - h);
  double const hi = std::min(1.0, t + h);
  return (d(Distribution(p), Distribution(oracle::affine(p, q, hi))) -
          d(Distribution(p), Distribution(oracle::affine(p, q, lo)))) /
         (hi - lo);
}

}  // namespace

TEST_CASE("named divergences at the reference pair")
{
  auto const p = oracle::P();
  auto const q = oracle::Q();
  CHECK(named::kl()(p, q) == doctest::Approx(oracle::kKL).epsilon(1e-14));
  CHECK(named::reverse_kl()(p, q) == doctest::Approx(oracle::kReverseKL).epsilon(1e-14));
  CHECK(named::chi2()(p, q) == doctest::Approx(oracle::kChi2).epsilon(1e-14));
  CHECK(named::hellinger2()(p, q) == doctest::Approx(oracle::kHellinger2).epsilon(1e-14));
  CHECK(named::jeffreys()(p, q) == doctest::Approx(oracle::kJeffreys).epsilon(1e-14));
  CHECK(evaluate(named::kl(), p, q) == named::kl()(p, q));
}

TEST_CASE("every divergence vanishes on identical arguments")
{
  auto const p = new_distribution({0.3, 0.7});
  for (auto const &id : named_divergence_ids())
  {
    CHECK(named_divergence(id)(p, p) == 0.0);
  }
  CHECK(make_f_divergence(kReverseKLGenerator)(p, p) == 0.0);
  CHECK(make_bregman(kEntropy)(p, p) == 0.0);
  CHECK(make_bregman(kSquare)(p, p) == 0.0);
}

TEST_CASE("support mismatch is a domain error")
{
  CHECK_THROWS_AS(named::kl()(oracle::P(), new_distribution({0.2, 0.3, 0.5})), DomainError);
}

TEST_CASE("named identifiers")
{
  auto const ids = named_divergence_ids();
  CHECK(ids == std::vector<std::string>{"kl", "reverse_kl", "chi2", "jeffreys", "hellinger2"});
  for (auto const &id : ids)
  {
    auto const d = named_divergence(id);
    CHECK(d.name() == id);
    CHECK(d.orientation() == Orientation::RightConvex);
    CHECK(d.differentiable());
    CHECK(d.has_analytic_derivative());
  }
  CHECK_THROWS_AS(named_divergence("tv"), DomainError);
}

TEST_CASE("f-divergence generators recover the named divergences")
{
  auto const p = oracle::P();
  auto const q = oracle::Q();
  CHECK(make_f_divergence(kKLGenerator)(p, q) == doctest::Approx(oracle::kKL).epsilon(1e-13));
  CHECK(make_f_divergence(kPearsonGenerator)(p, q) == doctest::Approx(oracle::kChi2).epsilon(1e-13));
  CHECK(make_f_divergence(kReverseKLGenerator)(p, q) == doctest::Approx(oracle::kReverseKL).epsilon(1e-13));
  CHECK(make_f_divergence(kJeffreysGenerator)(p, q) == doctest::Approx(oracle::kJeffreys).epsilon(1e-13));
  auto const f = make_f_divergence(kKLGenerator, "kl_f");
  CHECK(f.name() == "kl_f");
  CHECK(f.orientation() == Orientation::RightConvex);
}

TEST_CASE("f-divergence generator validation")
{
  CHECK_THROWS_AS(make_f_divergence({[](double u) { return u * u; }, [](double u) { return 2.0 * u; }}), SpecError);
  CHECK_THROWS_AS(make_f_divergence({[](double u) { return std::sqrt(u) - 1.0; },
                                     [](double u) { return 0.5 / std::sqrt(u); }}),
                  SpecError);
  CHECK_THROWS_AS(make_f_divergence({kKLGenerator.f, [](double u) { return std::log(u); }}), SpecError);
  CHECK_THROWS_AS(make_f_divergence({kKLGenerator.f, {}}), SpecError);
}

TEST_CASE("Bregman generators")
{
  auto const p = oracle::P();
  auto const q = oracle::Q();
  auto const euclid = make_bregman(kSquare);
  CHECK(euclid(p, q) == doctest::Approx(oracle::kSquaredEuclid).epsilon(1e-14));
  CHECK(euclid.orientation() == Orientation::LeftConvex);
  CHECK(euclid.differentiable());
  CHECK_FALSE(euclid.has_analytic_derivative());
  CHECK(make_bregman(kEntropy)(p, q) == doctest::Approx(oracle::kKL).epsilon(1e-13));
  CHECK_THROWS_AS(make_bregman({[](double x) { return -x * x; }, [](double x) { return -2.0 * x; }}), SpecError);
}

TEST_CASE("swap adapter")
{
  auto const p       = oracle::P();
  auto const q       = oracle::Q();
  auto const swapped = swap_orientation(named::kl());
  CHECK(swapped(p, q) == doctest::Approx(oracle::kReverseKL).epsilon(1e-14));
  CHECK(swapped.orientation() == Orientation::LeftConvex);
  CHECK(swapped.name() == "swap(kl)");

  auto const twice = swap_orientation(swapped);
  CHECK(twice.name() == "kl");
  CHECK(twice.orientation() == Orientation::RightConvex);
  CHECK(twice(p, q) == named::kl()(p, q));

  auto const reverse = swap_orientation(make_bregman(kEntropy));
  CHECK(reverse.orientation() == Orientation::RightConvex);
  CHECK(reverse(p, q) == doctest::Approx(oracle::kReverseKL).epsilon(1e-13));
  CHECK(reverse.has_analytic_derivative());
}

TEST_CASE("Jeffreys is the symmetrized KL on random pairs")
{
  oracle::PairGenerator gen(3);
  auto const            j = named::jeffreys();
  for (int i = 0; i < 200; ++i)
  {
    std::size_t const n = gen.size();
    auto const        p = gen.masses(n);
    auto const        q = gen.masses(n);
    double const      expected = oracle::kl(p, q) + oracle::kl(q, p);
    CHECK(j(Distribution(p), Distribution(q)) == doctest::Approx(expected).epsilon(1e-12));
    CHECK(named::kl()(Distribution(p), Distribution(q)) == doctest::Approx(oracle::kl(p, q)).epsilon(1e-12));
    CHECK(named::chi2()(Distribution(p), Distribution(q)) == doctest::Approx(oracle::chi2(p, q)).epsilon(1e-12));
    CHECK(named::hellinger2()(Distribution(p), Distribution(q)) ==
          doctest::Approx(oracle::hellinger2(p, q)).epsilon(1e-12));
  }
}

TEST_CASE("path derivative at the reference pair")
{
  MixturePath const path(oracle::P(), oracle::Q());
  CHECK(path_derivative(named::chi2(), path, 1.0) == doctest::Approx(oracle::kChi2SlopeAtOne).epsilon(1e-13));
  CHECK(path_derivative(named::hellinger2(), path, 1.0) ==
        doctest::Approx(oracle::kHellingerPsiInverse).epsilon(1e-13));
  CHECK(path_derivative(named::kl(), path, 0.0) == 0.0);

  MixturePath const flat(oracle::P(), oracle::P());
  CHECK(path_derivative(named::kl(), flat, 0.4) == 0.0);
  CHECK_THROWS_AS(path_derivative(named::kl(), path, 1.5), DomainError);
}

TEST_CASE("path derivative needs a differentiable functional")
{
  DivergenceFunctional const rough("tv", Orientation::RightConvex,
                                   [](Distribution const &p, Distribution const &q) { return total_variation(p, q); },
                                   false);
  CHECK_THROWS_AS(path_derivative(rough, MixturePath(oracle::P(), oracle::Q()), 0.5), DomainError);
}

TEST_CASE("analytic derivatives agree with central differences on random instances")
{
  oracle::PairGenerator gen(17);
  std::vector<DivergenceFunctional> const all{named::kl(),
                                              named::reverse_kl(),
                                              named::chi2(),
                                              named::jeffreys(),
                                              named::hellinger2(),
                                              make_f_divergence(kReverseKLGenerator),
                                              swap_orientation(named::chi2()),
                                              swap_orientation(make_bregman(kSquare)),
                                              make_bregman(kSquare)};
  for (int i = 0; i < 100; ++i)
  {
    std::size_t const n = gen.size();
    auto const        p = gen.masses(n);
    auto const        q = gen.masses(n);
    double const      t = gen.unit();
    MixturePath const path{Distribution(p), Distribution(q)};
    for (auto const &d : all)
    {
      CAPTURE(d.name());
      CHECK(path_derivative(d, path, t) == doctest::Approx(central_difference(d, p, q, t)).epsilon(1e-6));
    }
  }
}

TEST_CASE("stencil differentiation is accurate at interior and endpoint parameters")
{
  auto const cube  = [](double a, double b) { return b * b * b - a * a * a; };
  auto const sines = [](double a, double b) { return std::sin(3.0 * b) - std::sin(3.0 * a); };
  for (double t : {0.0, 1e-6, 0.3, 0.999999, 1.0})
  {
    CHECK(differentiate_on_unit_interval(cube, t) == doctest::Approx(3.0 * t * t).epsilon(1e-9).scale(1.0));
    CHECK(differentiate_on_unit_interval(sines, t) == doctest::Approx(3.0 * std::cos(3.0 * t)).epsilon(1e-9));
  }
  CHECK_THROWS_AS(differentiate_on_unit_interval(cube, -0.5), DomainError);
}
