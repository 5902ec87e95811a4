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

#include "divseq/errors.hpp"
#include "divseq/operators.hpp"
#include "divseq/sequences.hpp"

#include "doctest.h"
#include "oracles.hpp"

#include <cmath>

using namespace divseq;

namespace {

MixturePath reference_path()
{
  return MixturePath(oracle::P(), oracle::Q());
}

}  // namespace

TEST_CASE("psi at the reference pair")
{
  auto const path = reference_path();
  auto const chi2 = psi(named::chi2(), path, 1.0);
  CHECK(chi2.value == doctest::Approx(oracle::kKL).epsilon(1e-11));
  CHECK(chi2.estimated_error >= 0.0);
  CHECK(chi2.evaluations > 0);
  CHECK(psi(named::jeffreys(), path, 1.0).value == doctest::Approx(oracle::kReverseKL).epsilon(1e-11));
  CHECK(psi(named::hellinger2(), path, 1.0).value == doctest::Approx(oracle::kHellingerPsi).epsilon(1e-11));
}

TEST_CASE("psi matches Simpson quadrature of D/s")
{
  oracle::PairGenerator gen(23);
  for (int i = 0; i < 20; ++i)
  {
    std::size_t const n = gen.size();
    auto const        p = gen.masses(n);
    auto const        q = gen.masses(n);
    double const      t = 0.1 + 0.9 * gen.unit();
    double const expected = oracle::simpson(
        [&](double s) { return s == 0.0 ? 0.0 : oracle::hellinger2(p, oracle::affine(p, q, s)) / s; }, 0.0, t);
    CHECK(psi(named::hellinger2(), MixturePath(Distribution(p), Distribution(q)), t).value ==
          doctest::Approx(expected).epsilon(1e-9));
  }
}

TEST_CASE("psi trivial cases")
{
  auto const path = reference_path();
  for (auto const &id : named_divergence_ids())
  {
    auto const r = psi(named_divergence(id), path, 0.0);
    CHECK(r.value == 0.0);
    CHECK(r.evaluations == 0);
  }
  MixturePath const flat(oracle::P(), oracle::P());
  CHECK(psi(named::kl(), flat, 0.7).value == 0.0);
  CHECK_THROWS_AS(psi(named::kl(), path, 1.01), DomainError);
  CHECK_THROWS_AS(psi(named::kl(), path, -0.01), DomainError);
}

TEST_CASE("psi reports tolerance failures")
{
  QuadratureConfig cfg;
  cfg.rel_tol          = 1e-300;
  cfg.abs_tol          = 1e-300;
  cfg.max_subdivisions = 10;
  CHECK_THROWS_AS(psi(named::kl(), reference_path(), 1.0, cfg), ToleranceError);
}

TEST_CASE("psi_inverse at the reference pair")
{
  auto const path = reference_path();
  CHECK(psi_inverse(named::hellinger2(), path, 1.0) ==
        doctest::Approx(oracle::kHellingerPsiInverse).epsilon(1e-12));
  CHECK(psi_inverse(named::chi2(), path, 1.0) == doctest::Approx(oracle::kChi2SlopeAtOne).epsilon(1e-12));
  for (auto const &id : named_divergence_ids())
  {
    CHECK(psi_inverse(named_divergence(id), path, 0.0) == 0.0);
  }
  CHECK(psi_inverse(named::kl(), MixturePath(oracle::P(), oracle::P()), 0.6) == 0.0);
}

TEST_CASE("psi_inverse needs a differentiable functional")
{
  DivergenceFunctional const rough("tv", Orientation::RightConvex,
                                   [](Distribution const &p, Distribution const &q) { return total_variation(p, q); },
                                   false);
  CHECK_THROWS_AS(psi_inverse(rough, reference_path(), 0.5), DomainError);
}

TEST_CASE("psi_iter levels follow the polylogarithm sequences")
{
  auto const   path   = reference_path();
  double const t1[]   = {1.0};
  auto const   chi2   = psi_iter(named::chi2(), 2, path, t1);
  REQUIRE(chi2.size() == 3);
  CHECK(chi2[0][0] == doctest::Approx(oracle::kPL[0]).epsilon(1e-12));
  CHECK(chi2[1][0] == doctest::Approx(oracle::kPL[1]).epsilon(1e-10));
  CHECK(chi2[2][0] == doctest::Approx(oracle::kPL[2]).epsilon(1e-10));

  auto const jeffreys = psi_iter(named::jeffreys(), 3, path, t1);
  CHECK(jeffreys[1][0] == doctest::Approx(oracle::kReverseKL).epsilon(1e-10));
  CHECK(jeffreys[2][0] == doctest::Approx(oracle::kSL2).epsilon(1e-10));
  CHECK(jeffreys[3][0] == doctest::Approx(oracle::kSL3).epsilon(1e-10));
}

TEST_CASE("psi_iter level zero is direct evaluation and level one is psi")
{
  auto const                path = reference_path();
  std::vector<double> const grid{0.0, 0.13, 0.5, 0.77, 1.0};
  auto const                rows = psi_iter(named::hellinger2(), 1, path, grid);
  for (std::size_t i = 0; i < grid.size(); ++i)
  {
    CHECK(rows[0][i] == named::hellinger2()(path.start(), path.at(grid[i])));
    CHECK(rows[1][i] == doctest::Approx(hellinger_psi(path.start(), path.end(), grid[i])).epsilon(1e-9).scale(1e-3));
  }
  auto const flat = psi_iter(named::kl(), 3, MixturePath(oracle::P(), oracle::P()), grid);
  for (auto const &row : flat)
  {
    for (double v : row)
    {
      CHECK(v == 0.0);
    }
  }
  CHECK_THROWS_AS(psi_iter(named::kl(), -1, path, grid), DomainError);
}

TEST_CASE("roundtrip reproduces the divergence")
{
  auto const path  = reference_path();
  auto const [a, b] = psi_roundtrip(named::chi2(), path, 1.0);
  CHECK(a == doctest::Approx(oracle::kChi2).epsilon(1e-6));
  CHECK(b == doctest::Approx(oracle::kChi2).epsilon(1e-6));

  auto const [c, d] = psi_roundtrip(named::kl(), path, 0.5);
  CHECK(std::abs(c - oracle::kKLHalfway) < 1e-6);
  CHECK(std::abs(d - oracle::kKLHalfway) < 1e-6);

  auto const [e, f] = psi_roundtrip(named::kl(), MixturePath(oracle::P(), oracle::P()), 0.5);
  CHECK(e == 0.0);
  CHECK(f == 0.0);
  CHECK_THROWS_AS(psi_roundtrip(named::kl(), path, 0.0), DomainError);
}

TEST_CASE("operators as divergences")
{
  auto const p        = oracle::P();
  auto const q        = oracle::Q();
  auto const psi_chi2 = psi_functional(named::chi2());
  CHECK(psi_chi2(p, q) == doctest::Approx(oracle::kKL).epsilon(1e-11));
  CHECK(psi_chi2.orientation() == Orientation::RightConvex);
  CHECK(psi_chi2.differentiable());

  auto const inv = psi_inverse_functional(named::hellinger2());
  CHECK(inv(p, q) == doctest::Approx(oracle::kHellingerPsiInverse).epsilon(1e-12));
}
