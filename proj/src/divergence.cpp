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

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <utility>

namespace divseq {

namespace {

void require_same_support(Distribution const &p, Distribution const &q)
{
  if (p.size() != q.size())
  {
    throw DomainError("support size mismatch: " + std::to_string(p.size()) + " vs " +
                      std::to_string(q.size()));
  }
}

// Sums `term(p_i, q_i, r_i, t)` along the path with d_i = q_i - p_i.
template <typename Term>
double sum_along(MixturePath const &path, double t, Term term)
{
  Distribution const &p = path.start();
  Distribution const &q = path.end();
  Distribution const  r = path.at(t);
  double              s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i)
  {
    s += term(p[i], q[i] - p[i], r[i]);
  }
  return s;
}

// --- per-component terms; each is nonnegative in exact arithmetic --------

double kl_term(double p, double q)
{
  double const x = (q - p) / p;
  return std::max(0.0, p * (x - std::log1p(x)));
}

double chi2_term(double p, double q)
{
  double const d = q - p;
  return d * d / q;
}

double jeffreys_term(double p, double q)
{
  double const d = q - p;
  return std::max(0.0, d * std::log1p(d / p));
}

double hellinger2_term(double p, double q)
{
  double const diff = (q - p) / (std::sqrt(q) + std::sqrt(p));
  return 0.5 * diff * diff;
}

template <double (*Term)(double, double)>
double sum_terms(Distribution const &p, Distribution const &q)
{
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i)
  {
    s += Term(p[i], q[i]);
  }
  return s;
}

// --- analytic path derivatives; r - p = t d along the path ---------------

// d/dt KL(P||R(t)) = t sum d^2 / r
double kl_second(MixturePath const &path, double t)
{
  return t * sum_along(path, t, [](double, double d, double r) { return d * d / r; });
}

// d/dt KL(R(t)||P) = sum d log(r/p)
double kl_first(MixturePath const &path, double t)
{
  return sum_along(path, t, [t](double p, double d, double) { return d * std::log1p(t * d / p); });
}

// d/dt chi2(P||R(t)) = t sum d^2 (r + p) / r^2
double chi2_second(MixturePath const &path, double t)
{
  return t * sum_along(path, t, [](double p, double d, double r) { return d * d * (r + p) / (r * r); });
}

// d/dt chi2(R(t)||P) = 2 t sum d^2 / p
double chi2_first(MixturePath const &path, double t)
{
  return 2.0 * t * sum_along(path, t, [](double p, double d, double) { return d * d / p; });
}

// Symmetric, so one formula serves both arguments.
double jeffreys_either(MixturePath const &path, double t)
{
  return sum_along(path, t, [t](double p, double d, double r) {
    return d * std::log1p(t * d / p) + t * d * d / r;
  });
}

double hellinger2_either(MixturePath const &path, double t)
{
  return t * sum_along(path, t, [](double p, double d, double r) {
    double const sr = std::sqrt(r);
    return d * d / (2.0 * sr * (sr + std::sqrt(p)));
  });
}

// --- generator validation ------------------------------------------------

std::vector<double> sampling_grid()
{
  // 41 log-spaced points over [0.01, 100]
  std::vector<double> grid;
  for (int i = 0; i <= 40; ++i)
  {
    grid.push_back(std::pow(10.0, -2.0 + 0.1 * i));
  }
  return grid;
}

double finite(double v, char const *what)
{
  if (!std::isfinite(v))
  {
    throw SpecError(std::string(what) + " returned a non-finite value on the sampling grid");
  }
  return v;
}

void check_derivative(std::function<double(double)> const &g,
                      std::function<double(double)> const &g_prime, double x, char const *what)
{
  double const h   = std::cbrt(std::numeric_limits<double>::epsilon()) * x;
  double const fd  = (g(x + h) - g(x - h)) / (2.0 * h);
  double const ana = finite(g_prime(x), what);
  if (std::abs(ana - fd) > 1e-5 * (1.0 + std::abs(ana)))
  {
    throw SpecError(std::string(what) + " disagrees with the finite-difference derivative at x = " +
                    std::to_string(x));
  }
}

void validate(FDivergenceSpec const &spec)
{
  if (!spec.f || !spec.f_prime)
  {
    throw SpecError("f-divergence spec needs both f and f_prime");
  }
  if (!(std::abs(spec.f(1.0)) <= 1e-12))
  {
    throw SpecError("f(1) must be 0");
  }
  auto const grid = sampling_grid();
  std::vector<double> values;
  for (double x : grid)
  {
    values.push_back(finite(spec.f(x), "f"));
    check_derivative(spec.f, spec.f_prime, x, "f_prime");
  }
  for (std::size_t i = 0; i < grid.size(); ++i)
  {
    for (std::size_t j = i + 1; j < grid.size(); ++j)
    {
      double const mid   = finite(spec.f(0.5 * (grid[i] + grid[j])), "f");
      double const chord = 0.5 * (values[i] + values[j]);
      if (mid > chord + 1e-12 * (1.0 + std::abs(values[i]) + std::abs(values[j])))
      {
        throw SpecError("f is not midpoint convex between " + std::to_string(grid[i]) + " and " +
                        std::to_string(grid[j]));
      }
    }
  }
}

void validate(BregmanSpec const &spec)
{
  if (!spec.F || !spec.F_prime)
  {
    throw SpecError("Bregman spec needs both F and F_prime");
  }
  auto const grid = sampling_grid();
  for (double y : grid)
  {
    double const fy  = finite(spec.F(y), "F");
    double const fpy = finite(spec.F_prime(y), "F_prime");
    for (double x : grid)
    {
      double const fx      = finite(spec.F(x), "F");
      double const tangent = fy + fpy * (x - y);
      if (fx < tangent - 1e-12 * (1.0 + std::abs(fx) + std::abs(fy) + std::abs(fpy * (x - y))))
      {
        throw SpecError("F lies below its tangent line at y = " + std::to_string(y) +
                        " (not convex, or F_prime is wrong)");
      }
    }
  }
}

}  // namespace

DivergenceFunctional::DivergenceFunctional(std::string name, Orientation orientation,
                                           Evaluator evaluator, bool differentiable,
                                           PathDerivative along_second, PathDerivative along_first)
  : name_(std::move(name))
  , orientation_(orientation)
  , evaluator_(std::move(evaluator))
  , differentiable_(differentiable)
  , along_second_(std::move(along_second))
  , along_first_(std::move(along_first))
{}

double DivergenceFunctional::operator()(Distribution const &p, Distribution const &q) const
{
  require_same_support(p, q);
  return evaluator_(p, q);
}

double evaluate(DivergenceFunctional const &d, Distribution const &p, Distribution const &q)
{
  return d(p, q);
}

DivergenceFunctional make_f_divergence(FDivergenceSpec spec, std::string name)
{
  validate(spec);
  auto const f       = spec.f;
  auto const f_prime = spec.f_prime;
  double const slope = f_prime(1.0);

  // Subtracting the supporting line at u = 1 leaves the sum unchanged
  // (sum p = sum q) and makes every term nonnegative.
  Evaluator eval = [f, slope](Distribution const &p, Distribution const &q) {
    double s = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i)
    {
      double const u = p[i] / q[i];
      s += std::max(0.0, q[i] * (f(u) - slope * (u - 1.0)));
    }
    return s;
  };
  // d/dt sum r f(p/r) = sum d [f(u) - u f'(u)], u = p/r
  PathDerivative second = [f, f_prime, slope](MixturePath const &path, double t) {
    return sum_along(path, t, [&](double p, double d, double r) {
      double const u = p / r;
      return d * (f(u) - u * f_prime(u) + slope);
    });
  };
  // d/dt sum p f(r/p) = sum d f'(r/p)
  PathDerivative first = [f_prime, slope](MixturePath const &path, double t) {
    return sum_along(path, t, [&](double p, double d, double r) { return d * (f_prime(r / p) - slope); });
  };
  return DivergenceFunctional(std::move(name), Orientation::RightConvex, std::move(eval), true,
                              std::move(second), std::move(first));
}

DivergenceFunctional make_bregman(BregmanSpec spec, std::string name)
{
  validate(spec);
  auto const F       = spec.F;
  auto const F_prime = spec.F_prime;
  Evaluator  eval    = [F, F_prime](Distribution const &p, Distribution const &q) {
    double s = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i)
    {
      s += std::max(0.0, F(p[i]) - F(q[i]) - F_prime(q[i]) * (p[i] - q[i]));
    }
    return s;
  };
  // Only the first-argument derivative avoids F'': d/dt B(R(t)||P) = sum d (F'(r) - F'(p)).
  // It becomes the analytic derivative of the swapped functional.
  PathDerivative first = [F_prime](MixturePath const &path, double t) {
    return sum_along(path, t, [&](double p, double d, double r) { return d * (F_prime(r) - F_prime(p)); });
  };
  return DivergenceFunctional(std::move(name), Orientation::LeftConvex, std::move(eval), true, {},
                              std::move(first));
}

DivergenceFunctional swap_orientation(DivergenceFunctional const &d)
{
  std::string name = d.name();
  if (name.starts_with("swap(") && name.ends_with(")"))
  {
    name = name.substr(5, name.size() - 6);
  }
  else
  {
    name = "swap(" + name + ")";
  }
  Orientation const flipped = d.orientation() == Orientation::RightConvex ? Orientation::LeftConvex
                                                                         : Orientation::RightConvex;
  Evaluator eval = [d](Distribution const &p, Distribution const &q) { return d(q, p); };
  return DivergenceFunctional(std::move(name), flipped, std::move(eval), d.differentiable(),
                              d.derivative_along_first(), d.derivative_along_second());
}

double differentiate_on_unit_interval(std::function<double(double, double)> const &delta, double t)
{
  if (!(t >= 0.0 && t <= 1.0))
  {
    throw DomainError("t must lie in [0,1]");
  }
  double const base = std::cbrt(std::numeric_limits<double>::epsilon()) * std::max(t, 0.1);

  // Each stencil is O(h^2); combining steps h and h/2 cancels the leading
  // term. The stencil kind is fixed by the coarse step.
  enum class Kind
  {
    Central,
    Forward,
    Backward
  };
  Kind const kind = (t - base >= 0.0 && t + base <= 1.0) ? Kind::Central
                    : (t + 2.0 * base <= 1.0)            ? Kind::Forward
                                                          : Kind::Backward;
  auto stencil = [&](double h) {
    switch (kind)
    {
    case Kind::Central:
      return delta(t - h, t + h) / (2.0 * h);
    case Kind::Forward:
      return (3.0 * delta(t, t + h) - delta(t + h, t + 2.0 * h)) / (2.0 * h);
    case Kind::Backward:
      break;
    }
    return (3.0 * delta(t - h, t) - delta(t - 2.0 * h, t - h)) / (2.0 * h);
  };
  double const coarse = stencil(base);
  double const fine   = stencil(0.5 * base);
  return (4.0 * fine - coarse) / 3.0;
}

double path_derivative(DivergenceFunctional const &d, MixturePath const &path, double t)
{
  if (!d.differentiable())
  {
    throw DomainError("divergence '" + d.name() + "' is not flagged differentiable");
  }
  if (!(t >= 0.0 && t <= 1.0))
  {
    throw DomainError("t must lie in [0,1]");
  }
  if (path.degenerate())
  {
    return 0.0;
  }
  if (d.has_analytic_derivative())
  {
    return d.derivative_along_second()(path, t);
  }
  Distribution const &p = path.start();
  return differentiate_on_unit_interval(
      [&](double a, double b) { return d(p, path.at(b)) - d(p, path.at(a)); }, t);
}

namespace named {

DivergenceFunctional kl()
{
  return DivergenceFunctional("kl", Orientation::RightConvex, sum_terms<kl_term>, true, kl_second,
                              kl_first);
}

DivergenceFunctional reverse_kl()
{
  Evaluator eval = [](Distribution const &p, Distribution const &q) { return sum_terms<kl_term>(q, p); };
  return DivergenceFunctional("reverse_kl", Orientation::RightConvex, std::move(eval), true, kl_first,
                              kl_second);
}

DivergenceFunctional chi2()
{
  return DivergenceFunctional("chi2", Orientation::RightConvex, sum_terms<chi2_term>, true, chi2_second,
                              chi2_first);
}

DivergenceFunctional jeffreys()
{
  return DivergenceFunctional("jeffreys", Orientation::RightConvex, sum_terms<jeffreys_term>, true,
                              jeffreys_either, jeffreys_either);
}

DivergenceFunctional hellinger2()
{
  return DivergenceFunctional("hellinger2", Orientation::RightConvex, sum_terms<hellinger2_term>, true,
                              hellinger2_either, hellinger2_either);
}

}  // namespace named

std::vector<std::string> named_divergence_ids()
{
  return {"kl", "reverse_kl", "chi2", "jeffreys", "hellinger2"};
}

DivergenceFunctional named_divergence(std::string_view id)
{
  if (id == "kl")
  {
    return named::kl();
  }
  if (id == "reverse_kl")
  {
    return named::reverse_kl();
  }
  if (id == "chi2")
  {
    return named::chi2();
  }
  if (id == "jeffreys")
  {
    return named::jeffreys();
  }
  if (id == "hellinger2")
  {
    return named::hellinger2();
  }
  throw DomainError("unknown divergence '" + std::string(id) + "'");
}

}  // namespace divseq
