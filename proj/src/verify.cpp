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

#include "divseq/verify.hpp"

#include "divseq/errors.hpp"
#include "divseq/operators.hpp"
#include "divseq/polylog.hpp"
#include "divseq/sequences.hpp"

#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>
#include <limits>

namespace divseq {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Stream tags keep each check's instance family independent of run order.
enum Stream : std::uint64_t
{
  kDivergenceStream = 1,
  kPsiStream,
  kPsiIterStream,
  kPsiInverseStream,
  kInvarianceStream,
  kRoundtripStream,
  kSequenceStream,
  kSupportingLineStream,
};

class Tracker
{
public:
  Tracker(std::string name, std::string anchor, double tolerance)
  {
    check_.name         = std::move(name);
    check_.paper_anchor = std::move(anchor);
    check_.tolerance    = tolerance;
  }

  void observe(double violation)
  {
    if (std::isnan(violation))
    {
      violation = kInf;
    }
    check_.worst_violation = std::max(check_.worst_violation, violation);
  }

  void fail(std::string const &diagnostic)
  {
    check_.worst_violation = kInf;
    check_.diagnostic      = diagnostic;
  }

  void set_instances(std::size_t n)
  {
    check_.instances = n;
  }

  PropertyCheck finish()
  {
    check_.passed = check_.worst_violation <= check_.tolerance;
    return check_;
  }

private:
  PropertyCheck check_;
};

// Runs `body(instance_index)` for every instance. A numerical exception ends
// the loop and marks every tracker as failed.
void run_instances(std::size_t instances, std::vector<Tracker *> const &trackers,
                   std::function<void(std::size_t)> const &body)
{
  std::size_t done = 0;
  try
  {
    for (; done < instances; ++done)
    {
      body(done);
    }
  }
  catch (std::exception const &e)
  {
    for (Tracker *t : trackers)
    {
      t->fail(std::string("instance ") + std::to_string(done) + ": " + e.what());
    }
  }
  for (Tracker *t : trackers)
  {
    t->set_instances(instances);
  }
}

std::vector<PropertyCheck> finish_all(std::vector<Tracker *> const &trackers)
{
  std::vector<PropertyCheck> out;
  for (Tracker *t : trackers)
  {
    out.push_back(t->finish());
  }
  return out;
}

std::string tagged(std::string const &check, DivergenceFunctional const &d)
{
  return check + "[" + d.name() + "]";
}

void require_right_convex(DivergenceFunctional const &d)
{
  if (d.orientation() != Orientation::RightConvex)
  {
    throw DomainError("check needs a right-convex divergence; apply swap_orientation to '" + d.name() +
                      "' first");
  }
}

void require_differentiable(DivergenceFunctional const &d)
{
  if (!d.differentiable())
  {
    throw DomainError("check needs a differentiable divergence, got '" + d.name() + "'");
  }
}

std::vector<double> linspace(double lo, double hi, std::size_t n)
{
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i)
  {
    v[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  }
  v.back() = hi;
  return v;
}

bool separated(Instance const &inst)
{
  return total_variation(inst.p, inst.q) > kSeparationFloor;
}

// Shortfall of the smallest consecutive increase below the strictness margin.
double strictness_shortfall(std::vector<double> const &values)
{
  double shortfall = 0.0;
  for (std::size_t i = 1; i < values.size(); ++i)
  {
    shortfall = std::max(shortfall, kStrictMargin - (values[i] - values[i - 1]));
  }
  return std::max(0.0, shortfall);
}

// Violation of lambda D(P||Q1) + (1-lambda) D(P||Q2) >= D(P||lambda Q1 + (1-lambda) Q2).
double mixture_violation(std::function<double(Distribution const &)> const &d_of_second,
                         Distribution const &q1, Distribution const &q2, double lambda)
{
  Distribution const mixed = MixturePath(q2, q1).at(lambda);
  double const       lhs   = lambda * d_of_second(q1) + (1.0 - lambda) * d_of_second(q2);
  return std::max(0.0, d_of_second(mixed) - lhs);
}

std::vector<double> chain_grid(double t)
{
  std::vector<double> grid = linspace(0.0, 1.0, 11);
  bool                far  = std::all_of(grid.begin(), grid.end(), [t](double g) { return std::abs(g - t) > 1e-3; });
  if (far)
  {
    grid.push_back(t);
    std::sort(grid.begin(), grid.end());
  }
  return grid;
}

}  // namespace

InstanceSampler::InstanceSampler(std::uint64_t seed, std::uint64_t stream)
{
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream)};
  engine_.seed(seq);
}

Distribution InstanceSampler::distribution(std::size_t n)
{
  return random_distribution(n, engine_, kMinMass);
}

double InstanceSampler::uniform()
{
  return unit_interval(engine_);
}

Instance InstanceSampler::next()
{
  std::size_t const index = drawn_++;
  std::size_t const n     = 2 + static_cast<std::size_t>(engine_() % 9);
  Distribution      p     = distribution(n);
  Distribution      q     = distribution(n);
  if (index % 10 == 9)
  {
    q = p;
  }
  double t = 0.0;
  if (index % 2 == 0)
  {
    t = static_cast<double>(engine_() % 11) / 10.0;
  }
  else
  {
    t = uniform();
  }
  return {std::move(p), std::move(q), t};
}

std::vector<PropertyCheck> check_divergence(DivergenceFunctional const &d, std::size_t instances,
                                            std::uint64_t seed)
{
  require_right_convex(d);
  Tracker axioms(tagged("divergence_axioms", d), "D(P||Q) >= 0, D(P||Q) = 0 iff P = Q", 0.0);
  Tracker convex(tagged("right_convexity", d),
                 "lambda D(P||Q1) + (1-lambda) D(P||Q2) >= D(P||lambda Q1 + (1-lambda) Q2)", 1e-10);
  Tracker midpoint(tagged("path_convexity", d), "t -> D(P||R(t)) is convex", 1e-10);

  InstanceSampler sampler(seed, kDivergenceStream);
  run_instances(instances, {&axioms, &convex, &midpoint}, [&](std::size_t) {
    Instance const inst  = sampler.next();
    double const   value = d(inst.p, inst.q);
    double         v     = std::max(-value, std::abs(d(inst.p, inst.p)));
    double         gap   = 0.0;
    for (std::size_t i = 0; i < inst.p.size(); ++i)
    {
      gap = std::max(gap, std::abs(inst.p[i] - inst.q[i]));
    }
    if (gap >= 1e-12)
    {
      v = std::max(v, kStrictMargin * 1e-3 - value);
    }
    else
    {
      v = std::max(v, std::abs(value));
    }
    axioms.observe(v);

    Distribution const q2     = sampler.distribution(inst.p.size());
    double const       lambda = sampler.uniform();
    convex.observe(mixture_violation([&](Distribution const &q) { return d(inst.p, q); }, inst.q, q2, lambda));

    MixturePath const path(inst.p, inst.q);
    double const      t1 = sampler.uniform();
    double const      t2 = sampler.uniform();
    double const      mid = d(inst.p, path.at(0.5 * (t1 + t2)));
    midpoint.observe(std::max(0.0, mid - 0.5 * (d(inst.p, path.at(t1)) + d(inst.p, path.at(t2)))));
  });
  return finish_all({&axioms, &convex, &midpoint});
}

std::vector<PropertyCheck> check_theorem1(DivergenceFunctional const &d, std::size_t instances,
                                          std::uint64_t seed)
{
  require_right_convex(d);
  Tracker sandwich(tagged("psi_sandwich", d), "D(P||R(t)) >= Psi[D](P||R(t)) >= 0", 1e-9);
  Tracker convex(tagged("psi_right_convexity", d), "Psi[D] is a right-convex divergence", 1e-9);
  Tracker strict(tagged("psi_strict_increase", d), "P != Q: t -> Psi[D](P||R(t)) strictly increasing", 0.0);

  InstanceSampler sampler(seed, kPsiStream);
  auto const      grid = linspace(0.0, 1.0, 20);
  run_instances(instances, {&sandwich, &convex, &strict}, [&](std::size_t) {
    Instance const    inst = sampler.next();
    MixturePath const path(inst.p, inst.q);
    double const      value = d(inst.p, path.at(inst.t));
    double const      lower = psi(d, path, inst.t).value;
    sandwich.observe(std::max(lower - value, -lower));

    Distribution const q2     = sampler.distribution(inst.p.size());
    double const       lambda = sampler.uniform();
    convex.observe(mixture_violation(
        [&](Distribution const &q) { return psi(d, MixturePath(inst.p, q), inst.t).value; }, inst.q, q2,
        lambda));

    if (separated(inst))
    {
      std::vector<double> along;
      for (double t : grid)
      {
        along.push_back(psi(d, path, t).value);
      }
      strict.observe(strictness_shortfall(along));
    }
  });
  return finish_all({&sandwich, &convex, &strict});
}

std::vector<PropertyCheck> check_theorem2(DivergenceFunctional const &d, int depth,
                                          std::size_t instances, std::uint64_t seed)
{
  require_right_convex(d);
  if (depth < 0)
  {
    throw DomainError("depth must be nonnegative");
  }
  Tracker chain(tagged("psi_iter_chain", d), "D >= Psi[D] >= Psi^2[D] >= ... >= Psi^k[D] >= 0", 1e-9);
  Tracker strict(tagged("psi_iter_strict_increase", d), "P != Q: each Psi^k[D](P||R(t)) strictly increasing in t",
                 0.0);
  std::vector<Tracker *> trackers{&chain, &strict};

  std::function<double(int, Distribution const &, Distribution const &)> closed_form;
  std::string                                                            closed_anchor;
  if (d.name() == "chi2")
  {
    closed_form   = [](int k, Distribution const &p, Distribution const &r) { return pl(k, p, r); };
    closed_anchor = "PL_k(P||R(t)) = Psi^k[PL_0](P||R(t))";
  }
  else if (d.name() == "jeffreys")
  {
    closed_form   = [](int k, Distribution const &p, Distribution const &r) { return sl(k, p, r); };
    closed_anchor = "SL_k(P||R(t)) = Psi^k[SL_0](P||R(t))";
  }
  Tracker closed(tagged("psi_iter_closed_form", d), closed_anchor, 1e-6);
  if (closed_form)
  {
    trackers.push_back(&closed);
  }

  InstanceSampler sampler(seed, kPsiIterStream);
  run_instances(instances, trackers, [&](std::size_t) {
    Instance const    inst = sampler.next();
    MixturePath const path(inst.p, inst.q);
    auto const        grid = chain_grid(inst.t);
    auto const        rows = psi_iter(d, depth, path, grid);

    for (std::size_t i = 0; i < grid.size(); ++i)
    {
      for (int k = 0; k < depth; ++k)
      {
        chain.observe(rows[k + 1][i] - rows[k][i]);
      }
      chain.observe(-rows[depth][i]);
    }
    if (separated(inst))
    {
      for (auto const &row : rows)
      {
        strict.observe(strictness_shortfall(row));
      }
    }
    if (closed_form)
    {
      for (std::size_t i = 0; i < grid.size(); ++i)
      {
        Distribution const r = path.at(grid[i]);
        for (int k = 0; k <= depth; ++k)
        {
          closed.observe(std::abs(rows[k][i] - closed_form(k, inst.p, r)));
        }
      }
    }
  });
  return finish_all(trackers);
}

std::vector<PropertyCheck> check_theorem3(DivergenceFunctional const &d, std::size_t instances,
                                          std::uint64_t seed)
{
  require_right_convex(d);
  require_differentiable(d);
  Tracker head(tagged("psi_inverse_head", d), "Psi^-1[D](P||R(t)) >= D(P||R(t)) >= Psi[D](P||R(t))", 1e-9);
  Tracker strict_inverse(tagged("psi_inverse_strict_increase", d),
                         "P != Q: t -> Psi^-1[D](P||R(t)) strictly increasing", 0.0);
  Tracker strict_path(tagged("path_strict_increase", d),
                      "differentiable right-convex D, P != Q: t -> D(P||R(t)) strictly increasing", 0.0);
  std::vector<Tracker *> trackers{&head, &strict_inverse, &strict_path};

  Tracker derivative(tagged("path_derivative_agreement", d), "analytic d/dt D(P||R(t)) = finite differences",
                     1e-6);
  if (d.has_analytic_derivative())
  {
    trackers.push_back(&derivative);
  }
  Tracker hellinger(tagged("hellinger_closed_forms", d),
                    "Psi^-1[Hel^2] = Hel^2 + 1/2 sum (sqrt r - sqrt p)^2 sqrt(p/r); "
                    "Psi[Hel^2] = 2 Hel^2 + 2 sum p log((sqrt p + sqrt r)/(2 sqrt p))",
                    1e-6);
  bool const is_hellinger = d.name() == "hellinger2";
  if (is_hellinger)
  {
    trackers.push_back(&hellinger);
  }

  InstanceSampler sampler(seed, kPsiInverseStream);
  auto const      grid = linspace(0.0, 1.0, 20);
  run_instances(instances, trackers, [&](std::size_t) {
    Instance const    inst = sampler.next();
    MixturePath const path(inst.p, inst.q);
    double const      value = d(inst.p, path.at(inst.t));
    double const      upper = psi_inverse(d, path, inst.t);
    double const      lower = psi(d, path, inst.t).value;
    head.observe(std::max(value - upper, lower - value));

    if (separated(inst))
    {
      std::vector<double> inverse_along;
      std::vector<double> d_along;
      for (double t : grid)
      {
        inverse_along.push_back(psi_inverse(d, path, t));
        d_along.push_back(d(inst.p, path.at(t)));
      }
      strict_inverse.observe(strictness_shortfall(inverse_along));
      strict_path.observe(strictness_shortfall(d_along));
    }

    if (d.has_analytic_derivative())
    {
      double const numeric = differentiate_on_unit_interval(
          [&](double a, double b) { return d(inst.p, path.at(b)) - d(inst.p, path.at(a)); }, inst.t);
      derivative.observe(std::abs(path_derivative(d, path, inst.t) - numeric));
    }
    if (is_hellinger)
    {
      hellinger.observe(std::max(std::abs(upper - hellinger_psi_inverse(inst.p, inst.q, inst.t)),
                                 std::abs(lower - hellinger_psi(inst.p, inst.q, inst.t))));
    }
  });
  return finish_all(trackers);
}

PropertyCheck check_lemma1(DivergenceFunctional const &d, std::size_t instances, std::uint64_t seed)
{
  require_right_convex(d);
  Tracker invariance(tagged("path_invariance", d),
                     "Psi[D] and Psi^-1[D] along P->Q at t equal their values along P->R(t) at 1", 1e-8);
  InstanceSampler sampler(seed, kInvarianceStream);
  run_instances(instances, {&invariance}, [&](std::size_t) {
    Instance const    inst = sampler.next();
    MixturePath const path(inst.p, inst.q);
    MixturePath const reparam = path.truncated(inst.t);
    invariance.observe(std::abs(psi(d, path, inst.t).value - psi(d, reparam, 1.0).value));
    if (d.differentiable())
    {
      invariance.observe(std::abs(psi_inverse(d, path, inst.t) - psi_inverse(d, reparam, 1.0)));
    }
  });
  return invariance.finish();
}

PropertyCheck check_roundtrip(DivergenceFunctional const &d, std::size_t instances, std::uint64_t seed)
{
  require_differentiable(d);
  Tracker         roundtrip(tagged("roundtrip", d), "Psi o Psi^-1 = Psi^-1 o Psi = 1", 1e-6);
  InstanceSampler sampler(seed, kRoundtripStream);
  run_instances(instances, {&roundtrip}, [&](std::size_t) {
    Instance const    inst = sampler.next();
    double const      t    = inst.t > 0.0 ? inst.t : 0.5;
    MixturePath const path(inst.p, inst.q);
    double const      value      = d(inst.p, path.at(t));
    auto const [first, second]   = psi_roundtrip(d, path, t);
    roundtrip.observe(std::max(std::abs(first - value), std::abs(second - value)));
  });
  return roundtrip.finish();
}

std::vector<PropertyCheck> check_sequences(std::size_t instances, std::uint64_t seed)
{
  constexpr int kDepth = 4;
  Tracker pl_chain("pl_chain", "PL_0 >= PL_1 >= ... >= PL_4 >= 0", 1e-9);
  Tracker sl_chain("sl_chain", "SL_0 >= SL_1 >= ... >= SL_4 >= 0", 1e-9);
  Tracker sl1("sl1_reverse_kl", "SL_1(P||Q) = KL(Q||P)", 1e-12);
  Tracker chi2_kl("psi_chi2_is_kl", "Psi[chi^2](P||R(t)) = KL(P||R(t))", 1e-6);
  Tracker jeffreys_id("psi_jeffreys_identity", "Psi[J](P||R(t)) = J(P,R(t)) - PL_1(P||R(t))", 1e-6);
  Tracker pl_convex("pl_right_convexity", "PL_k right-convex, k = 0..4", 1e-9);
  Tracker sl_convex("sl_right_convexity", "SL_k right-convex, k = 1..4", 1e-9);
  Tracker sl0_convex("sl0_right_convexity", "SL_0 = J right-convex", 1e-9);
  std::vector<Tracker *> trackers{&pl_chain, &sl_chain, &sl1, &chi2_kl, &jeffreys_id, &pl_convex, &sl_convex,
                                  &sl0_convex};

  auto const kl = named::kl();
  auto const chi2 = named::chi2();
  auto const jeffreys = named::jeffreys();

  // Closed forms are cheap, so the chains get at least 500 pairs.
  std::size_t const pairs = std::max<std::size_t>(instances, 500);
  InstanceSampler   sampler(seed, kSequenceStream);
  run_instances(pairs, trackers, [&](std::size_t i) {
    Instance const inst = sampler.next();
    double         prev_pl = pl(0, inst.p, inst.q);
    double         prev_sl = sl(0, inst.p, inst.q);
    for (int k = 1; k <= kDepth; ++k)
    {
      double const cur_pl = pl(k, inst.p, inst.q);
      double const cur_sl = sl(k, inst.p, inst.q);
      pl_chain.observe(cur_pl - prev_pl);
      sl_chain.observe(cur_sl - prev_sl);
      prev_pl = cur_pl;
      prev_sl = cur_sl;
    }
    pl_chain.observe(-prev_pl);
    sl_chain.observe(-prev_sl);
    sl1.observe(std::abs(sl(1, inst.p, inst.q) - kl(inst.q, inst.p)));

    Distribution const q2     = sampler.distribution(inst.p.size());
    double const       lambda = sampler.uniform();
    for (int k = 0; k <= kDepth; ++k)
    {
      pl_convex.observe(mixture_violation([&](Distribution const &q) { return pl(k, inst.p, q); }, inst.q, q2,
                                          lambda));
      Tracker &target = k == 0 ? sl0_convex : sl_convex;
      target.observe(mixture_violation([&](Distribution const &q) { return sl(k, inst.p, q); }, inst.q, q2,
                                       lambda));
    }

    if (i < instances)
    {
      MixturePath const  path(inst.p, inst.q);
      Distribution const r = path.at(inst.t);
      chi2_kl.observe(std::abs(psi(chi2, path, inst.t).value - kl(inst.p, r)));
      jeffreys_id.observe(std::abs(psi(jeffreys, path, inst.t).value - (jeffreys(inst.p, r) - pl(1, inst.p, r))));
    }
  });
  chi2_kl.set_instances(instances);
  jeffreys_id.set_instances(instances);
  return finish_all(trackers);
}

std::vector<PropertyCheck> check_polylog()
{
  Tracker agreement("polylog_strategy_agreement", "power series = integral representation", 1e-9);
  Tracker recurrence("polylog_recurrence", "Li_{k+1}(z) = int_0^z Li_k(x)/x dx", 1e-8);
  Tracker shape("polylog_sign_monotonicity", "sign(Li_k(z)) = sign(z) and Li_k increasing in z", 0.0);

  std::size_t count = 0;
  run_instances(1, {&agreement}, [&](std::size_t) {
    for (int k : {2, 3, 4})
    {
      for (double z : {-0.9, -0.5, -0.1, 0.1, 0.5, 0.9})
      {
        agreement.observe(std::abs(polylog_series(k, z) - polylog_integral(k, z)));
        ++count;
      }
    }
  });
  agreement.set_instances(count);

  count = 0;
  run_instances(1, {&recurrence}, [&](std::size_t) {
    for (int k : {1, 2, 3})
    {
      for (double z : {-3.0, -1.0, -0.5, 0.5, 0.9})
      {
        recurrence.observe(std::abs(polylog(k + 1, z) - polylog_recurrence_check(k, z)));
        ++count;
      }
    }
  });
  recurrence.set_instances(count);

  auto const zs = linspace(-50.0, 0.99, 200);
  count         = 0;
  run_instances(1, {&shape}, [&](std::size_t) {
    for (int k = 0; k <= 4; ++k)
    {
      double prev = -kInf;
      for (double z : zs)
      {
        double const v = polylog(k, z);
        shape.observe(z < 0.0 ? std::max(0.0, v) : (z > 0.0 ? std::max(0.0, -v) : std::abs(v)));
        shape.observe(prev >= v ? prev - v + kStrictMargin : 0.0);
        prev = v;
        ++count;
      }
    }
  });
  shape.set_instances(count);
  return finish_all({&agreement, &recurrence, &shape});
}

namespace {

struct Generator
{
  char const                   *name;
  std::function<double(double)> F;
  std::function<double(double)> F_prime;
};

std::vector<Generator> bregman_generators()
{
  return {
      {"x log x", [](double x) { return x * std::log(x); }, [](double x) { return std::log(x) + 1.0; }},
      {"-log x", [](double x) { return -std::log(x); }, [](double x) { return -1.0 / x; }},
      {"x^2", [](double x) { return x * x; }, [](double x) { return 2.0 * x; }},
  };
}

}  // namespace

PropertyCheck check_supporting_line(std::size_t instances, std::uint64_t seed)
{
  Tracker line("supporting_line", "g(x) >= g(y) + g'(y)(x - y) and (y - x)(g'(y) - g'(x)) >= 0", 1e-12);
  InstanceSampler sampler(seed, kSupportingLineStream);
  auto const      generators = bregman_generators();
  run_instances(instances, {&line}, [&](std::size_t) {
    double const x = 0.01 + 0.99 * sampler.uniform();
    double const y = 0.01 + 0.99 * sampler.uniform();
    for (auto const &g : generators)
    {
      double const gap = g.F(x) - g.F(y) - g.F_prime(y) * (x - y);
      line.observe(-gap);
      line.observe(-(y - x) * (g.F_prime(y) - g.F_prime(x)));
    }
  });
  return line.finish();
}

std::vector<DivergenceFunctional> suite_divergences()
{
  auto const kl_bregman = make_bregman(
      {[](double x) { return x * std::log(x); }, [](double x) { return std::log(x) + 1.0; }}, "kl_bregman");
  auto const itakura_saito =
      make_bregman({[](double x) { return -std::log(x); }, [](double x) { return -1.0 / x; }}, "itakura_saito");
  auto const triangular = make_f_divergence(
      {[](double u) { return (u - 1.0) * (u - 1.0) / (u + 1.0); },
       [](double u) { return (u - 1.0) * (u + 3.0) / ((u + 1.0) * (u + 1.0)); }},
      "triangular");
  return {named::chi2(),       named::kl(), swap_orientation(kl_bregman), named::jeffreys(),
          named::hellinger2(), triangular,  swap_orientation(itakura_saito)};
}

VerificationReport run_suite(std::uint64_t seed, std::size_t instances)
{
  constexpr int kChainDepth = 4;

  VerificationReport report;
  report.seed = seed;
  auto append = [&](std::vector<PropertyCheck> checks) {
    for (auto &c : checks)
    {
      report.checks.push_back(std::move(c));
    }
  };

  for (auto const &d : suite_divergences())
  {
    append(check_divergence(d, instances, seed));
    append(check_theorem1(d, instances, seed));
    append(check_theorem2(d, kChainDepth, instances, seed));
    append(check_theorem3(d, instances, seed));
    append({check_lemma1(d, instances, seed)});
    append({check_roundtrip(d, instances, seed)});
  }
  append(check_sequences(instances, seed));
  append(check_polylog());
  append({check_supporting_line(instances, seed)});

  report.all_passed = std::all_of(report.checks.begin(), report.checks.end(),
                                  [](PropertyCheck const &c) { return c.passed; });
  return report;
}

std::string report_to_json(VerificationReport const &report)
{
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (auto const &c : report.checks)
  {
    nlohmann::ordered_json entry;
    entry["name"]         = c.name;
    entry["paper_anchor"] = c.paper_anchor;
    entry["instances"]    = c.instances;
    if (std::isfinite(c.worst_violation))
    {
      entry["worst_violation"] = c.worst_violation;
    }
    else
    {
      entry["worst_violation"] = nullptr;
    }
    entry["tolerance"] = c.tolerance;
    entry["passed"]    = c.passed;
    if (!c.diagnostic.empty())
    {
      entry["diagnostic"] = c.diagnostic;
    }
    checks.push_back(std::move(entry));
  }
  nlohmann::ordered_json root;
  root["seed"]       = report.seed;
  root["checks"]     = std::move(checks);
  root["all_passed"] = report.all_passed;
  return root.dump(2);
}

}  // namespace divseq
