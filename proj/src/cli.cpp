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

#include "divseq/cli.hpp"

#include "divseq/distribution.hpp"
#include "divseq/divergence.hpp"
#include "divseq/errors.hpp"
#include "divseq/operators.hpp"
#include "divseq/polylog.hpp"
#include "divseq/sequences.hpp"
#include "divseq/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace divseq {

namespace {

struct Options
{
  std::string                 pair;
  std::string                 file;
  std::string                 div;
  std::string                 seq;
  int                         k     = 1;
  double                      t     = 1.0;
  std::string                 grid  = "0:1:11";
  int                         depth = 0;
  std::optional<double>       tol;
  std::uint64_t               seed      = 42;
  std::size_t                 instances = 200;
  std::string                 format    = "csv";
  double                      z         = 0.5;
};

std::string format_value(double v)
{
  std::ostringstream os;
  os << std::setprecision(15) << v;
  return os.str();
}

QuadratureConfig quadrature_config(Options const &opt)
{
  QuadratureConfig cfg;
  if (opt.tol)
  {
    cfg.rel_tol = *opt.tol;
    cfg.abs_tol = *opt.tol * 1e-2;
  }
  cfg.validate();
  return cfg;
}

std::vector<double> json_masses(nlohmann::json const &doc, char const *key)
{
  if (!doc.is_object() || !doc.contains(key) || !doc[key].is_array())
  {
    throw DomainError(std::string("pair JSON needs an array \"") + key + "\"");
  }
  std::vector<double> masses;
  for (auto const &v : doc[key])
  {
    if (!v.is_number())
    {
      throw DomainError(std::string("non-numeric entry in \"") + key + "\"");
    }
    masses.push_back(v.get<double>());
  }
  return masses;
}

MixturePath load_pair(Options const &opt)
{
  std::string text = opt.pair;
  if (!opt.file.empty())
  {
    std::ifstream in(opt.file);
    if (!in)
    {
      throw DomainError("cannot read " + opt.file);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  if (text.empty())
  {
    throw DomainError("one of --pair or --file is required");
  }
  nlohmann::json const doc = nlohmann::json::parse(text);
  return MixturePath(Distribution(json_masses(doc, "p")), Distribution(json_masses(doc, "q")));
}

// Parses "start:stop:count" into an inclusive grid.
std::vector<double> parse_grid(std::string const &spec)
{
  auto const first  = spec.find(':');
  auto const second = spec.find(':', first == std::string::npos ? first : first + 1);
  if (first == std::string::npos || second == std::string::npos)
  {
    throw DomainError("grid must be start:stop:count, got '" + spec + "'");
  }
  double start = 0.0;
  double stop  = 0.0;
  long   count = 0;
  try
  {
    start = std::stod(spec.substr(0, first));
    stop  = std::stod(spec.substr(first + 1, second - first - 1));
    count = std::stol(spec.substr(second + 1));
  }
  catch (std::logic_error const &)
  {
    throw DomainError("grid must be start:stop:count, got '" + spec + "'");
  }
  if (count < 2 || !(0.0 <= start && start < stop && stop <= 1.0))
  {
    throw DomainError("grid needs count >= 2 and 0 <= start < stop <= 1");
  }
  std::vector<double> grid(static_cast<std::size_t>(count));
  for (long i = 0; i < count; ++i)
  {
    grid[static_cast<std::size_t>(i)] = start + (stop - start) * static_cast<double>(i) / static_cast<double>(count - 1);
  }
  grid.back() = stop;
  return grid;
}

void require_one_target(Options const &opt)
{
  if (opt.div.empty() == opt.seq.empty())
  {
    throw DomainError("exactly one of --div or --seq is required");
  }
}

double eval_value(Options const &opt)
{
  require_one_target(opt);
  MixturePath const path = load_pair(opt);
  Distribution const r   = path.at(opt.t);
  Distribution const &p  = path.start();

  if (!opt.seq.empty())
  {
    if (opt.seq == "pl")
    {
      return pl(opt.k, p, r);
    }
    if (opt.seq == "sl")
    {
      return sl(opt.k, p, r);
    }
    if (opt.seq == "hellinger-psi")
    {
      return hellinger_psi(p, path.end(), opt.t);
    }
    return hellinger_psi_inverse(p, path.end(), opt.t);
  }

  DivergenceFunctional const d = named_divergence(opt.div);
  if (opt.depth == -1)
  {
    return psi_inverse(d, path, opt.t);
  }
  if (opt.depth == 0)
  {
    return d(p, r);
  }
  if (opt.depth == 1)
  {
    return psi(d, path, opt.t, quadrature_config(opt)).value;
  }
  double const grid[] = {opt.t};
  return psi_iter(d, opt.depth, path, grid, quadrature_config(opt)).back().front();
}

// rows[k][i] for k = 0..depth over the grid.
std::vector<std::vector<double>> sweep_rows(Options const &opt, std::vector<double> const &grid)
{
  require_one_target(opt);
  MixturePath const path = load_pair(opt);
  if (!opt.div.empty())
  {
    return psi_iter(named_divergence(opt.div), opt.depth, path, grid, quadrature_config(opt));
  }
  if (opt.seq != "pl" && opt.seq != "sl")
  {
    throw DomainError("sweep supports --seq pl or sl");
  }
  SequenceFamily const family = opt.seq == "pl" ? SequenceFamily::PL : SequenceFamily::SL;
  std::vector<std::vector<double>> rows(static_cast<std::size_t>(opt.depth) + 1);
  for (int k = 0; k <= opt.depth; ++k)
  {
    for (double t : grid)
    {
      rows[static_cast<std::size_t>(k)].push_back(sequence_value(family, k, path.start(), path.at(t)));
    }
  }
  return rows;
}

void print_sweep(Options const &opt, std::vector<double> const &grid,
                 std::vector<std::vector<double>> const &rows, std::ostream &out)
{
  if (opt.format == "json")
  {
    nlohmann::ordered_json table = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < grid.size(); ++i)
    {
      for (std::size_t k = 0; k < rows.size(); ++k)
      {
        table.push_back({{"t", grid[i]}, {"k", k}, {"value", rows[k][i]}});
      }
    }
    out << table.dump(2) << '\n';
    return;
  }
  out << "t,k,value\n";
  for (std::size_t i = 0; i < grid.size(); ++i)
  {
    for (std::size_t k = 0; k < rows.size(); ++k)
    {
      out << format_value(grid[i]) << ',' << k << ',' << format_value(rows[k][i]) << '\n';
    }
  }
}

void add_pair_flags(CLI::App *cmd, Options &opt)
{
  auto *pair = cmd->add_option("--pair", opt.pair, R"(inline JSON {"p": [...], "q": [...]})");
  auto *file = cmd->add_option("--file", opt.file, "path to a pair JSON file");
  pair->excludes(file);
  file->excludes(pair);
}

void add_target_flags(CLI::App *cmd, Options &opt)
{
  auto ids = named_divergence_ids();
  cmd->add_option("--div", opt.div, "named divergence")->check(CLI::IsMember(ids));
  cmd->add_option("--tol", opt.tol, "quadrature relative tolerance")->check(CLI::PositiveNumber);
  cmd->add_option("--format", opt.format, "output format")->check(CLI::IsMember({"csv", "json"}));
}

}  // namespace

int run_cli(int argc, char const *const *argv, std::ostream &out, std::ostream &err)
{
  Options  opt;
  CLI::App app{"Divergence operators, polylogarithm divergence sequences and property verification"};
  app.name("divseq");
  app.require_subcommand(1);

  auto *eval = app.add_subcommand("eval", "evaluate a divergence, operator or sequence at R(t)");
  add_pair_flags(eval, opt);
  add_target_flags(eval, opt);
  eval->add_option("--seq", opt.seq, "sequence family")
      ->check(CLI::IsMember({"pl", "sl", "hellinger-psi", "hellinger-psi-inverse"}));
  eval->add_option("--k", opt.k, "sequence order")->check(CLI::NonNegativeNumber);
  eval->add_option("--t", opt.t, "path parameter in [0,1]")->check(CLI::Range(0.0, 1.0));
  eval->add_option("--depth", opt.depth, "operator depth; -1 applies the differential operator")
      ->check(CLI::Range(-1, 64));

  auto *sweep = app.add_subcommand("sweep", "tabulate Psi^k for k = 0..depth over a t-grid");
  add_pair_flags(sweep, opt);
  add_target_flags(sweep, opt);
  sweep->add_option("--seq", opt.seq, "sequence family")->check(CLI::IsMember({"pl", "sl"}));
  sweep->add_option("--t", opt.grid, "grid start:stop:count");
  sweep->add_option("--depth", opt.depth, "maximum operator depth")->check(CLI::Range(0, 64));

  auto *verify = app.add_subcommand("verify", "run the property suite and print a JSON report");
  verify->add_option("--seed", opt.seed, "RNG seed");
  verify->add_option("--instances", opt.instances, "instances per check")->check(CLI::PositiveNumber);

  auto *poly = app.add_subcommand("polylog", "evaluate Li_k(z)");
  poly->add_option("--k", opt.k, "order")->check(CLI::NonNegativeNumber);
  poly->add_option("--z", opt.z, "argument, z < 1")->required();

  try
  {
    app.parse(argc, argv);
  }
  catch (CLI::ParseError const &e)
  {
    int const code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try
  {
    if (eval->parsed())
    {
      double const v = eval_value(opt);
      if (opt.format == "json")
      {
        out << nlohmann::json{{"value", v}}.dump() << '\n';
      }
      else
      {
        out << format_value(v) << '\n';
      }
    }
    else if (sweep->parsed())
    {
      auto const grid = parse_grid(opt.grid);
      print_sweep(opt, grid, sweep_rows(opt, grid), out);
    }
    else if (verify->parsed())
    {
      VerificationReport const report = run_suite(opt.seed, opt.instances);
      out << report_to_json(report) << '\n';
      return report.all_passed ? kExitOk : kExitVerifyFailed;
    }
    else if (poly->parsed())
    {
      out << format_value(polylog(opt.k, opt.z)) << '\n';
    }
  }
  catch (ToleranceError const &e)
  {
    err << "divseq: tolerance failure: " << e.what() << '\n';
    return kExitToleranceFailure;
  }
  catch (DomainError const &e)
  {
    err << "divseq: " << e.what() << '\n';
    return kExitUsage;
  }
  catch (SpecError const &e)
  {
    err << "divseq: " << e.what() << '\n';
    return kExitUsage;
  }
  catch (nlohmann::json::exception const &e)
  {
    err << "divseq: invalid pair JSON: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace divseq
