#include "fairauction/cli.hpp"

#include "fairauction/generator.hpp"
#include "fairauction/instance_io.hpp"
#include "fairauction/report.hpp"
#include "fairauction/sweep.hpp"

#include <CLI11.hpp>

#include <ostream>
#include <sstream>

namespace fairauction {

namespace {

struct SolveOptions
{
  std::string file;
  std::string format = "text";
  bool        oracle = false;
};

struct GenOptions
{
  std::uint64_t seed       = 1;
  std::size_t   resources  = 3;
  std::size_t   bidders    = 3;
  std::int64_t  max_amount = 20;
  std::size_t   max_bids   = 7;
  std::string   out;
};

struct SweepOptions
{
  std::string   file;
  std::string   axis;
  std::string   grid;
  std::string   out;
  std::uint64_t seed = 0;
};

int do_solve(SolveOptions const &opt, std::ostream &out)
{
  AuctionInstance const instance = load_instance(opt.file);
  SettlementReport const report = settle(instance);

  if (opt.oracle)
  {
    Allocation const oracle = solve_wdp_bruteforce(instance);
    if (!(oracle == report.allocation))
    {
      throw AuctionError(ErrorKind::OracleMismatch,
                         "branch and bound revenue " + report.allocation.revenue.to_exact() +
                             " vs exhaustive " + oracle.revenue.to_exact());
    }
  }

  if (opt.format == "json")
  {
    out << report_to_json(instance, report).dump(2) << '\n';
  }
  else
  {
    out << render_text(instance, report);
    if (opt.oracle)
    {
      out << "oracle: exhaustive search agrees\n";
    }
  }
  return kExitOk;
}

int do_gen(GenOptions const &opt, std::ostream &out)
{
  GeneratorConfig config;
  config.seed                = opt.seed;
  config.resources           = opt.resources;
  config.bidders             = opt.bidders;
  config.max_amount          = opt.max_amount;
  config.max_bids_per_bidder = opt.max_bids;
  write_text_file(opt.out, serialize_instance(generate_instance(config)));
  out << "wrote " << opt.out << '\n';
  return kExitOk;
}

std::vector<Rational> parse_grid(std::string const &text)
{
  std::vector<Rational> grid;
  std::stringstream     ss(text);
  std::string           token;
  while (std::getline(ss, token, ','))
  {
    Rational const v = parse_rational(token);
    if (v < 0)
    {
      throw std::invalid_argument("grid values must be non-negative: " + token);
    }
    grid.push_back(v);
  }
  if (grid.empty())
  {
    throw std::invalid_argument("empty grid");
  }
  return grid;
}

int do_sweep(SweepOptions const &opt, std::ostream &out, std::ostream &err)
{
  auto const axis = parse_axis(opt.axis);
  if (!axis)
  {
    err << "unknown axis '" << opt.axis << "'\n";
    return kExitInput;
  }
  std::vector<Rational> grid;
  try
  {
    grid = parse_grid(opt.grid);
  }
  catch (std::invalid_argument const &e)
  {
    err << "bad --grid: " << e.what() << '\n';
    return kExitInput;
  }

  AuctionInstance const base  = load_instance(opt.file);
  SweepReport const     sweep = sweep_propositions(base, *axis, grid, opt.seed);
  write_text_file(opt.out, sweep_to_json(base, sweep).dump(2) + "\n");
  out << "wrote " << opt.out << " (" << sweep.samples.size() << " samples)\n";
  return kExitOk;
}

}  // namespace

int run_cli(std::vector<std::string> const &args, std::ostream &out, std::ostream &err)
{
  CLI::App app{"Fairness-adjusted combinatorial auction settlement"};
  app.require_subcommand(1);

  SolveOptions solve_opt;
  auto *solve = app.add_subcommand("solve", "Settle an auction instance file");
  solve->add_option("file", solve_opt.file, "Instance JSON")->required();
  solve->add_option("--format", solve_opt.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  solve->add_flag("--oracle", solve_opt.oracle, "Cross-check against exhaustive search");

  GenOptions gen_opt;
  auto *gen = app.add_subcommand("gen", "Generate a random instance");
  gen->add_option("--seed", gen_opt.seed)->required();
  gen->add_option("--resources", gen_opt.resources)->required()->check(CLI::Range(1, 64));
  gen->add_option("--bidders", gen_opt.bidders)->required()->check(CLI::PositiveNumber);
  gen->add_option("--max-amount", gen_opt.max_amount)->required()->check(CLI::PositiveNumber);
  gen->add_option("--max-bids-per-bidder", gen_opt.max_bids)->check(CLI::PositiveNumber);
  gen->add_option("--out", gen_opt.out)->required();

  SweepOptions sweep_opt;
  auto *sweep = app.add_subcommand("sweep", "Rescale one quantity over a grid and settle");
  sweep->add_option("file", sweep_opt.file, "Base instance JSON")->required();
  sweep->add_option("--axis", sweep_opt.axis)->required();
  sweep->add_option("--grid", sweep_opt.grid, "Comma-separated factors, e.g. 0.5,1,2")
      ->required();
  sweep->add_option("--out", sweep_opt.out)->required();
  sweep->add_option("--seed", sweep_opt.seed);

  std::vector<char const *> argv;
  argv.reserve(args.size());
  for (auto const &a : args)
  {
    argv.push_back(a.c_str());
  }

  try
  {
    app.parse(static_cast<int>(argv.size()), argv.data());
  }
  catch (CLI::CallForHelp const &)
  {
    out << app.help();
    return kExitOk;
  }
  catch (CLI::ParseError const &e)
  {
    err << e.what() << '\n';
    return kExitInput;
  }

  try
  {
    if (*solve)
    {
      return do_solve(solve_opt, out);
    }
    if (*gen)
    {
      return do_gen(gen_opt, out);
    }
    return do_sweep(sweep_opt, out, err);
  }
  catch (ValidationError const &e)
  {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  catch (AuctionError const &e)
  {
    err << "error: " << e.what() << '\n';
    return is_input_error(e.kind()) ? kExitInput : kExitInternal;
  }
  catch (std::invalid_argument const &e)
  {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  catch (std::exception const &e)
  {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace fairauction
