#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "tropnewton/dispatch.hpp"

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tropical points, links and Newton polygons of polynomial ideals"};
  app.require_subcommand(1);

  tropnewton::CommandOptions opts;
  std::string path;
  bool json = false;

  const std::vector<std::pair<std::string, std::string>> commands{
      {"zerodim", "Tropical variety of a zero-dimensional ideal"},
      {"point", "A starting point of Trop(I) outside the homogeneity space"},
      {"link", "Rays of a tropical curve modulo its lineality space"},
      {"newton", "Expected Newton polygons at a weight"},
      {"triangulate", "Triangular decomposition of a zero-dimensional ideal"},
      {"groebner", "Reduced Groebner basis, dimension and homogeneity space"},
      {"verify", "Check a weight against the prevariety and, if possible, the variety"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", path, "Ideal file, or - for stdin")->required();
    sub->add_flag("--json", json, "Print the result document");
    sub->add_flag("--trace", opts.trace, "Include per-level choice traces");
    sub->add_flag("--timing", opts.timing, "Record wall-clock time in the document");
    sub->add_flag("-q,--quiet", opts.quiet, "Only warnings and errors on stderr");
    sub->add_option("--precision-cap", opts.precision_cap, "Largest root precision tried")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("--weight", opts.weight, "Comma-separated rationals or a weight name from the file");
    // zerodim, point and link share one flag set; flags a command does not
    // use are accepted and ignored.
    if (name == "zerodim" || name == "point" || name == "link") {
      sub->add_option("--seed", opts.seed, "Random seed")->capture_default_str();
      sub->add_option("--max-attempts", opts.max_attempts, "Random restarts before giving up (point)")
          ->check(CLI::PositiveNumber)
          ->capture_default_str();
      sub->add_flag("--pure-powers", opts.pure_powers, "Substitute t^w without random units (point)");
      sub->add_flag("--precondition", opts.precondition, "Random unimodular change of coordinates (link)");
      sub->add_flag("--paper-exact", opts.paper_exact, "Slice at t^(+-1) instead of around the base point (link)");
      sub->add_option("--jobs", opts.jobs, "Slices solved in parallel (link)")
          ->check(CLI::PositiveNumber)
          ->capture_default_str();
    }
    if (name == "point") {
      sub->add_option("--unit-bound", opts.unit_bound, "Random units are drawn from [1, N]")
          ->check(CLI::PositiveNumber)
          ->capture_default_str();
      sub->add_option("--substitute", opts.substitute, "Comma-separated values for the independent variables");
    }
    if (name == "newton") sub->add_option("--var", opts.var, "Variable of the polygon (default: the last)");
    if (name == "groebner") {
      sub->add_option("--order", opts.order, "Monomial order")
          ->check(CLI::IsMember({"lex", "degrevlex", "weighted"}))
          ->capture_default_str();
    }
  }

  try {
    app.parse(argc, argv);
    opts.command = app.get_subcommands().front()->get_name();
    opts.ideal_text = read_input(path);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  const auto result = tropnewton::dispatch(opts);
  const bool failed = result.status == tropnewton::Status::InputError || result.status == tropnewton::Status::ResourceLimit;
  if (json) {
    std::cout << result.json;
  } else {
    (failed ? std::cerr : std::cout) << result.text;
  }
  return tropnewton::exit_code(result.status);
}
