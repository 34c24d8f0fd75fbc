#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "epsmult/cli.hpp"

using epsmult::cli::Command;
using epsmult::cli::Format;
using epsmult::cli::RunConfig;

namespace {

void add_options(CLI::App& sub, RunConfig& cfg, unsigned& n_max, unsigned& corpus) {
  sub.add_option("-i,--ideal", cfg.ideal, "ideal (semigroup for 'semigroup'): file or text");
  sub.add_option("--inner", cfg.inner, "inner ideal for amao");
  sub.add_option("--outer", cfg.outer, "outer ideal for amao");
  sub.add_option("--dim", cfg.dim, "ambient dimension floor for human syntax");
  sub.add_option("--nmax", n_max, "sequence length, or n probe for okounkov-volume");
  sub.add_option("--mmax", cfg.m_max, "largest m of the Theorem A table")->capture_default_str();
  sub.add_option("--kmax", cfg.k_max, "length sequence cap for Amao multiplicities")
      ->capture_default_str();
  sub.add_option("--beta", cfg.beta, "truncation slope")->capture_default_str();
  sub.add_option("--window", cfg.window, "stabilization window")->capture_default_str();
  sub.add_option("--format", cfg.format, "csv or json")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{{"csv", Format::csv}, {"json", Format::json}}))
      ->option_text("csv|json [csv]");
  sub.add_option("--seed", cfg.seed, "corpus seed")->capture_default_str();
  sub.add_option("--corpus", corpus, "random corpus size for lemmas");
  sub.add_option("--imax", cfg.i_max, "largest power in the containment check")
      ->capture_default_str();
  sub.add_option("--cmax", cfg.c_max, "largest c in the grid search")->capture_default_str();
  sub.add_option("--mk-bound", cfg.mk_bound, "grid bound on m*k")->capture_default_str();
  sub.add_option("--out", cfg.out, "output file (default stdout)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Epsilon and Amao multiplicities of monomial ideals"};
  app.require_subcommand(1);

  RunConfig cfg;
  unsigned n_max = 0;
  unsigned corpus = 0;
  struct Entry {
    Command command;
    const char* help;
  };
  const Entry entries[] = {
      {Command::epsilon, "normalized lengths of (I^n)^sat / I^n"},
      {Command::amao, "Amao multiplicity a(inner, outer)"},
      {Command::theorem_a, "a(I^m, (I^m)^sat) / m^d table and the epsilon sequence"},
      {Command::okounkov_volume, "volume difference of truncated value semigroups"},
      {Command::semigroup, "counts, volumes and cone conditions of a semigroup"},
      {Command::lemmas, "containment and grid-c checks on an ideal or a random corpus"},
  };
  std::vector<std::pair<CLI::App*, Command>> subs;
  for (const auto& e : entries) {
    auto* sub = app.add_subcommand(std::string(epsmult::cli::command_name(e.command)), e.help);
    add_options(*sub, cfg, n_max, corpus);
    subs.emplace_back(sub, e.command);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return epsmult::cli::exit_code::parse;
  }

  for (const auto& [sub, command] : subs) {
    if (!sub->parsed()) continue;
    cfg.command = command;
    if (sub->count("--nmax")) cfg.n_max = n_max;
    if (sub->count("--corpus")) cfg.corpus = corpus;
  }
  return epsmult::cli::run(cfg, std::cout, std::cerr);
}
