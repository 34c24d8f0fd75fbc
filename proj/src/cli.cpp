#include "epsmult/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "epsmult/colength.hpp"
#include "epsmult/corpus.hpp"
#include "epsmult/errors.hpp"
#include "epsmult/multiplicity.hpp"
#include "epsmult/okounkov.hpp"
#include "epsmult/parse.hpp"

namespace epsmult::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr std::pair<Command, std::string_view> kCommandNames[] = {
    {Command::epsilon, "epsilon"},
    {Command::amao, "amao"},
    {Command::theorem_a, "theorem-a"},
    {Command::okounkov_volume, "okounkov-volume"},
    {Command::semigroup, "semigroup"},
    {Command::lemmas, "lemmas"},
};

// Rounds of beta doubling tried by okounkov-volume.
constexpr unsigned kBetaRounds = 4;

ordered_json integer_json(const Integer& z) {
  if (z >= std::numeric_limits<std::int64_t>::min() &&
      z <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(z);
  return z.str();
}

ordered_json rational_json(const Rational& q) {
  return ordered_json{{"num", integer_json(numerator_of(q))},
                      {"den", integer_json(denominator_of(q))},
                      {"decimal", to_decimal(q)}};
}

ordered_json ideal_json(const MonomialIdeal& ideal) {
  ordered_json gens = ordered_json::array();
  for (const auto& g : ideal.generators())
    gens.push_back(std::vector<Exponent>(g.begin(), g.end()));
  return ordered_json{{"dim", ideal.dim()}, {"generators", std::move(gens)}};
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string one_line(std::string s) {
  std::replace_if(s.begin(), s.end(), [](char c) { return c == '\n' || c == '\r'; },
                  ' ');
  return s;
}

// Report under construction: config header, then body.
class Writer {
 public:
  explicit Writer(const RunConfig& cfg) : cfg_(cfg) {
    for (auto& [key, value] : config_entries()) {
      if (csv()) text_ << "# " << key << '=' << one_line(value) << '\n';
      json_["config"][key] = value;
    }
  }

  bool csv() const noexcept { return cfg_.format == Format::csv; }
  std::ostringstream& text() noexcept { return text_; }
  ordered_json& json() noexcept { return json_; }

  void note(const std::string& key, const std::string& value) {
    if (csv()) text_ << "# " << key << '=' << one_line(value) << '\n';
  }

  std::string finish() {
    if (csv()) return text_.str();
    return json_.dump(2) + "\n";
  }

 private:
  std::vector<std::pair<std::string, std::string>> config_entries() const {
    const auto fmt = cfg_.format == Format::csv ? "csv" : "json";
    return {
        {"command", std::string(command_name(cfg_.command))},
        {"ideal", cfg_.ideal},
        {"inner", cfg_.inner},
        {"outer", cfg_.outer},
        {"dim", std::to_string(cfg_.dim)},
        {"nmax", std::to_string(cfg_.effective_n_max())},
        {"mmax", std::to_string(cfg_.m_max)},
        {"kmax", std::to_string(cfg_.k_max)},
        {"beta", std::to_string(cfg_.beta)},
        {"window", std::to_string(cfg_.window)},
        {"format", fmt},
        {"seed", std::to_string(cfg_.seed)},
        {"corpus", std::to_string(cfg_.effective_corpus())},
        {"imax", std::to_string(cfg_.i_max)},
        {"cmax", std::to_string(cfg_.c_max)},
        {"mk-bound", std::to_string(cfg_.mk_bound)},
    };
  }

  const RunConfig& cfg_;
  std::ostringstream text_;
  ordered_json json_;
};

void require_positive(unsigned value, const char* flag) {
  if (value == 0) throw PreconditionError(std::string(flag) + " must be positive");
}

void validate(const RunConfig& cfg) {
  require_positive(cfg.effective_n_max(), "--nmax");
  require_positive(cfg.m_max, "--mmax");
  require_positive(cfg.k_max, "--kmax");
  require_positive(cfg.beta, "--beta");
  require_positive(cfg.window, "--window");
  require_positive(cfg.i_max, "--imax");
  require_positive(cfg.c_max, "--cmax");
  require_positive(cfg.mk_bound, "--mk-bound");
}

MonomialIdeal require_ideal(const RunConfig& cfg) {
  if (cfg.ideal.empty()) throw PreconditionError("this command needs -i/--ideal");
  return load_ideal(cfg.ideal, ParseOptions{.min_dim = cfg.dim});
}

void epsilon_body(Writer& w, const MonomialIdeal& ideal, unsigned n_max) {
  const auto est = epsilon_sequence(ideal, n_max);
  if (w.csv()) {
    w.text() << "n,length,e_n(num),e_n(den)\n";
    for (unsigned n = 1; n <= n_max; ++n) {
      const auto& e = est.sequence[n - 1];
      w.text() << n << ',' << est.lengths[n - 1] << ',' << numerator_of(e) << ','
               << denominator_of(e) << '\n';
    }
    return;
  }
  ordered_json rows = ordered_json::array();
  for (unsigned n = 1; n <= n_max; ++n)
    rows.push_back({{"n", n},
                    {"length", integer_json(est.lengths[n - 1])},
                    {"e_n", rational_json(est.sequence[n - 1])}});
  w.json()["epsilon"] = std::move(rows);
}

int cmd_epsilon(const RunConfig& cfg, Writer& w) {
  const auto ideal = require_ideal(cfg);
  w.note("ideal_parsed", to_string(ideal));
  if (!w.csv()) w.json()["ideal"] = ideal_json(ideal);
  epsilon_body(w, ideal, cfg.effective_n_max());
  return exit_code::ok;
}

int cmd_amao(const RunConfig& cfg, Writer& w) {
  if (cfg.inner.empty() || cfg.outer.empty())
    throw PreconditionError("amao needs --inner and --outer");
  ParseOptions opts{.min_dim = cfg.dim};
  auto inner = load_ideal(cfg.inner, opts);
  auto outer = load_ideal(cfg.outer, opts);
  if (inner.dim() != outer.dim()) {
    opts.min_dim = std::max(inner.dim(), outer.dim());
    inner = load_ideal(cfg.inner, opts);
    outer = load_ideal(cfg.outer, opts);
  }
  if (inner.dim() != outer.dim())
    throw DimensionMismatch("inner and outer ideals live in different dimensions");
  if (!is_subideal(inner, outer)) throw PreconditionError("inner not contained in outer");
  const auto r = amao(inner, outer, cfg.k_max, cfg.window);
  w.note("inner_parsed", to_string(inner));
  w.note("outer_parsed", to_string(outer));
  if (w.csv()) {
    w.text() << "a,stabilized_at,window,k_used\n";
    w.text() << (r.value ? r.value->str() : std::string("inconclusive")) << ','
             << r.stabilized_at << ',' << r.window << ',' << r.k_used << '\n';
  } else {
    w.json()["inner"] = ideal_json(inner);
    w.json()["outer"] = ideal_json(outer);
    w.json()["amao"] = {{"value", r.value ? integer_json(*r.value) : ordered_json()},
                        {"conclusive", r.conclusive()},
                        {"stabilized_at", r.stabilized_at},
                        {"window", r.window},
                        {"k_used", r.k_used}};
  }
  return r.conclusive() ? exit_code::ok : exit_code::inconclusive;
}

int cmd_theorem_a(const RunConfig& cfg, Writer& w) {
  const auto ideal = require_ideal(cfg);
  w.note("ideal_parsed", to_string(ideal));
  const auto rows = theorem_a_table(ideal, cfg.m_max, cfg.k_max, cfg.window);
  bool all_conclusive = true;
  if (w.csv()) {
    w.text() << "m,a_m,ratio_num,ratio_den,stabilized_at\n";
    for (const auto& row : rows) {
      w.text() << row.m << ',';
      if (row.ratio) {
        w.text() << *row.amao.value << ',' << numerator_of(*row.ratio) << ','
                 << denominator_of(*row.ratio) << ',' << row.amao.stabilized_at;
      } else {
        all_conclusive = false;
        w.text() << "inconclusive,,,";
      }
      w.text() << '\n';
    }
    w.text() << "\n# epsilon\n";
  } else {
    w.json()["ideal"] = ideal_json(ideal);
    ordered_json table = ordered_json::array();
    for (const auto& row : rows) {
      if (!row.ratio) all_conclusive = false;
      table.push_back(
          {{"m", row.m},
           {"a_m", row.amao.value ? integer_json(*row.amao.value) : ordered_json()},
           {"ratio", row.ratio ? rational_json(*row.ratio) : ordered_json()},
           {"stabilized_at", row.ratio ? ordered_json(row.amao.stabilized_at)
                                       : ordered_json()}});
    }
    w.json()["theorem_a"] = std::move(table);
  }
  epsilon_body(w, ideal, cfg.effective_n_max());
  return all_conclusive ? exit_code::ok : exit_code::inconclusive;
}

int cmd_okounkov_volume(const RunConfig& cfg, Writer& w) {
  const auto ideal = require_ideal(cfg);
  const unsigned n = cfg.effective_n_max();
  const Rational tolerance(5, n);
  const auto diag = stabilize_beta(ideal, cfg.beta, n, tolerance, kBetaRounds,
                                   WeightVector::standard(ideal.dim()));
  w.note("ideal_parsed", to_string(ideal));
  w.note("tolerance", to_string(tolerance));
  w.note("beta_stable", diag.stable ? "true" : "false");
  if (w.csv()) {
    w.text() << "beta,n,outer_volume_num,outer_volume_den,inner_volume_num,"
                "inner_volume_den,value_num,value_den\n";
    for (const auto& v : diag.trail)
      w.text() << v.beta << ',' << v.n_used << ',' << numerator_of(v.outer_volume)
               << ',' << denominator_of(v.outer_volume) << ','
               << numerator_of(v.inner_volume) << ',' << denominator_of(v.inner_volume)
               << ',' << numerator_of(v.value) << ',' << denominator_of(v.value)
               << '\n';
  } else {
    w.json()["ideal"] = ideal_json(ideal);
    w.json()["tolerance"] = rational_json(tolerance);
    w.json()["beta_stable"] = diag.stable;
    ordered_json trail = ordered_json::array();
    for (const auto& v : diag.trail)
      trail.push_back({{"beta", v.beta},
                       {"n", v.n_used},
                       {"outer_volume", rational_json(v.outer_volume)},
                       {"inner_volume", rational_json(v.inner_volume)},
                       {"value", rational_json(v.value)}});
    w.json()["volumes"] = std::move(trail);
  }
  return diag.stable ? exit_code::ok : exit_code::inconclusive;
}

int cmd_semigroup(const RunConfig& cfg, Writer& w) {
  if (cfg.ideal.empty()) throw PreconditionError("semigroup needs -i with semigroup JSON");
  std::string text = cfg.ideal;
  std::error_code ec;
  if (std::filesystem::is_regular_file(cfg.ideal, ec)) text = read_file(cfg.ideal);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error&) {
    throw ParseError("semigroup input must be JSON");
  }
  const Semigroup s = semigroup_from_json(j);
  const unsigned n_max = cfg.effective_n_max();

  std::optional<ConeConditions> cone;
  if (s.known_points().size() >= s.dim() + 1) cone = check_cone_conditions(s, cfg.beta);
  const auto flag = [&](bool ConeConditions::*field) -> std::string {
    if (!cone) return "unknown";
    return (*cone).*field ? "true" : "false";
  };
  w.note("cone2", flag(&ConeConditions::cone2));
  w.note("cone3", flag(&ConeConditions::cone3));
  if (w.csv()) {
    write_volume_csv(w.text(), s, n_max);
    return exit_code::ok;
  }
  const auto counts = s.level_counts(n_max);
  const auto volume = delta_volume(s, n_max);
  w.json()["cone"] = cone ? ordered_json{{"cone2", cone->cone2}, {"cone3", cone->cone3}}
                          : ordered_json();
  ordered_json rows = ordered_json::array();
  for (unsigned n = 1; n <= n_max; ++n)
    rows.push_back(
        {{"n", n},
         {"count", integer_json(counts[n])},
         {"estimate", rational_json(Rational(
                          counts[n], ipow(Integer(n), static_cast<unsigned>(s.dim()))))}});
  w.json()["rows"] = std::move(rows);
  w.json()["exact_volume"] = volume.exact ? rational_json(*volume.exact) : ordered_json();
  return exit_code::ok;
}

int cmd_lemmas(const RunConfig& cfg, Writer& w) {
  std::vector<MonomialIdeal> ideals;
  if (!cfg.ideal.empty()) ideals.push_back(require_ideal(cfg));
  const auto corpus = random_corpus(cfg.seed, cfg.effective_corpus());
  ideals.insert(ideals.end(), corpus.begin(), corpus.end());

  unsigned lemma3_pass = 0, grid_pass = 0;
  std::string fixed_grid_c;
  if (w.csv())
    w.text() << "index,dim,ideal,lemma3,counterexample_i,grid_c,required_c,worst_m,"
                "worst_k\n";
  ordered_json rows = ordered_json::array();
  for (std::size_t idx = 0; idx < ideals.size(); ++idx) {
    const auto& ideal = ideals[idx];
    const auto containment = check_sat_power_containment(ideal, cfg.i_max);
    if (containment.holds) ++lemma3_pass;
    std::optional<SwansonResult> grid;
    if (!ideal.is_zero() && !ideal.is_unit())
      grid = swanson_c_search(ideal, cfg.c_max, cfg.mk_bound);
    if (!grid || grid->c) ++grid_pass;
    if (idx == 0 && !cfg.ideal.empty())
      fixed_grid_c = !grid ? "n/a" : grid->c ? std::to_string(*grid->c) : "none";
    if (w.csv()) {
      w.text() << idx << ',' << ideal.dim() << ',' << csv_field(to_string(ideal)) << ','
               << (containment.holds ? "pass" : "fail") << ',';
      if (containment.counterexample) w.text() << *containment.counterexample;
      w.text() << ',';
      if (grid) {
        w.text() << (grid->c ? std::to_string(*grid->c) : std::string("none")) << ','
                 << grid->required_c << ',' << grid->worst_m << ',' << grid->worst_k;
      } else {
        w.text() << "n/a,,,";
      }
      w.text() << '\n';
    } else {
      ordered_json row{{"index", idx},
                       {"ideal", ideal_json(ideal)},
                       {"text", to_string(ideal)},
                       {"lemma3", containment.holds},
                       {"counterexample_i", containment.counterexample
                                                ? ordered_json(*containment.counterexample)
                                                : ordered_json()}};
      if (grid)
        row["lemma4"] = {{"grid_c", grid->c ? ordered_json(*grid->c) : ordered_json()},
                         {"required_c", grid->required_c},
                         {"worst_m", grid->worst_m},
                         {"worst_k", grid->worst_k},
                         {"verified_on_grid_only", grid->verified_on_grid_only}};
      else
        row["lemma4"] = nullptr;
      rows.push_back(std::move(row));
    }
  }
  const auto total = ideals.size();
  const std::string lemma3 = std::to_string(lemma3_pass) + "/" + std::to_string(total) +
                             (lemma3_pass == total ? " pass" : " FAIL");
  const std::string lemma4 = std::to_string(grid_pass) + "/" + std::to_string(total) +
                             " with grid-c <= " + std::to_string(cfg.c_max);
  if (w.csv()) {
    w.text() << "# lemma3: " << lemma3 << '\n';
    w.text() << "# lemma4: " << lemma4 << '\n';
    if (!fixed_grid_c.empty()) w.text() << "# lemma4 grid-c = " << fixed_grid_c << '\n';
  } else {
    w.json()["rows"] = std::move(rows);
    w.json()["summary"] = {{"lemma3", "lemma3: " + lemma3}, {"lemma4", "lemma4: " + lemma4}};
    if (!fixed_grid_c.empty()) w.json()["summary"]["lemma4_grid_c"] = fixed_grid_c;
  }
  return lemma3_pass == total ? exit_code::ok : exit_code::counterexample;
}

}  // namespace

std::string_view command_name(Command c) {
  for (const auto& [cmd, name] : kCommandNames)
    if (cmd == c) return name;
  return "unknown";
}

std::optional<Command> command_from_name(std::string_view name) {
  for (const auto& [cmd, n] : kCommandNames)
    if (n == name) return cmd;
  return std::nullopt;
}

unsigned RunConfig::effective_n_max() const {
  if (n_max) return *n_max;
  return command == Command::okounkov_volume ? 200 : 20;
}

unsigned RunConfig::effective_corpus() const {
  if (corpus) return *corpus;
  if (command != Command::lemmas) return 0;
  return ideal.empty() ? 50 : 0;
}

Report run_command(const RunConfig& cfg) {
  validate(cfg);
  Writer w(cfg);
  int code = exit_code::ok;
  switch (cfg.command) {
    case Command::epsilon: code = cmd_epsilon(cfg, w); break;
    case Command::amao: code = cmd_amao(cfg, w); break;
    case Command::theorem_a: code = cmd_theorem_a(cfg, w); break;
    case Command::okounkov_volume: code = cmd_okounkov_volume(cfg, w); break;
    case Command::semigroup: code = cmd_semigroup(cfg, w); break;
    case Command::lemmas: code = cmd_lemmas(cfg, w); break;
  }
  return {w.finish(), code};
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  Report report;
  try {
    report = run_command(cfg);
  } catch (const ParseError& e) {
    err << "epsmult: parse error: " << e.what() << '\n';
    return exit_code::parse;
  } catch (const PreconditionError& e) {
    err << "epsmult: error: " << e.what() << '\n';
    return exit_code::precondition;
  } catch (const DimensionMismatch& e) {
    err << "epsmult: error: " << e.what() << '\n';
    return exit_code::precondition;
  } catch (const std::exception& e) {
    err << "epsmult: internal error: " << e.what() << '\n';
    return exit_code::internal;
  }
  if (cfg.out.empty()) {
    out << report.text;
  } else {
    std::ofstream file(cfg.out, std::ios::binary);
    file << report.text;
    if (!file) {
      err << "epsmult: error: cannot write " << cfg.out << '\n';
      return exit_code::internal;
    }
  }
  if (report.exit_code == exit_code::inconclusive)
    err << "epsmult: inconclusive: stabilization not reached, see report\n";
  if (report.exit_code == exit_code::counterexample)
    err << "epsmult: counterexample found, see report\n";
  return report.exit_code;
}

}  // namespace epsmult::cli
