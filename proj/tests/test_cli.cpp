#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "epsmult/cli.hpp"
#include "epsmult/parse.hpp"

using namespace epsmult::cli;

namespace {

struct Outcome {
  int code = -1;
  std::string out;
};

// Runs the installed binary; stderr is folded into the output.
Outcome run_binary(const std::string& args) {
  const std::string cmd = std::string(EPSMULT_CLI_PATH) + " " + args + " 2>&1";
  Outcome o;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return o;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) o.out.append(buf.data(), n);
  const int status = pclose(pipe);
  o.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return o;
}

std::string golden(const std::string& name) {
  return epsmult::read_file(std::string(EPSMULT_GOLDEN_DIR) + "/" + name);
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path;
}

RunConfig config(Command c, std::string ideal) {
  RunConfig cfg;
  cfg.command = c;
  cfg.ideal = std::move(ideal);
  return cfg;
}

}  // namespace

TEST(CommandNames, RoundTrip) {
  for (auto c : {Command::epsilon, Command::amao, Command::theorem_a, Command::okounkov_volume,
                 Command::semigroup, Command::lemmas})
    EXPECT_EQ(command_from_name(command_name(c)), c);
  EXPECT_FALSE(command_from_name("volume"));
}

TEST(Defaults, CommandDependent) {
  RunConfig cfg;
  EXPECT_EQ(cfg.effective_n_max(), 20u);
  cfg.command = Command::okounkov_volume;
  EXPECT_EQ(cfg.effective_n_max(), 200u);
  cfg.command = Command::lemmas;
  EXPECT_EQ(cfg.effective_corpus(), 50u);
  cfg.ideal = "x";
  EXPECT_EQ(cfg.effective_corpus(), 0u);
}

TEST(Golden, TheoremA) {
  const auto path = temp_file("ex1.json", R"({"dim":2,"generators":[[2,0],[1,1]]})");
  auto r = run_binary("theorem-a -i " + path.string() + " --mmax 6 --kmax 20");
  EXPECT_EQ(r.code, exit_code::ok);
  // the config line names the input path, so compare from the parsed ideal on
  const auto body = r.out.substr(r.out.find("# ideal_parsed"));
  const auto expected = golden("theorem_a_x2xy.csv");
  EXPECT_EQ(body, expected.substr(expected.find("# ideal_parsed")));
  std::filesystem::remove(path);
}

TEST(Golden, TheoremARatioColumnIsOne) {
  const auto report = run_command(config(Command::theorem_a, "x^2, x*y"));
  std::istringstream in(report.text);
  std::string line;
  while (std::getline(in, line) && line != "m,a_m,ratio_num,ratio_den,stabilized_at") {
  }
  int rows = 0;
  while (std::getline(in, line) && !line.empty()) {
    int m = 0, a = 0, num = 0, den = 0, at = 0;
    ASSERT_EQ(std::sscanf(line.c_str(), "%d,%d,%d,%d,%d", &m, &a, &num, &den, &at), 5);
    EXPECT_EQ(a, m * m);
    EXPECT_EQ(num, 1);
    EXPECT_EQ(den, 1);
    ++rows;
  }
  EXPECT_EQ(rows, 6);
  EXPECT_NE(report.text.find("# epsilon\nn,length,e_n(num),e_n(den)\n1,1,2,1\n"),
            std::string::npos);
}

TEST(Golden, EpsilonOfSaturatedPrime) {
  const auto r = run_binary("epsilon -i \"x,y\" --dim 3 --nmax 10");
  EXPECT_EQ(r.code, exit_code::ok);
  EXPECT_EQ(r.out, golden("epsilon_prime.csv"));
}

TEST(Golden, Lemmas) {
  const auto r = run_binary("lemmas --seed 1");
  EXPECT_EQ(r.code, exit_code::ok);
  EXPECT_EQ(r.out, golden("lemmas_seed1.csv"));
  EXPECT_NE(r.out.find("# lemma3: 50/50 pass\n"), std::string::npos);
}

TEST(Golden, LemmasFixedIdeal) {
  const auto r = run_binary("lemmas -i \"x^2, x*y\"");
  EXPECT_EQ(r.code, exit_code::ok);
  EXPECT_NE(r.out.find("# lemma4 grid-c = 2\n"), std::string::npos);
}

TEST(Golden, OkounkovVolume) {
  const auto r = run_binary("okounkov-volume -i \"x^2, x*y\" --beta 4 --nmax 200");
  EXPECT_EQ(r.code, exit_code::ok);
  EXPECT_EQ(r.out, golden("okounkov_x2xy.csv"));
}

TEST(Golden, Semigroup) {
  const auto path = temp_file("simplex.json", R"({"dim":2,"generators":[[0,0,1],[1,0,1],[0,1,1]]})");
  auto cfg = config(Command::semigroup, path.string());
  cfg.n_max = 6;
  cfg.beta = 1;
  const auto report = run_command(cfg);
  EXPECT_EQ(report.exit_code, exit_code::ok);
  const auto body = report.text.substr(report.text.find("# cone2"));
  const auto expected = golden("semigroup_simplex.csv");
  EXPECT_EQ(body, expected.substr(expected.find("# cone2")));
  std::filesystem::remove(path);
}

TEST(Report, EmbedsConfigAndIsDeterministic) {
  auto cfg = config(Command::epsilon, "x^2, x*y");
  cfg.n_max = 5;
  const auto a = run_command(cfg).text, b = run_command(cfg).text;
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.rfind("# command=epsilon\n", 0), 0u);
  for (const char* key : {"# nmax=5\n", "# kmax=20\n", "# window=3\n", "# seed=1\n",
                          "# format=csv\n", "# ideal=x^2, x*y\n"})
    EXPECT_NE(a.find(key), std::string::npos) << key;
}

TEST(Report, Json) {
  auto cfg = config(Command::epsilon, "x^2, x*y");
  cfg.n_max = 4;
  cfg.format = Format::json;
  const auto j = nlohmann::json::parse(run_command(cfg).text);
  EXPECT_EQ(j["config"]["command"], "epsilon");
  EXPECT_EQ(j["config"]["nmax"], "4");
  EXPECT_EQ(j["ideal"]["generators"], nlohmann::json::parse("[[1,1],[2,0]]"));
  ASSERT_EQ(j["epsilon"].size(), 4u);
  EXPECT_EQ(j["epsilon"][3]["length"], 10);
  EXPECT_EQ(j["epsilon"][3]["e_n"]["num"], 5);
  EXPECT_EQ(j["epsilon"][3]["e_n"]["den"], 4);
  EXPECT_EQ(j["epsilon"][3]["e_n"]["decimal"], "1.250000000000");
}

TEST(Report, JsonForEveryCommand) {
  const auto simplex = temp_file("simplex_json.json",
                                 R"({"dim":2,"generators":[[0,0,1],[1,0,1],[0,1,1]]})");
  for (auto c : {Command::epsilon, Command::theorem_a, Command::okounkov_volume,
                 Command::semigroup, Command::lemmas}) {
    auto cfg = config(c, c == Command::semigroup ? simplex.string() : "x^2, x*y");
    cfg.format = Format::json;
    cfg.m_max = 2;
    cfg.n_max = 6;
    const auto report = run_command(cfg);
    EXPECT_EQ(report.exit_code, exit_code::ok) << command_name(c);
    EXPECT_TRUE(nlohmann::json::accept(report.text)) << command_name(c);
  }
  std::filesystem::remove(simplex);
}

TEST(Amao, ReportsValue) {
  RunConfig cfg;
  cfg.command = Command::amao;
  cfg.inner = "x^2, x*y";
  cfg.outer = "x";
  const auto report = run_command(cfg);
  EXPECT_EQ(report.exit_code, exit_code::ok);
  EXPECT_NE(report.text.find("a,stabilized_at,window,k_used\n1,1,18,20\n"), std::string::npos);
}

TEST(Amao, DimensionsAreAligned) {
  RunConfig cfg;
  cfg.command = Command::amao;
  cfg.inner = "x*z";
  cfg.outer = "x";
  cfg.k_max = 6;
  // (x z) is not m-primary inside (x) in three variables
  EXPECT_EQ(run(cfg, std::cout, std::cout), exit_code::precondition);
}

TEST(ExitCodes, NotContained) {
  const auto r = run_binary("amao --inner \"x\" --outer \"x^2, x*y\"");
  EXPECT_EQ(r.code, exit_code::precondition);
  EXPECT_NE(r.out.find("inner not contained in outer"), std::string::npos);
}

TEST(ExitCodes, ParseError) {
  const auto r = run_binary("epsilon -i \"x^2 + y\"");
  EXPECT_EQ(r.code, exit_code::parse);
  EXPECT_NE(r.out.find("line 1, column 5"), std::string::npos);
}

TEST(ExitCodes, Inconclusive) {
  const auto short_seq = run_binary("amao --inner \"x^3, y^3\" --outer \"x, y\" --kmax 4");
  EXPECT_EQ(short_seq.code, exit_code::precondition) << short_seq.out;
  const auto late = run_binary(
      "theorem-a -i \"x^2*y*z^5, x^3*y^6*z, x^4*y^5*z^2\" --mmax 1 --kmax 6 --nmax 2");
  EXPECT_EQ(late.code, exit_code::inconclusive);
  EXPECT_NE(late.out.find("1,inconclusive,,,\n"), std::string::npos);
}

TEST(ExitCodes, Precondition) {
  EXPECT_EQ(run_binary("epsilon -i 1").code, exit_code::precondition);
  EXPECT_EQ(run_binary("epsilon -i x --nmax 0").code, exit_code::precondition);
  EXPECT_EQ(run_binary("epsilon").code, exit_code::precondition);
  EXPECT_EQ(run_binary("amao --inner x").code, exit_code::precondition);
}

TEST(ExitCodes, BadCommandLine) {
  EXPECT_EQ(run_binary("").code, exit_code::parse);
  EXPECT_EQ(run_binary("volume -i x").code, exit_code::parse);
  EXPECT_EQ(run_binary("epsilon -i x --format xml").code, exit_code::parse);
  EXPECT_EQ(run_binary("epsilon -i x --nmax many").code, exit_code::parse);
  EXPECT_EQ(run_binary("--help").code, 0);
}

TEST(ExitCodes, SemigroupNeedsJson) {
  EXPECT_EQ(run_binary("semigroup -i \"x, y\"").code, exit_code::parse);
}

TEST(Lemmas, EmptyCorpus) {
  const auto r = run_binary("lemmas --corpus 0");
  EXPECT_EQ(r.code, exit_code::ok);
  EXPECT_NE(r.out.find("index,dim,ideal,lemma3,counterexample_i,grid_c,required_c,worst_m,"
                       "worst_k\n# lemma3: 0/0 pass\n"),
            std::string::npos);
}

TEST(Output, FileMatchesStdout) {
  const auto path = std::filesystem::temp_directory_path() / "epsmult_out.csv";
  const auto to_stdout = run_binary("epsilon -i \"x^2, x*y\" --nmax 5");
  const auto to_file = run_binary("epsilon -i \"x^2, x*y\" --nmax 5 --out " + path.string());
  EXPECT_EQ(to_file.code, exit_code::ok);
  EXPECT_TRUE(to_file.out.empty());
  EXPECT_EQ(epsmult::read_file(path.string()), to_stdout.out);
  std::filesystem::remove(path);
}
