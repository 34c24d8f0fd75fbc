#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace epsmult::cli {

enum class Command { epsilon, amao, theorem_a, okounkov_volume, semigroup, lemmas };
enum class Format { csv, json };

std::string_view command_name(Command c);
std::optional<Command> command_from_name(std::string_view name);

/// Process exit codes.
namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int counterexample = 1;
inline constexpr int inconclusive = 2;
inline constexpr int precondition = 3;
inline constexpr int parse = 4;
inline constexpr int internal = 5;
}  // namespace exit_code

struct RunConfig {
  Command command = Command::epsilon;
  /// Ideal (or semigroup, for the semigroup command): a file path, or the
  /// text itself when no such file exists.
  std::string ideal;
  std::string inner;
  std::string outer;
  /// Ambient dimension floor for human-syntax input; 0 infers it.
  std::size_t dim = 0;
  /// Unset means the command default: 200 for okounkov-volume, 20 otherwise.
  std::optional<unsigned> n_max;
  unsigned m_max = 6;
  unsigned k_max = 20;
  unsigned beta = 4;
  unsigned window = 3;
  Format format = Format::csv;
  std::uint64_t seed = 1;
  /// Random corpus size for lemmas; unset means 50 without -i and 0 with it.
  std::optional<unsigned> corpus;
  unsigned i_max = 4;
  unsigned c_max = 8;
  unsigned mk_bound = 12;
  /// Output file; empty writes to the output stream.
  std::string out;

  unsigned effective_n_max() const;
  unsigned effective_corpus() const;
};

struct Report {
  std::string text;
  int exit_code = exit_code::ok;
};

/// Runs the command and renders its report. Library errors propagate.
Report run_command(const RunConfig& cfg);

/// run_command with errors mapped to exit codes and written to `err` as
/// "epsmult: error: ...". The report goes to cfg.out, or to `out` if unset.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace epsmult::cli
