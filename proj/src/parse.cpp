#include "epsmult/parse.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <limits>
#include <sstream>
#include <system_error>
#include <filesystem>

#include <nlohmann/json.hpp>

#include "epsmult/errors.hpp"

namespace epsmult {

namespace {

enum class Scheme { none, named, indexed };

struct Factor {
  std::size_t var;
  Exponent exp;
};

class HumanParser {
 public:
  explicit HumanParser(std::string_view text) : text_(text) {}

  // Generators as sparse factor lists; the dimension is settled afterwards.
  std::vector<std::vector<Factor>> parse_generators(bool& zero_ideal) {
    skip_ws();
    bool parens = false;
    if (peek() == '(') {
      parens = true;
      advance();
      skip_ws();
    }
    std::vector<std::vector<Factor>> gens;
    zero_ideal = false;
    if (at_end() || (parens && peek() == ')')) {
      zero_ideal = true;
    } else if (peek() == '0') {
      advance();
      zero_ideal = true;
      skip_ws();
    } else {
      gens.push_back(generator());
      skip_ws();
      while (peek() == ',') {
        advance();
        skip_ws();
        gens.push_back(generator());
        skip_ws();
      }
    }
    if (parens) {
      if (peek() != ')') fail("expected ')'");
      advance();
      skip_ws();
    }
    if (!at_end()) {
      if (zero_ideal) fail("unexpected input after the zero ideal");
      fail(std::string("unexpected '") + peek() + "'; generators are " +
           "monomials separated by ','");
    }
    return gens;
  }

  std::size_t max_var() const noexcept { return max_var_; }
  bool any_var() const noexcept { return scheme_ != Scheme::none; }

 private:
  std::vector<Factor> generator() {
    std::vector<Factor> factors;
    if (peek() == '1') {
      advance();
      if (std::isdigit(static_cast<unsigned char>(peek())))
        fail("a coefficient is not a monomial");
      skip_ws();
      if (peek() == '*') {
        advance();
        skip_ws();
        factors = monomial();
      }
      return factors;
    }
    return monomial();
  }

  std::vector<Factor> monomial() {
    std::vector<Factor> factors{factor()};
    skip_ws();
    while (peek() == '*') {
      advance();
      skip_ws();
      factors.push_back(factor());
      skip_ws();
    }
    return factors;
  }

  Factor factor() {
    const char c = peek();
    std::size_t var = 0;
    if (c == 'x' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
      const auto [line, col] = position();
      advance();
      const auto index = number();
      if (index == 0) fail_at("variable indices start at x1", line, col);
      use_scheme(Scheme::indexed, line, col);
      var = static_cast<std::size_t>(index - 1);
    } else if (c == 'x' || c == 'y' || c == 'z' || c == 'w') {
      const auto [line, col] = position();
      advance();
      use_scheme(Scheme::named, line, col);
      var = c == 'x' ? 0 : c == 'y' ? 1 : c == 'z' ? 2 : 3;
    } else if (at_end()) {
      fail("expected a variable, found end of input");
    } else {
      fail(std::string("expected a variable, found '") + c + "'");
    }
    max_var_ = std::max(max_var_, var);
    skip_ws();
    Exponent exp = 1;
    if (peek() == '^') {
      advance();
      skip_ws();
      const auto value = number();
      if (value > std::numeric_limits<Exponent>::max())
        fail("exponent too large");
      exp = static_cast<Exponent>(value);
    }
    return {var, exp};
  }

  std::uint64_t number() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
    std::uint64_t value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + static_cast<std::uint64_t>(peek() - '0');
      if (value > std::numeric_limits<std::uint32_t>::max()) fail("number too large");
      advance();
    }
    return value;
  }

  void use_scheme(Scheme s, int line, int col) {
    if (scheme_ == Scheme::none) scheme_ = s;
    if (scheme_ != s)
      fail_at("mixed variable names: use either x, y, z, w or x1..xd", line, col);
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }

  bool at_end() const noexcept { return pos_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const noexcept {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  std::pair<int, int> position() const noexcept { return {line_, col_}; }

  [[noreturn]] void fail(const std::string& what) const { fail_at(what, line_, col_); }
  [[noreturn]] static void fail_at(const std::string& what, int line, int col) {
    throw ParseError(what, line, col);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  Scheme scheme_ = Scheme::none;
  std::size_t max_var_ = 0;
};

std::pair<int, int> line_column(std::string_view text, std::size_t byte) {
  int line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

MonomialIdeal parse_json_ideal(std::string_view text, const ParseOptions& options) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const auto [line, col] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError("malformed JSON", line, col);
  }
  MonomialIdeal ideal = j.get<MonomialIdeal>();
  if (ideal.dim() > options.max_dim)
    throw ParseError("dimension " + std::to_string(ideal.dim()) +
                     " exceeds the maximum " + std::to_string(options.max_dim));
  if (ideal.dim() >= options.min_dim) return ideal;
  std::vector<ExponentVector> gens;
  for (const auto& g : ideal.generators()) {
    std::vector<Exponent> coords(g.begin(), g.end());
    coords.resize(options.min_dim, 0);
    gens.emplace_back(std::move(coords));
  }
  return MonomialIdeal(options.min_dim, std::move(gens));
}

}  // namespace

MonomialIdeal parse_ideal(std::string_view text, const ParseOptions& options) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{')
    return parse_json_ideal(text, options);

  HumanParser parser(text);
  bool zero_ideal = false;
  const auto gens = parser.parse_generators(zero_ideal);
  std::size_t dim = std::max<std::size_t>(options.min_dim, 1);
  if (parser.any_var()) dim = std::max(dim, parser.max_var() + 1);
  if (dim > options.max_dim)
    throw ParseError("dimension " + std::to_string(dim) + " exceeds the maximum " +
                     std::to_string(options.max_dim));

  std::vector<ExponentVector> vectors;
  for (const auto& factors : gens) {
    ExponentVector e(dim);
    for (const auto& f : factors) {
      if (static_cast<std::int64_t>(e[f.var]) + f.exp >
          std::numeric_limits<Exponent>::max())
        throw ParseError("exponent too large");
      e[f.var] += f.exp;
    }
    vectors.push_back(std::move(e));
  }
  if (zero_ideal) return MonomialIdeal(dim);
  return MonomialIdeal(dim, std::move(vectors));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

MonomialIdeal load_ideal(const std::string& path_or_text,
                         const ParseOptions& options) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(path_or_text, ec))
    return parse_ideal(read_file(path_or_text), options);
  return parse_ideal(path_or_text, options);
}

}  // namespace epsmult
