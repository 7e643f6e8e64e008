#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_map>

#include "distvar/polynomial.h"

namespace distvar {

std::string format_monomial(const Monomial& m, std::span<const std::string> names) {
  if (m.is_one()) return "1";
  std::string out;
  for (int i = 0; i < m.num_vars(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += names[static_cast<std::size_t>(i)];
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out;
}

std::vector<std::string> default_variable_names(int num_vars) {
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(num_vars));
  for (int i = 0; i < num_vars; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

namespace detail {
namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class TermParser {
 public:
  TermParser(std::string_view text, std::span<const std::string> names) : text_(text) {
    for (std::size_t i = 0; i < names.size(); ++i) index_[names[i]] = static_cast<int>(i);
    nvars_ = static_cast<int>(names.size());
  }

  std::vector<ParsedTerm> run() {
    std::vector<ParsedTerm> out;
    skip_ws();
    if (pos_ == text_.size()) throw ParseError("empty polynomial");
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = get() == '-';
    }
    out.push_back(term(negative));
    while (true) {
      skip_ws();
      if (pos_ == text_.size()) break;
      const char c = get();
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      out.push_back(term(c == '-'));
    }
    return out;
  }

 private:
  ParsedTerm term(bool negative) {
    ParsedTerm t;
    t.negative = negative;
    t.exponents.assign(static_cast<std::size_t>(nvars_), 0);
    bool have_coeff = false;
    while (true) {
      skip_ws();
      if (pos_ == text_.size()) fail("unexpected end of input");
      const char c = peek();
      if (is_digit(c) || c == '.') {
        if (have_coeff) fail("more than one numeric factor in a term");
        t.coeff = number();
        have_coeff = true;
      } else if (is_ident_start(c)) {
        const std::string name = identifier();
        auto it = index_.find(name);
        if (it == index_.end()) fail("unknown variable '" + name + "'");
        int e = 1;
        skip_ws();
        if (pos_ < text_.size() && peek() == '^') {
          get();
          skip_ws();
          const std::string digits = integer();
          e = std::stoi(digits);
        }
        t.exponents[static_cast<std::size_t>(it->second)] += e;
      } else {
        fail(std::string("unexpected character '") + c + "'");
      }
      skip_ws();
      if (pos_ < text_.size() && peek() == '*') {
        get();
        continue;
      }
      break;
    }
    return t;
  }

  std::string number() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (is_digit(peek()) || peek() == '.')) ++pos_;
    if (pos_ < text_.size() && (peek() == 'e' || peek() == 'E')) {
      std::size_t q = pos_ + 1;
      if (q < text_.size() && (text_[q] == '+' || text_[q] == '-')) ++q;
      if (q < text_.size() && is_digit(text_[q])) {
        pos_ = q;
        while (pos_ < text_.size() && is_digit(peek())) ++pos_;
      }
    }
    if (pos_ < text_.size() && peek() == '/') {
      ++pos_;
      const std::size_t den = pos_;
      while (pos_ < text_.size() && is_digit(peek())) ++pos_;
      if (den == pos_) fail("missing denominator");
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string integer() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_digit(peek())) ++pos_;
    if (start == pos_) fail("expected an exponent");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_ident_char(peek())) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() const { return text_[pos_]; }
  char get() { return text_[pos_++]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int nvars_ = 0;
  std::unordered_map<std::string, int> index_;
};

}  // namespace

std::vector<ParsedTerm> parse_terms(std::string_view text, std::span<const std::string> names) {
  return TermParser(text, names).run();
}

}  // namespace detail

PolynomialList read_polynomial_list(std::string_view text) {
  PolynomialList out;
  bool have_header = false;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto trim = [](std::string& s) {
      s.erase(s.begin(), std::find_if(s.begin(), s.end(), [](unsigned char c) { return !std::isspace(c); }));
      s.erase(std::find_if(s.rbegin(), s.rend(), [](unsigned char c) { return !std::isspace(c); }).base(),
              s.end());
    };
    trim(line);
    if (line.empty()) continue;
    if (line.rfind("vars:", 0) == 0) {
      if (have_header) throw ParseError("duplicate vars header");
      have_header = true;
      std::string rest = line.substr(5);
      std::replace(rest.begin(), rest.end(), ',', ' ');
      std::istringstream names(rest);
      std::string name;
      while (names >> name) out.variables.push_back(name);
      continue;
    }
    if (line.back() == ',') {
      line.pop_back();
      trim(line);
    }
    out.polynomials.push_back(line);
  }
  if (!have_header) {
    int max_index = -1;
    for (const auto& p : out.polynomials) {
      for (std::size_t i = 0; i < p.size(); ++i) {
        if (!std::isalpha(static_cast<unsigned char>(p[i])) && p[i] != '_') continue;
        if (i > 0 && (std::isalnum(static_cast<unsigned char>(p[i - 1])) || p[i - 1] == '_')) continue;
        std::size_t j = i;
        while (j < p.size() && (std::isalnum(static_cast<unsigned char>(p[j])) || p[j] == '_')) ++j;
        const std::string ident = p.substr(i, j - i);
        const bool numbered = ident.size() > 1 && ident[0] == 'x' &&
                              std::all_of(ident.begin() + 1, ident.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
        const bool exponent_marker = (ident == "e" || ident == "E") && i > 0 &&
                                     (std::isdigit(static_cast<unsigned char>(p[i - 1])) || p[i - 1] == '.');
        if (!numbered && !exponent_marker) {
          throw ParseError("variable '" + ident + "' needs a 'vars:' header");
        }
        if (numbered) max_index = std::max(max_index, std::stoi(ident.substr(1)));
        i = j;
      }
    }
    out.variables = default_variable_names(max_index + 1);
  }
  return out;
}

}  // namespace distvar
