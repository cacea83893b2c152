#include "ratgf/io.hpp"

#include "ratgf/errors.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace ratgf {

namespace {

// Non-comment, non-blank lines split into whitespace-separated tokens,
// with their 1-based line numbers.
std::vector<std::pair<std::size_t, std::vector<std::string>>> content_lines(std::istream& in) {
  std::vector<std::pair<std::size_t, std::vector<std::string>>> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ss(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (ss >> tok) tokens.push_back(tok);
    out.emplace_back(number, std::move(tokens));
  }
  return out;
}

std::string at_line(std::size_t n) { return "line " + std::to_string(n) + ": "; }

unsigned long parse_count(const std::string& s, std::size_t line, const char* what) {
  Integer v;
  try {
    v = parse_integer(s);
  } catch (const ParseError&) {
    throw ParseError(at_line(line) + "bad " + what + " '" + s + "'");
  }
  if (v < 0 || !v.fits_ulong_p()) throw ParseError(at_line(line) + "bad " + what + " '" + s + "'");
  return v.get_ui();
}

Rational parse_entry(const std::string& s, std::size_t line) {
  try {
    return parse_rational(s);
  } catch (const ParseError&) {
    throw ParseError(at_line(line) + "bad rational '" + s + "'");
  }
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return in;
}

}  // namespace

Polytope parse_polytope(std::istream& in) {
  auto lines = content_lines(in);
  if (lines.empty()) throw ParseError("polytope: missing header line \"d m\"");
  const auto& [hline, header] = lines[0];
  if (header.size() != 2) throw ParseError(at_line(hline) + "header must be \"d m\"");
  const auto d = parse_count(header[0], hline, "dimension");
  const auto m = parse_count(header[1], hline, "row count");
  if (d == 0) throw ParseError(at_line(hline) + "dimension must be positive");
  if (lines.size() - 1 != m) {
    throw ParseError("polytope: header announces " + std::to_string(m) + " rows, file has " +
                     std::to_string(lines.size() - 1));
  }
  std::vector<Row> rows;
  for (std::size_t r = 1; r < lines.size(); ++r) {
    const auto& [n, toks] = lines[r];
    if (toks.size() != d + 1) throw ParseError(at_line(n) + "expected " + std::to_string(d + 1) + " entries");
    Row row;
    for (std::size_t i = 0; i < d; ++i) row.a.push_back(parse_entry(toks[i], n));
    row.b = parse_entry(toks[d], n);
    bool nonzero = false;
    for (const auto& x : row.a) nonzero = nonzero || x != 0;
    if (!nonzero) throw ParseError(at_line(n) + "row has a zero normal");
    rows.push_back(std::move(row));
  }
  return Polytope(d, std::move(rows));
}

Polytope read_polytope_file(const std::string& path) {
  auto in = open(path);
  return parse_polytope(in);
}

SparsePolynomial parse_polynomial(std::istream& in, std::size_t dim, unsigned degree_cap) {
  SparsePolynomial f(dim);
  for (const auto& [n, toks] : content_lines(in)) {
    if (toks.size() != dim + 1) throw ParseError(at_line(n) + "expected a coefficient and " + std::to_string(dim) + " exponents");
    Rational c = parse_entry(toks[0], n);
    Exponent e;
    unsigned long total = 0;
    for (std::size_t i = 1; i <= dim; ++i) {
      auto v = parse_count(toks[i], n, "exponent");
      total += v;
      if (v > degree_cap || total > degree_cap) {
        throw DegreeBudgetExceeded(at_line(n) + "monomial degree exceeds the cap " + std::to_string(degree_cap));
      }
      e.push_back(static_cast<unsigned>(v));
    }
    f.add_term(e, c);
  }
  return f;
}

SparsePolynomial read_polynomial_file(const std::string& path, std::size_t dim, unsigned degree_cap) {
  auto in = open(path);
  return parse_polynomial(in, dim, degree_cap);
}

}  // namespace ratgf
