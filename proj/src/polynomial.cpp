#include "btms/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "btms/format.hpp"

namespace btms {

namespace {

// graded lex: lower total degree first; within a degree, lexicographically
// larger exponent vector first (x1 before x2, x1^2 before x1*x2).
bool grlex_less(const std::vector<std::uint32_t>& a,
                const std::vector<std::uint32_t>& b) {
  std::uint32_t da = 0, db = 0;
  for (auto e : a) da += e;
  for (auto e : b) db += e;
  if (da != db) return da < db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

double ipow(double x, std::uint32_t e) {
  double r = 1.0;
  for (std::uint32_t k = 0; k < e; ++k) r *= x;
  return r;
}

}  // namespace

Polynomial Polynomial::constant(std::size_t n_vars, double value) {
  Monomial m;
  m.coefficient = value;
  m.exponents.assign(n_vars, 0);
  return from_terms(n_vars, {std::move(m)});
}

Polynomial Polynomial::from_terms(std::size_t n_vars,
                                  std::vector<Monomial> terms) {
  for (const auto& t : terms) {
    if (t.exponents.size() != n_vars) {
      throw ValidationError("monomial exponent vector has length " +
                            std::to_string(t.exponents.size()) + ", expected " +
                            std::to_string(n_vars));
    }
    if (!std::isfinite(t.coefficient)) {
      throw ValidationError("monomial coefficient is not finite");
    }
  }
  std::stable_sort(terms.begin(), terms.end(),
                   [](const Monomial& a, const Monomial& b) {
                     return grlex_less(a.exponents, b.exponents);
                   });
  Polynomial p(n_vars);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().exponents == t.exponents) {
      p.terms_.back().coefficient += t.coefficient;
    } else {
      p.terms_.push_back(std::move(t));
    }
  }
  std::erase_if(p.terms_, [](const Monomial& m) { return m.coefficient == 0.0; });
  return p;
}

std::uint32_t Polynomial::degree() const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.total_degree());
  return d;
}

double Polynomial::eval(std::span<const double> x) const {
  if (x.size() != n_vars_) {
    throw ValidationError("eval: point has dimension " +
                          std::to_string(x.size()) + ", polynomial expects " +
                          std::to_string(n_vars_));
  }
  for (double v : x) {
    if (!std::isfinite(v)) throw ValidationError("eval: non-finite input");
  }
  double acc = 0.0;
  for (const auto& t : terms_) {
    double v = t.coefficient;
    for (std::size_t j = 0; j < n_vars_; ++j) v *= ipow(x[j], t.exponents[j]);
    acc += v;
  }
  return acc;
}

Polynomial Polynomial::partial(std::size_t var) const {
  if (var >= n_vars_) throw ValidationError("partial: variable index out of range");
  std::vector<Monomial> out;
  for (const auto& t : terms_) {
    if (t.exponents[var] == 0) continue;
    Monomial d = t;
    d.coefficient *= t.exponents[var];
    d.exponents[var] -= 1;
    out.push_back(std::move(d));
  }
  return from_terms(n_vars_, std::move(out));
}

std::vector<double> Polynomial::gradient(std::span<const double> x) const {
  if (x.size() != n_vars_) {
    throw ValidationError("gradient: point has dimension " +
                          std::to_string(x.size()) + ", polynomial expects " +
                          std::to_string(n_vars_));
  }
  std::vector<double> g(n_vars_, 0.0);
  for (std::size_t j = 0; j < n_vars_; ++j) g[j] = partial(j).eval(x);
  return g;
}

Polynomial Polynomial::scaled(double factor) const {
  std::vector<Monomial> out = terms_;
  for (auto& t : out) t.coefficient *= factor;
  return from_terms(n_vars_, std::move(out));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  if (a.var_count() != b.var_count()) {
    throw ValidationError("polynomial arithmetic: variable counts differ");
  }
  std::vector<Monomial> all = a.terms_;
  all.insert(all.end(), b.terms_.begin(), b.terms_.end());
  return Polynomial::from_terms(a.var_count(), std::move(all));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  return a + b.scaled(-1.0);
}

// ---------------------------------------------------------------- text form

namespace {

struct Cursor {
  std::string_view s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool done() const { return pos >= s.size(); }
  char peek() const { return s[pos]; }
};

bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}
bool is_number_start(char c) {
  return std::isdigit(static_cast<unsigned char>(c)) || c == '.';
}

double parse_number(Cursor& c) {
  std::size_t start = c.pos;
  while (!c.done() && (std::isdigit(static_cast<unsigned char>(c.peek())) ||
                       c.peek() == '.')) {
    ++c.pos;
  }
  if (!c.done() && (c.peek() == 'e' || c.peek() == 'E')) {
    std::size_t mark = c.pos;
    ++c.pos;
    if (!c.done() && (c.peek() == '+' || c.peek() == '-')) ++c.pos;
    if (c.done() || !std::isdigit(static_cast<unsigned char>(c.peek()))) {
      c.pos = mark;  // bare 'e' belongs to an identifier, not this number
    } else {
      while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) ++c.pos;
    }
  }
  std::string_view tok = c.s.substr(start, c.pos - start);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw PolyParseError("malformed number '" + std::string(tok) + "'", start);
  }
  return v;
}

std::uint32_t parse_nat(Cursor& c) {
  c.skip_ws();
  std::size_t start = c.pos;
  while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) ++c.pos;
  if (c.pos == start) throw PolyParseError("malformed exponent", start);
  std::uint32_t v = 0;
  auto tok = c.s.substr(start, c.pos - start);
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{}) throw PolyParseError("malformed exponent", start);
  return v;
}

}  // namespace

Polynomial parse_polynomial(std::string_view text,
                            std::span<const std::string> var_names) {
  if (var_names.empty()) throw ValidationError("parse: no variable names given");
  Cursor c{text};
  c.skip_ws();
  if (c.done()) throw PolyParseError("empty input", 0);

  std::vector<Monomial> terms;
  bool first = true;
  while (true) {
    c.skip_ws();
    double sign = 1.0;
    if (!c.done() && (c.peek() == '+' || c.peek() == '-')) {
      sign = c.peek() == '-' ? -1.0 : 1.0;
      ++c.pos;
    } else if (!first) {
      if (c.done()) break;
      throw PolyParseError(std::string("expected '+' or '-', found '") +
                               c.peek() + "'",
                           c.pos);
    }
    c.skip_ws();
    if (c.done()) throw PolyParseError("dangling sign", c.pos);

    Monomial m;
    m.coefficient = sign;
    m.exponents.assign(var_names.size(), 0);
    bool saw_factor = false;
    bool expect_factor = true;
    while (expect_factor) {
      c.skip_ws();
      if (!saw_factor && !c.done() && is_number_start(c.peek())) {
        m.coefficient = sign * parse_number(c);
      } else if (!c.done() && is_ident_start(c.peek())) {
        std::size_t start = c.pos;
        while (!c.done() && is_ident_char(c.peek())) ++c.pos;
        std::string name(c.s.substr(start, c.pos - start));
        auto it = std::find(var_names.begin(), var_names.end(), name);
        if (it == var_names.end()) {
          throw PolyParseError("unknown variable '" + name + "'", start);
        }
        std::size_t idx = static_cast<std::size_t>(it - var_names.begin());
        std::uint32_t e = 1;
        c.skip_ws();
        if (!c.done() && c.peek() == '^') {
          ++c.pos;
          e = parse_nat(c);
        }
        m.exponents[idx] += e;
      } else {
        throw PolyParseError("expected coefficient or variable", c.pos);
      }
      saw_factor = true;
      c.skip_ws();
      if (!c.done() && c.peek() == '*') {
        ++c.pos;
      } else {
        expect_factor = false;
      }
    }
    terms.push_back(std::move(m));
    first = false;
    c.skip_ws();
    if (c.done()) break;
    if (c.peek() != '+' && c.peek() != '-') {
      throw PolyParseError(std::string("unexpected character '") + c.peek() + "'",
                           c.pos);
    }
  }
  return Polynomial::from_terms(var_names.size(), std::move(terms));
}

std::string to_string(const Polynomial& p,
                      std::span<const std::string> var_names) {
  if (var_names.size() != p.var_count()) {
    throw ValidationError("to_string: expected " + std::to_string(p.var_count()) +
                          " variable names, got " + std::to_string(var_names.size()));
  }
  if (p.is_zero()) return "0";

  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    double c = t.coefficient;
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    double mag = std::fabs(c);
    bool has_vars = t.total_degree() > 0;
    bool wrote = false;
    if (!has_vars || mag != 1.0) {
      out += g17(mag);
      wrote = true;
    }
    for (std::size_t j = 0; j < p.var_count(); ++j) {
      if (t.exponents[j] == 0) continue;
      if (wrote) out += "*";
      out += var_names[j];
      if (t.exponents[j] > 1) out += "^" + std::to_string(t.exponents[j]);
      wrote = true;
    }
    first = false;
  }
  return out;
}

}  // namespace btms
