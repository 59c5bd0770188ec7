#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "btms/errors.hpp"

namespace btms {

struct Monomial {
  double coefficient = 0.0;
  std::vector<std::uint32_t> exponents;  // one entry per variable

  std::uint32_t total_degree() const {
    std::uint32_t d = 0;
    for (auto e : exponents) d += e;
    return d;
  }

  bool operator==(const Monomial&) const = default;
};

// Sparse multivariate polynomial in canonical form: terms sorted in graded
// lexicographic order, duplicate exponent vectors merged, zero coefficients
// dropped. Immutable after construction; evaluation always sums terms in
// canonical order, so results are bit-reproducible.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::size_t n_vars) : n_vars_(n_vars) {}

  static Polynomial constant(std::size_t n_vars, double value);
  static Polynomial from_terms(std::size_t n_vars, std::vector<Monomial> terms);

  std::size_t var_count() const { return n_vars_; }
  const std::vector<Monomial>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::uint32_t degree() const;  // 0 for the zero polynomial

  double eval(std::span<const double> x) const;
  std::vector<double> gradient(std::span<const double> x) const;
  Polynomial partial(std::size_t var) const;
  Polynomial scaled(double factor) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);

  bool operator==(const Polynomial&) const = default;

 private:
  std::size_t n_vars_ = 0;
  std::vector<Monomial> terms_;
};

// Text form. Grammar (whitespace insignificant):
//   polynomial := ['+'|'-'] term (('+'|'-') term)*
//   term       := coeff ('*' var ('^' nat)?)*  |  var ('^' nat)? ('*' var ('^' nat)?)*
//   coeff      := decimal literal, optional exponent ("1.5e-3")
// Variables must come from var_names. Serialization emits terms in canonical
// order with 17-significant-digit coefficients, eliding unit coefficients and
// first powers, so parse(serialize(p)) reproduces p exactly.
Polynomial parse_polynomial(std::string_view text,
                            std::span<const std::string> var_names);
std::string to_string(const Polynomial& p,
                      std::span<const std::string> var_names);

}  // namespace btms
