#pragma once

#include <map>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "planemld/monomial.hpp"
#include "planemld/newton.hpp"
#include "planemld/rational.hpp"

namespace planemld {

/// The prime field: Q when characteristic is 0, F_p otherwise. Only the
/// zero/nonzero pattern of coefficients matters for supports and valuations,
/// so the prime field stands in for an algebraically closed field.
struct CoefficientField {
  long long characteristic = 0;

  CoefficientField() = default;
  explicit CoefficientField(long long ch);  // throws unless 0 or prime

  bool operator==(const CoefficientField&) const = default;

  /// Canonical representative: reduced rational in char 0, integer in
  /// [0, p) in char p.
  Rational normalize(const Rational& value) const;
  Rational inverse(const Rational& value) const;  // throws on zero
};

/// Finite map monomial -> nonzero coefficient. No zero coefficients are
/// stored; in F_p every stored value is an integer in {1, ..., p-1}.
struct BivariatePolynomial {
  CoefficientField field;
  std::map<Monomial, Rational> terms;

  bool is_zero() const { return terms.empty(); }
  bool operator==(const BivariatePolynomial&) const = default;

  static BivariatePolynomial zero(CoefficientField f) { return {f, {}}; }
  static BivariatePolynomial constant(CoefficientField f, const Rational& c);
  static BivariatePolynomial monomial(CoefficientField f, Monomial m,
                                      const Rational& c = 1);
};

BivariatePolynomial add(const BivariatePolynomial& f,
                        const BivariatePolynomial& g);
BivariatePolynomial sub(const BivariatePolynomial& f,
                        const BivariatePolynomial& g);
BivariatePolynomial mul(const BivariatePolynomial& f,
                        const BivariatePolynomial& g);
BivariatePolynomial pow(const BivariatePolynomial& f, long long n);

/// f(img_x, img_y), fully expanded with coefficient arithmetic in the field.
BivariatePolynomial substitute(const BivariatePolynomial& f,
                               const BivariatePolynomial& img_x,
                               const BivariatePolynomial& img_y);

/// Key set of the term map. Throws on the zero polynomial.
std::set<Monomial> support(const BivariatePolynomial& f);

struct PolynomialIdeal {
  CoefficientField field;
  std::vector<BivariatePolynomial> generators;  // nonempty, all nonzero

  static PolynomialIdeal of(std::vector<BivariatePolynomial> gens);
};

/// Origin-fixing coordinate changes as sequences of elementary steps
/// (Jung-van der Kulk generators): invertible linear maps and triangular
/// shears x -> x + h(y) or y -> y + h(x) with h(0) = 0.
struct PlaneAutomorphism {
  struct Linear {
    // Row-major [[a, b], [c, d]], acting as x -> a x + b y, y -> c x + d y.
    Rational a, b, c, d;
  };
  struct ShearX {
    std::vector<Rational> coeffs;  // h(y) = coeffs[0] y + coeffs[1] y^2 + ...
  };
  struct ShearY {
    std::vector<Rational> coeffs;  // h(x), same layout
  };
  using Step = std::variant<Linear, ShearX, ShearY>;

  CoefficientField field;
  std::vector<Step> steps;  // applied left to right
};

BivariatePolynomial apply(const PlaneAutomorphism& phi,
                          const BivariatePolynomial& f);
PolynomialIdeal apply(const PlaneAutomorphism& phi, const PolynomialIdeal& I);

/// Reversed sequence of step-wise inverses.
PlaneAutomorphism inverse(const PlaneAutomorphism& phi);

/// The monomial ideal generated by all monomials appearing in elements of I.
/// Computed from the generators' supports: every element is sum g_i f_i and
/// each of its monomials is a product of a generator monomial with another
/// monomial, so the two definitions agree.
MonomialIdeal monomialize(const PolynomialIdeal& I);

/// Deterministic enumeration of single-step automorphisms: the identity,
/// all invertible 2x2 matrices with entries in the pool, and all nonzero
/// shears of degree <= degree_bound with coefficients in the pool.
std::vector<PlaneAutomorphism> elementary_automorphisms(
    CoefficientField field, long long degree_bound,
    const std::vector<Rational>& coefficient_pool);

/// Grammar: terms joined by '+'/'-'; a term is [coeff][*][x[^a]][*][y[^b]].
/// Coefficients are integers, reduced mod p in char p. Throws ParseError.
BivariatePolynomial parse_polynomial(const std::string& text,
                                     CoefficientField field);

std::string to_string(const BivariatePolynomial& f);

struct ParseError : std::invalid_argument {
  ParseError(std::string msg, size_t line, size_t column)
      : std::invalid_argument(std::move(msg) + " (line " +
                              std::to_string(line) + ", column " +
                              std::to_string(column) + ")"),
        line(line),
        column(column) {}
  size_t line;
  size_t column;
};

}  // namespace planemld
