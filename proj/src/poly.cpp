#include "planemld/poly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace planemld {

namespace {

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

CoefficientField::CoefficientField(long long ch) : characteristic(ch) {
  if (ch != 0 && !is_prime(ch))
    throw std::invalid_argument("characteristic must be 0 or prime, got " +
                                std::to_string(ch));
}

Rational CoefficientField::normalize(const Rational& value) const {
  if (characteristic == 0) return value;
  // In F_p values are integers; a rational with denominator d means
  // numerator * d^{-1} mod p.
  Integer num = value.get_num(), den = value.get_den();
  const Integer p = big(characteristic);
  Integer r;
  mpz_mod(r.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
  if (den != 1) {
    Integer dinv;
    if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
      throw std::domain_error("denominator not invertible mod p");
    r = (r * dinv) % p;
  }
  return Rational(r);
}

Rational CoefficientField::inverse(const Rational& value) const {
  const Rational v = normalize(value);
  if (v == 0) throw std::domain_error("inverse of zero");
  if (characteristic == 0) return 1 / v;
  Integer inv;
  const Integer p = big(characteristic);
  mpz_invert(inv.get_mpz_t(), v.get_num().get_mpz_t(), p.get_mpz_t());
  return Rational(inv);
}

BivariatePolynomial BivariatePolynomial::constant(CoefficientField f,
                                                  const Rational& c) {
  return monomial(f, Monomial{0, 0}, c);
}

BivariatePolynomial BivariatePolynomial::monomial(CoefficientField f,
                                                  Monomial m,
                                                  const Rational& c) {
  BivariatePolynomial out{f, {}};
  const Rational v = f.normalize(c);
  if (v != 0) out.terms.emplace(m, v);
  return out;
}

namespace {

void check_fields(const BivariatePolynomial& f, const BivariatePolynomial& g) {
  if (!(f.field == g.field))
    throw std::invalid_argument("coefficient field mismatch");
}

void add_term(BivariatePolynomial& f, const Monomial& m, const Rational& c) {
  auto it = f.terms.find(m);
  if (it == f.terms.end()) {
    const Rational v = f.field.normalize(c);
    if (v != 0) f.terms.emplace(m, v);
    return;
  }
  it->second = f.field.normalize(it->second + c);
  if (it->second == 0) f.terms.erase(it);
}

}  // namespace

BivariatePolynomial add(const BivariatePolynomial& f,
                        const BivariatePolynomial& g) {
  check_fields(f, g);
  BivariatePolynomial out = f;
  for (const auto& [m, c] : g.terms) add_term(out, m, c);
  return out;
}

BivariatePolynomial sub(const BivariatePolynomial& f,
                        const BivariatePolynomial& g) {
  check_fields(f, g);
  BivariatePolynomial out = f;
  for (const auto& [m, c] : g.terms) add_term(out, m, -c);
  return out;
}

BivariatePolynomial mul(const BivariatePolynomial& f,
                        const BivariatePolynomial& g) {
  check_fields(f, g);
  BivariatePolynomial out{f.field, {}};
  for (const auto& [mf, cf] : f.terms)
    for (const auto& [mg, cg] : g.terms)
      add_term(out, Monomial{mf.ex + mg.ex, mf.ey + mg.ey}, cf * cg);
  return out;
}

BivariatePolynomial pow(const BivariatePolynomial& f, long long n) {
  if (n < 0) throw std::invalid_argument("negative power");
  BivariatePolynomial out = BivariatePolynomial::constant(f.field, 1);
  BivariatePolynomial base = f;
  while (n > 0) {
    if (n & 1) out = mul(out, base);
    n >>= 1;
    if (n) base = mul(base, base);
  }
  return out;
}

BivariatePolynomial substitute(const BivariatePolynomial& f,
                               const BivariatePolynomial& img_x,
                               const BivariatePolynomial& img_y) {
  check_fields(f, img_x);
  check_fields(f, img_y);
  // Horner-free expansion with cached powers; exponents stay small here.
  std::vector<BivariatePolynomial> xp{BivariatePolynomial::constant(f.field, 1)};
  std::vector<BivariatePolynomial> yp{BivariatePolynomial::constant(f.field, 1)};
  auto power = [](std::vector<BivariatePolynomial>& cache,
                  const BivariatePolynomial& base,
                  long long e) -> const BivariatePolynomial& {
    while (static_cast<long long>(cache.size()) <= e)
      cache.push_back(mul(cache.back(), base));
    return cache[static_cast<size_t>(e)];
  };
  BivariatePolynomial out{f.field, {}};
  for (const auto& [m, c] : f.terms) {
    BivariatePolynomial term =
        mul(power(xp, img_x, m.ex), power(yp, img_y, m.ey));
    for (const auto& [tm, tc] : term.terms) add_term(out, tm, tc * c);
  }
  return out;
}

std::set<Monomial> support(const BivariatePolynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("support of zero polynomial");
  std::set<Monomial> out;
  for (const auto& [m, c] : f.terms) out.insert(m);
  return out;
}

PolynomialIdeal PolynomialIdeal::of(std::vector<BivariatePolynomial> gens) {
  if (gens.empty())
    throw std::invalid_argument("ideal needs at least one generator");
  for (size_t i = 1; i < gens.size(); ++i)
    if (!(gens[i].field == gens[0].field))
      throw std::invalid_argument("coefficient field mismatch");
  for (const auto& g : gens)
    if (g.is_zero())
      throw std::invalid_argument("zero generator");
  return PolynomialIdeal{gens[0].field, std::move(gens)};
}

namespace {

BivariatePolynomial var_x(CoefficientField f) {
  return BivariatePolynomial::monomial(f, Monomial{1, 0});
}

BivariatePolynomial var_y(CoefficientField f) {
  return BivariatePolynomial::monomial(f, Monomial{0, 1});
}

BivariatePolynomial univariate(CoefficientField f,
                               const std::vector<Rational>& coeffs, bool in_y) {
  BivariatePolynomial h = BivariatePolynomial::zero(f);
  for (size_t i = 0; i < coeffs.size(); ++i) {
    const long long deg = static_cast<long long>(i) + 1;
    h = add(h, BivariatePolynomial::monomial(
                   f, in_y ? Monomial{0, deg} : Monomial{deg, 0}, coeffs[i]));
  }
  return h;
}

BivariatePolynomial apply_step(const PlaneAutomorphism::Step& step,
                               CoefficientField field,
                               const BivariatePolynomial& f) {
  if (const auto* lin = std::get_if<PlaneAutomorphism::Linear>(&step)) {
    BivariatePolynomial ix =
        add(BivariatePolynomial::monomial(field, {1, 0}, lin->a),
            BivariatePolynomial::monomial(field, {0, 1}, lin->b));
    BivariatePolynomial iy =
        add(BivariatePolynomial::monomial(field, {1, 0}, lin->c),
            BivariatePolynomial::monomial(field, {0, 1}, lin->d));
    return substitute(f, ix, iy);
  }
  if (const auto* sx = std::get_if<PlaneAutomorphism::ShearX>(&step)) {
    return substitute(f, add(var_x(field), univariate(field, sx->coeffs, true)),
                      var_y(field));
  }
  const auto& sy = std::get<PlaneAutomorphism::ShearY>(step);
  return substitute(f, var_x(field),
                    add(var_y(field), univariate(field, sy.coeffs, false)));
}

}  // namespace

BivariatePolynomial apply(const PlaneAutomorphism& phi,
                          const BivariatePolynomial& f) {
  if (!(phi.field == f.field))
    throw std::invalid_argument("coefficient field mismatch");
  BivariatePolynomial out = f;
  for (const auto& step : phi.steps) out = apply_step(step, phi.field, out);
  return out;
}

PolynomialIdeal apply(const PlaneAutomorphism& phi, const PolynomialIdeal& I) {
  std::vector<BivariatePolynomial> gens;
  gens.reserve(I.generators.size());
  for (const auto& g : I.generators) gens.push_back(apply(phi, g));
  return PolynomialIdeal::of(std::move(gens));
}

PlaneAutomorphism inverse(const PlaneAutomorphism& phi) {
  PlaneAutomorphism inv{phi.field, {}};
  for (auto it = phi.steps.rbegin(); it != phi.steps.rend(); ++it) {
    if (const auto* lin = std::get_if<PlaneAutomorphism::Linear>(&*it)) {
      const Rational det =
          phi.field.normalize(lin->a * lin->d - lin->b * lin->c);
      const Rational dinv = phi.field.inverse(det);
      inv.steps.push_back(PlaneAutomorphism::Linear{
          phi.field.normalize(lin->d * dinv),
          phi.field.normalize(-lin->b * dinv),
          phi.field.normalize(-lin->c * dinv),
          phi.field.normalize(lin->a * dinv)});
    } else if (const auto* sx = std::get_if<PlaneAutomorphism::ShearX>(&*it)) {
      std::vector<Rational> negc;
      for (const Rational& c : sx->coeffs)
        negc.push_back(phi.field.normalize(-c));
      inv.steps.push_back(PlaneAutomorphism::ShearX{std::move(negc)});
    } else {
      const auto& sy = std::get<PlaneAutomorphism::ShearY>(*it);
      std::vector<Rational> negc;
      for (const Rational& c : sy.coeffs)
        negc.push_back(phi.field.normalize(-c));
      inv.steps.push_back(PlaneAutomorphism::ShearY{std::move(negc)});
    }
  }
  return inv;
}

MonomialIdeal monomialize(const PolynomialIdeal& I) {
  std::vector<Monomial> monomials;
  for (const auto& g : I.generators)
    for (const auto& [m, c] : g.terms) monomials.push_back(m);
  return make_ideal(std::move(monomials));
}

std::vector<PlaneAutomorphism> elementary_automorphisms(
    CoefficientField field, long long degree_bound,
    const std::vector<Rational>& coefficient_pool) {
  if (degree_bound < 1) throw std::invalid_argument("degree bound >= 1");
  if (coefficient_pool.empty()) throw std::invalid_argument("empty pool");
  std::vector<Rational> pool;
  for (const Rational& c : coefficient_pool)
    pool.push_back(field.normalize(c));

  std::vector<PlaneAutomorphism> out;
  out.push_back(PlaneAutomorphism{field, {}});  // identity

  for (const Rational& a : pool)
    for (const Rational& b : pool)
      for (const Rational& c : pool)
        for (const Rational& d : pool) {
          if (field.normalize(a * d - b * c) == 0) continue;
          PlaneAutomorphism phi{field, {}};
          phi.steps.push_back(PlaneAutomorphism::Linear{a, b, c, d});
          out.push_back(std::move(phi));
        }

  // All coefficient tuples (c_1, ..., c_d) over the pool, excluding h = 0.
  std::vector<size_t> idx(static_cast<size_t>(degree_bound), 0);
  const size_t n = pool.size();
  while (true) {
    std::vector<Rational> coeffs;
    bool nonzero = false;
    for (size_t i : idx) {
      coeffs.push_back(pool[i]);
      if (pool[i] != 0) nonzero = true;
    }
    if (nonzero) {
      PlaneAutomorphism sx{field, {}};
      sx.steps.push_back(PlaneAutomorphism::ShearX{coeffs});
      out.push_back(std::move(sx));
      PlaneAutomorphism sy{field, {}};
      sy.steps.push_back(PlaneAutomorphism::ShearY{coeffs});
      out.push_back(std::move(sy));
    }
    size_t pos = 0;
    while (pos < idx.size() && ++idx[pos] == n) {
      idx[pos] = 0;
      ++pos;
    }
    if (pos == idx.size()) break;
  }
  return out;
}

namespace {

struct PolyLexer {
  const std::string& s;
  size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    size_t line = 1, col = 1;
    for (size_t k = 0; k < i && k < s.size(); ++k) {
      if (s[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(msg, line, col);
  }
  bool eat(char ch) {
    skip_ws();
    if (i < s.size() && s[i] == ch) {
      ++i;
      return true;
    }
    return false;
  }
  long long integer() {
    skip_ws();
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) fail("expected integer");
    return std::stoll(s.substr(start, i - start));
  }
};

}  // namespace

BivariatePolynomial parse_polynomial(const std::string& text,
                                     CoefficientField field) {
  PolyLexer lx{text};
  BivariatePolynomial out = BivariatePolynomial::zero(field);
  bool first = true;
  while (true) {
    lx.skip_ws();
    if (lx.i >= text.size()) {
      if (first) lx.fail("empty polynomial");
      break;
    }
    int sg = 1;
    while (true) {
      if (lx.eat('+')) continue;
      if (lx.eat('-')) {
        sg = -sg;
        continue;
      }
      break;
    }
    lx.skip_ws();
    if (lx.i >= text.size()) lx.fail("dangling sign");

    Rational coeff(sg);
    Monomial m{0, 0};
    bool saw_any = false;
    if (lx.i < text.size() &&
        std::isdigit(static_cast<unsigned char>(text[lx.i]))) {
      coeff = sg * rat(lx.integer());
      saw_any = true;
      lx.eat('*');
    }
    if (lx.eat('x')) {
      m.ex = lx.eat('^') ? lx.integer() : 1;
      saw_any = true;
      lx.eat('*');
    }
    if (lx.eat('y')) {
      m.ey = lx.eat('^') ? lx.integer() : 1;
      saw_any = true;
    }
    if (!saw_any) lx.fail("expected term");
    out = add(out, BivariatePolynomial::monomial(field, m, coeff));
    first = false;
    lx.skip_ws();
    if (lx.i < text.size() && text[lx.i] != '+' && text[lx.i] != '-')
      lx.fail("unexpected character '" + std::string(1, text[lx.i]) + "'");
  }
  return out;
}

std::string to_string(const BivariatePolynomial& f) {
  if (f.is_zero()) return "0";
  // Print highest total degree last to match the usual "x^2 + y^3" habit of
  // listing generators; map order (ex, then ey) is already deterministic.
  std::string out;
  bool first = true;
  for (const auto& [m, c] : f.terms) {
    Rational mag = abs(c);
    const bool negative = sgn(c) < 0;
    std::string body;
    if (m.is_one()) {
      body = to_string(mag);
    } else {
      if (mag != 1) body = to_string(mag) + "*";
      body += to_string(m);
    }
    if (first) {
      out += (negative ? "-" : "") + body;
      first = false;
    } else {
      out += (negative ? " - " : " + ") + body;
    }
  }
  return out;
}

}  // namespace planemld
