#include "planemld/scalar.hpp"

#include <cctype>
#include <mutex>
#include <vector>

namespace planemld {

ExactScalar add(const ExactScalar& x, const ExactScalar& y) {
  return {x.a + y.a, x.b + y.b, x.c + y.c};
}

ExactScalar sub(const ExactScalar& x, const ExactScalar& y) {
  return {x.a - y.a, x.b - y.b, x.c - y.c};
}

ExactScalar neg(const ExactScalar& x) { return {-x.a, -x.b, -x.c}; }

ExactScalar scale(const ExactScalar& x, const Rational& q) {
  return {x.a * q, x.b * q, x.c * q};
}

std::optional<ExactScalar> try_mul(const ExactScalar& x, const ExactScalar& y) {
  // (a + b pi + c/pi)(a' + b' pi + c'/pi): the pi^2 coefficient is b*b' and
  // the pi^-2 coefficient is c*c'; both must vanish for the product to stay
  // in the representable space. The b*c' and c*b' cross terms are constants.
  if (x.b * y.b != 0 || x.c * y.c != 0) return std::nullopt;
  return ExactScalar{x.a * y.a + x.b * y.c + x.c * y.b,
                     x.a * y.b + x.b * y.a,
                     x.a * y.c + x.c * y.a};
}

namespace {

// Partial sum of S * arctan(1/x) = S * sum_k (-1)^k / ((2k+1) x^(2k+1))
// using floor division on each term. Error accounting:
//   - each computed term differs from the real term by < 1 (one floor),
//   - the series is alternating with strictly decreasing terms (x >= 2), so
//     once the scaled term reaches 0 the real tail is < t_n * x^2/(x^2-1)
//     <= 2/S in real value, i.e. <= 2 units of 1/S.
// Hence |S*arctan(1/x) - sum| <= n + 2 where n is the number of terms added.
struct ScaledAtan {
  Integer sum;
  long err_units;  // error bound in units of 1/S
};

ScaledAtan atan_inv_scaled(unsigned long x, const Integer& S) {
  ScaledAtan r{0, 2};
  Integer power = S;  // S / x^(2k+1), floor-divided as we go
  const unsigned long xx = x * x;
  power /= x;
  unsigned long k2p1 = 1;
  int sgn = 1;
  while (power != 0) {
    Integer term = power / k2p1;
    if (sgn > 0)
      r.sum += term;
    else
      r.sum -= term;
    r.err_units += 1;
    power /= xx;
    k2p1 += 2;
    sgn = -sgn;
  }
  return r;
}

Integer pow10(long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(e));
  return r;
}

struct PiCache {
  std::mutex mu;
  int digits = 0;
  Rational lo, hi;
};

PiCache& pi_cache() {
  static PiCache c;
  return c;
}

}  // namespace

std::pair<Rational, Rational> pi_interval(int digits) {
  if (digits < 1) throw std::invalid_argument("pi_interval: digits >= 1");
  PiCache& c = pi_cache();
  std::lock_guard<std::mutex> lock(c.mu);
  if (c.digits >= digits) return {c.lo, c.hi};

  // Machin: pi = 16 arctan(1/5) - 4 arctan(1/239).
  // With scale S = 10^(digits+10), each arctan carries an error bound of
  // (n+2)/S, so |pi*S - P| <= 16(nA+2) + 4(nB+2) =: E. The number of terms n
  // is about 0.72*(digits+10), so E << 10^10 and the interval
  // [(P-E-1)/S, (P+E+1)/S] has width (2E+2)/S <= 10^(-digits) and strictly
  // brackets pi.
  const long prec = digits + 10;
  const Integer S = pow10(prec);
  const ScaledAtan A = atan_inv_scaled(5, S);
  const ScaledAtan B = atan_inv_scaled(239, S);
  const Integer P = 16 * A.sum - 4 * B.sum;
  const Integer E = Integer(16 * A.err_units + 4 * B.err_units + 1);
  Rational lo(P - E, S), hi(P + E, S);
  lo.canonicalize();
  hi.canonicalize();
  c.digits = digits;
  c.lo = lo;
  c.hi = hi;
  return {lo, hi};
}

int sign(const ExactScalar& x) {
  if (x.b == 0 && x.c == 0) return sgn(x.a);
  // x != 0 is guaranteed: a + b*pi + c/pi = 0 with (b,c) != (0,0) would make
  // pi a root of b t^2 + a t + c, contradicting transcendence.
  int digits = 8;
  for (int iter = 0; iter <= 10; ++iter, digits *= 2) {
    auto [plo, phi] = pi_interval(digits);
    Rational lo = x.a, hi = x.a;
    if (x.b >= 0) {
      lo += x.b * plo;
      hi += x.b * phi;
    } else {
      lo += x.b * phi;
      hi += x.b * plo;
    }
    if (x.c >= 0) {
      lo += x.c / phi;
      hi += x.c / plo;
    } else {
      lo += x.c / plo;
      hi += x.c / phi;
    }
    if (sgn(lo) > 0) return 1;
    if (sgn(hi) < 0) return -1;
  }
  throw std::runtime_error("scalar sign: precision cap exceeded");
}

Ordering compare(const ExactScalar& x, const ExactScalar& y) {
  const ExactScalar d = sub(x, y);
  if (d.is_zero()) return Ordering::Equal;
  const int s = sign(d);
  if (s < 0) return Ordering::Less;
  if (s > 0) return Ordering::Greater;
  return Ordering::Equal;
}

namespace {

struct PiBracket {
  long long lo = 0, hi = 0;  // lo/SCALE < pi < hi/SCALE
  static constexpr long long SCALE = 1000000000;  // 10^9
};

const PiBracket& pi_bracket() {
  static PiBracket b = [] {
    PiBracket r;
    auto [lo, hi] = pi_interval(12);
    const Rational scale_q = rat(PiBracket::SCALE);
    Rational l = lo * scale_q, h = hi * scale_q;
    Integer fl, fh;
    mpz_fdiv_q(fl.get_mpz_t(), l.get_num().get_mpz_t(),
               l.get_den().get_mpz_t());
    mpz_cdiv_q(fh.get_mpz_t(), h.get_num().get_mpz_t(),
               h.get_den().get_mpz_t());
    r.lo = to_ll(fl) - 1;
    r.hi = to_ll(fh) + 1;
    return r;
  }();
  return b;
}

}  // namespace

int sign_combo(long long A, long long B, long long C) {
  if (B == 0 && C == 0) return A > 0 ? 1 : (A < 0 ? -1 : 0);
  constexpr long long LIM = 1LL << 55;
  if (A > -LIM && A < LIM && B > -LIM && B < LIM && C > -LIM && C < LIM) {
    // sign(A + B pi + C/pi) = sign(A pi + B pi^2 + C) since pi > 0.
    // Evaluate (A pi + B pi^2 + C) * S^2 with pi*S in (L, H).
    const auto& br = pi_bracket();
    const __int128 S = PiBracket::SCALE;
    const __int128 L = br.lo, H = br.hi;
    __int128 lo = static_cast<__int128>(C) * S * S;
    __int128 hi = lo;
    if (A >= 0) {
      lo += static_cast<__int128>(A) * S * L;
      hi += static_cast<__int128>(A) * S * H;
    } else {
      lo += static_cast<__int128>(A) * S * H;
      hi += static_cast<__int128>(A) * S * L;
    }
    if (B >= 0) {
      lo += static_cast<__int128>(B) * L * L;
      hi += static_cast<__int128>(B) * H * H;
    } else {
      lo += static_cast<__int128>(B) * H * H;
      hi += static_cast<__int128>(B) * L * L;
    }
    if (lo > 0) return 1;
    if (hi < 0) return -1;
  }
  return sign(ExactScalar{rat(A), rat(B), rat(C)});
}

namespace {

std::string strip_ws(const std::string& s) {
  std::string out;
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) out.push_back(ch);
  return out;
}

}  // namespace

ExactScalar parse_scalar(const std::string& text) {
  const std::string s = strip_ws(text);
  if (s.empty()) throw std::invalid_argument("empty scalar");
  ExactScalar out;
  size_t i = 0;
  while (i < s.size()) {
    int sg = 1;
    while (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      if (s[i] == '-') sg = -sg;
      ++i;
    }
    size_t j = i;
    while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
    std::string term = s.substr(i, j - i);
    if (term.empty()) throw std::invalid_argument("bad scalar: " + text);
    i = j;
    Rational q;
    if (term == "pi") {
      out.b += sg;
      continue;
    }
    if (term.size() > 3 && term.compare(term.size() - 3, 3, "/pi") == 0) {
      q = parse_rational(term.substr(0, term.size() - 3));
      out.c += sg * q;
      continue;
    }
    if (term.size() > 2 && term.compare(term.size() - 2, 2, "pi") == 0) {
      std::string head = term.substr(0, term.size() - 2);
      if (!head.empty() && head.back() == '*') head.pop_back();
      q = head.empty() ? Rational(1) : parse_rational(head);
      out.b += sg * q;
      continue;
    }
    q = parse_rational(term);
    out.a += sg * q;
  }
  return out;
}

std::string to_string(const ExactScalar& x) {
  std::vector<std::pair<int, std::string>> parts;  // (sign, magnitude text)
  if (x.a != 0) parts.emplace_back(sgn(x.a), to_string(Rational(abs(x.a))));
  if (x.b != 0) {
    Rational m = abs(x.b);
    parts.emplace_back(sgn(x.b),
                       m == 1 ? "pi" : to_string(m) + "*pi");
  }
  if (x.c != 0)
    parts.emplace_back(sgn(x.c), to_string(Rational(abs(x.c))) + "/pi");
  if (parts.empty()) return "0";
  std::string out;
  for (size_t k = 0; k < parts.size(); ++k) {
    if (k == 0)
      out += (parts[k].first < 0 ? "-" : "") + parts[k].second;
    else
      out += (parts[k].first < 0 ? " - " : " + ") + parts[k].second;
  }
  return out;
}

}  // namespace planemld
