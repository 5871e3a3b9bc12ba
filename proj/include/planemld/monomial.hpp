#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace planemld {

/// x^ex * y^ey with componentwise non-negative exponents.
struct Monomial {
  long long ex = 0;
  long long ey = 0;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;

  bool divides(const Monomial& o) const { return ex <= o.ex && ey <= o.ey; }
  bool is_one() const { return ex == 0 && ey == 0; }
};

std::string to_string(const Monomial& m);

}  // namespace planemld
