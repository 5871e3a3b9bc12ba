#include "planemld/textio.hpp"

#include <vector>

namespace planemld {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  size_t start = 0;
  for (size_t i = 0; i <= text.size(); ++i)
    if (i == text.size() || text[i] == sep) {
      parts.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  return parts;
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

}  // namespace

PolyMultiIdeal parse_multiideal(const std::string& text,
                                CoefficientField field) {
  std::vector<std::pair<PolynomialIdeal, ExactScalar>> pairs;
  for (const std::string& chunk : split(text, ';')) {
    std::string body = chunk;
    ExactScalar exponent = ExactScalar::of_int(1);
    if (const size_t at = chunk.find('@'); at != std::string::npos) {
      if (chunk.find('@', at + 1) != std::string::npos)
        throw std::invalid_argument("multiple '@' in one ideal");
      body = chunk.substr(0, at);
      exponent = parse_scalar(trim(chunk.substr(at + 1)));
    }
    std::vector<BivariatePolynomial> gens;
    for (const std::string& gen_text : split(body, ','))
      gens.push_back(parse_polynomial(trim(gen_text), field));
    pairs.emplace_back(PolynomialIdeal::of(std::move(gens)), exponent);
  }
  return PolyMultiIdeal::of(std::move(pairs));
}

std::string to_text(const PolyMultiIdeal& P) {
  std::string out;
  for (size_t i = 0; i < P.pairs.size(); ++i) {
    if (i) out += "; ";
    const auto& [ideal, e] = P.pairs[i];
    for (size_t j = 0; j < ideal.generators.size(); ++j) {
      if (j) out += ", ";
      out += to_string(ideal.generators[j]);
    }
    out += " @ " + to_string(e);
  }
  return out;
}

std::string to_text(const MultiIdeal& M) {
  std::string out;
  for (size_t i = 0; i < M.pairs.size(); ++i) {
    if (i) out += "; ";
    out += to_string(M.pairs[i].first) + " @ " + to_string(M.pairs[i].second);
  }
  return out;
}

}  // namespace planemld
