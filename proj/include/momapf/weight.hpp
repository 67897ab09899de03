#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace momapf {

/// Heuristic inflation factor w >= 1 as an exact rational. f-vectors are
/// formed as g*den + h*num so dominance and ordering stay integer-exact
/// for w = 1.1, 1.2, ... with no float ties.
struct Weight {
  std::int64_t num = 1;
  std::int64_t den = 1;

  Weight() = default;
  Weight(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den <= 0 || num <= 0)
      throw std::invalid_argument("inflation weight must be positive");
    const auto g = std::gcd(num, den);
    num /= g;
    den /= g;
    if (num < den)
      throw std::invalid_argument("inflation weight must be >= 1");
  }

  bool is_one() const { return num == den; }

  bool operator==(const Weight& o) const {
    return num == o.num && den == o.den;
  }

  /// Accepts "2", "1.2", "1.05" or "11/10".
  static Weight parse(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty weight string");
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
      return Weight(std::stoll(text.substr(0, slash)),
                    std::stoll(text.substr(slash + 1)));
    }
    const auto dot = text.find('.');
    if (dot == std::string::npos) return Weight(std::stoll(text), 1);
    const std::string whole = text.substr(0, dot);
    const std::string frac = text.substr(dot + 1);
    if (frac.empty() || frac.size() > 9)
      throw std::invalid_argument("unparseable weight: " + text);
    std::int64_t den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    const std::int64_t num =
        std::stoll(whole) * den + std::stoll(frac);
    return Weight(num, den);
  }

  std::string to_string() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

}  // namespace momapf
