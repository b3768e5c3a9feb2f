#ifndef HYPERMIM_TYPES_H_
#define HYPERMIM_TYPES_H_

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace hypermim {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

using VertexSet = std::vector<VertexId>;  // sorted, duplicate-free
using EdgeSet = std::vector<EdgeId>;      // sorted, duplicate-free

// Raised on contract violations: unknown ids, malformed input, guard limits.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when an exhaustive routine would exceed its configured size guard.
class GuardError : public Error {
 public:
  using Error::Error;
};

// Exact non-negative rational, used for the expansion parameter phi.
struct Rational {
  std::int64_t num = 1;
  std::int64_t den = 1;

  static Rational make(std::int64_t n, std::int64_t d) {
    if (d == 0) throw Error("rational with zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    const std::int64_t g = std::gcd(n < 0 ? -n : n, d);
    return {n / (g == 0 ? 1 : g), d / (g == 0 ? 1 : g)};
  }
  Rational inverse() const { return make(den, num); }
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  bool positive() const { return num > 0 && den > 0; }

  friend bool operator==(const Rational &a, const Rational &b) {
    return a.num == b.num && a.den == b.den;
  }
  std::string str() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
  }
};

// Parses "3", "1/2" or a decimal such as "0.25".
Rational parse_rational(const std::string &text);

}  // namespace hypermim

#endif  // HYPERMIM_TYPES_H_
