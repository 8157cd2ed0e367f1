#include "dkap/scalar.hpp"

#include <ios>
#include <stdexcept>

#include "dkap/errors.hpp"

namespace dkap {

namespace {

bool parse_integer(std::string_view text, Int& out) {
  if (text.empty()) return false;
  std::size_t start = (text.front() == '-' || text.front() == '+') ? 1 : 0;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') return false;
  }
  std::string digits(text.front() == '+' ? text.substr(1) : text);
  out = Int(digits);
  return true;
}

std::string_view trim(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
  return text;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  text = trim(text);
  const auto slash = text.find('/');
  Int num;
  Int den = 1;
  if (!parse_integer(text.substr(0, slash), num)) {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }
  if (slash != std::string_view::npos) {
    auto den_text = text.substr(slash + 1);
    if (den_text.empty() || den_text.front() == '-' || den_text.front() == '+' ||
        !parse_integer(den_text, den)) {
      throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    }
    if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  }
  return Rat(num, den);
}

std::string to_string(const Rat& value) {
  const Int num = mp::numerator(value);
  const Int den = mp::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string to_string(const Real& value, int digits) {
  return value.str(digits, std::ios_base::scientific);
}

Real to_real(const Rat& value) {
  return Real(mp::numerator(value)) / Real(mp::denominator(value));
}

Real to_real(const Int& value) { return Real(value); }

bool is_integer(const Rat& value) { return mp::denominator(value) == 1; }

Real relative_gap(const Real& a, const Real& b) {
  const Real diff = abs(a - b);
  if (b == 0) return diff;
  return diff / abs(b);
}

Real pow10_neg(int k) { return pow(Real(10), Real(-k)); }

Rat rat_abs(const Rat& value) { return value < 0 ? Rat(-value) : value; }

Rat rat_pow(const Rat& base, long exponent) {
  if (exponent < 0) {
    require(base != 0, "rat_pow: zero base with negative exponent");
    return rat_pow(Rat(1) / base, -exponent);
  }
  Rat result = 1;
  Rat b = base;
  auto e = static_cast<unsigned long>(exponent);
  while (e != 0) {
    if (e & 1u) result *= b;
    e >>= 1u;
    if (e != 0) b *= b;
  }
  return result;
}

Int factorial(unsigned n) {
  Int result = 1;
  for (unsigned i = 2; i <= n; ++i) result *= i;
  return result;
}

Int binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Int result = 1;
  for (long i = 1; i <= k; ++i) {
    result *= (n - k + i);
    result /= i;
  }
  return result;
}

}  // namespace dkap
