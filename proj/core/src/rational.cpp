#include "fcakit/rational.hpp"

#include "fcakit/errors.hpp"

#include <cctype>

namespace fcakit {

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

Rational parse_rational(const std::string& text) {
  auto bad = [&] { throw ValidationError("not a rational number: '" + text + "'"); };
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) bad();
  try {
    auto slash = s.find('/');
    if (slash != std::string::npos) {
      BigInt num(s.substr(0, slash));
      BigInt den(s.substr(slash + 1));
      if (den == 0) bad();
      return Rational(num, den);
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
      std::string digits = s.substr(0, dot) + s.substr(dot + 1);
      if (digits.empty() || digits == "-" || digits == "+") bad();
      BigInt num(digits);
      BigInt den = 1;
      for (std::size_t i = dot + 1; i < s.size(); ++i) den *= 10;
      return Rational(num, den);
    }
    return Rational(BigInt(s));
  } catch (const std::exception&) {
    bad();
  }
  return 0;  // unreachable
}

std::string fraction_string(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string decimal_string(const Rational& r, unsigned precision) {
  const bool negative = r < 0;
  const Rational a = negative ? Rational(-r) : r;
  BigInt scale = 1;
  for (unsigned i = 0; i < precision; ++i) scale *= 10;
  const BigInt num = boost::multiprecision::numerator(a) * scale;
  const BigInt den = boost::multiprecision::denominator(a);
  BigInt q = num / den;
  const BigInt rem = num % den;
  const int cmp = (rem * 2).compare(den);
  if (cmp > 0 || (cmp == 0 && (q & 1) != 0)) ++q;  // half-even
  std::string digits = q.str();
  if (digits.size() <= precision) digits.insert(0, precision + 1 - digits.size(), '0');
  std::string out;
  if (negative && q != 0) out.push_back('-');
  out += digits.substr(0, digits.size() - precision);
  if (precision > 0) {
    out.push_back('.');
    out += digits.substr(digits.size() - precision);
  }
  return out;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace fcakit
