#include "frobsyz/rational.hpp"

#include "frobsyz/errors.hpp"

namespace frobsyz {

std::string to_string(const BigInt& n) { return n.str(); }

std::string to_string(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  const auto parse_int = [&](const std::string& s) {
    const std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos) {
      throw Error(ErrorKind::InvalidArgument, "malformed rational '" + text + "'");
    }
    return BigInt(s);
  };
  if (slash == std::string::npos) return Rational(parse_int(text));
  const BigInt den = parse_int(text.substr(slash + 1));
  if (den <= 0) throw Error(ErrorKind::InvalidArgument, "malformed rational '" + text + "'");
  return Rational(parse_int(text.substr(0, slash)), den);
}

BigInt big_pow(std::uint64_t base, unsigned exponent) {
  return boost::multiprecision::pow(BigInt(base), exponent);
}

}  // namespace frobsyz
