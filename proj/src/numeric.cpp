#include "cylspec/numeric.hpp"

#include <cctype>

#include "cylspec/errors.hpp"

namespace cylspec {

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) fail(ErrorKind::InvalidParameter, "rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational make_rational(long num, long den) {
  return make_rational(BigInt(num), BigInt(den));
}

std::vector<BigInt> binomial_row(unsigned n) {
  std::vector<BigInt> row(n + 1);
  row[0] = 1;
  for (unsigned j = 0; j < n; ++j) {
    // exact: (n-j) | row[j]*(n-j)
    BigInt next = row[j] * (n - j);
    mpz_divexact_ui(next.get_mpz_t(), next.get_mpz_t(), j + 1);
    row[j + 1] = next;
  }
  return row;
}

BigInt pow2(unsigned n) {
  BigInt v;
  mpz_ui_pow_ui(v.get_mpz_t(), 2, n);
  return v;
}

double ratio_as_double(const BigInt& num, const BigInt& den) {
  return make_rational(num, den).get_d();
}

std::string bigint_to_string(const BigInt& v) { return v.get_str(); }

BigInt bigint_from_string(const std::string& text) {
  if (text.empty()) fail(ErrorKind::Parse, "empty integer literal");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) fail(ErrorKind::Parse, "bare sign is not an integer: '" + text + "'");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      fail(ErrorKind::Parse, "malformed integer literal: '" + text + "'");
    }
  }
  return BigInt(text, 10);
}

Rational rational_from_string(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) {
    return Rational(bigint_from_string(text));
  }
  BigInt num = bigint_from_string(text.substr(0, slash));
  std::string den_text = text.substr(slash + 1);
  BigInt den = bigint_from_string(den_text);
  if (den == 0) fail(ErrorKind::Parse, "malformed rational (zero denominator): '" + text + "'");
  if (den < 0) fail(ErrorKind::Parse, "malformed rational (negative denominator): '" + text + "'");
  return make_rational(num, den);
}

std::string rational_to_string(const Rational& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

}  // namespace cylspec
