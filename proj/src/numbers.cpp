#include "linext/numbers.hpp"

#include <cctype>

#include "linext/errors.hpp"

namespace linext {

std::string fraction_string(const fraction& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

fraction parse_fraction(const std::string& text) {
  if (text.empty()) throw parse_error("empty fraction");
  mpq_class q;
  if (q.set_str(text, 10) != 0)
    throw parse_error("malformed fraction: " + text);
  if (q.get_den() == 0) throw parse_error("zero denominator: " + text);
  q.canonicalize();
  return q;
}

big_int pow10(int digits) {
  big_int p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, digits);
  return p;
}

std::string format_scaled_integer(const big_int& n, int digits) {
  bool neg = n < 0;
  big_int mag = abs(n);
  std::string s = mag.get_str();
  if (digits == 0) return (neg && mag != 0 ? "-" : "") + s;
  if (static_cast<int>(s.size()) <= digits)
    s.insert(0, digits + 1 - s.size(), '0');
  s.insert(s.size() - digits, ".");
  if (neg && mag != 0) s.insert(0, "-");
  return s;
}

std::string decimal_string(const fraction& q, int digits) {
  // n = round_half_even(q * 10^digits), computed with integer division.
  big_int num = q.get_num() * pow10(digits);
  const big_int& den = q.get_den();
  big_int n, r;
  mpz_fdiv_qr(n.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  int half = cmp(r * 2, den);
  if (half > 0 || (half == 0 && mpz_odd_p(n.get_mpz_t())))
    n += 1;
  return format_scaled_integer(n, digits);
}

}  // namespace linext
