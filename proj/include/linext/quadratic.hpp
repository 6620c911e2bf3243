#pragma once

#include <algorithm>
#include <array>
#include <string>
#include <utility>

#include "linext/errors.hpp"
#include "linext/numbers.hpp"

namespace linext {

// Exact element a + b*sqrt(Radicand) of a real quadratic field. Equality is
// componentwise; the sign is decided rationally, never through floats. The
// radicand is a template parameter for testability, but only 6697 is part of
// the supported surface.
template <long Radicand>
struct quad_number {
  static_assert(Radicand > 1, "radicand must exceed 1");

  fraction a;  // rational part
  fraction b;  // coefficient of sqrt(Radicand)

  quad_number() : a(0), b(0) {}
  quad_number(int value) : a(value), b(0) {}
  quad_number(fraction rational) : a(std::move(rational)), b(0) {
    a.canonicalize();
  }
  // Raw mpq_class(p, q) construction is not canonical; normalize on entry.
  quad_number(fraction ra, fraction rb) : a(std::move(ra)), b(std::move(rb)) {
    a.canonicalize();
    b.canonicalize();
  }

  static quad_number root() { return {fraction(0), fraction(1)}; }

  bool is_zero() const { return sgn(a) == 0 && sgn(b) == 0; }

  // Exact sign. With mixed-sign components, compares a^2 against
  // Radicand * b^2; near-boundary quantities stay decidable.
  int sign() const {
    int sa = sgn(a), sb = sgn(b);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    int c = cmp(a * a, fraction(Radicand) * b * b);
    if (c == 0) return 0;
    return c > 0 ? sa : sb;
  }

  friend quad_number operator+(const quad_number& x, const quad_number& y) {
    return {x.a + y.a, x.b + y.b};
  }
  friend quad_number operator-(const quad_number& x, const quad_number& y) {
    return {x.a - y.a, x.b - y.b};
  }
  friend quad_number operator-(const quad_number& x) { return {-x.a, -x.b}; }
  friend quad_number operator*(const quad_number& x, const quad_number& y) {
    return {x.a * y.a + fraction(Radicand) * x.b * y.b,
            x.a * y.b + x.b * y.a};
  }
  friend quad_number operator/(const quad_number& x, const quad_number& y) {
    if (y.is_zero()) throw division_by_zero();
    fraction norm = y.a * y.a - fraction(Radicand) * y.b * y.b;
    return {(x.a * y.a - fraction(Radicand) * x.b * y.b) / norm,
            (x.b * y.a - x.a * y.b) / norm};
  }
  friend bool operator==(const quad_number& x, const quad_number& y) {
    return x.a == y.a && x.b == y.b;
  }
  friend bool operator<(const quad_number& x, const quad_number& y) {
    return (x - y).sign() < 0;
  }
  friend bool operator>(const quad_number& x, const quad_number& y) {
    return (x - y).sign() > 0;
  }
  friend quad_number abs(const quad_number& x) {
    return x.sign() < 0 ? -x : x;
  }
};

using quad6697 = quad_number<6697>;

template <long Radicand>
int sign_of(const quad_number<Radicand>& x) {
  return x.sign();
}

// Greatest integer <= x, via a float estimate corrected by exact sign tests.
template <long Radicand>
big_int floor_of(const quad_number<Radicand>& x);

// Fixed-point rendering, round-half-even at `digits` places.
template <long Radicand>
std::string decimal_string(const quad_number<Radicand>& x, int digits);

// "(p + q*sqrt(R))/r" with integers p, q, r and r > 0; q carries the sign,
// e.g. "(93 - 1*sqrt(6697))/32".
template <long Radicand>
std::string exact_string(const quad_number<Radicand>& x);

// Inverse of exact_string; also accepts plain "p" and "p/q".
template <long Radicand>
quad_number<Radicand> parse_quad(const std::string& text);

// Integer pair with l + m*sqrt(6697) = 2 * s^k, where s = 82 + sqrt(6697) is
// the dominant root of t^2 - 164 t + 27. Both components satisfy
// x_{k+1} = 164 x_k - 27 x_{k-1}, from (l, m) = (2, 0) and (164, 2).
struct lucas_pair {
  long k;
  big_int l;  // s^k + conj(s)^k
  big_int m;  // (s^k - conj(s)^k) / sqrt(6697)
};

lucas_pair lucas_terms(long k);

// One closed form for a diagonal-family count: the value at k is
// coeff_m * M_k + coeff_l * L_k, an exact integer equal to E(m, n) at
// (m, n) = (5k + m_offset, 5k + n_offset).
struct closed_form {
  int id;  // position in the form table, 1-based
  int m_offset;
  int n_offset;
  fraction coeff_m;
  fraction coeff_l;
  long min_k;  // smallest k giving a defined (m, n)
};

const std::array<closed_form, 13>& closed_forms();

// Throws range_error below min_k and non_integer_error if the rational
// combination fails to collapse to an integer (a transcription bug).
big_int closed_form_value(const closed_form& form, long k);

const closed_form& closed_form_for(int m_offset, int n_offset);

// The limiting balance constant (93 - sqrt(6697))/32 of the diagonal family.
quad6697 kappa();

// (sqrt(6697) - 61)/32, the limit of E(5k, 5k-1)/E(5k, 5k).
quad6697 one_minus_kappa();

// ---------------------------------------------------------------------------

template <long Radicand>
big_int floor_of(const quad_number<Radicand>& x) {
  auto bits_of = [](const fraction& q) {
    return mpz_sizeinbase(q.get_num().get_mpz_t(), 2) +
           mpz_sizeinbase(q.get_den().get_mpz_t(), 2);
  };
  mp_bitcnt_t prec = 128 + std::max(bits_of(x.a), bits_of(x.b));
  mpf_class fa(x.a, prec), fb(x.b, prec), root(0, prec);
  root = Radicand;
  mpf_sqrt(root.get_mpf_t(), root.get_mpf_t());
  mpf_class estimate = fa + fb * root;
  mpf_class fl = floor(estimate);
  big_int n;
  mpz_set_f(n.get_mpz_t(), fl.get_mpf_t());
  while ((x - quad_number<Radicand>(fraction(n))).sign() < 0) n -= 1;
  while ((x - quad_number<Radicand>(fraction(n + 1))).sign() >= 0) n += 1;
  return n;
}

template <long Radicand>
std::string decimal_string(const quad_number<Radicand>& x, int digits) {
  if (sgn(x.b) == 0) return decimal_string(x.a, digits);
  quad_number<Radicand> scaled{x.a * fraction(pow10(digits)),
                               x.b * fraction(pow10(digits))};
  big_int n = floor_of(scaled);
  // round half even on the remainder
  quad_number<Radicand> twice_rem =
      (scaled - quad_number<Radicand>(fraction(n))) * quad_number<Radicand>(2);
  int half = (twice_rem - quad_number<Radicand>(1)).sign();
  if (half > 0 || (half == 0 && mpz_odd_p(n.get_mpz_t()))) n += 1;
  return format_scaled_integer(n, digits);
}

template <long Radicand>
std::string exact_string(const quad_number<Radicand>& x) {
  big_int r;
  mpz_lcm(r.get_mpz_t(), x.a.get_den().get_mpz_t(), x.b.get_den().get_mpz_t());
  big_int p = x.a.get_num() * (r / x.a.get_den());
  big_int q = x.b.get_num() * (r / x.b.get_den());
  big_int q_mag = abs(q);
  std::string sign = sgn(q) < 0 ? " - " : " + ";
  return "(" + p.get_str() + sign + q_mag.get_str() + "*sqrt(" +
         std::to_string(Radicand) + "))/" + r.get_str();
}

template <long Radicand>
quad_number<Radicand> parse_quad(const std::string& text) {
  auto fail = [&]() -> quad_number<Radicand> {
    throw parse_error("malformed quadratic value: " + text);
  };
  if (text.empty()) return fail();
  if (text.front() != '(') return quad_number<Radicand>(parse_fraction(text));
  auto close = text.rfind(')');
  if (close == std::string::npos) return fail();
  std::string body = text.substr(1, close - 1);
  std::string tail = text.substr(close + 1);  // "/r" or ""
  std::string radical = "*sqrt(" + std::to_string(Radicand) + ")";
  auto rad = body.rfind(radical);
  if (rad == std::string::npos || rad + radical.size() != body.size())
    return fail();
  // body = "p + q" or "p - q" around the final top-level sign
  std::string head = body.substr(0, rad);
  auto plus = head.rfind(" + ");
  auto minus = head.rfind(" - ");
  std::size_t split;
  bool negative;
  if (plus != std::string::npos && (minus == std::string::npos || plus > minus)) {
    split = plus;
    negative = false;
  } else if (minus != std::string::npos) {
    split = minus;
    negative = true;
  } else {
    return fail();
  }
  fraction p = parse_fraction(head.substr(0, split));
  fraction q = parse_fraction(head.substr(split + 3));
  if (negative) q = -q;
  fraction denom(1);
  if (!tail.empty()) {
    if (tail.front() != '/') return fail();
    denom = parse_fraction(tail.substr(1));
    if (sgn(denom) == 0) throw parse_error("zero denominator: " + text);
  }
  return {p / denom, q / denom};
}

}  // namespace linext
