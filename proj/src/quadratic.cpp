#include "linext/quadratic.hpp"

namespace linext {

lucas_pair lucas_terms(long k) {
  if (k < 0) throw range_error("lucas_terms needs k >= 0");
  big_int l_prev = 2, m_prev = 0;  // k = 0
  big_int l = 164, m = 2;          // k = 1
  if (k == 0) return {0, l_prev, m_prev};
  for (long i = 1; i < k; ++i) {
    big_int l_next = 164 * l - 27 * l_prev;
    big_int m_next = 164 * m - 27 * m_prev;
    l_prev = std::move(l);
    m_prev = std::move(m);
    l = std::move(l_next);
    m = std::move(m_next);
  }
  return {k, l, m};
}

const std::array<closed_form, 13>& closed_forms() {
  static const std::array<closed_form, 13> table = {{
      {1, 4, 4, fraction(3025, 2), fraction(37, 2), 0},
      {2, 4, 3, fraction(1883, 2), fraction(23, 2), 0},
      {3, 3, 3, fraction(571), fraction(7), 0},
      {4, 3, 2, fraction(741, 2), fraction(9, 2), 0},
      {5, 3, 1, fraction(170), fraction(2), 0},
      {6, 2, 2, fraction(401, 2), fraction(5, 2), 0},
      {7, 2, 1, fraction(247, 2), fraction(3, 2), 0},
      {8, 1, 1, fraction(77), fraction(1), 0},
      {9, 1, 0, fraction(93, 2), fraction(1, 2), 0},
      {10, 0, 1, fraction(61, 2), fraction(1, 2), 0},
      {11, 0, 0, fraction(77, 3), fraction(1, 3), 1},
      {12, 0, -1, fraction(125, 6), fraction(1, 6), 1},
      {13, 0, -2, fraction(16), fraction(0), 1},
  }};
  return table;
}

big_int closed_form_value(const closed_form& form, long k) {
  if (k < form.min_k)
    throw range_error("closed form " + std::to_string(form.id) +
                      " needs k >= " + std::to_string(form.min_k));
  lucas_pair lm = lucas_terms(k);
  fraction value = form.coeff_m * fraction(lm.m) + form.coeff_l * fraction(lm.l);
  if (value.get_den() != 1)
    throw non_integer_error("closed form " + std::to_string(form.id) +
                            " did not collapse to an integer at k = " +
                            std::to_string(k));
  if (sgn(value) < 0)
    throw non_integer_error("closed form " + std::to_string(form.id) +
                            " went negative at k = " + std::to_string(k));
  return value.get_num();
}

const closed_form& closed_form_for(int m_offset, int n_offset) {
  for (const closed_form& form : closed_forms())
    if (form.m_offset == m_offset && form.n_offset == n_offset) return form;
  throw range_error("no closed form for offsets (" + std::to_string(m_offset) +
                    "," + std::to_string(n_offset) + ")");
}

quad6697 kappa() {
  return {fraction(93, 32), fraction(-1, 32)};
}

quad6697 one_minus_kappa() {
  return {fraction(-61, 32), fraction(1, 32)};
}

}  // namespace linext
