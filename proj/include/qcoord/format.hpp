#pragma once

#include <string>
#include <string_view>

#include "qcoord/cyclotomic.hpp"
#include "qcoord/element.hpp"
#include "qcoord/laurent.hpp"

namespace qcoord {

inline LaurentPoly as_laurent(const LaurentPoly& p) { return p; }
inline LaurentPoly as_laurent(const CycloElem& c) { return c.to_laurent(); }

/// Text for one term; negative is set when the caller should print a minus
/// sign in front of the returned body.
std::string format_term(const LaurentPoly& coeff, const std::string& monomial, bool only_term,
                        bool& negative);

/// "t[1,1] t[2,2] - q t[1,2] t[2,1]": terms in descending canonical order,
/// factors in the given generator order, multi-term coefficients in
/// parentheses. "0" for the zero element.
template <class Coeff>
std::string format_element(const Element<Coeff>& e, const GenOrder& order,
                           std::string_view gen_name = "t", std::string_view det_name = "D") {
  if (e.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it) {
    bool negative = false;
    const std::string body = format_term(as_laurent(it->second),
                                         format_monomial(it->first, order, gen_name, det_name),
                                         e.size() == 1, negative);
    if (first) {
      out += negative ? "-" + body : body;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
    first = false;
  }
  return out;
}

/// Classical (commutative) elements print with tbar / Dbar.
template <class Coeff>
std::string format_classical(const Element<Coeff>& e, int n) {
  return format_element(e, GenOrder::row_major(n), "tbar", "Dbar");
}

}  // namespace qcoord
