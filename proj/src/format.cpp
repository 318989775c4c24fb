#include "qcoord/format.hpp"

namespace qcoord {

std::string format_term(const LaurentPoly& coeff, const std::string& monomial, bool only_term,
                        bool& negative) {
  const bool identity = monomial == "1";
  negative = false;
  if (coeff.terms().size() == 1) {
    const auto& [k, c] = coeff.terms().front();
    negative = c < 0;
    const Integer mag = negative ? Integer(-c) : c;
    std::string body;
    if (mag != 1 || (k == 0 && identity)) body = mag.str();
    if (k != 0) {
      if (!body.empty()) body += " ";
      body += k == 1 ? "q" : "q^" + std::to_string(k);
    }
    if (!identity) {
      if (!body.empty()) body += " ";
      body += monomial;
    }
    return body;
  }
  if (identity && only_term) return coeff.to_string();
  std::string body = "(" + coeff.to_string() + ")";
  if (!identity) body += " " + monomial;
  return body;
}

}  // namespace qcoord
