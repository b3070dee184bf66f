#ifndef GVD_PARSE_HPP
#define GVD_PARSE_HPP

#include <stdexcept>
#include <string>

#include "gvd/polynomial.hpp"

namespace gvd {

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, std::size_t at)
      : std::runtime_error(what + " (at byte " + std::to_string(at) + ")"),
        offset(at) {}
  std::size_t offset;
};

// Grammar (whitespace insignificant):
//   poly   := term (('+'|'-') term)*
//   term   := coeff ('*' factor)* | factor ('*' factor)*
//   factor := var ('^' uint)? | '(' poly ')'
//   coeff  := int ('/' uint)?
// Variable names: [A-Za-z][A-Za-z0-9_]*.  A leading '+'/'-' is accepted.
Polynomial parse_polynomial(const std::string& text, const RingPtr& ring);

// Canonical rendering; parse(print(f)) == f on canonical polynomials.
std::string to_string(const Polynomial& f);
std::string to_string(const Monomial& m, const PolynomialRing& ring);

}  // namespace gvd

#endif
