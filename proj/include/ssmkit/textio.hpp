#pragma once

#include <string>

#include "ssmkit/multipoly.hpp"
#include "ssmkit/schur.hpp"

namespace ssmkit {

// {"vars":["a1",...],"terms":[{"exp":[...],"coeff":"<decimal string>"}]}
// with terms in the canonical (total degree, exponent lex) order.
std::string json_poly(const MultiPoly& p);

// {"basis":"schur","cap":N,"terms":[{"lambda":[...],"coeff":"<decimal string>"}]}
// with terms in the canonical (weight, parts lex) order.
std::string json_schur(const SchurSeries& s);

}  // namespace ssmkit
