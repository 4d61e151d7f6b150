#pragma once

#include <string>

#include "bgls/psi.hpp"

namespace bgls {

// Text forms used by the command line and config files. All parsers throw
// ParseError with 1-based line/column positions.
//
//   interval:  "2,4"   "1,inf"
//   blocks:    "block(dim,theta)" joined with ';'
//              theta = 0 gives an unweighted block; otherwise the weight is
//              x^theta (1-D evaluation; higher dim carries scaling metadata)
//   function:  "factor(piece(lo,hi,coef,exp), ...)" joined with ';',
//              one factor per block; hi may be "inf"
//   psi:       "canonical" | "const(c)" | "power(c,ga,gb)"
//              | "rep(<function>)" | "prod(<psi>,<psi>)"
Interval parse_interval(const std::string& text);
WeightedDomain parse_blocks(const std::string& text);
ProductFunction parse_function(const std::string& text, const WeightedDomain& dom);
PsiFunction parse_psi(const std::string& text, const Interval& iv,
                      const WeightedDomain& dom);

}  // namespace bgls
