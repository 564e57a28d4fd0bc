#ifndef WREATH_GROUPS_LIST_NOTATION_HPP
#define WREATH_GROUPS_LIST_NOTATION_HPP

#include <string>

#include "wreath/groups/tokens.hpp"
#include "wreath/groups/wreath.hpp"

namespace wreath {

// List notation for elements of H wr Z: the lamp values over the smallest
// interval containing the support, 0 and the cursor, e.g.
//
//   [v-p, #, 0, #, ^q]
//
// `v` marks position 0 (incoming) and `^` the cursor (outgoing). A Z^Sigma
// value is written as a sum of `k*name` terms in symbol order, with `1*`
// omitted and negative terms written with `-`: `2*c-q`. A Z value is the
// integer itself.

std::string render_list(const VectorLineElement& x, const SymbolTable& sigma);
std::string render_list(const IntLineElement& x);

/// Inverse of render_list; throws std::invalid_argument on malformed input.
VectorLineElement parse_list(const std::string& text, const SymbolTable& sigma);
IntLineElement parse_int_list(const std::string& text);

} // namespace wreath

#endif
