#ifndef TANALG_EXPR_IO_HPP
#define TANALG_EXPR_IO_HPP

#include <string>
#include <string_view>
#include <vector>

#include "tanalg/groebner.hpp"

namespace tanalg {

// Grammar: rationals `p/q`, variables, `+ - * ^`, parentheses. Explicit `*`
// everywhere, `^` with a nonnegative integer exponent, no implicit
// multiplication, whitespace insensitive. Throws ParseError with 0-based
// offset and 1-based line/column.
Poly parse_poly(std::string_view text, const RingPtr& ring);

// Bracket coordinate form "[a_1, ..., a_n]" with exactly one entry per ring
// variable.
VField parse_field(std::string_view text, const RingPtr& ring);

// Canonical text: terms descending under the ring order, rationals as `p/q`
// with `/q` omitted when 1. Equal values render byte-identically.
std::string render(const Poly& f);
std::string render(const VField& v);

// Reduced-basis renderings, one entry per basis element.
std::vector<std::string> render_basis(const Ideal& I);
std::vector<std::string> render_basis(const VfModule& M);

// "f; g; h" over the reduced basis ("0" for the zero ideal/module).
std::string render_joined(const Ideal& I);
std::string render_joined(const VfModule& M);

} // namespace tanalg

#endif
