#pragma once

#include <string>
#include <string_view>

#include "nearvec/nearfield.hpp"

namespace nearvec {

enum class ElementStyle {
  polynomial,  // "2+2x", "1+x^2", "0"
  code,        // bare decimal integer code
};

// Auto-detection treats an all-digit token as an integer code; every other
// token is read as a polynomial. Constants below p mean the same in both.
enum class ParseMode { auto_detect, polynomial, code };

std::string format_element(const Nearfield& nf, Element a,
                           ElementStyle style = ElementStyle::polynomial);

// Throws ParseError on malformed tokens, coefficients >= p, powers >= degree,
// non-ascending powers, or codes >= order.
Element parse_element(const Nearfield& nf, std::string_view text,
                      ParseMode mode = ParseMode::auto_detect);

}  // namespace nearvec
