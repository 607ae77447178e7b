#include "nearvec/element_codec.hpp"

#include <cctype>
#include <charconv>
#include <optional>

#include "nearvec/error.hpp"

namespace nearvec {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (std::isdigit(static_cast<unsigned char>(c)) == 0) return false;
  }
  return true;
}

std::optional<std::uint64_t> to_uint(std::string_view s) {
  if (!all_digits(s)) return std::nullopt;
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

[[noreturn]] void fail(std::string_view text, const std::string& why) {
  throw ParseError("bad element '" + std::string(text) + "': " + why);
}

Element parse_code(const Nearfield& nf, std::string_view text) {
  const auto v = to_uint(text);
  if (!v) fail(text, "not an integer code");
  if (*v >= nf.order()) fail(text, "code out of range for order " + std::to_string(nf.order()));
  return Element{static_cast<std::uint32_t>(*v)};
}

Element parse_polynomial(const Nearfield& nf, std::string_view text) {
  if (text.empty()) fail(text, "empty token");
  std::vector<std::uint32_t> digits(nf.degree(), 0);
  if (text == "0") return Element{0};

  std::int64_t last_power = -1;
  std::size_t pos = 0;
  while (true) {
    const std::size_t plus = text.find('+', pos);
    const std::string_view term =
        text.substr(pos, plus == std::string_view::npos ? std::string_view::npos : plus - pos);
    if (term.empty()) fail(text, "empty term");

    std::size_t i = 0;
    while (i < term.size() && std::isdigit(static_cast<unsigned char>(term[i])) != 0) ++i;
    const std::string_view coeff_text = term.substr(0, i);
    std::uint64_t coeff = 1;
    if (!coeff_text.empty()) {
      const auto c = to_uint(coeff_text);
      if (!c) fail(text, "bad coefficient");
      coeff = *c;
    }
    std::uint64_t power = 0;
    if (i < term.size()) {
      if (term[i] != 'x' && term[i] != 'X') fail(text, "unexpected character");
      ++i;
      power = 1;
      if (i < term.size()) {
        if (term[i] != '^') fail(text, "expected '^'");
        const auto pw = to_uint(term.substr(i + 1));
        if (!pw) fail(text, "bad exponent");
        power = *pw;
      }
    } else if (coeff_text.empty()) {
      fail(text, "empty term");
    }
    if (coeff == 0 || coeff >= nf.p()) fail(text, "coefficient must be in 1..p-1");
    if (power >= nf.degree()) fail(text, "power must be below degree " + std::to_string(nf.degree()));
    if (static_cast<std::int64_t>(power) <= last_power) fail(text, "powers must be ascending");
    last_power = static_cast<std::int64_t>(power);
    digits[power] = static_cast<std::uint32_t>(coeff);

    if (plus == std::string_view::npos) break;
    pos = plus + 1;
  }
  return nf.from_digits(digits);
}

}  // namespace

std::string format_element(const Nearfield& nf, Element a, ElementStyle style) {
  if (style == ElementStyle::code) return std::to_string(a.code);
  if (a.code == 0) return "0";
  const auto digits = nf.digits(a);
  std::string out;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    const std::uint32_t c = digits[i];
    if (c == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c);
    out += 'x';
    if (i > 1) out += '^' + std::to_string(i);
  }
  return out;
}

Element parse_element(const Nearfield& nf, std::string_view text, ParseMode mode) {
  switch (mode) {
    case ParseMode::code:
      return parse_code(nf, text);
    case ParseMode::polynomial:
      return parse_polynomial(nf, text);
    case ParseMode::auto_detect:
      break;
  }
  return all_digits(text) ? parse_code(nf, text) : parse_polynomial(nf, text);
}

}  // namespace nearvec
