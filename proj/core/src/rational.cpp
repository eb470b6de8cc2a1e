#include "domir/rational.hpp"

#include <cctype>
#include <limits>

namespace domir {

namespace {

std::int64_t parse_int(const std::string& s, const std::string& whole) {
  if (s.empty()) throw std::invalid_argument("invalid rational '" + whole + "'");
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("invalid rational '" + whole + "'");
  }
  if (pos != s.size()) throw std::invalid_argument("invalid rational '" + whole + "'");
  return v;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  if (auto slash = text.find('/'); slash != std::string::npos)
    return {parse_int(text.substr(0, slash), text), parse_int(text.substr(slash + 1), text)};

  auto dot = text.find('.');
  if (dot == std::string::npos) return {parse_int(text, text), 1};

  const std::string whole = text.substr(0, dot);
  const std::string frac = text.substr(dot + 1);
  if (frac.empty() || frac.size() > 15) throw std::invalid_argument("invalid rational '" + text + "'");
  for (char ch : frac)
    if (!std::isdigit(static_cast<unsigned char>(ch))) throw std::invalid_argument("invalid rational '" + text + "'");
  std::int64_t scale = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
  const bool negative = !whole.empty() && whole[0] == '-';
  const std::int64_t int_part = (whole.empty() || whole == "-" || whole == "+") ? 0 : parse_int(whole, text);
  const std::int64_t frac_part = parse_int(frac, text);
  if (int_part > std::numeric_limits<std::int64_t>::max() / scale - 1)
    throw std::invalid_argument("rational out of range '" + text + "'");
  const std::int64_t mag = (int_part < 0 ? -int_part : int_part) * scale + frac_part;
  return {negative ? -mag : mag, scale};
}

}  // namespace domir
