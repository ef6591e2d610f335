#include "liearr/field.hpp"

namespace liearr {

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (std::uint64_t d = 5; d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

Field parse_field(const std::string& text) {
  if (text == "q" || text == "Q") return Field::rationals();
  std::string digits = text;
  if (text.rfind("p:", 0) == 0 || text.rfind("P:", 0) == 0) digits = text.substr(2);
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("bad field spec '" + text + "' (use q or p:<prime>)");
  return Field::prime(std::stoull(digits));
}

}  // namespace liearr
