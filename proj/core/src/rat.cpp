#include "orderscope/rat.hpp"

#include "orderscope/error.hpp"

namespace osc {

Rat parse_rat(const std::string& text) {
  if (text.empty()) fail(Errc::BadInput, "empty rational literal");
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rat(BigInt(text));
    }
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) fail(Errc::BadInput, "zero denominator in '" + text + "'");
    return Rat(num, den);
  } catch (const std::exception&) {
    fail(Errc::BadInput, "malformed rational '" + text + "'");
  }
}

std::string rat_str(const Rat& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

Rat pow2(int e) {
  if (e >= 0) return Rat(BigInt(1) << e);
  return Rat(1, BigInt(1) << (-e));
}

}  // namespace osc
