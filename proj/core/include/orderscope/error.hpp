#pragma once

#include <stdexcept>
#include <string>

namespace osc {

enum class Errc {
  BadInput,
  DirectedCycle,
  LabelClash,
  SizeBound,
  NotInjective,
  NotMonotone,
  NotCovered,
  BaseMismatch,
  NotInRealization,
  NotStarRefinement,
  PreconditionFailed,
  DeltaNotGrid,
  TooFar,
  ZeroLebesgue,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc c, const std::string& msg);
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc c, const std::string& msg);

}  // namespace osc
