#include "orderscope/error.hpp"

namespace osc {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::BadInput: return "BadInput";
    case Errc::DirectedCycle: return "DirectedCycle";
    case Errc::LabelClash: return "LabelClash";
    case Errc::SizeBound: return "SizeBound";
    case Errc::NotInjective: return "NotInjective";
    case Errc::NotMonotone: return "NotMonotone";
    case Errc::NotCovered: return "NotCovered";
    case Errc::BaseMismatch: return "BaseMismatch";
    case Errc::NotInRealization: return "NotInRealization";
    case Errc::NotStarRefinement: return "NotStarRefinement";
    case Errc::PreconditionFailed: return "PreconditionFailed";
    case Errc::DeltaNotGrid: return "DeltaNotGrid";
    case Errc::TooFar: return "TooFar";
    case Errc::ZeroLebesgue: return "ZeroLebesgue";
  }
  return "Error";
}

Error::Error(Errc c, const std::string& msg)
    : std::runtime_error(std::string(errc_name(c)) + ": " + msg), code_(c) {}

void fail(Errc c, const std::string& msg) { throw Error(c, msg); }

}  // namespace osc
