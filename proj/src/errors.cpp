#include "resloc/errors.hpp"

namespace resloc {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::NotInvertible: return "NotInvertible";
    case Errc::NotExponentiable: return "NotExponentiable";
    case Errc::RingMismatch: return "RingMismatch";
    case Errc::ArityMismatch: return "ArityMismatch";
    case Errc::RepeatedWeight: return "RepeatedWeight";
    case Errc::RankDeficient: return "RankDeficient";
    case Errc::Inconsistent: return "Inconsistent";
    case Errc::MissingZetaEntry: return "MissingZetaEntry";
    case Errc::NotSymmetric: return "NotSymmetric";
    case Errc::InexactDivision: return "InexactDivision";
    case Errc::NormalizationFailed: return "NormalizationFailed";
    case Errc::DegenerateSystem: return "DegenerateSystem";
    case Errc::NotDivisible: return "NotDivisible";
    case Errc::NoRelationFound: return "NoRelationFound";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace resloc
