#include "propus/error.hpp"

namespace propus {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidModulus: return "InvalidModulus";
    case Errc::NonUnitGenerator: return "NonUnitGenerator";
    case Errc::NonUnit: return "NonUnit";
    case Errc::EvenModulus: return "EvenModulus";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::NotARepresentative: return "NotARepresentative";
    case Errc::NotInvariant: return "NotInvariant";
    case Errc::ZeroShift: return "ZeroShift";
    case Errc::NoValidArrangement: return "NoValidArrangement";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::InfeasibleParams: return "InfeasibleParams";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::SubgroupNotClosed: return "SubgroupNotClosed";
    case Errc::BlockSizeMismatch: return "BlockSizeMismatch";
    case Errc::SchemaError: return "SchemaError";
    case Errc::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace propus
