#include "vdp/verdict.hpp"

#include "vdp/error.hpp"

namespace vdp {

const char* cond_name(Cond c) {
  switch (c) {
    case Cond::None: return "NONE";
    case Cond::Compat: return "COMPAT";
    case Cond::MpCond1: return "MP_COND1";
    case Cond::MpCond2: return "MP_COND2";
    case Cond::BijModPk: return "BIJ_MOD_PK";
  }
  return "NONE";
}

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::InvalidPrime: return "InvalidPrime";
    case Errc::InvalidPrecision: return "InvalidPrecision";
    case Errc::PrecisionExceeded: return "PrecisionExceeded";
    case Errc::DomainMismatch: return "DomainMismatch";
    case Errc::NotCompatible: return "NotCompatible";
    case Errc::InvalidThreshold: return "InvalidThreshold";
    case Errc::WrongPrime: return "WrongPrime";
    case Errc::InvalidExponent: return "InvalidExponent";
    case Errc::NotAUnit: return "NotAUnit";
    case Errc::InvalidSubstitution: return "InvalidSubstitution";
    case Errc::TableLimitExceeded: return "TableLimitExceeded";
    case Errc::FormatError: return "FormatError";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

}  // namespace vdp
