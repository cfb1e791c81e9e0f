#include "g2t/errors.hpp"

namespace g2t {

const char* err_name(Err e) {
  switch (e) {
    case Err::InvalidArgument: return "InvalidArgument";
    case Err::ParseError: return "ParseError";
    case Err::FieldTooLarge: return "FieldTooLarge";
    case Err::NoSubfield: return "NoSubfield";
    case Err::DivideByZero: return "DivideByZero";
    case Err::NotSquarefree: return "NotSquarefree";
    case Err::InvalidCurve: return "InvalidCurve";
    case Err::EvenCharacteristic: return "EvenCharacteristic";
    case Err::ModelUnsupported: return "ModelUnsupported";
    case Err::NotOnJacobian: return "NotOnJacobian";
    case Err::EnumerationTooLarge: return "EnumerationTooLarge";
    case Err::SamplingFailed: return "SamplingFailed";
    case Err::BasisNotInvariant: return "BasisNotInvariant";
    case Err::ExceedsCap: return "ExceedsCap";
    case Err::SupportCollision: return "SupportCollision";
    case Err::PairingDegenerate: return "PairingDegenerate";
    case Err::InvalidWeil: return "InvalidWeil";
    case Err::Reducible: return "Reducible";
    case Err::PreconditionViolated: return "PreconditionViolated";
    case Err::OrderOdd: return "OrderOdd";
    case Err::EllTooSmall: return "EllTooSmall";
    case Err::CongruenceFailure: return "CongruenceFailure";
    case Err::Unimplemented: return "Unimplemented";
    case Err::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace g2t
