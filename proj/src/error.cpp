#include "claws/error.hpp"

namespace claws {

std::string_view error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotADivergence: return "NotADivergence";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::NotOnSolutionSpace: return "NotOnSolutionSpace";
    case ErrorKind::NotConserved: return "NotConserved";
    case ErrorKind::NotAMultiplier: return "NotAMultiplier";
    case ErrorKind::NotAdjointSymmetry: return "NotAdjointSymmetry";
    case ErrorKind::NotASymmetry: return "NotASymmetry";
    case ErrorKind::TrivialMultiplier: return "TrivialMultiplier";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::InvalidAnsatz: return "InvalidAnsatz";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::NonPolynomial: return "NonPolynomial";
    case ErrorKind::SessionError: return "SessionError";
  }
  return "Error";
}

}  // namespace claws
