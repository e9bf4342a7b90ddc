#pragma once

#include <stdexcept>
#include <string>

namespace uninorm {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define UNINORM_ERROR(Name)          \
  class Name : public Error {        \
   public:                           \
    using Error::Error;              \
  }

UNINORM_ERROR(NotAPoset);
UNINORM_ERROR(NotALattice);
UNINORM_ERROR(NotBounded);
UNINORM_ERROR(InvalidLattice);
UNINORM_ERROR(UnknownElement);
UNINORM_ERROR(NotAnInterval);
UNINORM_ERROR(NeutralOutsideCarrier);
UNINORM_ERROR(SubNotContained);
UNINORM_ERROR(NotCommutative);
UNINORM_ERROR(SpecInvalid);
UNINORM_ERROR(HypothesesNotMet);
UNINORM_ERROR(UnknownClause);
UNINORM_ERROR(ExhaustedRejection);
UNINORM_ERROR(InvalidConfig);
UNINORM_ERROR(UnknownId);
UNINORM_ERROR(ParseError);

#undef UNINORM_ERROR

}  // namespace uninorm
