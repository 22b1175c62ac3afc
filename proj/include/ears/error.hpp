#pragma once

#include <stdexcept>
#include <string>

namespace ears {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define EARS_ERROR_TYPE(Name)                                                  \
    class Name : public Error {                                                \
    public:                                                                    \
        explicit Name(const std::string& what) : Error(#Name ": " + what) {}   \
    }

EARS_ERROR_TYPE(IsotropicRoot);
EARS_ERROR_TYPE(DimensionMismatch);
EARS_ERROR_TYPE(InvalidRank);
EARS_ERROR_TYPE(NotIrreducible);
EARS_ERROR_TYPE(ConstraintViolation);
EARS_ERROR_TYPE(WrongArity);
EARS_ERROR_TYPE(NotBCType);
EARS_ERROR_TYPE(NotOverFinitePart);
EARS_ERROR_TYPE(NotAnOrbit);
EARS_ERROR_TYPE(UnknownRoot);
EARS_ERROR_TYPE(NotARelation);
EARS_ERROR_TYPE(Stuck);
EARS_ERROR_TYPE(ParseError);
EARS_ERROR_TYPE(RankMismatch);
EARS_ERROR_TYPE(Overflow);
EARS_ERROR_TYPE(GoldenMismatch);

#undef EARS_ERROR_TYPE

} // namespace ears
