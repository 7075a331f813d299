#pragma once

#include <stdexcept>
#include <string>

namespace bessel {

// Every domain failure carries a stable kind tag; the CLI echoes it in JSON.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define BESSEL_ERROR(Name)                                               \
    struct Name : Error {                                                \
        explicit Name(const std::string& w) : Error(#Name, w) {}        \
    }

BESSEL_ERROR(ParseError);
BESSEL_ERROR(UnknownGenerator);
BESSEL_ERROR(NotCyclic);
BESSEL_ERROR(MonodromyViolation);
BESSEL_ERROR(OutsideComputableClass);
BESSEL_ERROR(InvalidSpec);
BESSEL_ERROR(NoSiegelData);
BESSEL_ERROR(NotGeneric);
BESSEL_ERROR(NoBesselModel);
BESSEL_ERROR(DivisibilityFailure);
BESSEL_ERROR(NotRegularizable);

#undef BESSEL_ERROR

}  // namespace bessel
