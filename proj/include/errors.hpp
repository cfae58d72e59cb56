#pragma once
#include <stdexcept>
#include <string>

namespace obs {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define OBS_ERROR_TYPE(Name)                                        \
    struct Name : Error {                                           \
        explicit Name(const std::string& msg) : Error(#Name ": " + msg) {} \
    }

OBS_ERROR_TYPE(NonPrimeModulus);
OBS_ERROR_TYPE(UnsupportedConductor);
OBS_ERROR_TYPE(NonSquareProduct);
OBS_ERROR_TYPE(DegreeAboveCap);
OBS_ERROR_TYPE(UnknownProduct);
OBS_ERROR_TYPE(UnknownRestriction);
OBS_ERROR_TYPE(UnknownTransfer);
OBS_ERROR_TYPE(UnknownBocksteinImage);
OBS_ERROR_TYPE(UnknownRepresentation);
OBS_ERROR_TYPE(CapTooSmall);
OBS_ERROR_TYPE(OutOfRange);
OBS_ERROR_TYPE(InconsistentTables);
OBS_ERROR_TYPE(MissingTable);
OBS_ERROR_TYPE(NotComputed);
OBS_ERROR_TYPE(WindowExhausted);
OBS_ERROR_TYPE(LiftObstructed);
OBS_ERROR_TYPE(IoError);

#undef OBS_ERROR_TYPE

}  // namespace obs
