#pragma once

#include <stdexcept>
#include <string>

namespace harmonium {

// Base class for all domain errors raised by the library.  Usage errors
// (bad flags, unparsable input) are reported separately by the CLI layer.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define HARMONIUM_DEFINE_ERROR(NAME)                                          \
    struct NAME : Error {                                                     \
        explicit NAME(const std::string& what_arg) : Error(what_arg) {}       \
    }

// pitch-class words
HARMONIUM_DEFINE_ERROR(LengthTooShort);
HARMONIUM_DEFINE_ERROR(DegreeOutOfRange);
HARMONIUM_DEFINE_ERROR(LevelOutOfRange);
HARMONIUM_DEFINE_ERROR(WordTooShort);
HARMONIUM_DEFINE_ERROR(WordTooShortOrRepetitive);
HARMONIUM_DEFINE_ERROR(UnknownName);

// tonalities and search
HARMONIUM_DEFINE_ERROR(NotADegree);
HARMONIUM_DEFINE_ERROR(SearchBudgetExceeded);
HARMONIUM_DEFINE_ERROR(MalformedPiece);

// five-limit lattice
HARMONIUM_DEFINE_ERROR(NotFiveLimit);
HARMONIUM_DEFINE_ERROR(NonPositive);
HARMONIUM_DEFINE_ERROR(NonPositiveFrequency);
HARMONIUM_DEFINE_ERROR(NotJustTuned);

// fifth-cycle alphabet
HARMONIUM_DEFINE_ERROR(IndexOutOfRange);
HARMONIUM_DEFINE_ERROR(CycleUnderflow);

// consonance
HARMONIUM_DEFINE_ERROR(EmptyList);
HARMONIUM_DEFINE_ERROR(BudgetExceeded);
HARMONIUM_DEFINE_ERROR(ZeroIndex);

// rendering / IO
HARMONIUM_DEFINE_ERROR(IoError);
HARMONIUM_DEFINE_ERROR(EmptyPiece);

#undef HARMONIUM_DEFINE_ERROR

} // namespace harmonium
