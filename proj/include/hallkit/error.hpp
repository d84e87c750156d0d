#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hallkit {

// Base of everything the library throws on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed or out-of-domain input (non-prime p, shape mismatch, bad label...).
class InputError : public Error {
public:
    using Error::Error;
};

// An enumeration would exceed its configured budget.
class BudgetError : public Error {
public:
    using Error::Error;
};

// An identity or embedded consistency assertion failed.
class VerificationError : public Error {
public:
    using Error::Error;
};

// Hard limits on exhaustive enumeration. Exceeding one raises BudgetError,
// never a silent truncation.
struct Budget {
    std::uint64_t max_field_size = 64;          // largest q accepted by make_field
    std::uint64_t max_candidates = 1ULL << 22;  // End/Hom coordinate vectors enumerated
    std::uint64_t max_subspaces = 1ULL << 22;   // subspace tuples enumerated per call
    std::uint64_t max_reps = 1ULL << 22;        // representations streamed by iso_classes
};

inline const Budget& default_budget() {
    static const Budget b{};
    return b;
}

}  // namespace hallkit
