#pragma once

#include <string>

#include "hallkit/upoly.hpp"

namespace hallkit {

/// One instance of an identity: both sides as exact rationals.
struct CheckReport {
    std::string identity;
    std::string instance;
    Rational lhs;
    Rational rhs;
    bool pass = false;
};

inline CheckReport make_report(std::string identity, std::string instance, const Rational& lhs, const Rational& rhs) {
    return {std::move(identity), std::move(instance), lhs, rhs, lhs == rhs};
}

}  // namespace hallkit
