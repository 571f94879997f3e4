#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace k3cliff {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact arithmetic left the representable range; results past this point
// would be meaningless, so we abort the computation instead of wrapping.
struct ArithmeticOverflow : Error {
    explicit ArithmeticOverflow(const std::string& where)
        : Error("arithmetic overflow in " + where) {}
};

struct RegimeViolation : Error {
    std::vector<std::string> failed;

    explicit RegimeViolation(std::vector<std::string> conditions)
        : Error("regime violation: " + join(conditions)), failed(std::move(conditions)) {}

    static std::string join(const std::vector<std::string>& v) {
        std::string out;
        for (const auto& c : v) {
            if (!out.empty()) out += "; ";
            out += c;
        }
        return out;
    }
};

struct DegenerateDiscriminant : Error {
    explicit DegenerateDiscriminant(long long value)
        : Error("discriminant is not positive: " + std::to_string(value)) {}
};

// A class came out of an enumerator that the closed-form case analysis
// cannot account for. Firing means the case analysis itself is wrong.
struct ClassificationMismatch : Error {
    using Error::Error;
};

struct PreconditionViolation : Error {
    using Error::Error;
};

// Two routes that must agree (closed form vs pairing) disagreed.
struct InternalInconsistency : Error {
    using Error::Error;
};

struct InvalidRank : Error {
    explicit InvalidRank(long long rank)
        : Error("bundle rank must be >= 1, got " + std::to_string(rank)) {}
};

struct GammaTooSmall : Error {
    explicit GammaTooSmall(long long gamma)
        : Error("gamma must be >= 5, got " + std::to_string(gamma)) {}
};

struct BoundViolation : Error {
    using Error::Error;
};

}  // namespace k3cliff
