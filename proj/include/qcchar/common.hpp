#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qcchar {

/// Raised when an enumeration would exceed the configured cap.
class cap_error : public std::runtime_error {
public:
    explicit cap_error(const std::string& what) : std::runtime_error(what) {}
};

/// Raised on malformed input data (quiver/representation/job schemas).
class schema_error : public std::runtime_error {
public:
    explicit schema_error(const std::string& what) : std::runtime_error(what) {}
};

enum class lambda_fail { singular, non_integral, not_skew };

/// Raised when no compatible skew form can be computed from B-tilde.
class lambda_error : public std::runtime_error {
public:
    lambda_error(lambda_fail kind, const std::string& what)
        : std::runtime_error(what), kind(kind) {}
    lambda_fail kind;
};

/// Raised when an enumerated count contradicts a structural linearity claim.
/// This must surface loudly: it would falsify the fiber lemmas.
class linearity_error : public std::logic_error {
public:
    explicit linearity_error(const std::string& what) : std::logic_error(what) {}
};

/// Default cap on the number of enumerated objects per call.
inline constexpr long long kDefaultEnumerationCap = 10'000'000;

struct EnumerationLimits {
    long long cap = kDefaultEnumerationCap;
};

} // namespace qcchar
