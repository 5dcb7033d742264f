#pragma once

#include <stdexcept>
#include <string>

namespace naxray {

// Mathematical precondition violated (logarithm outside its convergence
// disk, nonpositive radius, zero direction vector, ...).
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Pivoted elimination met an effectively zero pivot.
struct SingularError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A measurement provider has no value for the requested ray.
struct MissingRay : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A ray clips a regularization ball without passing through its center;
// the delta-field continuous transform is undefined for such rays.
struct OffCenterClip : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace naxray
