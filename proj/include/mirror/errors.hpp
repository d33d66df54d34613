#ifndef MIRROR_ERRORS_HPP
#define MIRROR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mirror {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Geometry with coincident points; the induced-shift function diverges as 1/r.
struct DegenerateGeometry : Error {
    using Error::Error;
};

struct InvalidState : Error {
    using Error::Error;
};

struct IntegrationDiverged : Error {
    using Error::Error;
};

struct NonPhysicalState : Error {
    using Error::Error;
};

struct OracleDivergence : Error {
    using Error::Error;
};

struct WindowTooShort : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

struct ConfigError : Error {
    ConfigError(const std::string& field, const std::string& reason)
        : Error(field + ": " + reason), field_path(field) {}
    std::string field_path;
};

}  // namespace mirror

#endif
