#pragma once

#include <stdexcept>
#include <string>

namespace lgtoric {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegenerateInput : Error { using Error::Error; };
struct OriginNotInterior : Error { using Error::Error; };
struct NotUnimodular : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct PivotExponentOutOfRange : Error { using Error::Error; };
struct InvalidDecomposition : Error { using Error::Error; };
struct SingularFixedPoint : Error { using Error::Error; };
struct LeavesCanonicalFamily : Error { using Error::Error; };
struct SchemaError : Error { using Error::Error; };
struct UnknownRow : Error { using Error::Error; };
struct InconsistentCatalog : Error { using Error::Error; };

} // namespace lgtoric
