// Error types shared across the library. The CLI maps these onto exit codes:
// ParamError -> usage (1), SchemaError/TypeError/DataError -> data error (2).
#pragma once

#include <stdexcept>
#include <string>

namespace gram {

// Invalid parameter or contract violation (k = 0, threshold outside (0,1], ...).
struct ParamError : std::invalid_argument {
    explicit ParamError(const std::string& what) : std::invalid_argument(what) {}
};

// Reference to an unknown attribute, table or column.
struct SchemaError : std::runtime_error {
    explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

// Value incompatible with the declared kind of its column.
struct TypeError : SchemaError {
    explicit TypeError(const std::string& what) : SchemaError(what) {}
};

// Malformed or inconsistent input data (parse failures, duplicate ids,
// dangling relation references, values outside a fitted chain).
struct DataError : std::runtime_error {
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gram
