#pragma once

#include <stdexcept>
#include <string>

namespace ledft {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad parameters: invalid config sections, filter widths, sweep ranges.
struct ConfigError : Error {
    using Error::Error;
};

// Unknown LED ids, degenerate emitter/receiver poses.
struct GeometryError : Error {
    using Error::Error;
};

// Wrench drives the plates into a mechanically impossible state.
struct OverloadError : Error {
    using Error::Error;
};

// Contact holds cannot be packed into the file duration.
struct ScheduleError : Error {
    using Error::Error;
};

// Missing/corrupt data: short files, unparsable CSV rows, empty pipeline output.
struct DataError : Error {
    using Error::Error;
};

// Tensor dimension mismatches in the model path.
struct ShapeError : Error {
    using Error::Error;
};

// Training loss became non-finite.
struct DivergenceError : Error {
    using Error::Error;
};

}  // namespace ledft
