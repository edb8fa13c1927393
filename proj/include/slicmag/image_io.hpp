#pragma once

#include <stdexcept>
#include <string>

#include "slicmag/image.hpp"

namespace slicmag {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// File missing, unreadable, or not writable.
struct FileAccessError : IoError {
    using IoError::IoError;
};

/// Magic bytes do not match any supported format.
struct UnsupportedFormatError : IoError {
    using IoError::IoError;
};

/// Valid container but sample depth other than 8 bits.
struct UnsupportedBitDepthError : IoError {
    using IoError::IoError;
};

/// Truncated or malformed stream.
struct CorruptStreamError : IoError {
    using IoError::IoError;
};

/// Decode a PNG (8-bit, alpha dropped) or binary PPM/PGM file.
RasterImage load_image(const std::string& path);

/// Encode as PNG or PPM/PGM by extension. Only RGB and Gray images may be saved.
void save_image(const RasterImage& img, const std::string& path);

}  // namespace slicmag
