#pragma once

#include <stdexcept>
#include <string>

namespace qdelta {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct dimension_mismatch : error {
    using error::error;
};

struct index_out_of_range : error {
    using error::error;
};

struct quandle_mismatch : error {
    using error::error;
};

struct not_augmentation_zero : error {
    using error::error;
};

struct not_a_sublattice : error {
    using error::error;
};

struct invalid_quandle : error {
    using error::error;
};

struct invalid_argument : error {
    using error::error;
};

} // namespace qdelta
