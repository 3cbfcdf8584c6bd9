#ifndef TRUNCBOSE_SERIALIZE_HPP
#define TRUNCBOSE_SERIALIZE_HPP

#include "truncbose/jacobi.hpp"
#include "truncbose/matrix.hpp"
#include "truncbose/scaling.hpp"

#include <string>

namespace truncbose::cli {

// Locale-independent decimal form, up to 17 significant digits (round-trip
// exact; integral values stay short, e.g. "1").
std::string format_double(double value);

// One matrix row per line, comma separated, trailing newline.
std::string matrix_to_csv(const Matrix& matrix);

// Inverse of matrix_to_csv. Bit-exact round trip. Throws
// std::invalid_argument on ragged rows or unparsable fields.
Matrix matrix_from_csv(const std::string& text);

// One eigenvalue per line; with vectors, the eigenvalue is followed by its
// unit eigenvector components on the same line.
std::string spectrum_to_csv(const spectral::SpectrumResult& spectrum);

// "sample,n,value" rows followed by one "fit,exponent,prefactor,rms" row.
std::string scaling_to_csv(const scaling::ScalingFit& fit);

} // namespace truncbose::cli

#endif
