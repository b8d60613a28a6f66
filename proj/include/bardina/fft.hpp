#pragma once

#include "bardina/fields.hpp"

namespace bardina {

/// Unscaled forward transform F_k = sum_x f(x) e^{-i k.x}. Throws
/// std::domain_error on non-finite input.
SpectralField transform_forward(const ScalarField& f);
/// Inverse transform carrying the 1/N^3 factor.
ScalarField transform_inverse(const SpectralField& F);

SpectralVector transform_forward(const VectorField& v);
VectorField transform_inverse(const SpectralVector& V);

}  // namespace bardina
