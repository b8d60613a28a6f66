#pragma once

#include "bardina/fields.hpp"

namespace bardina {

/// Supported Lebesgue exponents.
enum class Lp { one, two, inf };

/// Grid-quadrature L^p norm with weight h^3. Vector fields use the pointwise
/// Euclidean magnitude.
double norm_lp(const ScalarField& f, Lp p);
double norm_lp(const VectorField& v, Lp p);

/// W^{m,p} norm as the sum over orders j <= m of || |D^j w| ||_p, where
/// |D^j w| is the pointwise sup over multi-indices of order j. 0 <= m <= 4.
double norm_wmp(const ScalarField& f, int m, Lp p);
double norm_wmp(const VectorField& v, int m, Lp p);
double norm_wmp(const SpectralField& F, int m, Lp p);
double norm_wmp(const SpectralVector& V, int m, Lp p);

/// Discrete L^2 inner product h^3 sum f g.
double inner(const ScalarField& f, const ScalarField& g);
double inner(const VectorField& u, const VectorField& v);

// Parseval-side quantities: ||f||^2_{0,2} = (L^3 / N^6) sum_k w_k |F_k|^2.
double l2_squared(const SpectralField& F);
double l2_squared(const SpectralVector& V);
double inner(const SpectralField& F, const SpectralField& G);
double inner(const SpectralVector& U, const SpectralVector& V);
/// ||grad u||^2_{0,2} summed over all components and directions.
double gradient_l2_squared(const SpectralVector& V);
/// ||Laplacian u||^2_{0,2}
double laplacian_l2_squared(const SpectralVector& V);

}  // namespace bardina
