#ifndef QWH_WEYL_HPP
#define QWH_WEYL_HPP

#include <complex>

#include "qwh/errors.hpp"
#include "qwh/operator_matrix.hpp"

namespace qwh::weyl {

/// Displacement label z = alpha + i beta.
struct WeylLabel {
    double alpha = 0.0;
    double beta = 0.0;

    Complex z() const { return {alpha, beta}; }

    static WeylLabel from_z(Complex z) { return {z.real(), z.imag()}; }
};

/// rho-scaled label: z -> rho alpha + i beta / rho.
struct ScaledWeylLabel {
    WeylLabel base;
    double rho = 1.0;
    Complex scaled_z;
};

/// U(alpha) = expm(i alpha p).
OperatorMatrix weyl_U(int n, double alpha);

/// V(beta) = expm(i beta x).
OperatorMatrix weyl_V(int n, double beta);

/// W(z) = e^{i alpha beta} V(sqrt(2) alpha) U(sqrt(2) beta), built exactly as
/// the phased product, not as a single combined exponential.
OperatorMatrix weyl_W(int n, const WeylLabel& label);

struct CompositionReport {
    int dim = 0;
    double deviation = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

/// W(z1)W(z2) vs exp(-i Im(z1* z2)) W(z1+z2), compared on the leading n/2
/// block.  The phase is computed exactly from label arithmetic.
CompositionReport composition_check(int n, Complex z1, Complex z2, double tol);

ScaledWeylLabel scale_label(const WeylLabel& label, double rho);

struct InvarianceReport {
    double before = 0.0;
    double after = 0.0;
    double deviation = 0.0;  ///< |before - after| scaled by the term magnitude
    bool pass = false;
};

/// Im(z1* z2) before and after scaling both labels by rho; exact up to
/// floating rounding, independent of any truncation.
InvarianceReport symplectic_invariance_check(Complex z1, Complex z2,
                                             double rho);

/// W evaluated at the scaled label.
OperatorMatrix scaled_weyl_W(int n, const ScaledWeylLabel& slabel);

/// Composition check within the rho-labelled family: the phase stays the
/// unscaled Im(z1* z2).
CompositionReport scaled_composition_check(int n, Complex z1, Complex z2,
                                           double rho, double tol);

}  // namespace qwh::weyl

#endif
