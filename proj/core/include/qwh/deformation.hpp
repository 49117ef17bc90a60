#ifndef QWH_DEFORMATION_HPP
#define QWH_DEFORMATION_HPP

#include <cmath>
#include <complex>

#include "qwh/errors.hpp"

namespace qwh {

/// Parameter bundle (epsilon, q = e^epsilon, rho = q^-1) labelling a
/// deformed representation.  The three fields are kept mutually consistent
/// by the factory functions; construct through those, not by hand.
struct Deformation {
    std::complex<double> epsilon;
    std::complex<double> q;
    std::complex<double> rho;

    static Deformation from_epsilon(std::complex<double> eps) {
        return {eps, std::exp(eps), std::exp(-eps)};
    }

    static Deformation from_q(std::complex<double> q) {
        if (q == std::complex<double>(0.0, 0.0))
            throw DegenerateDeformationError("q = 0 has no logarithm");
        return {std::log(q), q, 1.0 / q};
    }

    static Deformation from_rho(double rho) {
        if (rho == 0.0) throw SingularScalingError("rho = 0 is not invertible");
        if (rho < 0.0)
            throw SingularScalingError("rho < 0 has no real epsilon; use from_q");
        return {-std::log(rho), 1.0 / rho, rho};
    }

    bool is_real(double tol = 1e-12) const {
        return std::abs(epsilon.imag()) <= tol;
    }

    /// True when q is too close to 1 for the q-derivative denominator.
    bool is_degenerate() const { return q == std::complex<double>(1.0, 0.0); }
};

}  // namespace qwh

#endif
