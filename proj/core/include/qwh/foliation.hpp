#ifndef QWH_FOLIATION_HPP
#define QWH_FOLIATION_HPP

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "qwh/errors.hpp"

namespace qwh::foliation {

using Complex = std::complex<double>;

/// Discretized test function F = f + i g on a uniform grid.
struct TestFunction {
    Eigen::VectorXd f;
    Eigen::VectorXd g;
    double grid_weight = 1.0;
};

/// <F1, F2> = (f1,f2) + (g1,g2) + i[(f1,g2) - (f2,g1)] with (.,.) the
/// weighted dot product.  Accumulates in extended precision so that the
/// scaling invariance below is not grid-length limited.
Complex scalar_product(const TestFunction& a, const TestFunction& b);

/// The canonical scaling f -> f/rho, g -> rho g; leaves Im<F1,F2> invariant.
TestFunction scale_test_function(const TestFunction& F, double rho);

/// Overlap between the reference vacuum and the Bogoliubov-rotated vacuum of
/// a single mode: the (0,0) entry of S(eps), real and in (0, 1].
double per_mode_vacuum_overlap(double epsilon, int n);

struct FoliationScan {
    double epsilon = 0.0;
    std::vector<long> mode_counts;
    double per_mode_overlap = 1.0;
    std::vector<double> products;
    int matrix_dim = 0;
};

/// Overlap between two multimode vacua with identical per-mode deformation:
/// factorizes as per_mode_overlap^M, evaluated analytically per mode count.
FoliationScan foliation_scan(double epsilon, const std::vector<long>& modes,
                             int n);

/// eps2 - eps1: the overlap of the two rotated vacua depends only on this.
double relative_deformation(double eps1, double eps2);

/// <0|S(eps1)^-1 S(eps2)|0> computed by explicit two-squeeze conjugation;
/// numerically equals per_mode_vacuum_overlap(eps2 - eps1, n).
double two_squeeze_overlap(double eps1, double eps2, int n);

}  // namespace qwh::foliation

#endif
