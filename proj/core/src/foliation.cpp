#include "qwh/foliation.hpp"

#include "qwh/fock.hpp"

#include <cmath>

namespace qwh::foliation {

namespace {

long double weighted_dot(const Eigen::VectorXd& a, const Eigen::VectorXd& b,
                         double w) {
    long double acc = 0.0L;
    for (Eigen::Index i = 0; i < a.size(); ++i)
        acc += static_cast<long double>(a[i] * b[i]);
    return acc * static_cast<long double>(w);
}

void require_compatible(const TestFunction& a, const TestFunction& b) {
    if (a.f.size() != a.g.size() || b.f.size() != b.g.size() ||
        a.f.size() != b.f.size())
        throw IncompatibleGridError("test functions have mismatched lengths");
    if (a.grid_weight != b.grid_weight)
        throw IncompatibleGridError("test functions have mismatched weights");
    if (a.f.size() < 1) throw IncompatibleGridError("empty sample vectors");
}

}  // namespace

Complex scalar_product(const TestFunction& a, const TestFunction& b) {
    require_compatible(a, b);
    long double re = weighted_dot(a.f, b.f, a.grid_weight) +
                     weighted_dot(a.g, b.g, a.grid_weight);
    long double im = weighted_dot(a.f, b.g, a.grid_weight) -
                     weighted_dot(b.f, a.g, a.grid_weight);
    return {static_cast<double>(re), static_cast<double>(im)};
}

TestFunction scale_test_function(const TestFunction& F, double rho) {
    if (rho == 0.0) throw SingularScalingError("rho = 0 is not canonical");
    TestFunction out;
    out.f = F.f / rho;
    out.g = rho * F.g;
    out.grid_weight = F.grid_weight;
    return out;
}

double per_mode_vacuum_overlap(double epsilon, int n) {
    if (n < 16)
        throw DimensionError("overlap probe needs n >= 16 to be meaningful");
    auto s = fock::squeeze_generator(n, epsilon);
    return s.mat(0, 0).real();
}

FoliationScan foliation_scan(double epsilon, const std::vector<long>& modes,
                             int n) {
    FoliationScan scan;
    scan.epsilon = epsilon;
    scan.mode_counts = modes;
    scan.matrix_dim = n;
    scan.per_mode_overlap = per_mode_vacuum_overlap(epsilon, n);
    scan.products.reserve(modes.size());
    for (long m : modes) {
        if (m < 1) throw DimensionError("mode counts must be >= 1");
        // Identical independent modes: the multimode overlap factorizes.
        scan.products.push_back(
            std::pow(scan.per_mode_overlap, static_cast<double>(m)));
    }
    return scan;
}

double relative_deformation(double eps1, double eps2) { return eps2 - eps1; }

double two_squeeze_overlap(double eps1, double eps2, int n) {
    auto s1 = fock::squeeze_generator(n, eps1);
    auto s2 = fock::squeeze_generator(n, eps2);
    // S(eps1)^-1 = S(eps1)^T for the real orthogonal squeeze.
    Complex v = (s1.mat.adjoint() * s2.mat)(0, 0);
    return v.real();
}

}  // namespace qwh::foliation
