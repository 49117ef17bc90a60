#include "qwh/weyl.hpp"

#include "qwh/fock.hpp"

#include <cmath>

namespace qwh::weyl {

namespace {

constexpr Complex kI{0.0, 1.0};

double symplectic_area(Complex z1, Complex z2) {
    // Im(z1* z2) = a1 b2 - b1 a2
    return z1.real() * z2.imag() - z1.imag() * z2.real();
}

}  // namespace

OperatorMatrix weyl_U(int n, double alpha) {
    auto [x, p] = fock::quadratures(n);
    return OperatorMatrix(expm(kI * alpha * p.mat));
}

OperatorMatrix weyl_V(int n, double beta) {
    auto [x, p] = fock::quadratures(n);
    return OperatorMatrix(expm(kI * beta * x.mat));
}

OperatorMatrix weyl_W(int n, const WeylLabel& label) {
    const double root2 = std::sqrt(2.0);
    Complex phase = std::exp(kI * (label.alpha * label.beta));
    Matrix w = phase * (weyl_V(n, root2 * label.alpha).mat *
                        weyl_U(n, root2 * label.beta).mat);
    return OperatorMatrix(std::move(w));
}

CompositionReport composition_check(int n, Complex z1, Complex z2,
                                    double tol) {
    Matrix lhs = weyl_W(n, WeylLabel::from_z(z1)).mat *
                 weyl_W(n, WeylLabel::from_z(z2)).mat;
    Complex phase = std::exp(-kI * symplectic_area(z1, z2));
    Matrix rhs = phase * weyl_W(n, WeylLabel::from_z(z1 + z2)).mat;
    double dev = block_deviation(lhs, rhs, n / 2);
    return {n, dev, tol, dev <= tol};
}

ScaledWeylLabel scale_label(const WeylLabel& label, double rho) {
    if (rho == 0.0) throw SingularScalingError("rho = 0 is not canonical");
    ScaledWeylLabel s;
    s.base = label;
    s.rho = rho;
    s.scaled_z = Complex(rho * label.alpha, label.beta / rho);
    return s;
}

InvarianceReport symplectic_invariance_check(Complex z1, Complex z2,
                                             double rho) {
    auto s1 = scale_label(WeylLabel::from_z(z1), rho);
    auto s2 = scale_label(WeylLabel::from_z(z2), rho);
    double before = symplectic_area(z1, z2);
    double after = symplectic_area(s1.scaled_z, s2.scaled_z);
    // Scale by the term magnitude, not by the (possibly cancelling) area.
    double scale = std::max(1e-300, std::abs(z1.real() * z2.imag()) +
                                        std::abs(z1.imag() * z2.real()));
    double dev = std::abs(before - after) / scale;
    return {before, after, dev, dev <= 1e-14};
}

OperatorMatrix scaled_weyl_W(int n, const ScaledWeylLabel& slabel) {
    return weyl_W(n, WeylLabel::from_z(slabel.scaled_z));
}

CompositionReport scaled_composition_check(int n, Complex z1, Complex z2,
                                           double rho, double tol) {
    Matrix lhs = scaled_weyl_W(n, scale_label(WeylLabel::from_z(z1), rho)).mat *
                 scaled_weyl_W(n, scale_label(WeylLabel::from_z(z2), rho)).mat;
    // The phase is the unscaled area: the scaling is canonical.
    Complex phase = std::exp(-kI * symplectic_area(z1, z2));
    Matrix rhs =
        phase *
        scaled_weyl_W(n, scale_label(WeylLabel::from_z(z1 + z2), rho)).mat;
    double dev = block_deviation(lhs, rhs, n / 2);
    return {n, dev, tol, dev <= tol};
}

}  // namespace qwh::weyl
