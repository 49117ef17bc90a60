#include "qwh/bargmann.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>

namespace qwh::bargmann {

namespace {

// Applies a coefficient-space operator to each monomial column at an
// extended cutoff, so degree-raising intermediates are never clipped, then
// truncates back to (cutoff+1) x (cutoff+1).
template <typename Op>
Matrix operator_matrix(int cutoff, int extra_degrees, Op&& op) {
    const int ext = cutoff + extra_degrees;
    Matrix m = Matrix::Zero(cutoff + 1, cutoff + 1);
    for (int k = 0; k <= cutoff; ++k) {
        BargmannPoly col = op(monomial(k, ext));
        for (int j = 0; j <= cutoff; ++j) m(j, k) = col.coeffs[j];
    }
    return m;
}

}  // namespace

double BargmannPoly::inf_norm() const {
    double n = 0.0;
    for (const auto& c : coeffs) n = std::max(n, std::abs(c));
    return n;
}

BargmannPoly monomial(int k, int cutoff) {
    if (cutoff < 0) throw DegreeOutOfRangeError("cutoff must be >= 0");
    if (k < 0 || k > cutoff)
        throw DegreeOutOfRangeError("monomial degree " + std::to_string(k) +
                                    " outside cutoff " + std::to_string(cutoff));
    BargmannPoly p;
    p.coeffs.assign(cutoff + 1, Complex(0.0));
    p.coeffs[k] = 1.0;
    return p;
}

BargmannPoly apply_creation(const BargmannPoly& p, OverflowPolicy policy) {
    const int d = p.cutoff_degree();
    BargmannPoly out;
    out.coeffs.assign(d + 1, Complex(0.0));
    out.overflow = p.overflow;
    if (p.coeffs[d] != Complex(0.0)) {
        if (policy == OverflowPolicy::strict)
            throw OverflowError("zeta * p exceeds cutoff degree " +
                                std::to_string(d));
        out.overflow = true;
    }
    for (int k = 0; k < d; ++k) out.coeffs[k + 1] = p.coeffs[k];
    return out;
}

BargmannPoly apply_annihilation(const BargmannPoly& p) {
    const int d = p.cutoff_degree();
    BargmannPoly out;
    out.coeffs.assign(d + 1, Complex(0.0));
    out.overflow = p.overflow;
    for (int k = 0; k < d; ++k)
        out.coeffs[k] = double(k + 1) * p.coeffs[k + 1];
    return out;
}

BargmannPoly apply_number(const BargmannPoly& p) {
    BargmannPoly out = p;
    for (int k = 0; k <= p.cutoff_degree(); ++k) out.coeffs[k] *= double(k);
    return out;
}

Complex q_integer(int k, Complex q) {
    if (k <= 0) return 0.0;
    if (std::abs(q - 1.0) < 1e-3) {
        // Summation form: the direct formula loses digits to cancellation
        // when q is close to 1.
        Complex sum = 0.0, pw = 1.0;
        for (int j = 0; j < k; ++j) {
            sum += pw;
            pw *= q;
        }
        return sum;
    }
    return (std::pow(q, k) - 1.0) / (q - 1.0);
}

BargmannPoly q_derivative(const BargmannPoly& p, const Deformation& d) {
    if (d.is_degenerate())
        throw DegenerateDeformationError("q-derivative requires q != 1");
    const int deg = p.cutoff_degree();
    BargmannPoly out;
    out.coeffs.assign(deg + 1, Complex(0.0));
    out.overflow = p.overflow;
    for (int k = 0; k < deg; ++k)
        out.coeffs[k] = q_integer(k + 1, d.q) * p.coeffs[k + 1];
    return out;
}

BargmannPoly dilation(const BargmannPoly& p, const Deformation& d) {
    BargmannPoly out = p;
    Complex pw = 1.0;
    for (int k = 0; k <= p.cutoff_degree(); ++k) {
        out.coeffs[k] *= pw;
        pw *= d.q;
    }
    return out;
}

BargmannPoly q_commutator(const BargmannPoly& p, const Deformation& d) {
    if (d.is_degenerate())
        throw DegenerateDeformationError("q-commutator requires q != 1");
    const int deg = p.cutoff_degree();

    // Run the degree-raising intermediate at cutoff D+1.
    BargmannPoly wide = p;
    wide.coeffs.push_back(0.0);
    BargmannPoly left = q_derivative(apply_creation(wide), d);

    BargmannPoly right = apply_creation(q_derivative(p, d));

    BargmannPoly out;
    out.coeffs.assign(deg + 1, Complex(0.0));
    out.overflow = p.overflow;
    for (int k = 0; k <= deg; ++k)
        out.coeffs[k] = left.coeffs[k] - right.coeffs[k];
    return out;
}

Matrix dilation_matrix(int cutoff, const Deformation& d) {
    return operator_matrix(cutoff, 0,
                           [&](const BargmannPoly& p) { return dilation(p, d); });
}

Matrix tilde_generator_matrix(int cutoff) {
    // c~^2 - c~+^2 expanded in zeta and d/dzeta:
    //   c~^2  = (zeta^2 + zeta d + d zeta + d^2)/2
    //   c~+^2 = (zeta^2 - zeta d - d zeta + d^2)/2
    // so the difference is zeta d + d zeta.  Built from the composites, not
    // from the simplified form, so the check stays two-sided.
    auto zd = [](const BargmannPoly& p) {
        return apply_creation(apply_annihilation(p));
    };
    auto dz = [](const BargmannPoly& p) {
        return apply_annihilation(apply_creation(p, OverflowPolicy::strict));
    };
    Matrix a = operator_matrix(cutoff, 2, zd);
    Matrix b = operator_matrix(cutoff, 2, dz);
    return a + b;
}

Matrix number_matrix(int cutoff) {
    return operator_matrix(cutoff, 0, apply_number);
}

IdentityReport number_exponential_identity_check(int cutoff,
                                                 const Deformation& d,
                                                 double tol) {
    if (cutoff < 2) throw DegreeOutOfRangeError("identity check needs D >= 2");

    Matrix left = dilation_matrix(cutoff, d);

    Matrix gen = tilde_generator_matrix(cutoff);
    Matrix right = std::exp(-d.epsilon / 2.0) *
                   Matrix((d.epsilon / 2.0) * gen).exp();

    double dev = 0.0;
    for (int j = 0; j <= cutoff; ++j)
        for (int k = 0; k <= cutoff; ++k) {
            double scale = std::max(
                {1.0, std::abs(left(j, k)), std::abs(right(j, k))});
            dev = std::max(dev, std::abs(left(j, k) - right(j, k)) / scale);
        }

    return {dev, tol, dev <= tol};
}

}  // namespace qwh::bargmann
