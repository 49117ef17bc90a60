#ifndef QWH_BARGMANN_HPP
#define QWH_BARGMANN_HPP

#include <complex>
#include <vector>

#include "qwh/deformation.hpp"
#include "qwh/errors.hpp"
#include "qwh/operator_matrix.hpp"

namespace qwh::bargmann {

enum class OverflowPolicy {
    strict,   ///< raise OverflowError when a coefficient would pass the cutoff
    project,  ///< drop the coefficient and set the overflow flag
};

/// Truncated entire function f(zeta) = sum_k coeffs[k] zeta^k, k = 0..D.
struct BargmannPoly {
    std::vector<Complex> coeffs;
    bool overflow = false;

    BargmannPoly() = default;
    explicit BargmannPoly(std::vector<Complex> c) : coeffs(std::move(c)) {}

    int cutoff_degree() const { return static_cast<int>(coeffs.size()) - 1; }

    double inf_norm() const;
};

/// zeta^k as a coefficient vector at cutoff D.
BargmannPoly monomial(int k, int cutoff);

/// Multiplication by zeta (the creation operator in this representation).
BargmannPoly apply_creation(const BargmannPoly& p,
                            OverflowPolicy policy = OverflowPolicy::strict);

/// d/dzeta (the annihilation operator).
BargmannPoly apply_annihilation(const BargmannPoly& p);

/// zeta d/dzeta (the number operator); diagonal in the monomial basis.
BargmannPoly apply_number(const BargmannPoly& p);

/// The q-integer [k]_q = (q^k - 1)/(q - 1).  Switches to the summation form
/// 1 + q + ... + q^(k-1) for |q - 1| < 1e-3 to avoid cancellation.
Complex q_integer(int k, Complex q);

/// Finite-difference derivative: zeta^k -> [k]_q zeta^(k-1).  Requires q != 1.
BargmannPoly q_derivative(const BargmannPoly& p, const Deformation& d);

/// Dilation f(zeta) -> f(q zeta): coefficient k scaled by q^k.
BargmannPoly dilation(const BargmannPoly& p, const Deformation& d);

/// The deformed commutator (D_q o zeta - zeta o D_q) applied to p.  The
/// intermediate zeta*p runs at cutoff D+1 internally, so the composite is
/// exact at cutoff D and never overflows.
BargmannPoly q_commutator(const BargmannPoly& p, const Deformation& d);

/// Matrix of a linear operator in the monomial basis {zeta^0..zeta^D},
/// computed by applying `op` column by column at an extended internal cutoff
/// so that degree-raising intermediates are not clipped.
Matrix dilation_matrix(int cutoff, const Deformation& d);

/// Matrix of the symmetric ladder combination c~^2 - c~+^2 with
/// c~ = (zeta + d/dzeta)/sqrt(2), c~+ = (zeta - d/dzeta)/sqrt(2), built from
/// creation/annihilation composites at an extended internal cutoff.
Matrix tilde_generator_matrix(int cutoff);

/// Matrix of zeta d/dzeta in the monomial basis.
Matrix number_matrix(int cutoff);

struct IdentityReport {
    double deviation = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

/// Checks q^N = q^(-1/2) exp((epsilon/2)(c~^2 - c~+^2)) as matrices in the
/// monomial basis.  The left side is built from dilation, the right side
/// from the matrix exponential of the independently assembled generator.
/// Deviation is entrywise, scaled per entry by max(1, |L|, |R|) since the
/// diagonal grows like e^(eps D).
IdentityReport number_exponential_identity_check(int cutoff,
                                                 const Deformation& d,
                                                 double tol);

}  // namespace qwh::bargmann

#endif
