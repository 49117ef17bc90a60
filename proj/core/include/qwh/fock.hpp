#ifndef QWH_FOCK_HPP
#define QWH_FOCK_HPP

#include <optional>
#include <tuple>
#include <utility>

#include "qwh/errors.hpp"
#include "qwh/operator_matrix.hpp"

namespace qwh::fock {

/// (c, c+) with c|k> = sqrt(k)|k-1>, truncated at dimension n.
std::pair<OperatorMatrix, OperatorMatrix> ladder_pair(int n);

/// (x, p) with x = (c + c+)/sqrt(2), p = -i(c - c+)/sqrt(2), symmetrized so
/// both are exactly Hermitian.
std::pair<OperatorMatrix, OperatorMatrix> quadratures(int n);

/// S(eps) = expm((eps/2)(c^2 - c+^2)).  The exponent is real antisymmetric
/// in the Fock basis, so S is orthogonal to numerical tolerance.
OperatorMatrix squeeze_generator(int n, double epsilon);

/// (S^-1 c S, S^-1 c+ S).  S^-1 is taken as the conjugate transpose; pass
/// use_true_inverse to solve for the inverse instead (diagnostic mode).
std::pair<OperatorMatrix, OperatorMatrix> bogoliubov_conjugate(
    int n, double epsilon, bool use_true_inverse = false);

/// (rho x, p / rho); the commutator [x(rho), p(rho)] = i is preserved.
std::pair<OperatorMatrix, OperatorMatrix> scaled_quadratures(int n, double rho);

/// Bogoliubov coefficients u = (rho + 1/rho)/2, v = (rho - 1/rho)/2.
/// u and v are held in extended precision so that u^2 - v^2 = 1 survives to
/// 1e-12 absolute across rho in [1e-3, 1e3].
struct BogoliubovCoefficients {
    long double u = 1.0L;
    long double v = 0.0L;
    double rho = 1.0;
    std::optional<double> epsilon;  ///< -log(rho) when rho > 0

    static BogoliubovCoefficients from_rho(double rho);
};

/// c(rho) = u c + v c+ and its dagger, together with the coefficients.
std::tuple<OperatorMatrix, OperatorMatrix, BogoliubovCoefficients>
transformed_ladder(int n, double rho);

struct EquivalenceReport {
    int dim = 0;
    int block = 0;
    double deviation = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

/// Compares S^-1 c S against u c + v c+ (rho = e^-eps) on the leading
/// block x block submatrix; the two sides are independent code paths.
EquivalenceReport generator_equivalence_check(int n, double epsilon, int block,
                                              double tol);

}  // namespace qwh::fock

#endif
