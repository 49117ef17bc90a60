#include "qwh/fock.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>

namespace qwh {

Matrix expm(const Matrix& a) { return a.exp(); }

double max_abs_deviation(const Matrix& a, const Matrix& b) {
    return (a - b).cwiseAbs().maxCoeff();
}

double block_deviation(const Matrix& a, const Matrix& b, int block) {
    return (a.topLeftCorner(block, block) - b.topLeftCorner(block, block))
        .cwiseAbs()
        .maxCoeff();
}

}  // namespace qwh

namespace qwh::fock {

namespace {

void require_dim(int n) {
    if (n < 2)
        throw DimensionError("Fock dimension must be >= 2, got " +
                             std::to_string(n));
}

void require_real(double epsilon) {
    if (!std::isfinite(epsilon))
        throw RealParameterRequiredError("epsilon must be finite and real");
}

}  // namespace

std::pair<OperatorMatrix, OperatorMatrix> ladder_pair(int n) {
    require_dim(n);
    Matrix c = Matrix::Zero(n, n);
    for (int k = 1; k < n; ++k) c(k - 1, k) = std::sqrt(double(k));
    Matrix cdag = c.adjoint();
    return {OperatorMatrix(std::move(c), OperatorTag::annihilation),
            OperatorMatrix(std::move(cdag), OperatorTag::creation)};
}

std::pair<OperatorMatrix, OperatorMatrix> quadratures(int n) {
    require_dim(n);
    auto [c, cdag] = ladder_pair(n);
    const double s = 1.0 / std::sqrt(2.0);
    Matrix x = s * (c.mat + cdag.mat);
    Matrix p = Complex(0.0, -1.0) * s * (c.mat - cdag.mat);
    // Symmetrize so hermiticity is exact, not just up to rounding.
    x = 0.5 * (x + Matrix(x.adjoint()));
    p = 0.5 * (p + Matrix(p.adjoint()));
    return {OperatorMatrix(std::move(x), OperatorTag::quadrature),
            OperatorMatrix(std::move(p), OperatorTag::quadrature)};
}

OperatorMatrix squeeze_generator(int n, double epsilon) {
    require_dim(n);
    require_real(epsilon);
    auto [c, cdag] = ladder_pair(n);
    Matrix gen = (epsilon / 2.0) * (c.mat * c.mat - cdag.mat * cdag.mat);
    return OperatorMatrix(expm(gen));
}

std::pair<OperatorMatrix, OperatorMatrix> bogoliubov_conjugate(
    int n, double epsilon, bool use_true_inverse) {
    auto s = squeeze_generator(n, epsilon);
    auto [c, cdag] = ladder_pair(n);
    Matrix sinv = use_true_inverse ? Matrix(s.mat.inverse())
                                   : Matrix(s.mat.adjoint());
    Matrix a = sinv * c.mat * s.mat;
    Matrix b = sinv * cdag.mat * s.mat;
    return {OperatorMatrix(std::move(a)), OperatorMatrix(std::move(b))};
}

std::pair<OperatorMatrix, OperatorMatrix> scaled_quadratures(int n,
                                                             double rho) {
    if (rho == 0.0) throw SingularScalingError("rho = 0 is not canonical");
    auto [x, p] = quadratures(n);
    x.mat *= rho;
    p.mat /= rho;
    return {std::move(x), std::move(p)};
}

BogoliubovCoefficients BogoliubovCoefficients::from_rho(double rho) {
    if (rho == 0.0) throw SingularScalingError("rho = 0 is not canonical");
    BogoliubovCoefficients bc;
    bc.rho = rho;
    const long double r = rho;
    const long double rinv = 1.0L / r;
    bc.u = (r + rinv) / 2.0L;
    bc.v = (r - rinv) / 2.0L;
    if (rho > 0.0) bc.epsilon = -std::log(rho);
    return bc;
}

std::tuple<OperatorMatrix, OperatorMatrix, BogoliubovCoefficients>
transformed_ladder(int n, double rho) {
    require_dim(n);
    auto bc = BogoliubovCoefficients::from_rho(rho);
    auto [c, cdag] = ladder_pair(n);
    const double u = static_cast<double>(bc.u);
    const double v = static_cast<double>(bc.v);
    Matrix cr = u * c.mat + v * cdag.mat;
    Matrix crdag = u * cdag.mat + v * c.mat;
    return {OperatorMatrix(std::move(cr)), OperatorMatrix(std::move(crdag)),
            bc};
}

EquivalenceReport generator_equivalence_check(int n, double epsilon, int block,
                                              double tol) {
    require_dim(n);
    if (block < 1 || block > n / 2)
        throw DimensionError("block must lie in [1, n/2]");

    auto [conj_c, conj_cdag] = bogoliubov_conjugate(n, epsilon);
    auto [lin_c, lin_cdag, bc] = transformed_ladder(n, std::exp(-epsilon));

    double dev = std::max(block_deviation(conj_c.mat, lin_c.mat, block),
                          block_deviation(conj_cdag.mat, lin_cdag.mat, block));
    return {n, block, dev, tol, dev <= tol};
}

}  // namespace qwh::fock
