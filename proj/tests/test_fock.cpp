#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qwh/fock.hpp"

#include <cmath>
#include <random>

using namespace qwh;
using namespace qwh::fock;

namespace {

// Independent exponential oracle: scaling + plain Taylor summation +
// repeated squaring.  Deliberately different from the Pade path.
Matrix taylor_expm(const Matrix& a) {
    double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
    int s = 0;
    while (norm > 0.5) {
        norm /= 2.0;
        ++s;
    }
    Matrix scaled = a / std::pow(2.0, s);
    Matrix term = Matrix::Identity(a.rows(), a.cols());
    Matrix sum = term;
    for (int k = 1; k <= 40; ++k) {
        term = (scaled * term) / double(k);
        sum += term;
        if (term.cwiseAbs().maxCoeff() < 1e-18) break;
    }
    for (int i = 0; i < s; ++i) sum = sum * sum;
    return sum;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

}  // namespace

TEST_CASE("ladder pair at small dimensions") {
    auto [c, cd] = ladder_pair(2);
    CHECK(c.mat(0, 1) == Complex(1.0));
    CHECK(c.mat(0, 0) == Complex(0.0));
    CHECK(c.mat(1, 0) == Complex(0.0));
    CHECK(cd.mat(1, 0) == Complex(1.0));
    CHECK(c.tag == OperatorTag::annihilation);
    CHECK(cd.tag == OperatorTag::creation);

    auto [c3, cd3] = ladder_pair(3);
    Matrix comm = commutator(c3.mat, cd3.mat);
    CHECK(std::abs(comm(0, 0) - Complex(1.0)) <= 1e-15);
    CHECK(std::abs(comm(1, 1) - Complex(1.0)) <= 1e-15);
    CHECK(std::abs(comm(2, 2) - Complex(-2.0)) <= 4e-15);

    CHECK_THROWS_AS(ladder_pair(1), DimensionError);
}

TEST_CASE("truncation-aware ccr holds for every n") {
    // sqrt(j+1)^2 rounds, so the diagonal is exact only to a few ulps of n.
    for (int n : {2, 5, 16, 64}) {
        auto [c, cd] = ladder_pair(n);
        Matrix comm = commutator(c.mat, cd.mat);
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Complex expect =
                    (j == k) ? (j == n - 1 ? Complex(1.0 - n) : Complex(1.0))
                             : Complex(0.0);
                CHECK(std::abs(comm(j, k) - expect) <= 1e-15 * n);
            }
    }
}

TEST_CASE("quadratures are Hermitian with ccr on the leading block") {
    auto [x2, p2] = quadratures(2);
    CHECK(std::abs(x2.mat(0, 1) - 1.0 / std::sqrt(2.0)) < 1e-15);
    CHECK(std::abs(x2.mat(1, 0) - 1.0 / std::sqrt(2.0)) < 1e-15);

    for (int n : {2, 8, 32}) {
        auto [x, p] = quadratures(n);
        CHECK((x.mat - x.mat.adjoint()).cwiseAbs().maxCoeff() == 0.0);
        CHECK((p.mat - p.mat.adjoint()).cwiseAbs().maxCoeff() == 0.0);
        Matrix comm = commutator(x.mat, p.mat);
        Matrix expect = Complex(0, 1) * Matrix::Identity(n, n);
        CHECK(block_deviation(comm, expect, n - 1) < 2e-14);
        // <0|x^2|0> = 1/2
        CHECK(std::abs((x.mat * x.mat)(0, 0) - 0.5) < 1e-14);
    }
}

TEST_CASE("squeeze generator basics") {
    auto id = squeeze_generator(16, 0.0);
    CHECK(max_abs_deviation(id.mat, Matrix::Identity(16, 16)) == 0.0);

    auto s = squeeze_generator(64, 0.5);
    Matrix unit = s.mat.adjoint() * s.mat;
    CHECK(max_abs_deviation(unit, Matrix::Identity(64, 64)) <= 1e-10);

    CHECK_THROWS_AS(squeeze_generator(64, std::nan("")),
                    RealParameterRequiredError);
}

TEST_CASE("squeeze unitarity across the working range") {
    for (auto [n, eps] : {std::pair{128, 1.0}, {256, -1.0}, {256, 0.25}}) {
        auto s = squeeze_generator(n, eps);
        CHECK(max_abs_deviation(Matrix(s.mat.adjoint() * s.mat),
                                Matrix::Identity(n, n)) <= 1e-10);
    }
}

TEST_CASE("vacuum matrix element of the squeeze operator") {
    const int n = 64;
    const double eps = 0.5;
    auto [c, cd] = ladder_pair(n);
    Matrix gen = (eps / 2.0) * (c.mat * c.mat - cd.mat * cd.mat);

    // Brute-force oracle, then the closed form.
    Matrix oracle = taylor_expm(gen);
    auto s = squeeze_generator(n, eps);
    CHECK(std::abs(s.mat(0, 0) - oracle(0, 0)) < 1e-10);
    CHECK(std::abs(s.mat(0, 0).real() - std::pow(std::cosh(eps), -0.5)) <
          1e-4);
}

TEST_CASE("matrix exponential agrees with eigendecomposition oracles") {
    std::mt19937_64 rng(5);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const int n = 96;

    Matrix h(n, n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) h(j, k) = Complex(gauss(rng), gauss(rng));
    h = 0.5 * (h + Matrix(h.adjoint()));

    Eigen::SelfAdjointEigenSolver<Matrix> es(h);
    Matrix viaEig = es.eigenvectors() *
                    es.eigenvalues().array().exp().matrix().asDiagonal() *
                    es.eigenvectors().adjoint();
    Matrix viaExpm = expm(h);
    double scale = viaEig.cwiseAbs().maxCoeff();
    CHECK(max_abs_deviation(viaExpm, viaEig) <= 1e-10 * scale);

    // Real antisymmetric: exponentiate through the Hermitian matrix iA.
    Matrix a(n, n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < j; ++k) {
            a(j, k) = Complex(gauss(rng), 0.0);
            a(k, j) = -a(j, k);
        }
    a.diagonal().setZero();
    Eigen::SelfAdjointEigenSolver<Matrix> es2(Matrix(Complex(0, 1) * a));
    Matrix viaEig2 =
        es2.eigenvectors() *
        (Complex(0, -1) * es2.eigenvalues().array()).exp().matrix().asDiagonal() *
        es2.eigenvectors().adjoint();
    CHECK(max_abs_deviation(expm(a), viaEig2) <= 1e-10);
}

TEST_CASE("bogoliubov conjugation matches the closed form") {
    auto [c0, cd0] = bogoliubov_conjugate(32, 0.0);
    auto [c, cd] = ladder_pair(32);
    CHECK(max_abs_deviation(c0.mat, c.mat) < 1e-14);
    CHECK(max_abs_deviation(cd0.mat, cd.mat) < 1e-14);

    const double eps = 0.3;
    auto [cc, ccd] = bogoliubov_conjugate(64, eps);
    auto [c64, cd64] = ladder_pair(64);
    Matrix closed = std::cosh(eps) * c64.mat - std::sinh(eps) * cd64.mat;
    Matrix closedDag = std::cosh(eps) * cd64.mat - std::sinh(eps) * c64.mat;
    // Truncation error reaches the leading half block; the quarter block is
    // converged far below the tolerance.
    CHECK(block_deviation(cc.mat, closed, 16) <= 1e-8);
    CHECK(block_deviation(ccd.mat, closedDag, 16) <= 1e-8);

    // Adjoint-as-inverse vs true inverse: indistinguishable at unitarity
    // level.
    auto [ci, cdi] = bogoliubov_conjugate(64, eps, true);
    CHECK(max_abs_deviation(cc.mat, ci.mat) < 1e-9);
}

TEST_CASE("half-block deviation decreases monotonically with n") {
    const double eps = 0.3;
    double prev = 1e300;
    for (int n : {16, 32, 64, 128}) {
        auto [cc, ccd] = bogoliubov_conjugate(n, eps);
        auto [c, cd] = ladder_pair(n);
        Matrix closed = std::cosh(eps) * c.mat - std::sinh(eps) * cd.mat;
        double dev = block_deviation(cc.mat, closed, n / 2);
        CHECK(dev < prev);
        prev = dev;
    }
}

TEST_CASE("scaled quadratures preserve the commutator") {
    auto [x1, p1] = scaled_quadratures(8, 1.0);
    auto [x, p] = quadratures(8);
    CHECK(max_abs_deviation(x1.mat, x.mat) == 0.0);
    CHECK(max_abs_deviation(p1.mat, p.mat) == 0.0);

    for (double rho : {0.1, 2.0, -3.0}) {
        auto [xr, pr] = scaled_quadratures(8, rho);
        Matrix comm = commutator(xr.mat, pr.mat);
        CHECK(block_deviation(comm,
                              Matrix(Complex(0, 1) * Matrix::Identity(8, 8)),
                              7) < 1e-14);
    }

    auto [x2, p2] = scaled_quadratures(2, 2.0);
    CHECK(std::abs(x2.mat(0, 1) - std::sqrt(2.0)) < 1e-15);

    CHECK_THROWS_AS(scaled_quadratures(8, 0.0), SingularScalingError);
}

TEST_CASE("bogoliubov coefficients") {
    auto one = BogoliubovCoefficients::from_rho(1.0);
    CHECK(double(one.u) == 1.0);
    CHECK(double(one.v) == 0.0);
    CHECK(one.epsilon.has_value());
    CHECK(*one.epsilon == 0.0);

    auto two = BogoliubovCoefficients::from_rho(2.0);
    CHECK(double(two.u) == 1.25);
    CHECK(double(two.v) == 0.75);

    auto half = BogoliubovCoefficients::from_rho(0.5);
    CHECK(double(half.u) == 1.25);
    CHECK(double(half.v) == -0.75);
    CHECK(std::abs(double(half.u) - std::cosh(std::log(2.0))) < 1e-12);
    CHECK(std::abs(double(half.v) + std::sinh(std::log(2.0))) < 1e-12);

    auto neg = BogoliubovCoefficients::from_rho(-1.0);
    CHECK_FALSE(neg.epsilon.has_value());

    CHECK_THROWS_AS(BogoliubovCoefficients::from_rho(0.0),
                    SingularScalingError);
}

TEST_CASE("symplectic invariant u^2 - v^2 = 1 across the rho range") {
    for (int i = 0; i <= 60; ++i) {
        double rho = std::pow(10.0, -3.0 + 0.1 * i);
        auto bc = BogoliubovCoefficients::from_rho(rho);
        long double res = bc.u * bc.u - bc.v * bc.v - 1.0L;
        CHECK(std::abs(double(res)) <= 1e-12);
        if (bc.epsilon) {
            CHECK(std::abs(double(bc.u) - std::cosh(*bc.epsilon)) <= 1e-12);
            CHECK(std::abs(double(bc.v) + std::sinh(*bc.epsilon)) <= 1e-12);
        }
    }
}

TEST_CASE("transformed ladder preserves the ccr on the leading block") {
    for (double rho : {0.2, 1.0, 5.0}) {
        const int n = 32;
        auto [cr, crdag, bc] = transformed_ladder(n, rho);
        Matrix comm = commutator(cr.mat, crdag.mat);
        CHECK(block_deviation(comm, Matrix(Matrix::Identity(n, n)), n - 1) <=
              1e-10);
    }
}

TEST_CASE("generator equivalence check") {
    auto zero = generator_equivalence_check(32, 0.0, 8, 1e-12);
    CHECK(zero.deviation == 0.0);

    auto r = generator_equivalence_check(64, 0.3, 16, 1e-8);
    CHECK(r.pass);

    auto hard = generator_equivalence_check(64, 1.5, 16, 1e-8);
    CHECK(hard.deviation > r.deviation);

    CHECK_THROWS_AS(generator_equivalence_check(64, 0.3, 33, 1e-8),
                    DimensionError);
}
