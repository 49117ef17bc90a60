#ifndef QWH_OPERATOR_MATRIX_HPP
#define QWH_OPERATOR_MATRIX_HPP

#include <Eigen/Dense>
#include <complex>
#include <utility>

namespace qwh {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

enum class OperatorTag {
    general,
    annihilation,
    creation,
    number,
    quadrature,
};

/// Dense operator over the truncated Fock basis {|0>, ..., |n-1>}.
/// The tag records how the matrix was constructed; it is diagnostic only.
struct OperatorMatrix {
    Matrix mat;
    OperatorTag tag = OperatorTag::general;

    OperatorMatrix() = default;
    explicit OperatorMatrix(Matrix m, OperatorTag t = OperatorTag::general)
        : mat(std::move(m)), tag(t) {}

    int dim() const { return static_cast<int>(mat.rows()); }
};

/// Matrix exponential (scaling-and-squaring with Pade kernel).
Matrix expm(const Matrix& a);

/// Max entrywise absolute deviation between two matrices.
double max_abs_deviation(const Matrix& a, const Matrix& b);

/// Same, restricted to the leading block x block submatrix.
double block_deviation(const Matrix& a, const Matrix& b, int block);

}  // namespace qwh

#endif
