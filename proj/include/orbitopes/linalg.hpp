#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Dense>

namespace orbitopes::linalg {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;

/// Pair (F symmetric, G skew) standing for the Hermitian matrix F + iG.
struct HermitianMatrix {
    Mat F;
    Mat G;
    HermitianMatrix(Mat f, Mat g);
    Eigen::Index size() const { return F.rows(); }
};

struct Spectrum {
    Vec values;                 // nonincreasing
    std::optional<Mat> vectors; // orthonormal columns, A = V diag(values) V^T
};

bool is_symmetric(const Mat& m, double tol = 1e-9);
bool is_skew(const Mat& m, double tol = 1e-9);

/// Eigendecomposition of a symmetric matrix, eigenvalues sorted descending
/// (stable under ties).  Throws std::invalid_argument on non-finite or
/// asymmetric input.
Spectrum sym_eigen(const Mat& a);

/// Descending eigenvalues only.
Vec sym_eigenvalues(const Mat& a);

/// The doubled symmetric matrix [[0, N], [-N, 0]] of a skew matrix N.
Mat skew_double(const Mat& n);

/// Positive half-spectrum (lam1 >= ... >= lamk >= 0, k = floor(n/2)) of a
/// skew matrix whose eigenvalues are +-i*lamj.  Computed from the doubled
/// symmetric matrix, whose eigenvalues are +-lamj with multiplicity two.
Vec skew_spectrum(const Mat& n);

/// SVD with the convention  U * A * V.transpose() = diag(sigma),
/// sigma descending and nonnegative, U and V orthogonal.
struct SvdResult {
    Mat U;
    Vec sigma;
    Mat V;
};
SvdResult svd(const Mat& a);

/// Rotation-only SVD:  U * A * V = diag(sigma), U and V in SO(n),
/// sigma_1 >= ... >= sigma_{n-1} >= |sigma_n| and prod(sigma) = det(A).
struct SpecialSvdResult {
    Mat U;
    Vec sigma;
    Mat V;
};
SpecialSvdResult special_svd(const Mat& a);

Vec singular_values(const Mat& a);
Vec special_singular_values(const Mat& a);

/// Lexicographically ordered k-subsets of {0, ..., n-1}.
std::vector<std::vector<int>> k_subsets(int n, int k);

/// k-th additive compound matrix: the induced action of B on the k-th
/// exterior power, rows/columns indexed by lexicographic k-subsets.  Its
/// eigenvalues are all k-fold sums of eigenvalues of B.
Mat additive_compound(const Mat& b, int k);

/// A (+) B = A kron Id + Id kron B; eigenvalues are all pairwise sums.
Mat tensor_sum(const Mat& a, const Mat& b);

/// Real 2n x 2n embedding [[F, -G], [G, F]] of H = F + iG.  PSD iff H is,
/// with every eigenvalue of H doubled.
Mat hermitian_embed(const HermitianMatrix& h);

/// Seeded Haar-distributed rotation in SO(n).
Mat haar_rotation(int n, std::uint64_t seed);

/// Roots of a complex polynomial (coefficients ascending by degree) via the
/// companion matrix.  Leading/trailing handling: trims exact-zero leading
/// coefficients; zero polynomial or constants yield no roots.
std::vector<std::complex<double>> poly_roots(const std::vector<std::complex<double>>& coeffs);

}  // namespace orbitopes::linalg
