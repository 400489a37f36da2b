#include "orbitopes/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace orbitopes::linalg {

namespace {

void require_finite(const Mat& m, const char* who) {
    if (!m.allFinite()) throw std::invalid_argument(std::string(who) + ": non-finite entries");
}

void require_square(const Mat& m, const char* who) {
    if (m.rows() != m.cols()) throw std::invalid_argument(std::string(who) + ": matrix not square");
}

}  // namespace

HermitianMatrix::HermitianMatrix(Mat f, Mat g) : F(std::move(f)), G(std::move(g)) {
    require_square(F, "HermitianMatrix");
    if (G.rows() != F.rows() || G.cols() != F.cols())
        throw std::invalid_argument("HermitianMatrix: F and G dimensions differ");
}

bool is_symmetric(const Mat& m, double tol) {
    if (m.rows() != m.cols()) return false;
    return (m - m.transpose()).cwiseAbs().maxCoeff() <= tol * std::max(1.0, m.cwiseAbs().maxCoeff());
}

bool is_skew(const Mat& m, double tol) {
    if (m.rows() != m.cols()) return false;
    return (m + m.transpose()).cwiseAbs().maxCoeff() <= tol * std::max(1.0, m.cwiseAbs().maxCoeff());
}

Spectrum sym_eigen(const Mat& a) {
    require_square(a, "sym_eigen");
    require_finite(a, "sym_eigen");
    if (!is_symmetric(a)) throw std::invalid_argument("sym_eigen: matrix not symmetric");
    Eigen::SelfAdjointEigenSolver<Mat> solver(0.5 * (a + a.transpose()));
    if (solver.info() != Eigen::Success) throw std::runtime_error("sym_eigen: solver failed");
    const Eigen::Index n = a.rows();
    // Eigen returns ascending order; reverse for descending, stable on ties.
    Spectrum s;
    s.values = Vec(n);
    Mat vecs(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        s.values(i) = solver.eigenvalues()(n - 1 - i);
        vecs.col(i) = solver.eigenvectors().col(n - 1 - i);
    }
    s.vectors = std::move(vecs);
    return s;
}

Vec sym_eigenvalues(const Mat& a) { return sym_eigen(a).values; }

Mat skew_double(const Mat& n) {
    require_square(n, "skew_double");
    if (!is_skew(n)) throw std::invalid_argument("skew_double: matrix not skew-symmetric");
    const Eigen::Index m = n.rows();
    Mat d = Mat::Zero(2 * m, 2 * m);
    d.topRightCorner(m, m) = n;
    d.bottomLeftCorner(m, m) = -n;
    return d;
}

Vec skew_spectrum(const Mat& n) {
    const int m = static_cast<int>(n.rows());
    const int k = m / 2;
    Vec evs = sym_eigenvalues(skew_double(n));  // +-lam_j, each twice
    Vec lam(k);
    for (int i = 0; i < k; ++i) lam(i) = std::max(0.0, 0.5 * (evs(2 * i) + evs(2 * i + 1)));
    return lam;
}

SvdResult svd(const Mat& a) {
    require_square(a, "svd");
    require_finite(a, "svd");
    Eigen::JacobiSVD<Mat> solver(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
    SvdResult r;
    r.U = solver.matrixU().transpose();
    r.sigma = solver.singularValues();
    r.V = solver.matrixV().transpose();
    return r;
}

SpecialSvdResult special_svd(const Mat& a) {
    Eigen::JacobiSVD<Mat> solver(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
    Mat u = solver.matrixU();
    Mat v = solver.matrixV();
    Vec sigma = solver.singularValues();
    const Eigen::Index n = a.rows();
    if (n == 0) return {Mat(0, 0), sigma, Mat(0, 0)};
    const bool flip_u = u.determinant() < 0.0;
    const bool flip_v = v.determinant() < 0.0;
    if (flip_u && flip_v) {
        u.col(n - 1) *= -1.0;
        v.col(n - 1) *= -1.0;
    } else if (flip_u) {
        u.col(n - 1) *= -1.0;
        sigma(n - 1) *= -1.0;
    } else if (flip_v) {
        v.col(n - 1) *= -1.0;
        sigma(n - 1) *= -1.0;
    }
    SpecialSvdResult r;
    r.U = u.transpose();
    r.sigma = sigma;
    r.V = v;
    return r;
}

Vec singular_values(const Mat& a) {
    Eigen::JacobiSVD<Mat> solver(a);
    return solver.singularValues();
}

Vec special_singular_values(const Mat& a) { return special_svd(a).sigma; }

std::vector<std::vector<int>> k_subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) return out;
    std::vector<int> cur(k);
    std::iota(cur.begin(), cur.end(), 0);
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == n - k + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

Mat additive_compound(const Mat& b, int k) {
    require_square(b, "additive_compound");
    const int n = static_cast<int>(b.rows());
    if (k < 1 || k > n) throw std::invalid_argument("additive_compound: k out of range");
    const auto subsets = k_subsets(n, k);
    const int m = static_cast<int>(subsets.size());
    Mat l = Mat::Zero(m, m);
    // Index of a sorted k-subset in the lexicographic list.
    auto rank_of = [&](const std::vector<int>& s) {
        long r = 0;
        int prev = -1;
        auto choose = [](int nn, int kk) -> long {
            if (kk < 0 || kk > nn) return 0;
            long c = 1;
            for (int i = 1; i <= kk; ++i) c = c * (nn - kk + i) / i;
            return c;
        };
        for (int pos = 0; pos < k; ++pos) {
            for (int v = prev + 1; v < s[pos]; ++v) r += choose(n - 1 - v, k - 1 - pos);
            prev = s[pos];
        }
        return r;
    };
    for (int col = 0; col < m; ++col) {
        const auto& t = subsets[col];
        std::vector<char> in_t(n, 0);
        for (int x : t) in_t[x] = 1;
        double diag = 0.0;
        for (int x : t) diag += b(x, x);
        l(col, col) += diag;
        // Replace t[j] by an element s outside T; the image is +-e_S where S
        // is the sorted result and the sign counts the transpositions needed.
        for (int j = 0; j < k; ++j) {
            for (int s = 0; s < n; ++s) {
                if (in_t[s]) continue;
                std::vector<int> snew(t);
                snew[j] = s;
                int pos = j;
                int sign = 1;
                while (pos > 0 && snew[pos] < snew[pos - 1]) {
                    std::swap(snew[pos], snew[pos - 1]);
                    --pos;
                    sign = -sign;
                }
                while (pos + 1 < k && snew[pos] > snew[pos + 1]) {
                    std::swap(snew[pos], snew[pos + 1]);
                    ++pos;
                    sign = -sign;
                }
                l(rank_of(snew), col) += sign * b(s, t[j]);
            }
        }
    }
    return l;
}

Mat tensor_sum(const Mat& a, const Mat& b) {
    require_square(a, "tensor_sum");
    require_square(b, "tensor_sum");
    const Eigen::Index m = a.rows(), p = b.rows();
    Mat out = Mat::Zero(m * p, m * p);
    for (Eigen::Index i = 0; i < m; ++i)
        for (Eigen::Index j = 0; j < m; ++j)
            if (a(i, j) != 0.0)
                out.block(i * p, j * p, p, p) += a(i, j) * Mat::Identity(p, p);
    for (Eigen::Index i = 0; i < m; ++i) out.block(i * p, i * p, p, p) += b;
    return out;
}

Mat hermitian_embed(const HermitianMatrix& h) {
    const Eigen::Index n = h.size();
    Mat e(2 * n, 2 * n);
    e.topLeftCorner(n, n) = h.F;
    e.topRightCorner(n, n) = -h.G;
    e.bottomLeftCorner(n, n) = h.G;
    e.bottomRightCorner(n, n) = h.F;
    return e;
}

Mat haar_rotation(int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("haar_rotation: n must be positive");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Mat g(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g(i, j) = gauss(rng);
    Eigen::HouseholderQR<Mat> qr(g);
    Mat q = qr.householderQ();
    Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
    // Sign-fix against the R diagonal so Q is Haar, then flip one column to
    // land in SO(n).
    for (int j = 0; j < n; ++j)
        if (r(j, j) < 0.0) q.col(j) *= -1.0;
    if (q.determinant() < 0.0) q.col(n - 1) *= -1.0;
    return q;
}

std::vector<std::complex<double>> poly_roots(const std::vector<std::complex<double>>& coeffs) {
    std::vector<std::complex<double>> c(coeffs);
    while (!c.empty() && std::abs(c.back()) == 0.0) c.pop_back();
    const int deg = static_cast<int>(c.size()) - 1;
    if (deg < 1) return {};
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(deg, deg);
    for (int i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < deg; ++i) companion(i, deg - 1) = -c[i] / c[deg];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
    std::vector<std::complex<double>> roots(deg);
    for (int i = 0; i < deg; ++i) roots[i] = solver.eigenvalues()(i);
    return roots;
}

}  // namespace orbitopes::linalg
