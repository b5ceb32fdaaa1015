#include <doctest.h>

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "imag/matfun.hpp"
#include "imag/rng.hpp"

using namespace imag;

namespace {

Matrix random_hermitian(Eigen::Index d, Rng& rng) {
    Matrix g(d, d);
    for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j) g(i, j) = rng.complex_normal();
    return 0.5 * (g + g.adjoint());
}

Matrix random_psd(Eigen::Index d, Rng& rng) {
    Matrix g(d, d);
    for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j) g(i, j) = rng.complex_normal();
    return g * g.adjoint();
}

Matrix pauli_y() {
    Matrix y(2, 2);
    y << 0.0, std::complex<double>(0.0, -1.0), std::complex<double>(0.0, 1.0), 0.0;
    return y;
}

// Characteristic-polynomial oracle, independent of the self-adjoint solver:
// Faddeev-LeVerrier coefficients, roots from the companion matrix through
// the general (non-selfadjoint) eigensolver.
std::vector<double> char_poly_roots(const Matrix& a) {
    const Eigen::Index d = a.rows();
    // p(x) = x^d + c[d-1] x^(d-1) + ... + c[0]
    std::vector<double> c(static_cast<std::size_t>(d), 0.0);
    Matrix m = Matrix::Zero(d, d);
    double ck = 1.0;
    for (Eigen::Index k = 1; k <= d; ++k) {
        m = (a * (m + ck * Matrix::Identity(d, d))).eval();
        ck = -m.trace().real() / static_cast<double>(k);
        c[static_cast<std::size_t>(d - k)] = ck;
    }
    RealMatrix companion = RealMatrix::Zero(d, d);
    for (Eigen::Index i = 1; i < d; ++i) companion(i, i - 1) = 1.0;
    for (Eigen::Index i = 0; i < d; ++i) companion(i, d - 1) = -c[static_cast<std::size_t>(i)];
    Eigen::EigenSolver<RealMatrix> solver(companion);
    std::vector<double> roots(static_cast<std::size_t>(d));
    for (Eigen::Index i = 0; i < d; ++i) roots[static_cast<std::size_t>(i)] = solver.eigenvalues()[i].real();
    std::sort(roots.begin(), roots.end());
    return roots;
}

} // namespace

TEST_CASE("hermitian_eig identity") {
    HermitianEig eig = hermitian_eig(Matrix::Identity(2, 2));
    CHECK(eig.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(eig.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("hermitian_eig pauli-y spectrum") {
    HermitianEig eig = hermitian_eig(pauli_y());
    CHECK(eig.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(eig.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("hermitian_eig matches characteristic-polynomial roots") {
    Rng rng(42);
    Matrix h = random_hermitian(4, rng);
    HermitianEig eig = hermitian_eig(h);
    std::vector<double> roots = char_poly_roots(h);
    for (Eigen::Index j = 0; j < 4; ++j) {
        CHECK(eig.eigenvalues[j] == doctest::Approx(roots[static_cast<std::size_t>(j)]).epsilon(1e-8));
    }
}

TEST_CASE("hermitian_eig invariants over random inputs") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Rng rng(seed);
        const Eigen::Index d = 2 + static_cast<Eigen::Index>(rng.uniform_index(5));
        Matrix h = random_hermitian(d, rng);
        HermitianEig eig = hermitian_eig(h);
        for (Eigen::Index j = 1; j < d; ++j) CHECK(eig.eigenvalues[j] >= eig.eigenvalues[j - 1]);
        const double scale = std::max(1.0, max_abs(h));
        Matrix rebuilt = eig.eigenvectors * eig.eigenvalues.asDiagonal().toDenseMatrix().cast<std::complex<double>>() *
                         eig.eigenvectors.adjoint();
        CHECK(max_abs(Matrix(rebuilt - h)) <= 1e-10 * scale);
        CHECK(max_abs(Matrix(eig.eigenvectors.adjoint() * eig.eigenvectors -
                             Matrix::Identity(d, d))) <= 1e-10);
    }
}

TEST_CASE("hermitian_eig rejects non-hermitian input") {
    Matrix m(2, 2);
    m << 1.0, 2.0, 3.0, 4.0;
    CHECK_THROWS_AS(hermitian_eig(m), NotHermitian);
}

TEST_CASE("matrix_power identity fixed point") {
    CHECK(max_abs(Matrix(matrix_power(Matrix::Identity(3, 3), 0.5) -
                         Matrix::Identity(3, 3))) <= 1e-12);
}

TEST_CASE("matrix_power scalar cases with rank deficiency") {
    Matrix a = Matrix::Zero(2, 2);
    a(0, 0) = 4.0;
    Matrix b = matrix_power(a, 0.5);
    CHECK(b(0, 0).real() == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(std::abs(b(1, 1)) <= 1e-12);

    Matrix c = Matrix::Zero(2, 2);
    c(0, 0) = 0.25;
    c(1, 1) = 0.75;
    Matrix powered = matrix_power(c, 0.3);
    CHECK(powered(0, 0).real() == doctest::Approx(std::pow(0.25, 0.3)).epsilon(1e-13));
    CHECK(powered(1, 1).real() == doctest::Approx(std::pow(0.75, 0.3)).epsilon(1e-13));
}

TEST_CASE("matrix_power rejects indefinite input") {
    Matrix a = Matrix::Zero(2, 2);
    a(0, 0) = 1.0;
    a(1, 1) = -0.5;
    CHECK_THROWS_AS(matrix_power(a, 0.5), NotPSD);
}

TEST_CASE("matrix_power rejects mu outside (0,1]") {
    CHECK_THROWS_AS(matrix_power(Matrix::Identity(2, 2), 0.0), MuOutOfRange);
    CHECK_THROWS_AS(matrix_power(Matrix::Identity(2, 2), 1.5), MuOutOfRange);
}

TEST_CASE("matrix_power semigroup property on the support") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Rng rng(seed);
        Matrix a = random_psd(4, rng);
        if (seed % 2 == 0) {
            // degenerate case: project out one direction
            HermitianEig eig = hermitian_eig(a);
            RealVector lambda = eig.eigenvalues;
            lambda[0] = 0.0;
            a = eig.eigenvectors * lambda.asDiagonal().toDenseMatrix().cast<std::complex<double>>() *
                eig.eigenvectors.adjoint();
            a = 0.5 * (a + a.adjoint()).eval();
        }
        const double mu = rng.uniform(0.05, 0.5);
        const double nu = rng.uniform(0.05, 1.0 - mu);
        Matrix left = matrix_power(a, mu) * matrix_power(a, nu);
        Matrix right = matrix_power(a, mu + nu);
        CHECK(max_abs(Matrix(left - right)) <= 1e-9 * std::max(1.0, max_abs(a)));
        CHECK(max_abs(Matrix(matrix_power(a, 1.0) - a)) <= 1e-10 * std::max(1.0, max_abs(a)));
    }
}

TEST_CASE("matrix_sqrt basics and square-back") {
    CHECK(max_abs(Matrix(matrix_sqrt(Matrix::Identity(2, 2)) - Matrix::Identity(2, 2))) <= 1e-13);

    Matrix d92 = Matrix::Zero(2, 2);
    d92(0, 0) = 9.0;
    d92(1, 1) = 1.0;
    Matrix root = matrix_sqrt(d92);
    CHECK(root(0, 0).real() == doctest::Approx(3.0).epsilon(1e-13));
    CHECK(root(1, 1).real() == doctest::Approx(1.0).epsilon(1e-13));

    Rng rng(7);
    Matrix a = random_psd(5, rng);
    Matrix b = matrix_sqrt(a);
    CHECK(max_abs(Matrix(b * b - a)) <= 1e-9 * std::max(1.0, max_abs(a)));
}

TEST_CASE("trace_norm on known matrices") {
    CHECK(trace_norm(Matrix::Zero(3, 3)) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(trace_norm(pauli_y()) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("trace_norm matches the singular-value oracle") {
    Rng rng(11);
    Matrix a(4, 4);
    for (Eigen::Index i = 0; i < 4; ++i)
        for (Eigen::Index j = 0; j < 4; ++j) a(i, j) = rng.complex_normal();
    // independent route: eigenvalues of A^dag A
    HermitianEig gram = hermitian_eig(a.adjoint() * a);
    double expected = 0.0;
    for (Eigen::Index j = 0; j < 4; ++j) expected += std::sqrt(std::max(gram.eigenvalues[j], 0.0));
    CHECK(trace_norm(a) == doctest::Approx(expected).epsilon(1e-10));
}

TEST_CASE("trace_norm is unitarily invariant") {
    Rng rng(13);
    Matrix a(3, 3);
    for (Eigen::Index i = 0; i < 3; ++i)
        for (Eigen::Index j = 0; j < 3; ++j) a(i, j) = rng.complex_normal();
    // unitaries from eigendecompositions of random Hermitians
    Matrix u = hermitian_eig(random_hermitian(3, rng)).eigenvectors;
    Matrix v = hermitian_eig(random_hermitian(3, rng)).eigenvectors;
    CHECK(trace_norm(u * a * v) == doctest::Approx(trace_norm(a)).epsilon(1e-9));
}

TEST_CASE("real_psd_factor satisfies the defining identity") {
    RealMatrix eye = RealMatrix::Identity(3, 3);
    RealMatrix k = real_psd_factor(eye);
    CHECK(max_abs(RealMatrix(k.transpose() * k - eye)) <= 1e-9);

    RealMatrix rank_deficient = RealMatrix::Zero(2, 2);
    rank_deficient(0, 0) = 4.0;
    RealMatrix k2 = real_psd_factor(rank_deficient);
    CHECK(max_abs(RealMatrix(k2.transpose() * k2 - rank_deficient)) <= 1e-9);

    Rng rng(5);
    RealMatrix g(4, 4);
    for (Eigen::Index i = 0; i < 4; ++i)
        for (Eigen::Index j = 0; j < 4; ++j) g(i, j) = rng.normal();
    RealMatrix gram = g.transpose() * g;
    RealMatrix k3 = real_psd_factor(gram);
    CHECK(max_abs(RealMatrix(k3.transpose() * k3 - gram)) <= 1e-9 * std::max(1.0, max_abs(gram)));
}

TEST_CASE("real_psd_factor rejects indefinite input") {
    RealMatrix m = RealMatrix::Identity(2, 2);
    m(1, 1) = -1.0;
    CHECK_THROWS_AS(real_psd_factor(m), NotPSD);
}

TEST_CASE("symmetric_real_eig basics") {
    RealMatrix diag = RealMatrix::Zero(3, 3);
    diag(0, 0) = 3.0;
    diag(1, 1) = 1.0;
    diag(2, 2) = 2.0;
    SymmetricEig eig = symmetric_real_eig(diag);
    RealMatrix rotated = eig.q * diag * eig.q.transpose();
    for (Eigen::Index i = 0; i < 3; ++i)
        for (Eigen::Index j = 0; j < 3; ++j)
            if (i != j) CHECK(std::abs(rotated(i, j)) <= 1e-12);

    RealMatrix flip(2, 2);
    flip << 0.0, 1.0, 1.0, 0.0;
    SymmetricEig eig2 = symmetric_real_eig(flip);
    CHECK(eig2.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-13));
    CHECK(eig2.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("symmetric_real_eig reconstruction on random input") {
    Rng rng(9);
    RealMatrix g(5, 5);
    for (Eigen::Index i = 0; i < 5; ++i)
        for (Eigen::Index j = 0; j < 5; ++j) g(i, j) = rng.normal();
    RealMatrix sym = 0.5 * (g + g.transpose());
    SymmetricEig eig = symmetric_real_eig(sym);
    CHECK(max_abs(RealMatrix(eig.q * eig.q.transpose() - RealMatrix::Identity(5, 5))) <= 1e-10);
    RealMatrix rebuilt = eig.q.transpose() * eig.eigenvalues.asDiagonal() * eig.q;
    CHECK(max_abs(RealMatrix(rebuilt - sym)) <= 1e-10 * std::max(1.0, max_abs(sym)));
    CHECK_THROWS_AS(symmetric_real_eig(g), NotSymmetric);
}
