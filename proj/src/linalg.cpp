#include "tcorr/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace tcorr {

namespace {

void check_dim(int dim) {
    if (dim != 2 && dim != 4) {
        throw std::invalid_argument("matrix/vector dimension must be 2 or 4");
    }
}

void check_finite(const std::vector<Complex>& entries) {
    for (const auto& z : entries) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw std::invalid_argument("non-finite entry rejected");
        }
    }
}

}  // namespace

SquareMatrix::SquareMatrix(int dim) : dim_(dim), entries_(static_cast<size_t>(dim) * dim) {
    check_dim(dim);
}

SquareMatrix::SquareMatrix(int dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
    check_dim(dim);
    if (entries_.size() != static_cast<size_t>(dim) * dim) {
        throw std::invalid_argument("entry count does not match dimension");
    }
    check_finite(entries_);
}

SquareMatrix SquareMatrix::identity(int dim) {
    SquareMatrix m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = 1.0;
    return m;
}

ComplexVector::ComplexVector(int dim) : dim_(dim), entries_(static_cast<size_t>(dim)) {
    check_dim(dim);
}

ComplexVector::ComplexVector(int dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
    check_dim(dim);
    if (entries_.size() != static_cast<size_t>(dim)) {
        throw std::invalid_argument("entry count does not match dimension");
    }
    check_finite(entries_);
}

SquareMatrix operator+(const SquareMatrix& a, const SquareMatrix& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
    SquareMatrix out(a.dim());
    for (int r = 0; r < a.dim(); ++r)
        for (int c = 0; c < a.dim(); ++c) out.at(r, c) = a.at(r, c) + b.at(r, c);
    return out;
}

SquareMatrix operator-(const SquareMatrix& a, const SquareMatrix& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
    SquareMatrix out(a.dim());
    for (int r = 0; r < a.dim(); ++r)
        for (int c = 0; c < a.dim(); ++c) out.at(r, c) = a.at(r, c) - b.at(r, c);
    return out;
}

SquareMatrix matmul(const SquareMatrix& a, const SquareMatrix& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
    const int n = a.dim();
    SquareMatrix out(n);
    for (int r = 0; r < n; ++r) {
        for (int k = 0; k < n; ++k) {
            const Complex ark = a.at(r, k);
            if (ark == Complex{}) continue;
            for (int c = 0; c < n; ++c) out.at(r, c) += ark * b.at(k, c);
        }
    }
    return out;
}

SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) { return matmul(a, b); }

SquareMatrix operator*(Complex scalar, const SquareMatrix& a) {
    SquareMatrix out(a.dim());
    for (int r = 0; r < a.dim(); ++r)
        for (int c = 0; c < a.dim(); ++c) out.at(r, c) = scalar * a.at(r, c);
    return out;
}

SquareMatrix operator*(double scalar, const SquareMatrix& a) {
    return Complex{scalar, 0.0} * a;
}

SquareMatrix adjoint(const SquareMatrix& a) {
    SquareMatrix out(a.dim());
    for (int r = 0; r < a.dim(); ++r)
        for (int c = 0; c < a.dim(); ++c) out.at(r, c) = std::conj(a.at(c, r));
    return out;
}

Complex trace(const SquareMatrix& a) {
    Complex t{};
    for (int i = 0; i < a.dim(); ++i) t += a.at(i, i);
    return t;
}

SquareMatrix tensor_product(const SquareMatrix& a, const SquareMatrix& b) {
    const int m = a.dim();
    const int n = b.dim();
    if (m * n > 4) throw std::invalid_argument("tensor product dimension exceeds 4");
    SquareMatrix out(m * n);
    for (int ar = 0; ar < m; ++ar)
        for (int ac = 0; ac < m; ++ac)
            for (int br = 0; br < n; ++br)
                for (int bc = 0; bc < n; ++bc)
                    out.at(ar * n + br, ac * n + bc) = a.at(ar, ac) * b.at(br, bc);
    return out;
}

ComplexVector tensor_product(const ComplexVector& a, const ComplexVector& b) {
    const int m = a.dim();
    const int n = b.dim();
    if (m * n > 4) throw std::invalid_argument("tensor product dimension exceeds 4");
    ComplexVector out(m * n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) out.at(i * n + j) = a.at(i) * b.at(j);
    return out;
}

ComplexVector matvec(const SquareMatrix& a, const ComplexVector& v) {
    if (a.dim() != v.dim()) throw std::invalid_argument("dimension mismatch");
    ComplexVector out(v.dim());
    for (int r = 0; r < a.dim(); ++r) {
        Complex sum{};
        for (int c = 0; c < a.dim(); ++c) sum += a.at(r, c) * v.at(c);
        out.at(r) = sum;
    }
    return out;
}

Complex inner(const ComplexVector& u, const ComplexVector& v) {
    if (u.dim() != v.dim()) throw std::invalid_argument("dimension mismatch");
    Complex sum{};
    for (int i = 0; i < u.dim(); ++i) sum += std::conj(u.at(i)) * v.at(i);
    return sum;
}

double norm(const ComplexVector& v) {
    double sum = 0.0;
    for (int i = 0; i < v.dim(); ++i) sum += std::norm(v.at(i));
    return std::sqrt(sum);
}

SquareMatrix outer(const ComplexVector& u, const ComplexVector& v) {
    if (u.dim() != v.dim()) throw std::invalid_argument("dimension mismatch");
    SquareMatrix out(u.dim());
    for (int r = 0; r < u.dim(); ++r)
        for (int c = 0; c < u.dim(); ++c) out.at(r, c) = u.at(r) * std::conj(v.at(c));
    return out;
}

double expectation(const SquareMatrix& a, const ComplexVector& v) {
    return inner(v, matvec(a, v)).real();
}

double max_abs(const SquareMatrix& a) {
    double m = 0.0;
    for (const auto& z : a.entries()) m = std::max(m, std::abs(z));
    return m;
}

double max_abs_diff(const SquareMatrix& a, const SquareMatrix& b) {
    return max_abs(a - b);
}

namespace {

double offdiag_max(const SquareMatrix& a) {
    double m = 0.0;
    for (int r = 0; r < a.dim(); ++r)
        for (int c = 0; c < a.dim(); ++c)
            if (r != c) m = std::max(m, std::abs(a.at(r, c)));
    return m;
}

}  // namespace

EigenSystem hermitian_eigensystem(const SquareMatrix& a, double tol) {
    const int n = a.dim();
    if (max_abs_diff(a, adjoint(a)) > tol) {
        throw std::invalid_argument("matrix is not Hermitian within tolerance");
    }

    SquareMatrix work = a;
    SquareMatrix vectors = SquareMatrix::identity(n);

    constexpr double target = 1e-13;
    constexpr int max_sweeps = 100;
    for (int sweep = 0; sweep < max_sweeps && offdiag_max(work) > target; ++sweep) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const Complex z = work.at(p, q);
                if (std::abs(z) < 1e-300) continue;

                // Phase-align the pivot, then a real Jacobi rotation.
                const double phi = std::arg(z);
                const double app = work.at(p, p).real();
                const double aqq = work.at(q, q).real();
                const double tau = (aqq - app) / (2.0 * std::abs(z));
                double t;
                if (tau >= 0.0) {
                    t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
                } else {
                    t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
                }
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                SquareMatrix u = SquareMatrix::identity(n);
                u.at(p, p) = c;
                u.at(p, q) = s;
                u.at(q, p) = -s * std::polar(1.0, -phi);
                u.at(q, q) = c * std::polar(1.0, -phi);

                work = adjoint(u) * work * u;
                vectors = vectors * u;
            }
        }
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return work.at(i, i).real() < work.at(j, j).real(); });

    EigenSystem out;
    out.values.resize(n);
    out.vectors = SquareMatrix(n);
    for (int k = 0; k < n; ++k) {
        out.values[k] = work.at(order[k], order[k]).real();
        for (int r = 0; r < n; ++r) out.vectors.at(r, k) = vectors.at(r, order[k]);
    }
    return out;
}

std::vector<double> hermitian_eigenvalues(const SquareMatrix& a, double tol) {
    return hermitian_eigensystem(a, tol).values;
}

SquareMatrix pauli(int i) {
    switch (i) {
        case 0: return SquareMatrix::identity(2);
        case 1: return SquareMatrix(2, {0.0, 1.0, 1.0, 0.0});
        case 2: return SquareMatrix(2, {0.0, Complex{0.0, -1.0}, Complex{0.0, 1.0}, 0.0});
        case 3: return SquareMatrix(2, {1.0, 0.0, 0.0, -1.0});
        default: throw std::invalid_argument("pauli index must be 0..3");
    }
}

}  // namespace tcorr
