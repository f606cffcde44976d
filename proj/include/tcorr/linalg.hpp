#pragma once

#include <complex>
#include <vector>

namespace tcorr {

using Complex = std::complex<double>;

// Dense complex square matrix, row-major storage.  Dimensions are fixed to
// 2 and 4: single-qubit operators and two-qubit operators/states are the
// only carriers this library needs.
class SquareMatrix {
  public:
    SquareMatrix() = default;
    explicit SquareMatrix(int dim);
    SquareMatrix(int dim, std::vector<Complex> entries);

    static SquareMatrix identity(int dim);
    static SquareMatrix zero(int dim) { return SquareMatrix(dim); }

    int dim() const { return dim_; }

    Complex& at(int row, int col) { return entries_[row * dim_ + col]; }
    const Complex& at(int row, int col) const { return entries_[row * dim_ + col]; }

    const std::vector<Complex>& entries() const { return entries_; }

  private:
    int dim_ = 0;
    std::vector<Complex> entries_;
};

// Complex column vector of dimension 2 or 4.
class ComplexVector {
  public:
    ComplexVector() = default;
    explicit ComplexVector(int dim);
    ComplexVector(int dim, std::vector<Complex> entries);

    int dim() const { return dim_; }

    Complex& at(int i) { return entries_[i]; }
    const Complex& at(int i) const { return entries_[i]; }

    const std::vector<Complex>& entries() const { return entries_; }

  private:
    int dim_ = 0;
    std::vector<Complex> entries_;
};

SquareMatrix operator+(const SquareMatrix& a, const SquareMatrix& b);
SquareMatrix operator-(const SquareMatrix& a, const SquareMatrix& b);
SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b);
SquareMatrix operator*(Complex scalar, const SquareMatrix& a);
SquareMatrix operator*(double scalar, const SquareMatrix& a);

SquareMatrix matmul(const SquareMatrix& a, const SquareMatrix& b);
SquareMatrix adjoint(const SquareMatrix& a);
Complex trace(const SquareMatrix& a);

// Kronecker product in the basis ordering |00>,|01>,|10>,|11> (left factor
// acts on the first qubit).  Product dimension must not exceed 4.
SquareMatrix tensor_product(const SquareMatrix& a, const SquareMatrix& b);
ComplexVector tensor_product(const ComplexVector& a, const ComplexVector& b);

ComplexVector matvec(const SquareMatrix& a, const ComplexVector& v);

// <u|v>, conjugate-linear in the first argument.
Complex inner(const ComplexVector& u, const ComplexVector& v);
double norm(const ComplexVector& v);

// |u><v|
SquareMatrix outer(const ComplexVector& u, const ComplexVector& v);

// Real quadratic form <v|A|v> (caller guarantees A Hermitian).
double expectation(const SquareMatrix& a, const ComplexVector& v);

// Largest entry magnitude.
double max_abs(const SquareMatrix& a);
double max_abs_diff(const SquareMatrix& a, const SquareMatrix& b);

struct EigenSystem {
    std::vector<double> values;   // ascending
    SquareMatrix vectors;         // eigenvectors as columns, matching order
};

// Cyclic Jacobi diagonalization for Hermitian matrices; iterates until the
// off-diagonal max norm drops below 1e-13.  Rejects inputs whose Hermiticity
// residual exceeds `tol`.
EigenSystem hermitian_eigensystem(const SquareMatrix& a, double tol = 1e-12);
std::vector<double> hermitian_eigenvalues(const SquareMatrix& a, double tol = 1e-12);

// Pauli matrices, sigma(0) = identity.
SquareMatrix pauli(int i);

}  // namespace tcorr
