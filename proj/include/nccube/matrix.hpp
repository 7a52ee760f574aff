#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace nccube {

using Complex = std::complex<double>;

class NumericalFailure : public std::runtime_error {
public:
    explicit NumericalFailure(const std::string& what) : std::runtime_error(what) {}
};

class InvalidInput : public std::runtime_error {
public:
    explicit InvalidInput(const std::string& what) : std::runtime_error(what) {}
};

/// Dense complex matrix, row-major storage.
class ComplexMatrix {
public:
    ComplexMatrix() : rows_(0), cols_(0) {}
    ComplexMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, Complex(0, 0)) {
        if (rows < 0 || cols < 0) throw InvalidInput("negative matrix dimension");
    }

    static ComplexMatrix identity(int n) {
        ComplexMatrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }
    static ComplexMatrix zero(int rows, int cols) { return ComplexMatrix(rows, cols); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool isSquare() const { return rows_ == cols_; }

    Complex& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Complex& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    Complex* data() { return a_.data(); }
    const Complex* data() const { return a_.data(); }

    ComplexMatrix adjoint() const;
    ComplexMatrix conjugate() const;

    ComplexMatrix& operator+=(const ComplexMatrix& o);
    ComplexMatrix& operator-=(const ComplexMatrix& o);
    ComplexMatrix& operator*=(Complex s);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
    friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

    Complex trace() const;
    double frobeniusNorm() const;
    double maxAbsEntry() const;
    bool allFinite() const;

    /// Largest entrywise deviation from self-adjointness; requires square.
    double hermitianDefect() const;

    bool operator==(const ComplexMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

private:
    int rows_, cols_;
    std::vector<Complex> a_;
};

/// Self-adjoint matrix; symmetrised (M + M†)/2 on construction so the
/// invariant holds regardless of floating-point noise in the input.
class HermitianMatrix {
public:
    HermitianMatrix() = default;
    explicit HermitianMatrix(int dim) : m_(dim, dim) {}
    explicit HermitianMatrix(const ComplexMatrix& m);

    static HermitianMatrix identity(int n) { return HermitianMatrix(ComplexMatrix::identity(n)); }
    static HermitianMatrix zero(int n) { return HermitianMatrix(n); }
    static HermitianMatrix diagonal(const std::vector<double>& d);

    int dim() const { return m_.rows(); }
    const ComplexMatrix& mat() const { return m_; }
    const Complex& operator()(int i, int j) const { return m_(i, j); }

    HermitianMatrix& operator+=(const HermitianMatrix& o);
    HermitianMatrix& operator-=(const HermitianMatrix& o);
    HermitianMatrix& operator*=(double s);
    friend HermitianMatrix operator+(HermitianMatrix a, const HermitianMatrix& b) { return a += b; }
    friend HermitianMatrix operator-(HermitianMatrix a, const HermitianMatrix& b) { return a -= b; }
    friend HermitianMatrix operator*(double s, HermitianMatrix a) { return a *= s; }

    /// Rank-preserving in-place update that keeps hermiticity exact;
    /// caller must pass a Hermitian increment.
    void addScaled(double s, const HermitianMatrix& o);
    void addIdentity(double s);

    double frobeniusNorm() const { return m_.frobeniusNorm(); }
    Complex trace() const { return m_.trace(); }

private:
    ComplexMatrix m_;
};

/// Real trace pairing <X,Y> = Re tr(X† Y); the inner product that makes
/// Hermitian k x k matrices a k^2-dimensional real Euclidean space.
double realInner(const ComplexMatrix& x, const ComplexMatrix& y);
double realInner(const HermitianMatrix& x, const HermitianMatrix& y);

/// Kronecker product a (x) b.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
HermitianMatrix kronHerm(const HermitianMatrix& a, const HermitianMatrix& b);

}  // namespace nccube
