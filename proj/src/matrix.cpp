#include "nccube/matrix.hpp"

#include <cmath>

namespace nccube {

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r(j, i) = std::conj((*this)(i, j));
    return r;
}

ComplexMatrix ComplexMatrix::conjugate() const {
    ComplexMatrix r(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r(i, j) = std::conj((*this)(i, j));
    return r;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidInput("matrix shape mismatch in +");
    for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidInput("matrix shape mismatch in -");
    for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
    for (auto& v : a_) v *= s;
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols_ != b.rows_) throw InvalidInput("matrix shape mismatch in *");
    ComplexMatrix r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i) {
        for (int l = 0; l < a.cols_; ++l) {
            const Complex ail = a(i, l);
            if (ail == Complex(0, 0)) continue;
            const Complex* brow = &b(l, 0);
            Complex* rrow = &r(i, 0);
            for (int j = 0; j < b.cols_; ++j) rrow[j] += ail * brow[j];
        }
    }
    return r;
}

Complex ComplexMatrix::trace() const {
    Complex t(0, 0);
    const int n = std::min(rows_, cols_);
    for (int i = 0; i < n; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::frobeniusNorm() const {
    double s = 0;
    for (const auto& v : a_) s += std::norm(v);
    return std::sqrt(s);
}

double ComplexMatrix::maxAbsEntry() const {
    double s = 0;
    for (const auto& v : a_) s = std::max(s, std::abs(v));
    return s;
}

bool ComplexMatrix::allFinite() const {
    for (const auto& v : a_)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
}

double ComplexMatrix::hermitianDefect() const {
    if (!isSquare()) throw InvalidInput("hermitianDefect needs a square matrix");
    double d = 0;
    for (int i = 0; i < rows_; ++i)
        for (int j = i; j < cols_; ++j)
            d = std::max(d, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return d;
}

HermitianMatrix::HermitianMatrix(const ComplexMatrix& m) {
    if (!m.isSquare()) throw InvalidInput("Hermitian matrix must be square");
    if (!m.allFinite()) throw InvalidInput("non-finite entry in Hermitian matrix");
    const int n = m.rows();
    m_ = ComplexMatrix(n, n);
    for (int i = 0; i < n; ++i) {
        m_(i, i) = Complex(m(i, i).real(), 0.0);
        for (int j = i + 1; j < n; ++j) {
            const Complex v = 0.5 * (m(i, j) + std::conj(m(j, i)));
            m_(i, j) = v;
            m_(j, i) = std::conj(v);
        }
    }
}

HermitianMatrix HermitianMatrix::diagonal(const std::vector<double>& d) {
    HermitianMatrix h(static_cast<int>(d.size()));
    for (int i = 0; i < h.dim(); ++i) h.m_(i, i) = d[static_cast<size_t>(i)];
    return h;
}

HermitianMatrix& HermitianMatrix::operator+=(const HermitianMatrix& o) {
    m_ += o.m_;
    return *this;
}

HermitianMatrix& HermitianMatrix::operator-=(const HermitianMatrix& o) {
    m_ -= o.m_;
    return *this;
}

HermitianMatrix& HermitianMatrix::operator*=(double s) {
    m_ *= Complex(s, 0);
    return *this;
}

void HermitianMatrix::addScaled(double s, const HermitianMatrix& o) {
    if (dim() != o.dim()) throw InvalidInput("dimension mismatch in addScaled");
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < dim(); ++j) m_(i, j) += s * o.m_(i, j);
}

void HermitianMatrix::addIdentity(double s) {
    for (int i = 0; i < dim(); ++i) m_(i, i) += s;
}

double realInner(const ComplexMatrix& x, const ComplexMatrix& y) {
    if (x.rows() != y.rows() || x.cols() != y.cols()) throw InvalidInput("shape mismatch in realInner");
    double s = 0;
    const Complex* px = x.data();
    const Complex* py = y.data();
    const size_t n = static_cast<size_t>(x.rows()) * x.cols();
    for (size_t i = 0; i < n; ++i) s += px[i].real() * py[i].real() + px[i].imag() * py[i].imag();
    return s;
}

double realInner(const HermitianMatrix& x, const HermitianMatrix& y) { return realInner(x.mat(), y.mat()); }

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            const Complex aij = a(i, j);
            if (aij == Complex(0, 0)) continue;
            for (int p = 0; p < b.rows(); ++p)
                for (int q = 0; q < b.cols(); ++q) r(i * b.rows() + p, j * b.cols() + q) = aij * b(p, q);
        }
    return r;
}

HermitianMatrix kronHerm(const HermitianMatrix& a, const HermitianMatrix& b) {
    return HermitianMatrix(kron(a.mat(), b.mat()));
}

}  // namespace nccube
