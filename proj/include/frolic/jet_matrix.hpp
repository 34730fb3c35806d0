#pragma once

#include <vector>

#include "frolic/errors.hpp"
#include "frolic/jet.hpp"

namespace frolic {

/// Dense matrix over the jet ring. Row-major storage.
class Jet2Matrix {
  public:
    Jet2Matrix(int rows, int cols)
        : rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows) * cols) {
        if (rows <= 0 || cols <= 0)
            throw InvalidParameter("matrix dimensions must be positive");
    }

    Jet2Matrix(int rows, int cols, std::vector<Jet2> entries)
        : rows_(rows), cols_(cols), entries_(std::move(entries)) {
        if (entries_.size() != static_cast<size_t>(rows) * cols)
            throw InvalidParameter("entry count does not match dimensions");
    }

    static Jet2Matrix identity(int n) {
        Jet2Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = Jet2(1.0);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Jet2& at(int r, int c) { return entries_[static_cast<size_t>(r) * cols_ + c]; }
    const Jet2& at(int r, int c) const {
        return entries_[static_cast<size_t>(r) * cols_ + c];
    }

    const std::vector<Jet2>& entries() const { return entries_; }

    friend Jet2Matrix operator+(const Jet2Matrix& a, const Jet2Matrix& b) {
        Jet2Matrix out(a.rows_, a.cols_);
        for (size_t i = 0; i < a.entries_.size(); ++i)
            out.entries_[i] = a.entries_[i] + b.entries_[i];
        return out;
    }

    friend Jet2Matrix operator-(const Jet2Matrix& a, const Jet2Matrix& b) {
        Jet2Matrix out(a.rows_, a.cols_);
        for (size_t i = 0; i < a.entries_.size(); ++i)
            out.entries_[i] = a.entries_[i] - b.entries_[i];
        return out;
    }

    friend Jet2Matrix operator*(const Jet2Matrix& a, const Jet2Matrix& b) {
        Jet2Matrix out(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const Jet2& aik = a.at(i, k);
                for (int j = 0; j < b.cols_; ++j)
                    out.at(i, j) += aik * b.at(k, j);
            }
        return out;
    }

  private:
    int rows_, cols_;
    std::vector<Jet2> entries_;
};

namespace detail {

/// Gauss-Jordan with partial pivoting on a flat row-major n x n matrix.
inline std::vector<double> real_inverse(const std::vector<double>& a, int n) {
    std::vector<double> m = a;
    std::vector<double> inv(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) inv[static_cast<size_t>(i) * n + i] = 1.0;
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(m[static_cast<size_t>(r) * n + col]) >
                std::abs(m[static_cast<size_t>(pivot) * n + col]))
                pivot = r;
        const double p = m[static_cast<size_t>(pivot) * n + col];
        if (std::abs(p) < 1e-12)
            throw SingularValuePart("value-part pivot below threshold");
        if (pivot != col)
            for (int c = 0; c < n; ++c) {
                std::swap(m[static_cast<size_t>(pivot) * n + c],
                          m[static_cast<size_t>(col) * n + c]);
                std::swap(inv[static_cast<size_t>(pivot) * n + c],
                          inv[static_cast<size_t>(col) * n + c]);
            }
        const double ip = 1.0 / p;
        for (int c = 0; c < n; ++c) {
            m[static_cast<size_t>(col) * n + c] *= ip;
            inv[static_cast<size_t>(col) * n + c] *= ip;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            const double f = m[static_cast<size_t>(r) * n + col];
            if (f == 0.0) continue;
            for (int c = 0; c < n; ++c) {
                m[static_cast<size_t>(r) * n + c] -=
                    f * m[static_cast<size_t>(col) * n + c];
                inv[static_cast<size_t>(r) * n + c] -=
                    f * inv[static_cast<size_t>(col) * n + c];
            }
        }
    }
    return inv;
}

} // namespace detail

/**
 * Inverse of a square jet matrix via the terminating expansion
 * A^-1 = V^-1 (I - N V^-1 + (N V^-1)^2) where V is the value part and
 * N = A - V is nilpotent in the jet ring, so the cube term vanishes exactly.
 */
inline Jet2Matrix matrix_invert(const Jet2Matrix& a) {
    if (a.rows() != a.cols())
        throw InvalidParameter("matrix_invert requires a square matrix");
    const int n = a.rows();

    std::vector<double> v(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) v[static_cast<size_t>(i) * n + j] = a.at(i, j).val;
    const std::vector<double> vinv = detail::real_inverse(v, n);

    Jet2Matrix vi(n, n);
    Jet2Matrix nil(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            vi.at(i, j) = Jet2(vinv[static_cast<size_t>(i) * n + j]);
            Jet2 e = a.at(i, j);
            e.val = 0.0;
            nil.at(i, j) = e;
        }

    const Jet2Matrix w = nil * vi;
    return vi * (Jet2Matrix::identity(n) - w + w * w);
}

// Flat row-major helpers shared by the scalar-generic matrix-group programs.

template <class S>
std::vector<S> flat_identity(int n) {
    std::vector<S> out(static_cast<size_t>(n) * n, S(0.0));
    for (int i = 0; i < n; ++i) out[static_cast<size_t>(i) * n + i] = S(1.0);
    return out;
}

template <class S>
std::vector<S> flat_mul(const std::vector<S>& a, const std::vector<S>& b, int n) {
    std::vector<S> out(static_cast<size_t>(n) * n, S(0.0));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const S& aik = a[static_cast<size_t>(i) * n + k];
            for (int j = 0; j < n; ++j)
                out[static_cast<size_t>(i) * n + j] =
                    out[static_cast<size_t>(i) * n + j] +
                    aik * b[static_cast<size_t>(k) * n + j];
        }
    return out;
}

inline std::vector<double> flat_inverse(const std::vector<double>& a, int n) {
    return detail::real_inverse(a, n);
}

inline std::vector<Jet2> flat_inverse(const std::vector<Jet2>& a, int n) {
    return matrix_invert(Jet2Matrix(n, n, a)).entries();
}

} // namespace frolic
