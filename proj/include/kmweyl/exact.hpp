#ifndef KMWEYL_EXACT_HPP
#define KMWEYL_EXACT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <vector>

#include "kmweyl/errors.hpp"

namespace kmweyl {

// All kernel arithmetic is exact: orbit coefficients grow like phi^{2k} and
// invariant nullspaces must be bit-exact, so the integer and rational types
// are arbitrary precision throughout. Floats appear only in the eigen/angle
// and special-function layers.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

/// Dense square integer matrix, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {}

    static IntMatrix identity(int n) {
        IntMatrix m(n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    int size() const { return n_; }

    Int& at(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    const Int& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

    bool operator==(const IntMatrix& o) const { return n_ == o.n_ && a_ == o.a_; }
    bool operator!=(const IntMatrix& o) const { return !(*this == o); }

    bool is_identity() const {
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                if (at(i, j) != (i == j ? 1 : 0)) return false;
        return true;
    }

    IntMatrix operator*(const IntMatrix& o) const {
        if (n_ != o.n_) throw DimensionMismatch("matrix product: size mismatch");
        IntMatrix r(n_);
        for (int i = 0; i < n_; ++i)
            for (int k = 0; k < n_; ++k) {
                const Int& v = at(i, k);
                if (v == 0) continue;
                for (int j = 0; j < n_; ++j) r.at(i, j) += v * o.at(k, j);
            }
        return r;
    }

    IntVec apply(const IntVec& x) const {
        if (static_cast<int>(x.size()) != n_)
            throw DimensionMismatch("matrix apply: size mismatch");
        IntVec y(n_);
        for (int i = 0; i < n_; ++i) {
            Int s = 0;
            for (int j = 0; j < n_; ++j) s += at(i, j) * x[j];
            y[i] = std::move(s);
        }
        return y;
    }

    IntMatrix transposed() const {
        IntMatrix r(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    Int max_abs() const {
        Int m = 0;
        for (const Int& v : a_)
            if (abs(v) > m) m = abs(v);
        return m;
    }

private:
    int n_ = 0;
    std::vector<Int> a_;
};

/// Exact inverse of a unimodular integer matrix. Throws if the inverse is
/// not integral (det != +-1).
IntMatrix unimodular_inverse(const IntMatrix& m);

/// Reduced row echelon form over the rationals, in place.
/// Returns the pivot columns.
std::vector<int> rref(std::vector<RatVec>& rows);

/// Exact rational nullspace basis of the matrix given by `rows`
/// (each row a RatVec of equal length). Basis vectors come out of the
/// reduced echelon form, one per free column, in column order.
std::vector<RatVec> nullspace(std::vector<RatVec> rows);

/// Solves A x = b exactly. Throws ComputationError if the system is
/// singular or inconsistent.
RatVec solve_linear(std::vector<RatVec> a, RatVec b);

/// Scales a rational vector to integer entries with content 1; the first
/// nonzero entry is made positive. Zero vectors pass through unchanged.
RatVec normalize_primitive(RatVec v);

} // namespace kmweyl

#endif
