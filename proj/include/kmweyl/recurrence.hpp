#ifndef KMWEYL_RECURRENCE_HPP
#define KMWEYL_RECURRENCE_HPP

#include <complex>
#include <vector>

#include "kmweyl/exact.hpp"
#include "kmweyl/weyl.hpp"

namespace kmweyl {

/// s(k+1) = c_1 s(k) + c_2 s(k-1) + ... + c_order s(k+1-order), exact.
struct LinearRecurrence {
    int order = 0;
    std::vector<Rat> coeffs;
};

/// Minimal-order exact recurrence satisfied by the sequence on every
/// supplied term. Throws NoRecurrenceFound when no order up to
/// length/2 - 1 fits.
LinearRecurrence fit_min_recurrence(const std::vector<Int>& seq);

/// Minimal recurrence satisfied by all sequences simultaneously.
LinearRecurrence fit_min_recurrence(const std::vector<std::vector<Int>>& seqs);

/// The matrix-power component sequences s_{nu,mu}(k) = (C^k)_{nu mu} for
/// k = 0..count-1, indexed nu * size + mu.
std::vector<std::vector<Int>> component_sequences(const CoxeterMatrix& c, int count);

/// x^N - c_1 x^{N-1} - ... - c_N, cleared to primitive integer
/// coefficients (descending, leading positive).
std::vector<Int> char_poly(const LinearRecurrence& r);

/// Classified characteristic root.
struct CharRoot {
    enum class Kind { integer, quadratic_surd, root_of_unity, numeric_complex };
    Kind kind = Kind::numeric_complex;
    Int int_value;                       // integer
    Int surd_a, surd_b, surd_c, surd_d;  // (a + b sqrt(d)) / c
    long unity_p = 0, unity_q = 1;       // exp(2 pi i p / q)
    std::complex<double> numeric;        // numeric_complex (approx cached for all kinds)
    int multiplicity = 1;

    std::complex<double> approx() const;
    /// root^k, stable for large |k| (unit-circle kinds use exact angle
    /// reduction).
    std::complex<double> pow_k(long k) const;
};

/// Exact factorization into linear/quadratic integer factors where
/// possible; whatever is left is solved numerically. Multiplicities sum
/// to the degree.
std::vector<CharRoot> char_roots(const std::vector<Int>& poly);

/// Sum over roots of (polynomial in k) * root^k.
struct ClosedFormTerm {
    CharRoot root;
    std::vector<std::complex<double>> poly_k; // ascending powers of k
};

struct ClosedForm {
    std::vector<ClosedFormTerm> terms;
    double eval(long k) const;
};

/// Coefficients from the confluent Vandermonde system, solved at 50
/// significant digits. `init` must hold at least `order` terms; the fit is
/// checked against 2*order terms (extending by the recurrence) and throws
/// IllConditioned above 1e-8 relative.
ClosedForm solve_closed_form(const LinearRecurrence& r, const std::vector<Int>& init);

/// Max over k and requested components of |cf(k) - exact| / (1 + |exact|),
/// with the exact value from integer matrix powers.
double verify_closed_form(const ClosedForm& cf, const CoxeterMatrix& c, const RootVector& seed,
                          int component, long k_min, long k_max);

/// Exact closed form for powers of the (A_2)_0 Coxeter word (0,1,2) inside
/// (A_2)_{-2}: quadratic-in-k polynomial plus a (-1)^k part, evaluated over
/// the rationals and returned as the integer coefficient vector.
RootVector affine_power_exact(long k, const RootVector& seed);

} // namespace kmweyl

#endif
