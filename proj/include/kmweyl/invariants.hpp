#ifndef KMWEYL_INVARIANTS_HPP
#define KMWEYL_INVARIANTS_HPP

#include <complex>
#include <map>
#include <set>
#include <vector>

#include "kmweyl/dynkin.hpp"
#include "kmweyl/weyl.hpp"

namespace kmweyl {

/// Coxeter element split into two products of commuting reflections,
/// one per colour class.
struct BicolourFactorization {
    WeylWord sigma_plus;
    WeylWord sigma_minus;
};

/// The factorization induced by a bicolouration: each word collects one
/// colour class, labels ascending.
BicolourFactorization bicolour_factorization(const DynkinDiagram& d, const Bicolouration& bc);

/// Exact check of (sigma_minus + sigma_plus) alpha_i = (2 I - K) alpha_i
/// for every simple root. Throws InvalidFactorization when the words
/// contain adjacent letters or do not partition the labels.
bool kostant_check(const DynkinDiagram& d, const CartanMatrix& k,
                   const BicolourFactorization& f);

/// Exponent angles theta_j with lambda_j = 2 - 2 cos(theta_j), ascending
/// eigenvalue order. Eigenvalues outside [0, 4] get complex angles
/// (admissible = false), with the branch fixed so theta and pi - theta
/// pair across the spectrum.
struct CoxeterAngles {
    std::vector<std::complex<double>> theta;
    std::vector<bool> admissible;
    std::vector<double> eigenvalues;
};

CoxeterAngles coxeter_angles(const CartanMatrix& k);

/// True iff no h <= h_max makes every angle a rational multiple of pi
/// with denominator h (tolerance 1e-9). Complex angles rule out all h.
bool no_finite_order(const CoxeterAngles& angles, long h_max);

/// Homogeneous polynomial as a monomial-coefficient map, exponent vectors
/// in ascending label order.
struct PolynomialInvariant {
    int degree = 0;
    std::map<std::vector<int>, Rat> monomials;

    bool is_zero() const { return monomials.empty(); }
};

/// P(A x), exact.
PolynomialInvariant substitute(const PolynomialInvariant& p, const IntMatrix& a);

PolynomialInvariant multiply(const PolynomialInvariant& a, const PolynomialInvariant& b);

/// True iff a = c * b for some nonzero rational c.
bool proportional(const PolynomialInvariant& a, const PolynomialInvariant& b);

/// (1/2) x^T K x.
PolynomialInvariant cartan_form_polynomial(const CartanMatrix& k);

/// Exact rational basis of the degree-n polynomials invariant under every
/// simple-reflection substitution: nullspace of the stacked
/// (rho(sigma_i) - I) constraint matrices. Basis vectors are normalized to
/// primitive integer coefficients with positive leading coefficient in
/// graded-lex order. Throws BasisTooLarge when the monomial basis would
/// exceed 10^6.
std::vector<PolynomialInvariant> invariant_space(const CartanMatrix& k, int degree);

/// Support of P rewritten in the eigen-coordinates w of the bicoloured
/// Coxeter element (exponent vectors with coefficient above 1e-8 of the
/// largest). Throws DegenerateEigenbasis when the eigen-coordinate change
/// is conditioned worse than 1e8.
std::set<std::vector<int>> w_monomial_pattern(const DynkinDiagram& d, const CartanMatrix& k,
                                              const PolynomialInvariant& p);

} // namespace kmweyl

#endif
