#ifndef KMWEYL_CALOGERO_HPP
#define KMWEYL_CALOGERO_HPP

#include <string>
#include <vector>

#include "kmweyl/roots.hpp"
#include "kmweyl/weyl.hpp"

namespace kmweyl {

/// Psi(x) = (ln Gamma)'' = sum_{n>=0} 1/(x+n)^2, by upward recurrence into
/// x >= 10 and the asymptotic series. Poles at nonpositive integers.
double trigamma(double x);

/// sum_{n in Z} (A + B n)^{-2} = pi^2 / (sin^2(A pi / B) B^2).
double inverse_square_lattice_sum(double a, double b);

/// (1/2) p . p in the ambient metric.
double kinetic(const std::vector<double>& p, const LatticeEmbedding& e);
Rat kinetic_exact(const RatVec& p, const LatticeEmbedding& e);

/// One inverse-square term g / (F . q)^2. Terms with forms F and -F are
/// identified; `root` is kept in canonical sign (first nonzero coefficient
/// positive) and `form` is its metric contraction.
struct PotentialTerm {
    RootVector root;
    RatVec form;
    double coupling = 1.0;

    double eval(const std::vector<double>& q) const;
};

PotentialTerm make_term(const RootVector& root, const LatticeEmbedding& e, double coupling);

/// One term per norm-2 coefficient vector in the box, sign-deduplicated,
/// graded-lex order.
std::vector<PotentialTerm> vD_terms(const CartanMatrix& k, const LatticeEmbedding& e,
                                    const std::vector<std::pair<long, long>>& bounds,
                                    double coupling);

/// Orbit representative with the word whose powers sweep its orbit.
struct OrbitGenerator {
    RootVector rep;
    WeylWord word;
    double coupling = 1.0;
};

/// Orbit sweep of each generator over [k_min, k_max], embedded and
/// sign-deduplicated across the whole output.
std::vector<PotentialTerm> vC_terms(const std::vector<OrbitGenerator>& gens,
                                    const CartanMatrix& k, const LatticeEmbedding& e,
                                    long k_min, long k_max);

struct MatchRow {
    RootVector vd_root;
    RatVec form;
    int orbit = -1;
    long power = 0;
    int sign = 1; // orbit element = sign * vd_root
};

struct MatchResult {
    std::vector<MatchRow> rows;
    std::vector<RootVector> unmatched;
};

/// Matches every V_D term to (orbit, power, sign) by exact root equality
/// within the k-window. Deterministic: smallest |k| wins, then smallest
/// orbit index, then k >= 0, then sign +.
MatchResult match_terms(const std::vector<PotentialTerm>& vd,
                        const std::vector<OrbitGenerator>& gens, const CartanMatrix& k,
                        long k_window);

/// Greedy orbit cover: scan V_D terms in order and promote any term not in
/// an existing representative's (+-, k-window) orbit. Every term is
/// covered on return.
std::vector<OrbitGenerator> find_orbit_representatives(const std::vector<PotentialTerm>& vd,
                                                       const WeylWord& word,
                                                       const CartanMatrix& k, long k_window);

/// The nine conjugated orbit sums that close the affine-invariant
/// potential for (A_2)_{-2}: generator j is w_j applied to alpha_2 with
/// word w_j . (0,1,2) . reverse(w_j).
std::vector<OrbitGenerator> affine_orbit_family(const CartanMatrix& k, double coupling);

/// Closed form of the affine-invariant nine-term potential,
/// (2 pi^2 g / 9 q5^2) * sum of sin^-2 terms. Throws PoleEncountered with
/// the offending term id.
double affine_invariant_potential(const std::vector<double>& q, double coupling);

/// Closed forms of the one-index partial sums.
enum class PartialSumFamily { one, two, v1, v2, v1_plus_v2 };

PartialSumFamily partial_sum_family_from_string(const std::string& s);

double partial_sum_potential(const std::vector<double>& q, PartialSumFamily family,
                             double coupling);

} // namespace kmweyl

#endif
