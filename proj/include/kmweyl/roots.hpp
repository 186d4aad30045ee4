#ifndef KMWEYL_ROOTS_HPP
#define KMWEYL_ROOTS_HPP

#include <utility>
#include <vector>

#include "kmweyl/dynkin.hpp"
#include "kmweyl/exact.hpp"

namespace kmweyl {

/// Integer coefficient vector of a lattice element in the simple-root
/// basis, ascending label order.
using RootVector = IntVec;

/// Cartan-form inner product a^T K b.
Int inner(const RootVector& a, const RootVector& b, const CartanMatrix& k);

/// True iff a has squared length 2 (real root condition).
bool diophantine_check(const RootVector& a, const CartanMatrix& k);

/// Flips the sign so the first nonzero coefficient is positive.
RootVector canonical_sign(RootVector a);

/// Graded-lexicographic order: coefficient sum first, then lex.
bool graded_lex_less(const RootVector& a, const RootVector& b);

/// All coefficient vectors within the per-label box with norm 2, in
/// graded-lex order. bounds[i] = {lo, hi} for label k.labels[i].
std::vector<RootVector> enumerate_real_roots(const CartanMatrix& k,
                                             const std::vector<std::pair<long, long>>& bounds);

/// Uniform box [lo, hi]^rank.
std::vector<RootVector> enumerate_real_roots(const CartanMatrix& k, long lo, long hi);

/// Explicit realization of the simple roots in a flat ambient space:
/// `euclid` leading Euclidean coordinates followed by hyperbolic pairs
/// with metric blocks {{0,-1},{-1,0}}.
struct LatticeEmbedding {
    std::vector<int> labels;
    int dim = 0;
    int euclid = 0;
    std::vector<RatVec> vectors; // one per label, ascending label order

    const RatVec& vector_of(int label) const;
};

/// Ambient realization of build_extended_A(n, m): the A_n simple roots
/// e_i - e_{i+1} in n+1 Euclidean coordinates, alpha_0 = -theta plus a
/// null vector in the first hyperbolic pair, and one extra pair per
/// over-extension step beyond the first.
LatticeEmbedding build_embedding(const DynkinDiagram& d);

/// Metric inner product of two ambient vectors.
Rat ambient_inner(const RatVec& x, const RatVec& y, const LatticeEmbedding& e);
double ambient_inner(const std::vector<double>& x, const std::vector<double>& y,
                     const LatticeEmbedding& e);

/// Linear extension of the simple-root realization.
RatVec embed(const RootVector& a, const LatticeEmbedding& e);

/// Metric contraction: the covector F with (F, q)_Euclid = (x, q)_metric.
RatVec metric_contract(const RatVec& x, const LatticeEmbedding& e);

} // namespace kmweyl

#endif
