#ifndef KMWEYL_WEYL_HPP
#define KMWEYL_WEYL_HPP

#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "kmweyl/dynkin.hpp"
#include "kmweyl/roots.hpp"

namespace kmweyl {

/// Ordered list of node labels. The leftmost reflection acts last on
/// coefficient vectors (rightmost first), which is the convention that
/// reproduces the displayed matrix representations.
using WeylWord = std::vector<int>;

/// Simple reflection on coefficient vectors:
/// c_i -> c_i - sum_j K_ij c_j, other coefficients unchanged.
RootVector reflect(int label, const RootVector& a, const CartanMatrix& k);

/// Unimodular integer matrix realizing a word of reflections, with a
/// shared thread-safe cache of its integer powers.
class CoxeterMatrix {
public:
    CoxeterMatrix() = default;
    explicit CoxeterMatrix(IntMatrix m);

    const IntMatrix& mat() const { return mat_; }
    int size() const { return mat_.size(); }

    /// C^k for any integer k (negative powers via the exact integral
    /// inverse). Results are memoized.
    IntMatrix power(long k) const;

private:
    IntMatrix mat_;
    struct Cache {
        std::mutex mutex;
        std::unordered_map<long, IntMatrix> powers;
    };
    std::shared_ptr<Cache> cache_;
};

/// Matrix of a reflection word acting on coefficient vectors.
CoxeterMatrix word_matrix(const WeylWord& w, const CartanMatrix& k);

/// C^k a, exact.
RootVector apply_power(const CoxeterMatrix& c, long k, const RootVector& a);

/// [(k, C^k seed)] for k in [k_min, k_max].
std::vector<std::pair<long, RootVector>> orbit(const CoxeterMatrix& c, const RootVector& seed,
                                               long k_min, long k_max);

/// Least h <= h_max with C^h = I, if any. An integer matrix of finite
/// order is diagonalizable with root-of-unity eigenvalues, so its order
/// divides lcm{ d : phi(d) <= size }; iteration stops there even when
/// h_max is larger.
std::optional<long> coxeter_order(const CoxeterMatrix& c, long h_max);

/// lcm{ d : phi(d) <= n } — the largest possible finite order of an
/// n x n integer matrix.
long finite_order_bound(int n);

/// Ambient reflection q - (alpha_i . q) alpha_i.
RatVec ambient_reflect(int label, const RatVec& q, const LatticeEmbedding& e);
std::vector<double> ambient_reflect(int label, const std::vector<double>& q,
                                    const LatticeEmbedding& e);

/// Composition of ambient reflections in reading order (leftmost letter
/// applied first) — the convention used by the displayed coordinate maps.
RatVec ambient_apply_reading_order(const WeylWord& w, RatVec q, const LatticeEmbedding& e);
std::vector<double> ambient_apply_reading_order(const WeylWord& w, std::vector<double> q,
                                                const LatticeEmbedding& e);

/// Reversed word: the inverse of w, since each reflection is an involution.
WeylWord inverse_word(WeylWord w);

} // namespace kmweyl

#endif
