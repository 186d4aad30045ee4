#include "kmweyl/weyl.hpp"

#include <algorithm>
#include <numeric>

namespace kmweyl {

RootVector reflect(int label, const RootVector& a, const CartanMatrix& k) {
    const int n = k.rank();
    if (static_cast<int>(a.size()) != n)
        throw DimensionMismatch("reflect: coefficient vector length != rank");
    const int i = k.index_of(label);
    Int s = 0;
    for (int j = 0; j < n; ++j) s += k.k.at(i, j) * a[j];
    RootVector r = a;
    r[i] -= s;
    return r;
}

CoxeterMatrix::CoxeterMatrix(IntMatrix m) : mat_(std::move(m)), cache_(std::make_shared<Cache>()) {}

IntMatrix CoxeterMatrix::power(long k) const {
    if (k == 0) return IntMatrix::identity(mat_.size());
    if (cache_) {
        std::lock_guard<std::mutex> lock(cache_->mutex);
        const auto it = cache_->powers.find(k);
        if (it != cache_->powers.end()) return it->second;
    }
    IntMatrix base = k > 0 ? mat_ : unimodular_inverse(mat_);
    unsigned long e = k > 0 ? static_cast<unsigned long>(k) : static_cast<unsigned long>(-k);
    IntMatrix result = IntMatrix::identity(mat_.size());
    while (e > 0) {
        if (e & 1UL) result = result * base;
        e >>= 1UL;
        if (e > 0) base = base * base;
    }
    if (cache_) {
        std::lock_guard<std::mutex> lock(cache_->mutex);
        cache_->powers.emplace(k, result);
    }
    return result;
}

CoxeterMatrix word_matrix(const WeylWord& w, const CartanMatrix& k) {
    const int n = k.rank();
    IntMatrix m = IntMatrix::identity(n);
    // columns are images of basis vectors under the whole word
    for (int mu = 0; mu < n; ++mu) {
        RootVector e(n);
        e[mu] = 1;
        for (auto it = w.rbegin(); it != w.rend(); ++it) e = reflect(*it, e, k);
        for (int i = 0; i < n; ++i) m.at(i, mu) = e[i];
    }
    return CoxeterMatrix(std::move(m));
}

RootVector apply_power(const CoxeterMatrix& c, long k, const RootVector& a) {
    if (k == 0) return a;
    return c.power(k).apply(a);
}

std::vector<std::pair<long, RootVector>> orbit(const CoxeterMatrix& c, const RootVector& seed,
                                               long k_min, long k_max) {
    if (k_min > k_max) throw ValidationError("orbit: k_min > k_max");
    std::vector<std::pair<long, RootVector>> out;
    out.reserve(static_cast<std::size_t>(k_max - k_min + 1));
    RootVector cur = apply_power(c, k_min, seed);
    const IntMatrix& step = c.mat();
    for (long k = k_min;; ++k) {
        out.emplace_back(k, cur);
        if (k == k_max) break;
        cur = step.apply(cur);
    }
    return out;
}

long finite_order_bound(int n) {
    // phi(d) <= n forces d <= 2 n^2 + 2 comfortably for the sizes here
    auto phi = [](long d) {
        long result = d, x = d;
        for (long p = 2; p * p <= x; ++p) {
            if (x % p) continue;
            result -= result / p;
            while (x % p == 0) x /= p;
        }
        if (x > 1) result -= result / x;
        return result;
    };
    long l = 1;
    for (long d = 1; d <= 4L * n * n + 4; ++d)
        if (phi(d) <= n) l = std::lcm(l, d);
    return l;
}

std::optional<long> coxeter_order(const CoxeterMatrix& c, long h_max) {
    if (h_max < 1) throw ValidationError("coxeter_order: h_max must be >= 1");
    const long cap = std::min(h_max, finite_order_bound(c.size()));
    IntMatrix p = c.mat();
    for (long h = 1; h <= cap; ++h) {
        if (p.is_identity()) return h;
        if (h < cap) p = p * c.mat();
    }
    return std::nullopt;
}

RatVec ambient_reflect(int label, const RatVec& q, const LatticeEmbedding& e) {
    const RatVec& alpha = e.vector_of(label);
    const Rat ip = ambient_inner(alpha, q, e);
    RatVec r = q;
    if (ip == 0) return r;
    for (int t = 0; t < e.dim; ++t) r[t] -= ip * alpha[t];
    return r;
}

std::vector<double> ambient_reflect(int label, const std::vector<double>& q,
                                    const LatticeEmbedding& e) {
    const RatVec& alpha = e.vector_of(label);
    std::vector<double> af(e.dim);
    for (int t = 0; t < e.dim; ++t) af[t] = static_cast<double>(alpha[t]);
    const double ip = ambient_inner(af, q, e);
    std::vector<double> r = q;
    for (int t = 0; t < e.dim; ++t) r[t] -= ip * af[t];
    return r;
}

RatVec ambient_apply_reading_order(const WeylWord& w, RatVec q, const LatticeEmbedding& e) {
    for (int label : w) q = ambient_reflect(label, q, e);
    return q;
}

std::vector<double> ambient_apply_reading_order(const WeylWord& w, std::vector<double> q,
                                                const LatticeEmbedding& e) {
    for (int label : w) q = ambient_reflect(label, q, e);
    return q;
}

WeylWord inverse_word(WeylWord w) {
    std::reverse(w.begin(), w.end());
    return w;
}

} // namespace kmweyl
