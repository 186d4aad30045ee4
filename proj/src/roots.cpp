#include "kmweyl/roots.hpp"

#include <algorithm>

#include "kmweyl/parallel.hpp"

namespace kmweyl {

Int inner(const RootVector& a, const RootVector& b, const CartanMatrix& k) {
    const int n = k.rank();
    if (static_cast<int>(a.size()) != n || static_cast<int>(b.size()) != n)
        throw DimensionMismatch("inner: coefficient vector length != rank");
    Int s = 0;
    for (int i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        Int row = 0;
        for (int j = 0; j < n; ++j) row += k.k.at(i, j) * b[j];
        s += a[i] * row;
    }
    return s;
}

bool diophantine_check(const RootVector& a, const CartanMatrix& k) {
    return inner(a, a, k) == 2;
}

RootVector canonical_sign(RootVector a) {
    for (const Int& x : a) {
        if (x == 0) continue;
        if (x < 0)
            for (Int& y : a) y = -y;
        break;
    }
    return a;
}

bool graded_lex_less(const RootVector& a, const RootVector& b) {
    Int sa = 0, sb = 0;
    for (const Int& x : a) sa += x;
    for (const Int& x : b) sb += x;
    if (sa != sb) return sa < sb;
    return a < b;
}

std::vector<RootVector> enumerate_real_roots(const CartanMatrix& k,
                                             const std::vector<std::pair<long, long>>& bounds) {
    const int n = k.rank();
    if (static_cast<int>(bounds.size()) != n)
        throw DimensionMismatch("enumerate_real_roots: one bound per label required");
    for (const auto& [lo, hi] : bounds)
        if (lo > hi) throw ValidationError("enumerate_real_roots: lo > hi");

    const long outer_lo = bounds[0].first, outer_hi = bounds[0].second;
    const std::size_t outer_n = static_cast<std::size_t>(outer_hi - outer_lo + 1);
    std::vector<std::vector<RootVector>> found(outer_n);

    parallel_for(outer_n, [&](std::size_t slot) {
        RootVector c(n);
        c[0] = Int(outer_lo + static_cast<long>(slot));
        auto& out = found[slot];
        // depth-first over the remaining coordinates
        std::vector<long> cur(n, 0);
        auto rec = [&](auto&& self, int pos) -> void {
            if (pos == n) {
                if (diophantine_check(c, k)) out.push_back(c);
                return;
            }
            for (long v = bounds[pos].first; v <= bounds[pos].second; ++v) {
                c[pos] = Int(v);
                self(self, pos + 1);
            }
        };
        rec(rec, 1);
    });

    std::vector<RootVector> all;
    for (auto& part : found)
        for (auto& r : part) all.push_back(std::move(r));
    std::sort(all.begin(), all.end(), graded_lex_less);
    return all;
}

std::vector<RootVector> enumerate_real_roots(const CartanMatrix& k, long lo, long hi) {
    return enumerate_real_roots(k, std::vector<std::pair<long, long>>(k.rank(), {lo, hi}));
}

const RatVec& LatticeEmbedding::vector_of(int label) const {
    const auto it = std::lower_bound(labels.begin(), labels.end(), label);
    if (it == labels.end() || *it != label)
        throw UnknownLabel("unknown node label " + std::to_string(label));
    return vectors[static_cast<std::size_t>(it - labels.begin())];
}

LatticeEmbedding build_embedding(const DynkinDiagram& d) {
    if (d.labels.empty() || d.labels.front() != -d.m || d.labels.back() != d.n)
        throw ValidationError("build_embedding: diagram is not an extended A series");
    const int n = d.n, m = d.m;
    LatticeEmbedding e;
    e.labels = d.labels;
    e.euclid = n + 1;
    const int pairs = std::max(1, m);
    e.dim = e.euclid + 2 * pairs;

    auto zero = [&] { return RatVec(e.dim); };

    // finite simple roots e_i - e_{i+1}
    std::vector<RatVec> by_label(d.rank());
    for (int i = 1; i <= n; ++i) {
        RatVec v = zero();
        v[i - 1] = 1;
        v[i] = -1;
        by_label[d.index_of(i)] = std::move(v);
    }
    // affine node: minus the highest root, plus the first null direction
    {
        RatVec v = zero();
        v[0] = -1;
        v[n] = 1;
        v[e.euclid] = 1;
        by_label[d.index_of(0)] = std::move(v);
    }
    // over-extension chain: alpha_{-1} = (-1,1) in pair 1,
    // alpha_{-j} = (1,0) in pair j-1 plus (-1,1) in pair j for j >= 2
    for (int j = 1; j <= m; ++j) {
        RatVec v = zero();
        const int pj = e.euclid + 2 * (j - 1);
        if (j == 1) {
            v[pj] = -1;
            v[pj + 1] = 1;
        } else {
            v[pj - 2] = 1;
            v[pj] = -1;
            v[pj + 1] = 1;
        }
        by_label[d.index_of(-j)] = std::move(v);
    }
    e.vectors = std::move(by_label);
    return e;
}

Rat ambient_inner(const RatVec& x, const RatVec& y, const LatticeEmbedding& e) {
    if (static_cast<int>(x.size()) != e.dim || static_cast<int>(y.size()) != e.dim)
        throw DimensionMismatch("ambient_inner: dimension mismatch");
    Rat s = 0;
    for (int i = 0; i < e.euclid; ++i) s += x[i] * y[i];
    for (int b = e.euclid; b < e.dim; b += 2)
        s -= x[b] * y[b + 1] + x[b + 1] * y[b];
    return s;
}

double ambient_inner(const std::vector<double>& x, const std::vector<double>& y,
                     const LatticeEmbedding& e) {
    if (static_cast<int>(x.size()) != e.dim || static_cast<int>(y.size()) != e.dim)
        throw DimensionMismatch("ambient_inner: dimension mismatch");
    double s = 0;
    for (int i = 0; i < e.euclid; ++i) s += x[i] * y[i];
    for (int b = e.euclid; b < e.dim; b += 2)
        s -= x[b] * y[b + 1] + x[b + 1] * y[b];
    return s;
}

RatVec embed(const RootVector& a, const LatticeEmbedding& e) {
    if (a.size() != e.vectors.size())
        throw DimensionMismatch("embed: coefficient vector length != rank");
    RatVec v(e.dim);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        const Rat c(a[i]);
        for (int t = 0; t < e.dim; ++t) v[t] += c * e.vectors[i][t];
    }
    return v;
}

RatVec metric_contract(const RatVec& x, const LatticeEmbedding& e) {
    if (static_cast<int>(x.size()) != e.dim)
        throw DimensionMismatch("metric_contract: dimension mismatch");
    RatVec f(e.dim);
    for (int i = 0; i < e.euclid; ++i) f[i] = x[i];
    for (int b = e.euclid; b < e.dim; b += 2) {
        f[b] = -x[b + 1];
        f[b + 1] = -x[b];
    }
    return f;
}

} // namespace kmweyl
