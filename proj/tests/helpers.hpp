#ifndef KMWEYL_TESTS_HELPERS_HPP
#define KMWEYL_TESTS_HELPERS_HPP

#include <random>
#include <vector>

#include "kmweyl/calogero.hpp"
#include "kmweyl/dynkin.hpp"
#include "kmweyl/roots.hpp"
#include "kmweyl/weyl.hpp"

namespace kmtest {

struct AlgebraFixture {
    kmweyl::DynkinDiagram diagram;
    kmweyl::CartanMatrix cartan;
    kmweyl::LatticeEmbedding embedding;
};

inline AlgebraFixture make_algebra(int n, int m) {
    AlgebraFixture a;
    a.diagram = kmweyl::build_extended_A(n, m);
    a.cartan = kmweyl::cartan_matrix(a.diagram);
    a.embedding = kmweyl::build_embedding(a.diagram);
    return a;
}

inline kmweyl::RootVector root_of(std::initializer_list<long> coeffs) {
    kmweyl::RootVector r;
    for (long c : coeffs) r.emplace_back(c);
    return r;
}

inline kmweyl::IntMatrix matrix_of(int n, std::initializer_list<long> entries) {
    kmweyl::IntMatrix m(n);
    auto it = entries.begin();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = *it++;
    return m;
}

inline kmweyl::RootVector random_root(std::mt19937& rng, int rank, int lo, int hi) {
    std::uniform_int_distribution<int> dist(lo, hi);
    kmweyl::RootVector r(rank);
    for (auto& c : r) c = dist(rng);
    return r;
}

inline kmweyl::RatVec random_rational_vector(std::mt19937& rng, int dim) {
    std::uniform_int_distribution<int> num(-20, 20);
    std::uniform_int_distribution<int> den(1, 7);
    kmweyl::RatVec v(dim);
    for (auto& x : v) x = kmweyl::Rat(num(rng), den(rng));
    return v;
}

/// Independent truncated-sum oracle for one orbit sum: the raw window plus
/// per-parity trigamma tails (denominators are linear in k on each parity
/// branch).
inline double orbit_sum_oracle(const kmweyl::OrbitGenerator& gen,
                               const kmweyl::CartanMatrix& k,
                               const kmweyl::LatticeEmbedding& e,
                               const std::vector<double>& q, long window) {
    using namespace kmweyl;
    const CoxeterMatrix c = word_matrix(gen.word, k);
    std::vector<double> dens(2 * window + 1);
    for (const auto& [kk, root] : orbit(c, gen.rep, -window, window)) {
        const RatVec f = metric_contract(embed(root, e), e);
        double d = 0.0;
        for (std::size_t i = 0; i < f.size(); ++i) d += static_cast<double>(f[i]) * q[i];
        dens[kk + window] = d;
    }
    double total = 0.0;
    for (double d : dens) total += gen.coupling / (d * d);
    // tails: same-parity denominators step by a fixed amount
    for (int parity = 0; parity < 2; ++parity) {
        {
            const long k2 = (window % 2 == parity) ? window : window - 1;
            const double d2 = dens[k2 + window], d1 = dens[k2 - 2 + window];
            const double step = (d2 - d1) / 2.0;
            const double start = (d2 + 2.0 * step) / (2.0 * step);
            total += gen.coupling / (4.0 * step * step) * trigamma(std::fabs(start));
        }
        {
            const long k2 = (window % 2 == parity) ? -window : -(window - 1);
            const double d2 = dens[k2 + window], d1 = dens[k2 + 2 + window];
            const double step = (d2 - d1) / 2.0;
            const double start = (d2 + 2.0 * step) / (2.0 * step);
            total += gen.coupling / (4.0 * step * step) * trigamma(std::fabs(start));
        }
    }
    return total;
}

} // namespace kmtest

#endif
