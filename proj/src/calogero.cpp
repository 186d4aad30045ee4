#include "kmweyl/calogero.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "kmweyl/parallel.hpp"

namespace kmweyl {

double trigamma(double x) {
    if (x <= 0.0 && x == std::floor(x))
        throw PoleEncountered("trigamma: pole at nonpositive integer");
    double acc = 0.0;
    while (x < 10.0) {
        acc += 1.0 / (x * x);
        x += 1.0;
    }
    // Psi(x) ~ 1/x + 1/(2x^2) + sum_k B_{2k} / x^{2k+1}
    static const double bern[] = {1.0 / 6,  -1.0 / 30,    1.0 / 42, -1.0 / 30,
                                  5.0 / 66, -691.0 / 2730, 7.0 / 6,  -3617.0 / 510};
    const double inv = 1.0 / x, inv2 = inv * inv;
    double tail = inv + 0.5 * inv2;
    double p = inv * inv2;
    for (double b : bern) {
        tail += b * p;
        p *= inv2;
    }
    return acc + tail;
}

double inverse_square_lattice_sum(double a, double b) {
    if (b == 0.0) throw PoleEncountered("inverse_square_lattice_sum: B = 0");
    const double x = a / b;
    if (std::fabs(x - std::round(x)) < 1e-12 * std::max(1.0, std::fabs(x)))
        throw PoleEncountered("inverse_square_lattice_sum: A/B at an integer");
    const double s = std::sin(M_PI * x);
    return M_PI * M_PI / (s * s * b * b);
}

double kinetic(const std::vector<double>& p, const LatticeEmbedding& e) {
    return 0.5 * ambient_inner(p, p, e);
}

Rat kinetic_exact(const RatVec& p, const LatticeEmbedding& e) {
    return ambient_inner(p, p, e) / 2;
}

double PotentialTerm::eval(const std::vector<double>& q) const {
    if (q.size() != form.size()) throw DimensionMismatch("PotentialTerm::eval: dimension");
    double d = 0.0;
    for (std::size_t i = 0; i < form.size(); ++i) d += static_cast<double>(form[i]) * q[i];
    if (d == 0.0) throw PoleEncountered("potential term: vanishing linear form");
    return coupling / (d * d);
}

PotentialTerm make_term(const RootVector& root, const LatticeEmbedding& e, double coupling) {
    PotentialTerm t;
    t.root = canonical_sign(root);
    t.form = metric_contract(embed(t.root, e), e);
    t.coupling = coupling;
    return t;
}

std::vector<PotentialTerm> vD_terms(const CartanMatrix& k, const LatticeEmbedding& e,
                                    const std::vector<std::pair<long, long>>& bounds,
                                    double coupling) {
    std::vector<PotentialTerm> out;
    std::vector<RootVector> seen;
    for (const RootVector& r : enumerate_real_roots(k, bounds)) {
        RootVector c = canonical_sign(r);
        if (std::find(seen.begin(), seen.end(), c) != seen.end()) continue;
        seen.push_back(c);
        out.push_back(make_term(c, e, coupling));
    }
    return out;
}

std::vector<PotentialTerm> vC_terms(const std::vector<OrbitGenerator>& gens,
                                    const CartanMatrix& k, const LatticeEmbedding& e,
                                    long k_min, long k_max) {
    std::vector<PotentialTerm> out;
    std::vector<RootVector> seen;
    for (const auto& g : gens) {
        const CoxeterMatrix c = word_matrix(g.word, k);
        for (const auto& [kk, root] : orbit(c, g.rep, k_min, k_max)) {
            RootVector cr = canonical_sign(root);
            if (std::find(seen.begin(), seen.end(), cr) != seen.end()) continue;
            seen.push_back(cr);
            out.push_back(make_term(cr, e, g.coupling));
        }
    }
    return out;
}

namespace {

struct OrbitIndex {
    // canonical root -> best (power, sign) under (|k|, k<0) order
    std::map<RootVector, std::pair<long, int>> elems;
};

OrbitIndex index_orbit(const OrbitGenerator& g, const CartanMatrix& k, long k_window) {
    OrbitIndex idx;
    const CoxeterMatrix c = word_matrix(g.word, k);
    for (const auto& [kk, root] : orbit(c, g.rep, -k_window, k_window)) {
        const RootVector cr = canonical_sign(root);
        const int sign = (cr == root) ? 1 : -1;
        const auto it = idx.elems.find(cr);
        const auto better = [](long a, long b) {
            if (std::labs(a) != std::labs(b)) return std::labs(a) < std::labs(b);
            return a > b; // k >= 0 preferred
        };
        if (it == idx.elems.end() || better(kk, it->second.first))
            idx.elems[cr] = {kk, sign};
    }
    return idx;
}

} // namespace

MatchResult match_terms(const std::vector<PotentialTerm>& vd,
                        const std::vector<OrbitGenerator>& gens, const CartanMatrix& k,
                        long k_window) {
    std::vector<OrbitIndex> indices(gens.size());
    parallel_for(gens.size(),
                 [&](std::size_t i) { indices[i] = index_orbit(gens[i], k, k_window); });

    MatchResult result;
    for (const auto& term : vd) {
        int best_orbit = -1;
        long best_k = 0;
        int best_sign = 1;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            const auto it = indices[i].elems.find(term.root);
            if (it == indices[i].elems.end()) continue;
            const long kk = it->second.first;
            if (best_orbit < 0 || std::labs(kk) < std::labs(best_k)) {
                best_orbit = static_cast<int>(i);
                best_k = kk;
                best_sign = it->second.second;
            }
        }
        if (best_orbit < 0) {
            result.unmatched.push_back(term.root);
        } else {
            result.rows.push_back({term.root, term.form, best_orbit, best_k, best_sign});
        }
    }
    return result;
}

std::vector<OrbitGenerator> find_orbit_representatives(const std::vector<PotentialTerm>& vd,
                                                       const WeylWord& word,
                                                       const CartanMatrix& k, long k_window) {
    const CoxeterMatrix c = word_matrix(word, k);
    std::vector<OrbitGenerator> reps;
    std::vector<std::map<RootVector, bool>> covers;
    for (const auto& term : vd) {
        bool covered = false;
        for (const auto& cover : covers)
            if (cover.count(term.root)) {
                covered = true;
                break;
            }
        if (covered) continue;
        OrbitGenerator g{term.root, word, term.coupling};
        std::map<RootVector, bool> cover;
        for (const auto& [kk, root] : orbit(c, g.rep, -k_window, k_window))
            cover[canonical_sign(root)] = true;
        reps.push_back(std::move(g));
        covers.push_back(std::move(cover));
    }
    return reps;
}

std::vector<OrbitGenerator> affine_orbit_family(const CartanMatrix& k, double coupling) {
    if (k.rank() != 5)
        throw ValidationError("affine_orbit_family: defined for the rank-5 algebra");
    static const std::vector<WeylWord> words = {
        {}, {0}, {1}, {1, 0}, {0, 1}, {0, 1, 0}, {2, 0}, {2, 1}, {2, 0, 2}};
    RootVector alpha2(5);
    alpha2[k.index_of(2)] = 1;
    std::vector<OrbitGenerator> gens;
    for (const auto& w : words) {
        RootVector rep = alpha2;
        for (auto it = w.rbegin(); it != w.rend(); ++it) rep = reflect(*it, rep, k);
        WeylWord full = w;
        full.insert(full.end(), {0, 1, 2});
        for (auto it = w.rbegin(); it != w.rend(); ++it) full.push_back(*it);
        gens.push_back({canonical_sign(rep), std::move(full), coupling});
    }
    return gens;
}

namespace {

double sin2_or_throw(double x, const char* id) {
    // x is the sine argument divided by pi
    if (std::fabs(x - std::round(x)) < 1e-12 * std::max(1.0, std::fabs(x)))
        throw PoleEncountered(std::string("affine potential: pole in term ") + id);
    const double s = std::sin(M_PI * x);
    return s * s;
}

} // namespace

double affine_invariant_potential(const std::vector<double>& q, double coupling) {
    if (q.size() < 5) throw DimensionMismatch("affine potential: needs ambient coordinates");
    const double q1 = q[0], q2 = q[1], q3 = q[2], q5 = q[4];
    if (q5 == 0.0) throw PoleEncountered("affine potential: q5 = 0");
    const double u = 1.0 / (3.0 * q5);
    double s = 0.0;
    s += 1.0 / sin2_or_throw((q1 - q2) * u, "V12");
    s += 1.0 / sin2_or_throw((q1 - q3) * u, "V13");
    s += 1.0 / sin2_or_throw((q2 - q3) * u, "V23");
    s += 1.0 / sin2_or_throw((q1 - q2 + q5) * u, "V125+");
    s += 1.0 / sin2_or_throw((q1 - q2 - q5) * u, "V125-");
    s += 1.0 / sin2_or_throw((q1 - q3 + q5) * u, "V135+");
    s += 1.0 / sin2_or_throw((q1 - q3 - q5) * u, "V135-");
    s += 1.0 / sin2_or_throw((q2 - q3 + q5) * u, "V235+");
    s += 1.0 / sin2_or_throw((q2 - q3 - q5) * u, "V235-");
    return 2.0 * M_PI * M_PI * coupling / (9.0 * q5 * q5) * s;
}

PartialSumFamily partial_sum_family_from_string(const std::string& s) {
    if (s == "1" || s == "one" || s == "partial-1") return PartialSumFamily::one;
    if (s == "2" || s == "two" || s == "partial-2") return PartialSumFamily::two;
    if (s == "v1" || s == "partial-v1") return PartialSumFamily::v1;
    if (s == "v2" || s == "partial-v2") return PartialSumFamily::v2;
    if (s == "v1v2" || s == "sum12" || s == "partial-v1v2") return PartialSumFamily::v1_plus_v2;
    throw ValidationError("unknown partial-sum family: " + s);
}

double partial_sum_potential(const std::vector<double>& q, PartialSumFamily family,
                             double coupling) {
    if (q.size() < 7) throw DimensionMismatch("partial sums: need 7 ambient coordinates");
    const double q1 = q[0], q2 = q[1], q3 = q[2], q4 = q[3], q5 = q[4], q6 = q[5], q7 = q[6];
    switch (family) {
    case PartialSumFamily::one:
    case PartialSumFamily::two: {
        const double den = q4 + q5 + q6 - q7;
        if (den == 0.0) throw PoleEncountered("partial sum: q4+q5+q6-q7 = 0");
        const double x =
            (family == PartialSumFamily::one ? (q4 - q5) : (q2 - q1)) / den;
        return coupling / (den * den) * trigamma(x);
    }
    default: {
        const double c = q1 - q3 + q5;
        const double e = c * (q1 - q3 + 2.0 * q4 + q5 + q6) + (-q1 + q3 - 7.0 * q5) * q7;
        if (e == 0.0) throw PoleEncountered("partial sum: vanishing denominator");
        const double x = c * c / e;
        const double pre = coupling * c * c / (e * e);
        if (family == PartialSumFamily::v1) return pre * trigamma(x);
        if (family == PartialSumFamily::v2) return pre * trigamma(1.0 - x);
        if (std::fabs(x - std::round(x)) < 1e-12 * std::max(1.0, std::fabs(x)))
            throw PoleEncountered("partial sum: sine pole");
        const double s = std::sin(M_PI * x);
        return pre * M_PI * M_PI / (s * s);
    }
    }
}

} // namespace kmweyl
