#include "kmweyl/invariants.hpp"

#include <algorithm>
#include <cmath>

#include "kmweyl/parallel.hpp"

namespace kmweyl {

BicolourFactorization bicolour_factorization(const DynkinDiagram& d, const Bicolouration& bc) {
    BicolourFactorization f;
    for (int l : d.labels) {
        const auto it = bc.colour.find(l);
        if (it == bc.colour.end())
            throw InvalidFactorization("bicolour_factorization: uncoloured label");
        (it->second == Colour::plus ? f.sigma_plus : f.sigma_minus).push_back(l);
    }
    return f;
}

namespace {

void validate_factorization(const DynkinDiagram& d, const BicolourFactorization& f) {
    for (const WeylWord* w : {&f.sigma_plus, &f.sigma_minus})
        for (std::size_t i = 0; i < w->size(); ++i)
            for (std::size_t j = i + 1; j < w->size(); ++j)
                if (d.adjacent((*w)[i], (*w)[j]))
                    throw InvalidFactorization("factorization word contains adjacent letters");
    std::vector<int> all = f.sigma_plus;
    all.insert(all.end(), f.sigma_minus.begin(), f.sigma_minus.end());
    std::sort(all.begin(), all.end());
    if (all != d.labels)
        throw InvalidFactorization("factorization words must partition the node labels");
}

} // namespace

bool kostant_check(const DynkinDiagram& d, const CartanMatrix& k,
                   const BicolourFactorization& f) {
    validate_factorization(d, f);
    const IntMatrix sp = word_matrix(f.sigma_plus, k).mat();
    const IntMatrix sm = word_matrix(f.sigma_minus, k).mat();
    const int n = k.rank();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Int want = (i == j ? Int(2) : Int(0)) - k.k.at(i, j);
            if (sp.at(i, j) + sm.at(i, j) != want) return false;
        }
    return true;
}

CoxeterAngles coxeter_angles(const CartanMatrix& k) {
    CoxeterAngles out;
    for (const auto& pair : cartan_eigen(k)) {
        const double l = pair.value;
        out.eigenvalues.push_back(l);
        if (l < 0.0) {
            out.theta.emplace_back(0.0, std::acosh(1.0 - l / 2.0));
            out.admissible.push_back(false);
        } else if (l > 4.0) {
            out.theta.emplace_back(M_PI, -std::acosh(l / 2.0 - 1.0));
            out.admissible.push_back(false);
        } else {
            out.theta.emplace_back(std::acos(1.0 - l / 2.0), 0.0);
            out.admissible.push_back(true);
        }
    }
    return out;
}

bool no_finite_order(const CoxeterAngles& angles, long h_max) {
    for (long h = 1; h <= h_max; ++h) {
        bool all_integer = true;
        for (const auto& th : angles.theta) {
            const std::complex<double> x = th * (static_cast<double>(h) / M_PI);
            if (std::fabs(x.imag()) > 1e-9 ||
                std::fabs(x.real() - std::round(x.real())) > 1e-9) {
                all_integer = false;
                break;
            }
        }
        if (all_integer) return false;
    }
    return true;
}

PolynomialInvariant substitute(const PolynomialInvariant& p, const IntMatrix& a) {
    const int n = a.size();
    PolynomialInvariant out;
    out.degree = p.degree;
    for (const auto& [expo, coeff] : p.monomials) {
        // expand prod_i ((A x)_i)^{e_i}
        std::map<std::vector<int>, Rat> acc{{std::vector<int>(n, 0), coeff}};
        for (int i = 0; i < n; ++i) {
            for (int rep = 0; rep < expo[i]; ++rep) {
                std::map<std::vector<int>, Rat> next;
                for (const auto& [e2, c2] : acc) {
                    for (int t = 0; t < n; ++t) {
                        if (a.at(i, t) == 0) continue;
                        std::vector<int> e3 = e2;
                        ++e3[t];
                        next[std::move(e3)] += c2 * Rat(a.at(i, t));
                    }
                }
                acc = std::move(next);
            }
        }
        for (const auto& [e2, c2] : acc) {
            auto it = out.monomials.find(e2);
            if (it == out.monomials.end())
                out.monomials.emplace(e2, c2);
            else if ((it->second += c2) == 0)
                out.monomials.erase(it);
        }
    }
    return out;
}

PolynomialInvariant multiply(const PolynomialInvariant& a, const PolynomialInvariant& b) {
    PolynomialInvariant out;
    out.degree = a.degree + b.degree;
    for (const auto& [ea, ca] : a.monomials)
        for (const auto& [eb, cb] : b.monomials) {
            std::vector<int> e = ea;
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            auto it = out.monomials.find(e);
            if (it == out.monomials.end())
                out.monomials.emplace(std::move(e), ca * cb);
            else if ((it->second += ca * cb) == 0)
                out.monomials.erase(it);
        }
    return out;
}

bool proportional(const PolynomialInvariant& a, const PolynomialInvariant& b) {
    if (a.monomials.size() != b.monomials.size()) return false;
    if (a.monomials.empty()) return true;
    Rat ratio = 0;
    auto ia = a.monomials.begin();
    auto ib = b.monomials.begin();
    for (; ia != a.monomials.end(); ++ia, ++ib) {
        if (ia->first != ib->first) return false;
        const Rat r = ia->second / ib->second;
        if (ratio == 0)
            ratio = r;
        else if (r != ratio)
            return false;
    }
    return ratio != 0;
}

PolynomialInvariant cartan_form_polynomial(const CartanMatrix& k) {
    const int n = k.rank();
    PolynomialInvariant p;
    p.degree = 2;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            const Rat c = (i == j) ? Rat(k.k.at(i, i), 2) : Rat(k.k.at(i, j));
            if (c == 0) continue;
            std::vector<int> e(n, 0);
            ++e[i];
            ++e[j];
            p.monomials[std::move(e)] = c;
        }
    return p;
}

namespace {

std::vector<std::vector<int>> monomial_basis(int nvars, int degree) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(nvars, 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == nvars - 1) {
            cur[pos] = left;
            out.push_back(cur);
            return;
        }
        for (int v = left; v >= 0; --v) {
            cur[pos] = v;
            self(self, pos + 1, left - v);
        }
    };
    rec(rec, 0, degree);
    return out; // lexicographically descending: x_1^degree first
}

IntMatrix reflection_matrix(int label, const CartanMatrix& k) {
    const int n = k.rank();
    IntMatrix m = IntMatrix::identity(n);
    const int i = k.index_of(label);
    for (int j = 0; j < n; ++j) m.at(i, j) -= k.k.at(i, j);
    return m;
}

} // namespace

std::vector<PolynomialInvariant> invariant_space(const CartanMatrix& k, int degree) {
    if (degree < 1) throw ValidationError("invariant_space: degree must be >= 1");
    const int n = k.rank();
    // monomial count C(degree + n - 1, degree)
    double est = 1.0;
    for (int i = 1; i <= degree; ++i) est *= static_cast<double>(n - 1 + i) / i;
    if (est > 1e6) throw BasisTooLarge("invariant_space: monomial basis above 10^6");

    const auto mons = monomial_basis(n, degree);
    const int dim = static_cast<int>(mons.size());
    std::map<std::vector<int>, int> index;
    for (int i = 0; i < dim; ++i) index.emplace(mons[i], i);

    // one (S_i - I) block per generator; blocks assembled in parallel
    std::vector<std::vector<RatVec>> blocks(n);
    parallel_for(static_cast<std::size_t>(n), [&](std::size_t gi) {
        const IntMatrix rho = reflection_matrix(k.labels[gi], k);
        std::vector<RatVec> rows(dim, RatVec(dim));
        for (int col = 0; col < dim; ++col) {
            PolynomialInvariant mono;
            mono.degree = degree;
            mono.monomials[mons[col]] = 1;
            const PolynomialInvariant img = substitute(mono, rho);
            for (const auto& [e, c] : img.monomials) rows[index.at(e)][col] += c;
        }
        for (int r = 0; r < dim; ++r) rows[r][r] -= 1;
        blocks[gi] = std::move(rows);
    });
    std::vector<RatVec> stacked;
    stacked.reserve(static_cast<std::size_t>(n) * dim);
    for (auto& b : blocks)
        for (auto& row : b) stacked.push_back(std::move(row));

    std::vector<PolynomialInvariant> basis;
    for (RatVec& v : nullspace(std::move(stacked))) {
        v = normalize_primitive(std::move(v));
        // positive leading coefficient in graded-lex order (all monomials
        // share the degree, so lex decides; mons[] is lex-descending)
        for (int i = 0; i < dim; ++i) {
            if (v[i] == 0) continue;
            if (v[i] < 0)
                for (Rat& x : v) x = -x;
            break;
        }
        PolynomialInvariant p;
        p.degree = degree;
        for (int i = 0; i < dim; ++i)
            if (v[i] != 0) p.monomials[mons[i]] = v[i];
        basis.push_back(std::move(p));
    }
    return basis;
}

namespace {

using Cplx = std::complex<double>;

std::vector<std::vector<Cplx>> complex_inverse(std::vector<std::vector<Cplx>> a) {
    const int n = static_cast<int>(a.size());
    std::vector<std::vector<Cplx>> inv(n, std::vector<Cplx>(n, 0.0));
    for (int i = 0; i < n; ++i) inv[i][i] = 1.0;
    for (int col = 0; col < n; ++col) {
        int sel = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(a[r][col]) > std::abs(a[sel][col])) sel = r;
        if (std::abs(a[sel][col]) < 1e-300)
            throw DegenerateEigenbasis("w transform: singular eigen-coordinate change");
        std::swap(a[col], a[sel]);
        std::swap(inv[col], inv[sel]);
        const Cplx pv = a[col][col];
        for (int j = 0; j < n; ++j) {
            a[col][j] /= pv;
            inv[col][j] /= pv;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            const Cplx f = a[r][col];
            if (f == Cplx(0.0)) continue;
            for (int j = 0; j < n; ++j) {
                a[r][j] -= f * a[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

double frobenius(const std::vector<std::vector<Cplx>>& a) {
    double s = 0.0;
    for (const auto& row : a)
        for (const auto& x : row) s += std::norm(x);
    return std::sqrt(s);
}

} // namespace

std::set<std::vector<int>> w_monomial_pattern(const DynkinDiagram& d, const CartanMatrix& k,
                                              const PolynomialInvariant& p) {
    const int n = k.rank();
    const auto bc = bicolour(d);
    if (!bc) throw ValidationError("w_monomial_pattern: diagram is not bicolourable");
    if (p.is_zero()) return {};

    auto pairs = cartan_eigen(k);

    // canonicalize degenerate eigenspaces through the spectral projector
    // so the basis does not depend on the Jacobi sweep order
    for (std::size_t lo = 0; lo < pairs.size();) {
        std::size_t hi = lo + 1;
        while (hi < pairs.size() && std::fabs(pairs[hi].value - pairs[lo].value) < 1e-8) ++hi;
        if (hi - lo > 1) {
            std::vector<std::vector<double>> space;
            for (int cand = 0; cand < n && space.size() < hi - lo; ++cand) {
                // project e_cand onto the eigenspace
                std::vector<double> v(n, 0.0);
                for (std::size_t j = lo; j < hi; ++j)
                    for (int t = 0; t < n; ++t)
                        v[t] += pairs[j].vector[cand] * pairs[j].vector[t];
                for (const auto& prev : space) {
                    double dot = 0.0;
                    for (int t = 0; t < n; ++t) dot += prev[t] * v[t];
                    for (int t = 0; t < n; ++t) v[t] -= dot * prev[t];
                }
                double norm = 0.0;
                for (double x : v) norm += x * x;
                if (norm < 1e-12) continue;
                norm = std::sqrt(norm);
                for (double& x : v) x /= norm;
                int imax = 0;
                for (int t = 1; t < n; ++t)
                    if (std::fabs(v[t]) > std::fabs(v[imax])) imax = t;
                if (v[imax] < 0)
                    for (double& x : v) x = -x;
                space.push_back(std::move(v));
            }
            if (space.size() != hi - lo)
                throw DegenerateEigenbasis("w transform: could not span degenerate eigenspace");
            for (std::size_t j = lo; j < hi; ++j) pairs[j].vector = space[j - lo];
        }
        lo = hi;
    }

    const CoxeterAngles angles = coxeter_angles(k);

    std::vector<std::vector<Cplx>> q(n, std::vector<Cplx>(n, 0.0));
    for (int j = 0; j < n; ++j) {
        const Cplx em = std::exp(Cplx(0.0, 0.5) * angles.theta[j]);
        const Cplx ep = std::exp(Cplx(0.0, -0.5) * angles.theta[j]);
        for (int t = 0; t < n; ++t) {
            const Colour c = bc->colour.at(k.labels[t]);
            q[t][j] = (c == Colour::minus ? em : ep) * pairs[j].vector[t];
        }
    }
    const auto qinv = complex_inverse(q);
    if (frobenius(q) * frobenius(qinv) > 1e8)
        throw DegenerateEigenbasis("w transform: conditioning above 1e8");

    // substitute x = Q w and collect the support
    std::map<std::vector<int>, Cplx> acc;
    for (const auto& [expo, coeff] : p.monomials) {
        std::map<std::vector<int>, Cplx> part{{std::vector<int>(n, 0),
                                               Cplx(static_cast<double>(coeff), 0.0)}};
        for (int i = 0; i < n; ++i) {
            for (int rep = 0; rep < expo[i]; ++rep) {
                std::map<std::vector<int>, Cplx> next;
                for (const auto& [e2, c2] : part) {
                    for (int t = 0; t < n; ++t) {
                        if (std::abs(q[i][t]) == 0.0) continue;
                        std::vector<int> e3 = e2;
                        ++e3[t];
                        next[std::move(e3)] += c2 * q[i][t];
                    }
                }
                part = std::move(next);
            }
        }
        for (const auto& [e2, c2] : part) acc[e2] += c2;
    }
    double biggest = 0.0;
    for (const auto& [e, c] : acc) biggest = std::max(biggest, std::abs(c));
    std::set<std::vector<int>> support;
    for (const auto& [e, c] : acc)
        if (std::abs(c) > 1e-8 * biggest) support.insert(e);
    return support;
}

} // namespace kmweyl
