#include "kmweyl/recurrence.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include <algorithm>
#include <cmath>

#include "kmweyl/numeric.hpp"

namespace kmweyl {

namespace {

/// One candidate order: stack the shift windows of every sequence and
/// solve exactly; returns the rref particular solution if consistent.
std::optional<std::vector<Rat>> try_order(const std::vector<std::vector<Int>>& seqs, int n) {
    std::vector<RatVec> rows;
    RatVec rhs;
    for (const auto& s : seqs) {
        for (std::size_t t = 0; t + n < s.size(); ++t) {
            RatVec row(n);
            for (int i = 0; i < n; ++i) row[i] = Rat(s[t + n - 1 - i]);
            rows.push_back(std::move(row));
            rhs.push_back(Rat(s[t + n]));
        }
    }
    if (rows.empty()) return std::nullopt;
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i].push_back(rhs[i]);
    const std::vector<int> pivots = rref(rows);
    if (!pivots.empty() && pivots.back() == n) return std::nullopt; // inconsistent
    std::vector<Rat> c(n);
    for (std::size_t r = 0; r < pivots.size(); ++r) c[pivots[r]] = rows[r][n];
    // verify on every term of every sequence
    for (const auto& s : seqs) {
        for (std::size_t t = 0; t + n < s.size(); ++t) {
            Rat acc = 0;
            for (int i = 0; i < n; ++i) acc += c[i] * Rat(s[t + n - 1 - i]);
            if (acc != Rat(s[t + n])) return std::nullopt;
        }
    }
    return c;
}

} // namespace

LinearRecurrence fit_min_recurrence(const std::vector<std::vector<Int>>& seqs) {
    std::size_t min_len = SIZE_MAX;
    for (const auto& s : seqs) min_len = std::min(min_len, s.size());
    if (seqs.empty() || min_len < 4)
        throw NoRecurrenceFound("fit_min_recurrence: sequences too short");
    const int max_order = static_cast<int>(min_len / 2) - 1;
    for (int n = 1; n <= max_order; ++n) {
        auto c = try_order(seqs, n);
        if (c && (*c)[n - 1] != 0) return LinearRecurrence{n, std::move(*c)};
    }
    throw NoRecurrenceFound("fit_min_recurrence: no recurrence up to order " +
                            std::to_string(max_order));
}

LinearRecurrence fit_min_recurrence(const std::vector<Int>& seq) {
    return fit_min_recurrence(std::vector<std::vector<Int>>{seq});
}

std::vector<std::vector<Int>> component_sequences(const CoxeterMatrix& c, int count) {
    const int n = c.size();
    std::vector<std::vector<Int>> seqs(static_cast<std::size_t>(n) * n);
    for (auto& s : seqs) s.reserve(count);
    IntMatrix p = IntMatrix::identity(n);
    for (int k = 0; k < count; ++k) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) seqs[static_cast<std::size_t>(i) * n + j].push_back(p.at(i, j));
        if (k + 1 < count) p = p * c.mat();
    }
    return seqs;
}

std::vector<Int> char_poly(const LinearRecurrence& r) {
    RatVec v(r.order + 1);
    v[0] = 1;
    for (int i = 1; i <= r.order; ++i) v[i] = -r.coeffs[i - 1];
    v = normalize_primitive(std::move(v));
    std::vector<Int> out(r.order + 1);
    for (int i = 0; i <= r.order; ++i) out[i] = numerator(v[i]);
    return out;
}

std::complex<double> CharRoot::approx() const { return numeric; }

std::complex<double> CharRoot::pow_k(long k) const {
    switch (kind) {
    case Kind::integer: {
        const double v = static_cast<double>(int_value);
        return {std::pow(v, static_cast<double>(k)), 0.0};
    }
    case Kind::root_of_unity: {
        long r = ((unity_p * k) % unity_q + unity_q) % unity_q;
        const double ang = 2.0 * M_PI * static_cast<double>(r) / static_cast<double>(unity_q);
        return {std::cos(ang), std::sin(ang)};
    }
    default: {
        if (k >= 0) return std::pow(numeric, static_cast<double>(k));
        return 1.0 / std::pow(numeric, static_cast<double>(-k));
    }
    }
}

namespace {

Int ipow_eval(const std::vector<Int>& p, const Int& x) {
    Int acc = 0;
    for (const Int& c : p) acc = acc * x + c;
    return acc;
}

std::vector<Int> deflate_linear(const std::vector<Int>& p, const Int& root) {
    // division by (x - root), exact
    std::vector<Int> q(p.size() - 1);
    Int carry = 0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        carry = carry * root + p[i];
        q[i] = carry;
    }
    return q;
}

/// Attempts exact division by x^2 + a x + b; empty when not divisible.
std::optional<std::vector<Int>> deflate_quadratic(const std::vector<Int>& p, const Int& a,
                                                  const Int& b) {
    if (p.size() < 3) return std::nullopt;
    std::vector<Int> q(p.size() - 2);
    std::vector<Int> rem(p.begin(), p.end());
    for (std::size_t i = 0; i + 2 < p.size(); ++i) {
        const Int f = rem[i];
        q[i] = f;
        rem[i + 1] -= a * f;
        rem[i + 2] -= b * f;
    }
    if (rem[p.size() - 2] != 0 || rem[p.size() - 1] != 0) return std::nullopt;
    return q;
}

Int strip_square(Int d, Int& scale) {
    // d = scale^2 * squarefree part (small discriminants only)
    scale = 1;
    for (Int f = 2; f * f <= d; ++f)
        while (d % (f * f) == 0) {
            d /= f * f;
            scale *= f;
        }
    return d;
}

bool rational_angle(double angle_over_2pi, long max_q, long& p, long& q) {
    for (q = 1; q <= max_q; ++q) {
        const double scaled = angle_over_2pi * static_cast<double>(q);
        const double r = std::round(scaled);
        if (std::fabs(scaled - r) < 1e-10 * static_cast<double>(q)) {
            p = static_cast<long>(r) % q;
            if (p < 0) p += q;
            return true;
        }
    }
    return false;
}

CharRoot make_integer_root(Int v) {
    CharRoot r;
    r.kind = CharRoot::Kind::integer;
    r.numeric = {static_cast<double>(v), 0.0};
    r.int_value = std::move(v);
    return r;
}

} // namespace

std::vector<CharRoot> char_roots(const std::vector<Int>& poly) {
    std::vector<Int> p = poly;
    while (!p.empty() && p.front() == 0) p.erase(p.begin());
    if (p.size() <= 1) return {};

    std::vector<CharRoot> out;
    auto add_or_bump = [&](CharRoot r) {
        for (auto& existing : out) {
            if (existing.kind != r.kind) continue;
            const bool same =
                (r.kind == CharRoot::Kind::integer && existing.int_value == r.int_value) ||
                (r.kind == CharRoot::Kind::quadratic_surd && existing.surd_a == r.surd_a &&
                 existing.surd_b == r.surd_b && existing.surd_c == r.surd_c &&
                 existing.surd_d == r.surd_d) ||
                (r.kind == CharRoot::Kind::root_of_unity && existing.unity_p == r.unity_p &&
                 existing.unity_q == r.unity_q) ||
                (r.kind == CharRoot::Kind::numeric_complex &&
                 std::abs(existing.numeric - r.numeric) < 1e-9);
            if (same) {
                ++existing.multiplicity;
                return;
            }
        }
        out.push_back(std::move(r));
    };

    // integer roots first (leading coefficient is +-1 for the recurrences
    // built here; other polynomials fall through to the numeric path)
    if (p.front() == 1 || p.front() == -1) {
        bool progress = true;
        while (progress && p.size() > 1) {
            progress = false;
            const Int c0 = p.back();
            if (c0 == 0) {
                add_or_bump(make_integer_root(0));
                p.pop_back();
                progress = true;
                continue;
            }
            const Int c0abs = abs(c0);
            for (Int d = 1; d * d <= c0abs; ++d) {
                if (c0abs % d != 0) continue;
                const Int divisors[2] = {d, Int(c0abs / d)};
                for (const Int& cand0 : divisors) {
                    for (int sign : {1, -1}) {
                        Int cand = cand0 * sign;
                        if (ipow_eval(p, cand) == 0) {
                            add_or_bump(make_integer_root(cand));
                            p = deflate_linear(p, cand);
                            progress = true;
                            break;
                        }
                    }
                    if (progress) break;
                }
                if (progress) break;
            }
        }
    }

    // quadratic integer factors, guessed from numeric root pairs and
    // verified by exact division
    while (p.size() > 2) {
        const auto nr = polynomial_roots(p);
        bool extracted = false;
        for (std::size_t i = 0; i < nr.size() && !extracted; ++i) {
            for (std::size_t j = i + 1; j < nr.size() && !extracted; ++j) {
                const double ad = -(nr[i] + nr[j]).real();
                const double bd = (nr[i] * nr[j]).real();
                const double ai = std::abs((nr[i] + nr[j]).imag());
                const double bi = std::abs((nr[i] * nr[j]).imag());
                if (ai > 1e-6 || bi > 1e-6) continue;
                if (std::fabs(ad - std::round(ad)) > 1e-6 || std::fabs(bd - std::round(bd)) > 1e-6)
                    continue;
                const Int a(static_cast<long long>(std::llround(ad)));
                const Int b(static_cast<long long>(std::llround(bd)));
                auto q = deflate_quadratic(p, a, b);
                if (!q) continue;
                const Int disc = a * a - 4 * b;
                if (disc > 0) {
                    Int scale;
                    const Int d0 = strip_square(disc, scale);
                    for (int sign : {1, -1}) {
                        CharRoot r;
                        r.kind = CharRoot::Kind::quadratic_surd;
                        r.surd_a = -a;
                        r.surd_b = sign * scale;
                        r.surd_c = 2;
                        r.surd_d = d0;
                        const double sq = std::sqrt(static_cast<double>(disc));
                        r.numeric = {(static_cast<double>(-a) + sign * sq) / 2.0, 0.0};
                        add_or_bump(std::move(r));
                    }
                } else if (disc < 0 && b == 1 && abs(a) <= 1) {
                    // x^2 + x + 1, x^2 + 1, x^2 - x + 1: primitive 3rd, 4th,
                    // 6th roots of unity
                    const long q6 = (a == 1) ? 3 : (a == 0 ? 4 : 6);
                    for (int sign : {1, -1}) {
                        CharRoot r;
                        r.kind = CharRoot::Kind::root_of_unity;
                        r.unity_p = sign > 0 ? 1 : q6 - 1;
                        r.unity_q = q6;
                        const double ang = 2.0 * M_PI * static_cast<double>(r.unity_p) / q6;
                        r.numeric = {std::cos(ang), std::sin(ang)};
                        add_or_bump(std::move(r));
                    }
                } else {
                    for (std::size_t t : {i, j}) {
                        CharRoot r;
                        r.kind = CharRoot::Kind::numeric_complex;
                        r.numeric = nr[t];
                        add_or_bump(std::move(r));
                    }
                }
                p = std::move(*q);
                extracted = true;
            }
        }
        if (!extracted) break;
    }

    // whatever is left: numeric roots, with a unit-circle rational-angle test
    if (p.size() > 1) {
        for (const auto& z : polynomial_roots(p)) {
            CharRoot r;
            long pp = 0, qq = 1;
            if (std::fabs(std::abs(z) - 1.0) < 1e-10 &&
                rational_angle(std::arg(z) / (2.0 * M_PI), 64, pp, qq)) {
                r.kind = CharRoot::Kind::root_of_unity;
                r.unity_p = pp;
                r.unity_q = qq;
            } else {
                r.kind = CharRoot::Kind::numeric_complex;
            }
            r.numeric = z;
            add_or_bump(std::move(r));
        }
    }

    std::sort(out.begin(), out.end(), [](const CharRoot& x, const CharRoot& y) {
        if (x.numeric.real() != y.numeric.real()) return x.numeric.real() < y.numeric.real();
        return x.numeric.imag() < y.numeric.imag();
    });
    return out;
}

double ClosedForm::eval(long k) const {
    std::complex<double> acc{0.0, 0.0};
    for (const auto& term : terms) {
        std::complex<double> pk{0.0, 0.0};
        double kp = 1.0;
        for (const auto& c : term.poly_k) {
            pk += c * kp;
            kp *= static_cast<double>(k);
        }
        acc += pk * term.root.pow_k(k);
    }
    return acc.real();
}

namespace {

using Real50 = boost::multiprecision::cpp_bin_float_50;
using Cplx50 = boost::multiprecision::cpp_complex_50;

Cplx50 root_value_50(const CharRoot& r) {
    switch (r.kind) {
    case CharRoot::Kind::integer:
        return Cplx50(Real50(r.int_value.str()), 0);
    case CharRoot::Kind::quadratic_surd: {
        Real50 v = (Real50(r.surd_a.str()) +
                    Real50(r.surd_b.str()) * sqrt(Real50(r.surd_d.str()))) /
                   Real50(r.surd_c.str());
        return Cplx50(v, 0);
    }
    case CharRoot::Kind::root_of_unity: {
        const Real50 ang = 2 * acos(Real50(-1)) * r.unity_p / r.unity_q;
        return Cplx50(cos(ang), sin(ang));
    }
    default:
        return Cplx50(Real50(r.numeric.real()), Real50(r.numeric.imag()));
    }
}

std::vector<Cplx50> solve_complex(std::vector<std::vector<Cplx50>> a, std::vector<Cplx50> b) {
    const int n = static_cast<int>(a.size());
    for (int col = 0; col < n; ++col) {
        int sel = col;
        Real50 best = abs(a[col][col]);
        for (int r = col + 1; r < n; ++r)
            if (abs(a[r][col]) > best) {
                best = abs(a[r][col]);
                sel = r;
            }
        if (best == 0) throw IllConditioned("closed form: singular confluent Vandermonde");
        std::swap(a[col], a[sel]);
        std::swap(b[col], b[sel]);
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            const Cplx50 f = a[r][col] / a[col][col];
            if (f == Cplx50(0)) continue;
            for (int j = col; j < n; ++j) a[r][j] -= f * a[col][j];
            b[r] -= f * b[col];
        }
    }
    std::vector<Cplx50> x(n);
    for (int i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

} // namespace

ClosedForm solve_closed_form(const LinearRecurrence& r, const std::vector<Int>& init) {
    const int n = r.order;
    if (static_cast<int>(init.size()) < n)
        throw ValidationError("solve_closed_form: need at least `order` initial terms");
    const auto roots = char_roots(char_poly(r));
    int total = 0;
    for (const auto& rt : roots) total += rt.multiplicity;
    if (total != n) throw ComputationError("solve_closed_form: root multiplicities != order");

    // columns: k^t * root^k, t < multiplicity
    std::vector<std::pair<int, int>> cols; // (root index, power t)
    for (std::size_t ri = 0; ri < roots.size(); ++ri)
        for (int t = 0; t < roots[ri].multiplicity; ++t) cols.emplace_back(static_cast<int>(ri), t);

    std::vector<std::vector<Cplx50>> a(n, std::vector<Cplx50>(n));
    std::vector<Cplx50> b(n);
    std::vector<Cplx50> rv(roots.size());
    for (std::size_t ri = 0; ri < roots.size(); ++ri) rv[ri] = root_value_50(roots[ri]);
    for (int k = 0; k < n; ++k) {
        for (int j = 0; j < n; ++j) {
            const auto [ri, t] = cols[j];
            Real50 kp = 1;
            for (int u = 0; u < t; ++u) kp *= k;
            a[k][j] = pow(rv[ri], k) * kp;
        }
        b[k] = Cplx50(Real50(init[k].str()), 0);
    }
    const auto sol = solve_complex(std::move(a), std::move(b));

    ClosedForm cf;
    for (std::size_t ri = 0; ri < roots.size(); ++ri) {
        ClosedFormTerm term;
        term.root = roots[ri];
        term.poly_k.assign(roots[ri].multiplicity, {0.0, 0.0});
        cf.terms.push_back(std::move(term));
    }
    for (int j = 0; j < n; ++j) {
        const auto [ri, t] = cols[j];
        cf.terms[ri].poly_k[t] = {static_cast<double>(sol[j].real()),
                                  static_cast<double>(sol[j].imag())};
    }

    // check against 2*order terms, extending by the recurrence
    std::vector<Rat> ext(init.begin(), init.end());
    while (static_cast<int>(ext.size()) < 2 * n) {
        Rat acc = 0;
        for (int i = 0; i < n; ++i) acc += r.coeffs[i] * ext[ext.size() - 1 - i];
        ext.push_back(acc);
    }
    for (int k = 0; k < 2 * n; ++k) {
        const double exact = static_cast<double>(ext[k]);
        const double got = cf.eval(k);
        if (std::fabs(got - exact) > 1e-8 * (1.0 + std::fabs(exact)))
            throw IllConditioned("solve_closed_form: residual above 1e-8");
    }
    return cf;
}

double verify_closed_form(const ClosedForm& cf, const CoxeterMatrix& c, const RootVector& seed,
                          int component, long k_min, long k_max) {
    double worst = 0.0;
    RootVector cur = apply_power(c, k_min, seed);
    const IntMatrix& step = c.mat();
    for (long k = k_min;; ++k) {
        const double exact = static_cast<double>(cur[component]);
        const double got = cf.eval(k);
        worst = std::max(worst, std::fabs(got - exact) / (1.0 + std::fabs(exact)));
        if (k == k_max) break;
        cur = step.apply(cur);
    }
    return worst;
}

RootVector affine_power_exact(long k, const RootVector& seed) {
    if (seed.size() != 5)
        throw DimensionMismatch("affine_power_exact: expects rank-5 coefficients");
    const Rat p(seed[0]), q(seed[1]), l(seed[2]), m(seed[3]), n(seed[4]);
    const Rat kk(k);
    const Rat osc = Rat((k % 2 == 0) ? 1 : -1) * (2 * l - 4 * m + 2 * n - q) / 8;
    const Rat a0 = (6 * kk * kk + 1) / 8 * q + (6 * kk + 3) / 4 * l - (6 * kk + 1) / 4 * n + m / 2 + osc;
    const Rat a1 = (6 * kk * kk - 4 * kk - 1) / 8 * q + (6 * kk + 1) / 4 * l -
                   (6 * kk - 1) / 4 * n + m / 2 - osc;
    const Rat a2 = (6 * kk * kk - 8 * kk + 1) / 8 * q + (6 * kk - 1) / 4 * l -
                   (6 * kk - 3) / 4 * n + m / 2 + osc;
    RootVector out(5);
    out[0] = seed[0];
    out[1] = seed[1];
    const Rat comps[3] = {a0, a1, a2};
    for (int i = 0; i < 3; ++i) {
        if (denominator(comps[i]) != 1)
            throw ComputationError("affine_power_exact: non-integral coefficient");
        out[2 + i] = numerator(comps[i]);
    }
    return out;
}

} // namespace kmweyl
