#include "kmweyl/numeric.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include <algorithm>
#include <cmath>

namespace kmweyl {

std::vector<EigenPair> jacobi_eigen(const std::vector<std::vector<double>>& a0,
                                    double tol) {
    const int n = static_cast<int>(a0.size());
    std::vector<std::vector<double>> a = a0;
    std::vector<std::vector<double>> v(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i) v[i][i] = 1.0;

    double scale = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) scale = std::max(scale, std::fabs(a[i][j]));
    if (scale == 0.0) scale = 1.0;

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
        if (std::sqrt(off) <= tol * scale) break;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                if (std::fabs(a[p][q]) <= 1e-300) continue;
                const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                double t = 1.0 / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                if (theta < 0) t = -t;
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < n; ++k) {
                    const double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                for (int k = 0; k < n; ++k) {
                    const double vkp = v[k][p], vkq = v[k][q];
                    v[k][p] = c * vkp - s * vkq;
                    v[k][q] = s * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<EigenPair> pairs(n);
    for (int j = 0; j < n; ++j) {
        pairs[j].value = a[j][j];
        pairs[j].vector.resize(n);
        for (int i = 0; i < n; ++i) pairs[j].vector[i] = v[i][j];
    }
    std::sort(pairs.begin(), pairs.end(),
              [](const EigenPair& x, const EigenPair& y) { return x.value < y.value; });
    for (auto& p : pairs) {
        int imax = 0;
        for (int i = 1; i < n; ++i)
            if (std::fabs(p.vector[i]) > std::fabs(p.vector[imax])) imax = i;
        if (p.vector[imax] < 0)
            for (double& x : p.vector) x = -x;
    }
    return pairs;
}

namespace {

using Real50 = boost::multiprecision::cpp_bin_float_50;
using Cplx50 = boost::multiprecision::cpp_complex_50;

Cplx50 eval_poly(const std::vector<Real50>& c, const Cplx50& z) {
    Cplx50 r = c[0];
    for (std::size_t i = 1; i < c.size(); ++i) r = r * z + c[i];
    return r;
}

} // namespace

std::vector<std::complex<double>> polynomial_roots(const std::vector<Int>& coeffs) {
    std::vector<Int> c = coeffs;
    while (!c.empty() && c.front() == 0) c.erase(c.begin());
    const int deg = static_cast<int>(c.size()) - 1;
    if (deg <= 0) return {};

    std::vector<Real50> cf(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) cf[i] = Real50(c[i].str());
    for (auto& x : cf) x /= cf[0];

    // Durand-Kerner from staggered points on a circle enclosing all roots.
    Real50 radius = 1;
    for (int i = 1; i <= deg; ++i) {
        Real50 r = 1 + abs(cf[i]);
        if (r > radius) radius = r;
    }
    std::vector<Cplx50> z(deg);
    const Real50 pi = acos(Real50(-1));
    for (int i = 0; i < deg; ++i) {
        Real50 ang = (2 * pi * i) / deg + Real50("0.3914");
        z[i] = Cplx50(radius * cos(ang), radius * sin(ang));
    }
    for (int iter = 0; iter < 500; ++iter) {
        Real50 delta = 0;
        for (int i = 0; i < deg; ++i) {
            Cplx50 num = eval_poly(cf, z[i]);
            Cplx50 den = 1;
            for (int j = 0; j < deg; ++j)
                if (j != i) den *= (z[i] - z[j]);
            Cplx50 step = num / den;
            z[i] -= step;
            delta = std::max(delta, Real50(abs(step)));
        }
        if (delta < Real50("1e-45")) break;
    }

    std::vector<std::complex<double>> out(deg);
    for (int i = 0; i < deg; ++i)
        out[i] = {static_cast<double>(z[i].real()), static_cast<double>(z[i].imag())};
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return out;
}

double polynomial_residual(const std::vector<Int>& coeffs, std::complex<double> z) {
    Cplx50 zz(z.real(), z.imag());
    std::vector<Real50> cf(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) cf[i] = Real50(coeffs[i].str());
    return static_cast<double>(Real50(abs(eval_poly(cf, zz))));
}

} // namespace kmweyl
