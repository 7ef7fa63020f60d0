#include "rydint/radial.hpp"

#include <cmath>
#include <map>
#include <shared_mutex>
#include <vector>

#include "rydint/angular.hpp"
#include "rydint/errors.hpp"

namespace rydint {

namespace {

// Gauss-Legendre nodes/weights on [-1,1] by Newton iteration on P_n.
struct GaussRule {
    std::vector<double> x, w;
    explicit GaussRule(int n) {
        x.resize(n);
        w.resize(n);
        for (int i = 0; i < n; ++i) {
            double t = std::cos(M_PI * (i + 0.75) / (n + 0.5));
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = t;
                for (int k = 2; k <= n; ++k) {
                    double p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                double dp = n * (t * p1 - p0) / (t * t - 1.0);
                double dt = p1 / dp;
                t -= dt;
                if (std::abs(dt) < 1e-15) break;
            }
            double p0 = 1.0, p1 = t;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            double dp = n * (t * p1 - p0) / (t * t - 1.0);
            x[i] = t;
            w[i] = 2.0 / ((1.0 - t * t) * dp * dp);
        }
    }
};

const GaussRule& gauss160() {
    static const GaussRule rule(160);
    return rule;
}

void check_dipole_pair(const FineLevel& a, const FineLevel& b) {
    if (std::abs(a.l - b.l) != 1)
        throw ArgumentError("dipole selection rule |dl| = 1 violated: " + a.label() + " -> " +
                            b.label());
}

} // namespace

double radial_quasiclassical_nu(double nu_a, int l_a, double nu_b, int l_b) {
    if (std::abs(l_a - l_b) != 1) throw ArgumentError("radial element needs |dl| = 1");
    if (nu_a < 10.0 || nu_b < 10.0)
        throw NumericError("quasiclassical element needs effective n >= 10");

    // Fourier components of the Kepler orbit at the mean energy, mean anomaly
    // anchored at the outer apsis (Kaulakys 1995). s is the (non-integer)
    // level separation in effective quantum number.
    double s = nu_b - nu_a;
    double lc = 0.5 * (l_a + l_b + 1);
    double nc = 2.0 * nu_a * nu_b / (nu_a + nu_b);
    double a = nc * nc;
    double e2 = 1.0 - (lc / nc) * (lc / nc);
    double ecc = e2 > 0 ? std::sqrt(e2) : 0.0;

    const auto& g = gauss160();
    double cx = 0.0, cy = 0.0;
    for (std::size_t i = 0; i < g.x.size(); ++i) {
        double eta = 0.5 * M_PI * (g.x[i] + 1.0);
        double wt = 0.5 * M_PI * g.w[i];
        double m = eta + ecc * std::sin(eta);
        double jac = 1.0 + ecc * std::cos(eta);
        cx += wt * (-(std::cos(eta) + ecc)) * jac * std::cos(s * m);
        cy += wt * std::sin(eta) * jac * std::sin(s * m);
    }
    cx /= M_PI;
    cy *= std::sqrt(std::max(0.0, 1.0 - ecc * ecc)) / M_PI;
    return a * (cx - (l_b - l_a) * cy);
}

double radial_quasiclassical(const AtomicDatabase& db, const FineLevel& a, const FineLevel& b) {
    check_dipole_pair(a, b);
    return radial_quasiclassical_nu(db.effective_n(a), a.l, db.effective_n(b), b.l);
}

namespace {

// P'' = f P integrated on the x = sqrt(r) grid: y = P/sqrt(x) obeys
// y'' = g y with g = 4 r f(r) + 3/(4 x^2).
struct RadialWave {
    double xmin, dx;
    std::vector<double> y; // normalized so that int P^2 dr = 1
};

RadialWave numerov(double nu, int l, double rmin, double rmax, double dx, double norm_tol) {
    double energy = -0.5 / (nu * nu);
    double xmin = std::sqrt(rmin), xmax = std::sqrt(rmax);
    int npts = static_cast<int>((xmax - xmin) / dx) + 1;
    if (npts < 100) throw NumericError("radial grid too short");

    std::vector<double> g(npts), y(npts, 0.0);
    for (int i = 0; i < npts; ++i) {
        double x = xmin + i * dx;
        double r = x * x;
        double f = l * (l + 1) / (r * r) - 2.0 / r - 2.0 * energy;
        g[i] = 4.0 * r * f + 0.75 / (x * x);
    }
    double h2 = dx * dx;
    y[npts - 1] = 0.0;
    y[npts - 2] = 1e-12;
    for (int i = npts - 3; i >= 0; --i) {
        y[i] = (2.0 * y[i + 1] * (1.0 + 5.0 * h2 * g[i + 1] / 12.0) -
                y[i + 2] * (1.0 - h2 * g[i + 2] / 12.0)) /
               (1.0 - h2 * g[i] / 12.0);
    }

    // int P^2 dr = int 2 x^2 y^2 dx; trapezoid vs Simpson as a resolution check
    auto density = [&](int i) {
        double x = xmin + i * dx;
        return 2.0 * x * x * y[i] * y[i];
    };
    double trap = 0.0;
    for (int i = 0; i + 1 < npts; ++i) trap += 0.5 * (density(i) + density(i + 1)) * dx;
    double simp = density(0) + density(npts - 1);
    for (int i = 1; i + 1 < npts; ++i) simp += (i % 2 ? 4.0 : 2.0) * density(i);
    simp *= dx / 3.0;
    if (std::abs(simp - trap) > norm_tol * std::abs(simp))
        throw NumericError("radial normalization quadratures disagree by " +
                           std::to_string(std::abs(simp - trap) / std::abs(simp)) +
                           " (under-resolved grid?)");

    double scale = 1.0 / std::sqrt(simp);
    for (auto& v : y) v *= scale;
    return {xmin, dx, std::move(y)};
}

} // namespace

double radial_numeric_oracle_nu(double nu_a, int l_a, double nu_b, int l_b,
                                const RadialOracleOptions& opt) {
    if (std::abs(l_a - l_b) != 1) throw ArgumentError("radial element needs |dl| = 1");
    double numax = std::max(nu_a, nu_b), numin = std::min(nu_a, nu_b);
    double rmax = 2.5 * numax * numax + 30.0 * numax;
    double rmin = std::max(opt.rmin_floor_a0, opt.rmin_scale * numin * numin);

    RadialWave wa = numerov(nu_a, l_a, rmin, rmax, opt.dx, opt.norm_tol);
    RadialWave wb = numerov(nu_b, l_b, rmin, rmax, opt.dx, opt.norm_tol);

    std::size_t npts = std::min(wa.y.size(), wb.y.size());
    // int P_a r P_b dr = int 2 x^4 y_a y_b dx, Simpson
    auto f = [&](std::size_t i) {
        double x = wa.xmin + i * wa.dx;
        double x2 = x * x;
        return 2.0 * x2 * x2 * wa.y[i] * wb.y[i];
    };
    double simp = f(0) + f(npts - 1);
    for (std::size_t i = 1; i + 1 < npts; ++i) simp += (i % 2 ? 4.0 : 2.0) * f(i);
    return simp * wa.dx / 3.0;
}

double radial_numeric_oracle(const AtomicDatabase& db, const FineLevel& a, const FineLevel& b,
                             const RadialOracleOptions& opt) {
    check_dipole_pair(a, b);
    return radial_numeric_oracle_nu(db.effective_n(a), a.l, db.effective_n(b), b.l, opt);
}

double radial_oracle_overlap_nu(double nu_a, int l_a, double nu_b, int l_b,
                                const RadialOracleOptions& opt) {
    double numax = std::max(nu_a, nu_b), numin = std::min(nu_a, nu_b);
    double rmax = 2.5 * numax * numax + 30.0 * numax;
    double rmin = std::max(opt.rmin_floor_a0, opt.rmin_scale * numin * numin);
    RadialWave wa = numerov(nu_a, l_a, rmin, rmax, opt.dx, opt.norm_tol);
    RadialWave wb = numerov(nu_b, l_b, rmin, rmax, opt.dx, opt.norm_tol);
    std::size_t npts = std::min(wa.y.size(), wb.y.size());
    auto f = [&](std::size_t i) {
        double x = wa.xmin + i * wa.dx;
        return 2.0 * x * x * wa.y[i] * wb.y[i];
    };
    double simp = f(0) + f(npts - 1);
    for (std::size_t i = 1; i + 1 < npts; ++i) simp += (i % 2 ? 4.0 : 2.0) * f(i);
    return simp * wa.dx / 3.0;
}

namespace {

// <l_b m+q | C^1_q | l_a m> in the CG normalization; the scalar part is
// C^{l_b 0}_{l_a 0 1 0} sqrt((2 l_a + 1)/(2 l_b + 1)).
double c_tensor_scalar(int l_a, int l_b) {
    HalfInt la = HalfInt::from_int(l_a), lb = HalfInt::from_int(l_b);
    double cg0 = clebsch_gordan(la, HalfInt(0), HalfInt::from_int(1), HalfInt(0), lb, HalfInt(0));
    return cg0 * std::sqrt((2.0 * l_a + 1.0) / (2.0 * l_b + 1.0));
}

} // namespace

double reduced_matrix_element_fs(const AtomicDatabase& db, const FineLevel& a,
                                 const FineLevel& b) {
    check_dipole_pair(a, b);
    double rad = radial_quasiclassical_cached(db, a, b);

    // <b m_b | r_q | a m_a> = R * scalar * sum_{ml,ms} C^{j_a m_a}_{l_a ml 1/2 ms}
    //                                   C^{j_b m_b}_{l_b ml+q 1/2 ms} C^{l_b ml+q}_{l_a ml 1 q}
    // then Wigner-Eckart with <j_b m_b| r_q |j_a m_a> = C <b||r||a>/sqrt(2j_b+1).
    HalfInt one = HalfInt::from_int(1);
    HalfInt la = HalfInt::from_int(a.l), lb = HalfInt::from_int(b.l);
    double scal = c_tensor_scalar(a.l, b.l);

    // any component with a nonvanishing Wigner-Eckart CG serves as reference
    HalfInt ma(0), q(0), mb(0);
    double cg = 0.0;
    for (int tq = 2; tq >= -2 && cg == 0.0; tq -= 2)
        for (int tma = -a.j.twice(); tma <= a.j.twice() && cg == 0.0; tma += 2) {
            HalfInt m(tma), qq(tq);
            HalfInt mt = m + qq;
            if (mt.abs() > b.j) continue;
            double c = clebsch_gordan(a.j, m, one, qq, b.j, mt);
            if (c != 0.0) {
                cg = c;
                ma = m;
                q = qq;
                mb = mt;
            }
        }
    if (cg == 0.0) throw NumericError("degenerate Wigner-Eckart reference component");
    double elem = 0.0;
    for (int tml = -a.l; tml <= a.l; ++tml) {
        HalfInt ml = HalfInt::from_int(tml);
        HalfInt ms = ma - ml;
        if (ms.abs() != half) continue;
        double c1 = clebsch_gordan(la, ml, half, ms, a.j, ma);
        double c2 = clebsch_gordan(lb, ml + q, half, ms, b.j, mb);
        double c3 = clebsch_gordan(la, ml, one, q, lb, ml + q);
        elem += c1 * c2 * c3;
    }
    return rad * scal * elem * std::sqrt(b.j.twice() + 1.0) / cg;
}

double c3_coefficient(const AtomicDatabase& db, const FineLevel& a, const FineLevel& alpha,
                      const FineLevel& b, const FineLevel& beta) {
    double ra = reduced_matrix_element_fs(db, a, alpha);
    double rb = reduced_matrix_element_fs(db, b, beta);
    double norm = std::sqrt((alpha.j.twice() + 1.0) * (beta.j.twice() + 1.0));
    return ra * rb / norm * units::c3_au_to_ghz_um3;
}

namespace {

struct RadialCache {
    std::map<std::array<int, 8>, double> map;
    std::shared_mutex mtx;
};

RadialCache& cache() {
    static RadialCache c;
    return c;
}

} // namespace

double radial_quasiclassical_cached(const AtomicDatabase& db, const FineLevel& a,
                                    const FineLevel& b) {
    std::array<int, 8> key{static_cast<int>(a.species), a.n, a.l, a.j.twice(),
                           static_cast<int>(b.species), b.n, b.l, b.j.twice()};
    {
        std::shared_lock lock(cache().mtx);
        auto it = cache().map.find(key);
        if (it != cache().map.end()) return it->second;
    }
    double v = radial_quasiclassical(db, a, b);
    {
        std::unique_lock lock(cache().mtx);
        cache().map.emplace(key, v);
    }
    return v;
}

void radial_cache_clear() {
    std::unique_lock lock(cache().mtx);
    cache().map.clear();
}

} // namespace rydint
