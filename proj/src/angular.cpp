#include "rydint/angular.hpp"

#include <cmath>
#include <mutex>
#include <shared_mutex>
#include <tuple>
#include <vector>

#include "rydint/errors.hpp"

namespace rydint {

namespace {

// Factorials as exact integers; CG/6j arguments stay well below this.
const BigInt& factorial(int n) {
    static std::vector<BigInt> table = {1, 1};
    static std::mutex mtx;
    std::lock_guard lock(mtx);
    while (static_cast<int>(table.size()) <= n)
        table.push_back(table.back() * static_cast<int>(table.size()));
    if (n < 0) throw ArgumentError("factorial of negative integer");
    return table[n];
}

// twice-value -> integer, with parity check
int as_int(int twice, const char* what) {
    if (twice % 2 != 0)
        throw ArgumentError(std::string("half-integer where integer required in ") + what);
    return twice / 2;
}

bool triangle_ok(HalfInt a, HalfInt b, HalfInt c) {
    if ((a.twice() + b.twice() + c.twice()) % 2 != 0) return false;
    return c.twice() >= std::abs(a.twice() - b.twice()) && c.twice() <= a.twice() + b.twice();
}

// Delta^2(abc) = (a+b-c)!(a-b+c)!(-a+b+c)!/(a+b+c+1)!
Rational delta2(HalfInt a, HalfInt b, HalfInt c) {
    int x1 = as_int(a.twice() + b.twice() - c.twice(), "triangle");
    int x2 = as_int(a.twice() - b.twice() + c.twice(), "triangle");
    int x3 = as_int(-a.twice() + b.twice() + c.twice(), "triangle");
    int x4 = as_int(a.twice() + b.twice() + c.twice(), "triangle") + 1;
    return Rational(factorial(x1) * factorial(x2) * factorial(x3), factorial(x4));
}

void check_jm(HalfInt j, HalfInt m, const char* what) {
    if (j.twice() < 0) throw ArgumentError(std::string("negative j in ") + what);
    if ((j.twice() - m.twice()) % 2 != 0)
        throw ArgumentError(std::string("j and m of different half-integer class in ") + what);
    if (m.abs() > j) throw ArgumentError(std::string("|m| > j in ") + what);
}

} // namespace

double ExactSqrt::value() const {
    return sign * std::sqrt(boost::rational_cast<double>(mag2));
}

ExactSqrt clebsch_gordan_exact(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt J,
                               HalfInt M) {
    check_jm(j1, m1, "clebsch_gordan");
    check_jm(j2, m2, "clebsch_gordan");
    check_jm(J, M, "clebsch_gordan");
    if (m1 + m2 != M) return {0, 0};
    if (!triangle_ok(j1, j2, J)) return {0, 0};

    // Racah's closed form (Condon-Shortley phase).
    int a1 = as_int(j1.twice() + m1.twice(), "cg");
    int a2 = as_int(j1.twice() - m1.twice(), "cg");
    int a3 = as_int(j2.twice() + m2.twice(), "cg");
    int a4 = as_int(j2.twice() - m2.twice(), "cg");
    int a5 = as_int(J.twice() + M.twice(), "cg");
    int a6 = as_int(J.twice() - M.twice(), "cg");

    Rational pref = delta2(j1, j2, J) * Rational(J.twice() + 1, 1);
    pref *= Rational(factorial(a1) * factorial(a2) * factorial(a3) * factorial(a4) *
                         factorial(a5) * factorial(a6),
                     1);

    int b1 = as_int(j1.twice() + j2.twice() - J.twice(), "cg"); // j1+j2-J
    int b2 = a2;                                                // j1-m1
    int b3 = a3;                                                // j2+m2
    int c1 = as_int(J.twice() - j2.twice() + m1.twice(), "cg"); // J-j2+m1
    int c2 = as_int(J.twice() - j1.twice() - m2.twice(), "cg"); // J-j1-m2

    int kmin = std::max({0, -c1, -c2});
    int kmax = std::min({b1, b2, b3});

    Rational sum = 0;
    for (int k = kmin; k <= kmax; ++k) {
        Rational term(1, factorial(k) * factorial(b1 - k) * factorial(b2 - k) *
                             factorial(b3 - k) * factorial(c1 + k) * factorial(c2 + k));
        sum += (k % 2 == 0) ? term : -term;
    }
    if (sum == Rational(0)) return {0, 0};
    int sign = sum > Rational(0) ? 1 : -1;
    return {sign, sum * sum * pref};
}

double clebsch_gordan(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt J, HalfInt M) {
    using Key = std::tuple<int, int, int, int, int, int>;
    static std::map<Key, double> cache;
    static std::shared_mutex mtx;

    Key key{j1.twice(), m1.twice(), j2.twice(), m2.twice(), J.twice(), M.twice()};
    {
        std::shared_lock lock(mtx);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    double v = clebsch_gordan_exact(j1, m1, j2, m2, J, M).value();
    {
        std::unique_lock lock(mtx);
        cache.emplace(key, v);
    }
    return v;
}

double six_j(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt j4, HalfInt j5, HalfInt j6) {
    for (HalfInt j : {j1, j2, j3, j4, j5, j6})
        if (j.twice() < 0) throw ArgumentError("negative j in six_j");
    if (!triangle_ok(j1, j2, j3) || !triangle_ok(j1, j5, j6) || !triangle_ok(j4, j2, j6) ||
        !triangle_ok(j4, j5, j3))
        return 0.0;

    Rational pref = delta2(j1, j2, j3) * delta2(j1, j5, j6) * delta2(j4, j2, j6) *
                    delta2(j4, j5, j3);

    int s1 = as_int(j1.twice() + j2.twice() + j3.twice(), "six_j");
    int s2 = as_int(j1.twice() + j5.twice() + j6.twice(), "six_j");
    int s3 = as_int(j4.twice() + j2.twice() + j6.twice(), "six_j");
    int s4 = as_int(j4.twice() + j5.twice() + j3.twice(), "six_j");
    int p1 = as_int(j1.twice() + j2.twice() + j4.twice() + j5.twice(), "six_j");
    int p2 = as_int(j2.twice() + j3.twice() + j5.twice() + j6.twice(), "six_j");
    int p3 = as_int(j3.twice() + j1.twice() + j6.twice() + j4.twice(), "six_j");

    int tmin = std::max({s1, s2, s3, s4});
    int tmax = std::min({p1, p2, p3});

    Rational sum = 0;
    for (int t = tmin; t <= tmax; ++t) {
        Rational term(factorial(t + 1),
                      factorial(t - s1) * factorial(t - s2) * factorial(t - s3) *
                          factorial(t - s4) * factorial(p1 - t) * factorial(p2 - t) *
                          factorial(p3 - t));
        sum += (t % 2 == 0) ? term : -term;
    }
    if (sum == Rational(0)) return 0.0;
    double mag = boost::rational_cast<double>(sum * sum * pref);
    return (sum > Rational(0) ? 1.0 : -1.0) * std::sqrt(mag);
}

std::array<std::array<double, 2>, 2> wigner_d_half(double theta) {
    double c = std::cos(0.5 * theta), s = std::sin(0.5 * theta);
    return {{{c, -s}, {s, c}}};
}

// ---- SurdSum ----

namespace {

// n = s^2 * f with f squarefree; returns (s, f). Radicands here are built
// from factorials, so all prime factors are small.
std::pair<BigInt, BigInt> square_split(BigInt n) {
    BigInt s = 1, f = 1;
    for (BigInt d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        int e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        for (int i = 0; i < e / 2; ++i) s *= d;
        if (e % 2) f *= d;
    }
    return {s, f * n}; // leftover n is prime or 1
}

} // namespace

SurdSum SurdSum::rational(const Rational& r) {
    SurdSum out;
    if (r != Rational(0)) out.terms_[1] = r;
    return out;
}

SurdSum SurdSum::sqrt_of(const ExactSqrt& e) {
    SurdSum out;
    if (e.sign == 0) return out;
    // sqrt(p/q) = sqrt(p q)/q
    BigInt p = e.mag2.numerator(), q = e.mag2.denominator();
    auto [s, f] = square_split(p * q);
    out.add_term(f, Rational(e.sign * s, q));
    return out;
}

void SurdSum::add_term(const BigInt& radicand, const Rational& coeff) {
    if (coeff == Rational(0)) return;
    auto [it, inserted] = terms_.emplace(radicand, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == Rational(0)) terms_.erase(it);
    }
}

SurdSum& SurdSum::operator+=(const SurdSum& o) {
    for (const auto& [rad, c] : o.terms_) add_term(rad, c);
    return *this;
}

SurdSum SurdSum::operator*(const SurdSum& o) const {
    SurdSum out;
    for (const auto& [r1, c1] : terms_)
        for (const auto& [r2, c2] : o.terms_) {
            auto [s, f] = square_split(r1 * r2);
            out.add_term(f, c1 * c2 * Rational(s, 1));
        }
    return out;
}

bool SurdSum::is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
}

Rational SurdSum::as_rational() const {
    if (terms_.empty()) return Rational(0);
    if (!is_rational()) throw NumericError("surd sum did not reduce to a rational");
    return terms_.begin()->second;
}

double SurdSum::value() const {
    double v = 0;
    for (const auto& [rad, c] : terms_)
        v += boost::rational_cast<double>(c) *
             std::sqrt(static_cast<double>(rad));
    return v;
}

} // namespace rydint
