#pragma once

#include <array>
#include <map>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include "rydint/halfint.hpp"

namespace rydint {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::rational<BigInt>;

/// An exact coefficient of the form sign * sqrt(mag2), mag2 rational >= 0.
/// Every Clebsch-Gordan coefficient and 6-j symbol has this form.
struct ExactSqrt {
    int sign = 0;      // -1, 0, +1
    Rational mag2 = 0; // square of the magnitude

    double value() const;
};

/// Exact sums  sum_i c_i sqrt(d_i)  with rational c_i and squarefree d_i.
/// Closed under + and *; used to reduce the Table-I angular factors to
/// exact rationals.
class SurdSum {
public:
    SurdSum() = default;
    static SurdSum rational(const Rational& r);
    static SurdSum sqrt_of(const ExactSqrt& s);

    SurdSum& operator+=(const SurdSum& o);
    SurdSum operator*(const SurdSum& o) const;

    bool is_rational() const;
    /// Throws NumericError if irrational terms remain.
    Rational as_rational() const;
    double value() const;

private:
    // radicand (squarefree, >= 1) -> rational coefficient
    std::map<BigInt, Rational> terms_;
    void add_term(const BigInt& radicand, const Rational& coeff);
};

/// Clebsch-Gordan coefficient <j1 m1 j2 m2 | J M>, Condon-Shortley phase.
/// Exactly 0 when M != m1+m2 or a triangle rule fails.
double clebsch_gordan(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt J, HalfInt M);

/// Exact version; valid for j up to ~20 (factorial table bound).
ExactSqrt clebsch_gordan_exact(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2,
                               HalfInt J, HalfInt M);

/// Wigner 6-j symbol {j1 j2 j3; j4 j5 j6} by the Racah sum; 0 on any broken
/// triad.
double six_j(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt j4, HalfInt j5, HalfInt j6);

/// Reduced Wigner matrix d^{1/2}(theta). Rows and columns ordered
/// m = +1/2, -1/2:  [[cos(t/2), -sin(t/2)], [sin(t/2), cos(t/2)]].
std::array<std::array<double, 2>, 2> wigner_d_half(double theta);

} // namespace rydint
