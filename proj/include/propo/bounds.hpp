#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include "combinatorics.hpp"

namespace propo {

// Closed-form quantities around f(k), evaluated in MPFR at a compile-time decimal precision.
// Wherever a (1 + o(1)) factor appears in the source formula it is set to 1 and the quantity is
// tagged asymptotic.

template<unsigned Digits>
using real_t = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<Digits>,
                                             boost::multiprecision::et_off>;

using real50 = real_t<50>;
using real100 = real_t<100>;

namespace detail {

template<class Real>
Real euler() {
    return boost::math::constants::e<Real>();
}

template<class Real>
Real to_real(const big_int& x) {
    return Real(x.str());
}

}

inline big_int factorial_lower_bound(unsigned k) {
    if (k < 2) {
        throw input_error("k must be at least 2");
    }
    return big_factorial(k);
}

// (k^2 ln k) k!, the upper bound on f(k) for large k.
template<class Real>
Real upper_bound_value(unsigned k) {
    const Real kr(k);
    return kr * kr * log(kr) * detail::to_real<Real>(big_factorial(k));
}

// n = (k/e)^2 (pi e^{e^2/2} k^3 ln k)^{1/k}
template<class Real>
Real theorem1_n(unsigned k) {
    if (k < 2) {
        throw input_error("k must be at least 2");
    }
    const Real kr(k);
    const Real e = detail::euler<Real>();
    const Real inner = boost::math::constants::pi<Real>() * exp(e * e / 2) * kr * kr * kr * log(kr);
    return (kr / e) * (kr / e) * pow(inner, Real(1) / kr);
}

template<class Real>
std::uint64_t theorem1_n_ceil(unsigned k) {
    return static_cast<std::uint64_t>(ceil(theorem1_n<Real>(k)));
}

// (x)_k = x (x-1) ... (x-k+1) for real x.
template<class Real>
Real falling_factorial(const Real& x, unsigned k) {
    Real out(1);
    for (unsigned j = 0; j < k; ++j) {
        out *= x - j;
    }
    return out;
}

// C(n,k)/k! at real n, via the falling factorial.
template<class Real>
Real expected_consistent(const Real& n, unsigned k) {
    const Real kf = detail::to_real<Real>(big_factorial(k));
    return falling_factorial(n, k) / kf / kf;
}

// ln(n!) + C(n,k) ln(1 - 1/k!); negative certifies n!(1 - 1/k!)^C(n,k) < 1.
template<class Real>
Real union_bound_log(std::uint64_t n, unsigned k) {
    if (k < 2 || k > n) {
        throw input_error("union_bound_log needs 2 <= k <= n");
    }
    const Real log_n_factorial = lgamma(Real(n) + 1);
    const Real binom = detail::to_real<Real>(big_binomial(static_cast<unsigned>(n), k));
    const Real inv_kf = Real(1) / detail::to_real<Real>(big_factorial(k));
    return log_n_factorial + binom * log1p(-inv_kf);
}

template<class Real>
struct Eq3Ratio {
    Real value;             // C(n,k)/k! at n = theorem1_n(k), falling-factorial extension
    Real ratio;             // value / (k^2 ln k / 2)
    Real fact_approx_ratio; // the same ratio with C(n,k) replaced by e^{-e^2/2} n^k / k!
    bool within_eq3;        // value <= k^2 ln k
};

template<class Real>
Eq3Ratio<Real> eq3_ratio(unsigned k) {
    const Real n = theorem1_n<Real>(k);
    const Real kr(k);
    const Real half_k2_lnk = kr * kr * log(kr) / 2;
    const Real e = detail::euler<Real>();
    const Real kf = detail::to_real<Real>(big_factorial(k));
    Eq3Ratio<Real> out;
    out.value = expected_consistent(n, k);
    out.ratio = out.value / half_k2_lnk;
    out.fact_approx_ratio = exp(-e * e / 2) * pow(n, kr) / (kf * kf) / half_k2_lnk;
    out.within_eq3 = out.value <= 2 * half_k2_lnk;
    return out;
}

// (n)_k / n^k, exactly as a rational, rounded once to Real.
template<class Real>
Real fact_ratio(std::uint64_t n, unsigned k) {
    if (k < 2 || k > n) {
        throw input_error("fact_ratio needs 2 <= k <= n");
    }
    big_int numerator = 1, denominator = 1;
    for (unsigned j = 0; j < k; ++j) {
        numerator *= n - j;
        denominator *= n;
    }
    return detail::to_real<Real>(numerator) / detail::to_real<Real>(denominator);
}

// e^{-e^2/2}, the limit of fact_ratio at n ~ (k/e)^2.
template<class Real>
Real fact_limit() {
    const Real e = detail::euler<Real>();
    return exp(-e * e / 2);
}

template<class Real>
struct Theorem2Params {
    Real omega;          // (alpha / 3e) sqrt(k)
    Real omega_prime;    // (2/alpha) omega
    Real c_statement;    // 2 pi / e^{1 + e^2/2}
    Real c_proof;        // (2 pi / 3e) e^{e^2/2}
    Real n_statement;    // (c alpha)^{1/k} (k/e)^2 k^{3/(2k)} with c_statement
    Real n_proof;        // same with c_proof
    Real expected_c_statement;  // C(n,k)/k! at n_statement
    Real expected_c_proof;      // C(n,k)/k! at n_proof; asymptotically omega
    bool discrepancy;           // the two constants disagree
};

template<class Real>
Theorem2Params<Real> theorem2_params(unsigned k, double alpha) {
    if (k < 2) {
        throw input_error("k must be at least 2");
    }
    if (!(alpha > 0 && alpha < 1)) {
        throw input_error("alpha must lie in the open interval (0, 1)");
    }
    const Real kr(k);
    const Real a(alpha);
    const Real e = detail::euler<Real>();
    const Real pi = boost::math::constants::pi<Real>();
    Theorem2Params<Real> p;
    p.omega = a / (3 * e) * sqrt(kr);
    p.omega_prime = 2 / a * p.omega;
    p.c_statement = 2 * pi / exp(1 + e * e / 2);
    p.c_proof = 2 * pi / (3 * e) * exp(e * e / 2);
    auto n_for = [&](const Real& c) {
        return pow(c * a, Real(1) / kr) * (kr / e) * (kr / e) * pow(kr, Real(3) / (2 * kr));
    };
    p.n_statement = n_for(p.c_statement);
    p.n_proof = n_for(p.c_proof);
    p.expected_c_statement = expected_consistent(p.n_statement, k);
    p.expected_c_proof = expected_consistent(p.n_proof, k);
    p.discrepancy = p.c_statement != p.c_proof;
    return p;
}

struct Eq4Point {
    unsigned k = 0;
    std::uint64_t n = 0;        // ceil(theorem1_n(k))
    double log_value = 0;       // union_bound_log at working precision, rounded to double
    bool negative = false;
    bool cross_check_agrees = false;  // same sign at the doubled precision
};

struct Eq4Scan {
    std::vector<Eq4Point> points;
    std::optional<unsigned> threshold;  // least k0 with every k in [k0, k_max] certified
};

// Evaluates the union bound at n = ceil(theorem1_n(k)) for k in [k_min, k_max] at Real and at the
// doubled precision Real2.
template<class Real, class Real2>
Eq4Scan eq4_scan(unsigned k_min, unsigned k_max) {
    Eq4Scan scan;
    for (unsigned k = std::max(2u, k_min); k <= k_max; ++k) {
        Eq4Point pt;
        pt.k = k;
        pt.n = theorem1_n_ceil<Real>(k);
        const auto value = union_bound_log<Real>(pt.n, k);
        const auto check = union_bound_log<Real2>(theorem1_n_ceil<Real2>(k), k);
        pt.log_value = static_cast<double>(value);
        pt.negative = value < 0;
        pt.cross_check_agrees = (check < 0) == pt.negative && theorem1_n_ceil<Real2>(k) == pt.n;
        scan.points.push_back(pt);
    }
    for (auto it = scan.points.rbegin(); it != scan.points.rend(); ++it) {
        if (!(it->negative && it->cross_check_agrees)) {
            break;
        }
        scan.threshold = it->k;
    }
    return scan;
}

// Least k0 in [2, k_max] such that C(n,k)/k! <= k^2 ln k at n = theorem1_n(k) for all k in [k0, k_max].
template<class Real>
std::optional<unsigned> eq3_threshold(unsigned k_max) {
    std::optional<unsigned> threshold;
    for (unsigned k = k_max; k >= 2; --k) {
        if (!eq3_ratio<Real>(k).within_eq3) {
            break;
        }
        threshold = k;
    }
    return threshold;
}

template<class Real>
std::string to_decimal(const Real& x, unsigned digits) {
    return x.str(static_cast<std::streamsize>(digits), std::ios_base::fmtflags(0));
}

}
