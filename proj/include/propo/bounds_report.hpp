#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bounds.hpp"

namespace propo {

// A reported real: decimal string at working precision, a double for convenience, and whether a
// (1 + o(1)) factor was dropped to obtain it.
struct Quantity {
    std::string value;
    double approx = 0;
    bool asymptotic = false;
};

struct BoundsReport {
    unsigned k = 0;
    std::optional<double> alpha;
    std::optional<std::uint64_t> n;
    unsigned precision_digits = 0;

    std::vector<std::pair<std::string, Quantity>> quantities;  // in report order
    std::string factorial_lower;                                // exact k!
    std::uint64_t n_thm1_ceil = 0;
    std::optional<bool> eq4_certified;                          // union bound negative at ceil(n_thm1)
    std::optional<bool> eq4_cross_check_agrees;
    std::optional<bool> eq4_certified_at_n;                     // same, at the user-given n
    std::optional<bool> c_discrepancy;

    const Quantity* find(const std::string& name) const {
        for (const auto& [key, q] : quantities) {
            if (key == name) {
                return &q;
            }
        }
        return nullptr;
    }
};

namespace detail {

template<class Real>
Quantity quantity(const Real& x, unsigned digits, bool asymptotic) {
    return {to_decimal(x, digits), static_cast<double>(x), asymptotic};
}

template<class Real, class Real2>
BoundsReport compute_bounds(unsigned k, std::optional<double> alpha, std::optional<std::uint64_t> n, unsigned digits) {
    BoundsReport r;
    r.k = k;
    r.alpha = alpha;
    r.n = n;
    r.precision_digits = digits;
    auto add = [&](const std::string& name, const Real& x, bool asymptotic) {
        r.quantities.emplace_back(name, quantity(x, digits, asymptotic));
    };

    r.factorial_lower = factorial_lower_bound(k).str();
    add("upper_bound_value", upper_bound_value<Real>(k), false);
    const Real n1 = theorem1_n<Real>(k);
    add("n_thm1", n1, false);
    r.n_thm1_ceil = theorem1_n_ceil<Real>(k);

    const auto eq3 = eq3_ratio<Real>(k);
    add("eq3_value", eq3.value, false);
    add("eq3_ratio_to_half_k2_lnk", eq3.ratio, false);
    add("eq3_fact_approx_ratio", eq3.fact_approx_ratio, true);

    if (r.n_thm1_ceil >= k) {
        const auto eq4 = union_bound_log<Real>(r.n_thm1_ceil, k);
        const auto eq4_check = union_bound_log<Real2>(theorem1_n_ceil<Real2>(k), k);
        add("eq4_log", eq4, false);
        r.eq4_certified = eq4 < 0;
        r.eq4_cross_check_agrees = (eq4_check < 0) == (eq4 < 0);
    }

    const Real e = detail::euler<Real>();
    const auto fact_n = n ? *n : static_cast<std::uint64_t>(round((Real(k) / e) * (Real(k) / e)));
    if (fact_n >= k) {
        add("fact_ratio", fact_ratio<Real>(fact_n, k), false);
    }
    add("fact_limit", fact_limit<Real>(), true);

    if (n) {
        if (*n < k) {
            throw input_error("--n must be at least k");
        }
        const auto at_n = union_bound_log<Real>(*n, k);
        add("union_bound_log_at_n", at_n, false);
        r.eq4_certified_at_n = at_n < 0;
        add("expected_consistent_at_n", expected_consistent(Real(*n), k), false);
    }

    if (alpha) {
        const auto p = theorem2_params<Real>(k, *alpha);
        add("omega", p.omega, true);
        add("omega_prime", p.omega_prime, true);
        add("c_statement", p.c_statement, false);
        add("c_proof", p.c_proof, false);
        add("n_thm2_statement", p.n_statement, true);
        add("n_thm2_proof", p.n_proof, true);
        add("expected_consistent_statement", p.expected_c_statement, false);
        add("expected_consistent_proof", p.expected_c_proof, false);
        r.c_discrepancy = p.discrepancy;
    }
    return r;
}

}

inline constexpr unsigned default_precision_digits = 50;

// Evaluates at the smallest supported tier >= digits (50, 100, 200, 400), cross-checking the
// union-bound sign at the next tier up.
inline BoundsReport bounds_report(unsigned k, std::optional<double> alpha = {}, std::optional<std::uint64_t> n = {},
                                  unsigned digits = default_precision_digits) {
    if (k < 2) {
        throw input_error("k must be at least 2");
    }
    if (alpha && !(*alpha > 0 && *alpha < 1)) {
        throw input_error("alpha must lie in the open interval (0, 1)");
    }
    if (digits <= 50) {
        return detail::compute_bounds<real_t<50>, real_t<100>>(k, alpha, n, 50);
    }
    if (digits <= 100) {
        return detail::compute_bounds<real_t<100>, real_t<200>>(k, alpha, n, 100);
    }
    if (digits <= 200) {
        return detail::compute_bounds<real_t<200>, real_t<400>>(k, alpha, n, 200);
    }
    if (digits <= 400) {
        return detail::compute_bounds<real_t<400>, real_t<800>>(k, alpha, n, 400);
    }
    throw input_error("precision above 400 digits is not supported");
}

}
