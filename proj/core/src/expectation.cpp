#include "jitterdisc/expectation.hpp"

#include <string>
#include <vector>

#include "jitterdisc/numeric.hpp"

namespace jitterdisc {

namespace {

void validate_params(std::int64_t m, int d) {
    if (m < 1) throw ParameterError("m must be >= 1, got " + std::to_string(m));
    if (d < 1) throw ParameterError("d must be >= 1, got " + std::to_string(d));
}

}  // namespace

double expected_l2_squared(std::int64_t m, int d) {
    validate_params(m, d);
    const double md = static_cast<double>(m);
    const double m_sq = md * md;
    // a^k b^{d-1-k} / m^{2(d-1)} as alpha^k beta^{d-1-k}; both bases are < 1,
    // so the partial products cannot overflow.
    const double alpha = 0.5 / md;                   // (m/2) / m^2
    const double beta = (3.0 * md - 1.0) / (6.0 * m_sq);  // ((3m-1)/6) / m^2
    std::vector<double> alpha_pow(d), beta_pow(d);
    alpha_pow[0] = beta_pow[0] = 1.0;
    for (int k = 1; k < d; ++k) {
        alpha_pow[k] = alpha_pow[k - 1] * alpha;
        beta_pow[k] = beta_pow[k - 1] * beta;
    }
    double sum = 0.0;
    for (int k = 0; k < d; ++k) sum += alpha_pow[k] * beta_pow[d - 1 - k];
    return sum / 6.0 / m_sq;  // (a - b) = 1/6 and the remaining m^{-2}
}

double expected_l2_squared_d2(std::int64_t m) {
    validate_params(m, 2);
    const double md = static_cast<double>(m);
    return (6.0 * md - 1.0) / (36.0 * md * md * md * md);
}

double expected_projected_l2_squared(std::int64_t m, int d, SubsetMask subset) {
    validate_params(m, d);
    if (subset.empty()) throw ParameterError("projection subset must be nonempty");
    if (!subset.within_dim(d)) {
        throw ParameterError("projection subset uses axes beyond dimension " + std::to_string(d));
    }
    const int card = subset.count();
    // m^{-(d+|s|)} [a^|s| - b^|s|] = m^{-(d-|s|)} * E[L2^2] at dimension |s|.
    return div_pow_int(expected_l2_squared(m, card), static_cast<double>(m), d - card);
}

double expected_hickernell_squared(std::int64_t m, int d) {
    validate_params(m, d);
    double total = 0.0;
    for (int j = 1; j <= d; ++j) {
        total += binomial(d, j) *
                 div_pow_int(expected_l2_squared(m, j), static_cast<double>(m), d - j);
    }
    return total;
}

AsymptoticEnvelope asymptotic_envelope_l2(std::int64_t m, int d) {
    validate_params(m, d);
    if (m < 2) throw ParameterError("asymptotic envelope requires m >= 2");
    const double md = static_cast<double>(m);
    const double m_sq = md * md;
    const double lower = (static_cast<double>(d) / 6.0) *
                         pow_int((md - 1.0) / (2.0 * m_sq), d - 1) / m_sq;
    const double exponent = -(0.5 + 0.5 / static_cast<double>(d));
    return {lower, exponent};
}

ExpectationResult evaluate_expectation(std::int64_t m, int d, DiscrepancyKind kind,
                                       std::optional<SubsetMask> subset) {
    ExpectationResult res;
    res.m = m;
    res.d = d;
    res.kind = kind;
    switch (kind) {
        case DiscrepancyKind::L2:
            res.value = expected_l2_squared(m, d);
            break;
        case DiscrepancyKind::ProjectedL2:
            if (!subset) throw ParameterError("projected expectation requires a subset");
            res.subset = subset;
            res.value = expected_projected_l2_squared(m, d, *subset);
            break;
        case DiscrepancyKind::HickernellL2:
            res.value = expected_hickernell_squared(m, d);
            break;
    }
    return res;
}

}  // namespace jitterdisc
