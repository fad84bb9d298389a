#include "aee/taylor.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "aee/errors.hpp"

namespace aee {

namespace {

// Truncated power series in t = y - y0; all series share one length.
using Series = std::vector<cplx>;

Series mul(const Series& a, const Series& b) {
    Series r(a.size(), cplx{});
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == cplx{}) continue;
        for (std::size_t j = 0; i + j < r.size(); ++j) {
            r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

Series reciprocal(const Series& a) {
    Series r(a.size(), cplx{});
    r[0] = 1.0 / a[0];
    for (std::size_t k = 1; k < a.size(); ++k) {
        cplx acc{};
        for (std::size_t i = 1; i <= k; ++i) {
            acc += a[i] * r[k - i];
        }
        r[k] = -acc * r[0];
    }
    return r;
}

Series sqrt_series(const Series& a, cplx root0) {
    Series r(a.size(), cplx{});
    r[0] = root0;
    for (std::size_t k = 1; k < a.size(); ++k) {
        cplx acc = a[k];
        for (std::size_t i = 1; i < k; ++i) {
            acc -= r[i] * r[k - i];
        }
        r[k] = acc / (2.0 * root0);
    }
    return r;
}

// Derivative; the top coefficient becomes unknown and is zero-filled.
Series derivative(const Series& a) {
    Series r(a.size(), cplx{});
    for (std::size_t k = 1; k < a.size(); ++k) {
        r[k - 1] = static_cast<double>(k) * a[k];
    }
    return r;
}

// (y0 + t)^e for integer e >= 0, truncated.
Series monomial(cplx y0, int e, std::size_t len) {
    Series r(len, cplx{});
    double binom = 1.0;
    for (std::size_t k = 0; k < len && static_cast<int>(k) <= e; ++k) {
        r[k] = binom * ipow(y0, e - static_cast<int>(k));
        binom = binom * (e - static_cast<double>(k)) / (static_cast<double>(k) + 1.0);
    }
    return r;
}

cplx ipow_neg_i(int e) {
    static const cplx cycle[4] = {{1, 0}, {0, -1}, {-1, 0}, {0, 1}};
    return cycle[((e % 4) + 4) % 4];
}

cplx choose_branch(int N, cplx y, std::optional<cplx> hint) {
    const cplx principal = std::sqrt(1.0 - ipow(y, 2 * N + 1));
    if (!hint) {
        return radical_branch(N, y);
    }
    return std::abs(*hint - principal) <= std::abs(*hint + principal) ? principal : -principal;
}

}  // namespace

cplx radical_branch(int N, cplx y) {
    const int M = 2 * N + 1;
    constexpr int kSteps = 256;
    cplx prev{1.0, 0.0};
    for (int i = 1; i <= kSteps; ++i) {
        const cplx yi = y * (static_cast<double>(i) / kSteps);
        const cplx r = std::sqrt(1.0 - ipow(yi, M));
        prev = std::abs(r - prev) <= std::abs(r + prev) ? r : -r;
    }
    return prev;
}

int default_taylor_depth(int N, int n_target) {
    const int level = 2 * N + 3;
    return (n_target + level - 1) / level + 4;
}

cplx a_n_taylor(const Potential& p, cplx y0, int n_target, std::optional<int> depth,
                std::optional<cplx> a0_branch) {
    if (n_target < 0) {
        throw RangeError("a_n_taylor: negative index");
    }
    const int N = p.N();
    const int M = 2 * N + 1;
    const int level = 2 * N + 3;
    const int needed = (n_target + level - 1) / level + 2;
    const int L = depth.value_or(default_taylor_depth(N, n_target));
    if (L < needed) {
        throw InsufficientDepthError("a_n_taylor: depth " + std::to_string(L) + " < required " +
                                     std::to_string(needed) + " for index " +
                                     std::to_string(n_target));
    }
    const cplx radicand0 = 1.0 - ipow(y0, M);
    if (std::abs(radicand0) <= 1e-8) {
        throw SingularityError("a_n_taylor: y0 sits on a branch point");
    }
    const auto len = static_cast<std::size_t>(L);
    Series radicand = monomial(y0, M, len);
    for (auto& c : radicand) c = -c;
    radicand[0] += 1.0;
    const Series a0 = sqrt_series(radicand, choose_branch(N, y0, a0_branch));
    if (n_target == 0) {
        return a0[0];
    }
    Series half_inv = reciprocal(a0);
    for (auto& c : half_inv) c *= 0.5;

    std::vector<Series> a(static_cast<std::size_t>(n_target + 1));
    a[0] = a0;
    for (int n = 1; n <= n_target; ++n) {
        Series S(len, cplx{});
        for (int i = 1; i < n; ++i) {
            const Series prod = mul(a[static_cast<std::size_t>(i)], a[static_cast<std::size_t>(n - i)]);
            for (std::size_t k = 0; k < len; ++k) S[k] += prod[k];
        }
        const int m = n - level;
        if (m >= 0) {
            const Series d = derivative(a[static_cast<std::size_t>(m)]);
            for (std::size_t k = 0; k < len; ++k) S[k] += p.hbar() * d[k];
        }
        if (n % 2 == 0 && n / 2 <= 2 * N) {
            const int b = n / 2;
            const Series mono = monomial(y0, M - b, len);
            const cplx c = p.beta(b) * ipow_neg_i(M - b);
            for (std::size_t k = 0; k < len; ++k) S[k] += c * mono[k];
        }
        Series an = mul(S, half_inv);
        for (auto& c : an) c = -c;
        a[static_cast<std::size_t>(n)] = std::move(an);
    }
    return a[static_cast<std::size_t>(n_target)][0];
}

cplx a_m_closed_form(const TablePair& tables, cplx y, int index, std::optional<cplx> a0_branch) {
    if (index < 0) {
        throw RangeError("a_m_closed_form: negative index");
    }
    const Potential& p = tables.even.potential;
    const int M = p.degree();
    const cplx a0 = choose_branch(p.N(), y, a0_branch);
    if (index == 0) {
        return a0;
    }
    const CoefficientTable& t = (index % 2 == 0) ? tables.even : tables.odd;
    if (index > t.max_term_index()) {
        throw RangeError("a_m_closed_form: index " + std::to_string(index) +
                         " exceeds table capacity " + std::to_string(t.max_term_index()));
    }
    cplx acc{};
    for (const auto& [key, value] : t.entries) {
        const auto [s, l] = key;
        if (t.term_index(s, l) != index) continue;
        const int twice_power = M - index + M * l;
        acc += value * ipow(y, twice_power / 2) * ipow(a0, -l);
    }
    return -acc;
}

cplx a_m_closed_form(const Potential& p, cplx y, int index) {
    const int order = std::max(1, (index + 1) / 2);
    return a_m_closed_form(build_tables(p, order), y, index);
}

}  // namespace aee
