#include "aee/coefficient_table.hpp"

#include <complex>

#include "aee/errors.hpp"

namespace aee {

namespace {

// Polynomial in w; index q holds the coefficient of w^q. Term 0 (w^-1) is
// handled separately and never stored here.
using WPoly = std::vector<cplx>;

cplx ipow_neg_i(int e) {
    // (-i)^e
    static const cplx cycle[4] = {{1, 0}, {0, -1}, {-1, 0}, {0, 1}};
    return cycle[((e % 4) + 4) % 4];
}

void add_into(WPoly& dst, std::size_t q, cplx v) {
    if (dst.size() <= q) {
        dst.resize(q + 1, cplx{});
    }
    dst[q] += v;
}

}  // namespace

cplx CoefficientTable::at(int s, int l) const {
    if (s < 0 || l < 0 || ((s + l) % 2) == 0) {
        return {};
    }
    auto it = entries.find({s, l});
    return it == entries.end() ? cplx{} : it->second;
}

int CoefficientTable::term_index(int s, int l) const noexcept {
    return parity == Parity::even ? s + l + 1 : s + l + 2;
}

int CoefficientTable::max_term_index() const noexcept {
    return parity == Parity::even ? 2 * max_order : 2 * max_order + 1;
}

TablePair build_tables(const Potential& p, int max_order, const TableFaults& faults) {
    if (max_order < 1) {
        throw DomainError("build_tables: max_order must be >= 1");
    }
    const int N = p.N();
    const int M = 2 * N + 1;
    const double hbar = p.hbar();
    const int k_max = 2 * max_order + 1;

    // F[k] for k >= 1; a_k = y^((M-k)/2) F_k(w), a_0 = y^(M/2) w^-1.
    std::vector<WPoly> F(static_cast<std::size_t>(k_max + 1));
    for (int k = 1; k <= k_max; ++k) {
        WPoly S;
        for (int i = 1; i < k; ++i) {
            const WPoly& A = F[static_cast<std::size_t>(i)];
            const WPoly& B = F[static_cast<std::size_t>(k - i)];
            for (std::size_t qa = 0; qa < A.size(); ++qa) {
                if (A[qa] == cplx{}) continue;
                for (std::size_t qb = 0; qb < B.size(); ++qb) {
                    if (B[qb] == cplx{}) continue;
                    add_into(S, qa + qb, A[qa] * B[qb]);
                }
            }
        }
        const int m = k - M - 2;
        if (m >= 0) {
            // hbar * y-derivative of a_m, rewritten in w: e = (M - m)/2.
            const double e = 0.5 * (M - m);
            if (m == 0) {
                add_into(S, 1, -0.5 * M * hbar * faults.hbar_seed_scale);
            } else {
                const WPoly& G = F[static_cast<std::size_t>(m)];
                for (std::size_t q = 0; q < G.size(); ++q) {
                    if (G[q] == cplx{}) continue;
                    const double qm = 0.5 * static_cast<double>(q) * M;
                    add_into(S, q, hbar * (e + qm) * G[q]);
                    add_into(S, q + 2, hbar * qm * G[q]);
                }
            }
        }
        if (k % 2 == 0 && k / 2 <= 2 * N) {
            const int b = k / 2;
            add_into(S, 0, p.beta(b) * ipow_neg_i(M - b));
        }
        WPoly& out = F[static_cast<std::size_t>(k)];
        out.assign(S.size() + 1, cplx{});
        for (std::size_t q = 0; q < S.size(); ++q) {
            out[q + 1] = -0.5 * S[q];
        }
    }

    TablePair tables;
    tables.even.parity = Parity::even;
    tables.odd.parity = Parity::odd;
    tables.even.max_order = tables.odd.max_order = max_order;
    tables.even.potential = tables.odd.potential = p;
    for (int k = 1; k <= k_max; ++k) {
        const bool even = (k % 2 == 0);
        CoefficientTable& t = even ? tables.even : tables.odd;
        const WPoly& f = F[static_cast<std::size_t>(k)];
        for (std::size_t q = 0; q < f.size(); ++q) {
            if (f[q] == cplx{}) continue;
            const int l = static_cast<int>(q);
            const int s = even ? k - 1 - l : k - 2 - l;
            if (s < 0) {
                throw Error("build_tables: negative row index produced at term " + std::to_string(k));
            }
            t.entries[{s, l}] = -f[q];
        }
    }
    return tables;
}

CoefficientTable build_table(const Potential& p, Parity parity, int max_order) {
    TablePair t = build_tables(p, max_order);
    return parity == Parity::even ? std::move(t.even) : std::move(t.odd);
}

}  // namespace aee
