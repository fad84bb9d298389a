#pragma once

#include <map>
#include <utility>
#include <vector>

#include "aee/potential.hpp"

namespace aee {

enum class Parity { even, odd };

/// Sparse A_{s,l} coefficients for one index family of the local action terms.
///
/// With M = 2N+1, a0 = sqrt(1 - y^M) and w = y^(M/2)/a0, every term reads
///   a_k(y) = -sum_l A_{s,l} y^((M - k + M l)/2) a0^(-l)
/// where s = k-1-l for even k and s = k-2-l for odd k. Missing entries are zero.
struct CoefficientTable {
    Parity parity = Parity::even;
    /// Terms a_{2m} (even) or a_{2m+1} (odd) are present for m <= max_order.
    int max_order = 0;
    Potential potential{1, {cplx{}, cplx{}}, 1.0};
    std::map<std::pair<int, int>, cplx> entries;

    cplx at(int s, int l) const;
    /// Index k of the local term an entry (s, l) belongs to.
    int term_index(int s, int l) const noexcept;
    /// Largest term index k held by this family.
    int max_term_index() const noexcept;
};

struct TablePair {
    CoefficientTable even;
    CoefficientTable odd;
};

/// Fault injection for mutation tests: scales the hbar-derived seed a_{2N+3}.
struct TableFaults {
    cplx hbar_seed_scale{1.0, 0.0};
};

/// Builds both families together; the even-index terms consume odd-index
/// products (a_{2N+3}^2 feeds a_{4N+6}), so they cannot be built apart.
TablePair build_tables(const Potential& p, int max_order, const TableFaults& faults = {});

/// Throws DomainError for max_order < 1.
CoefficientTable build_table(const Potential& p, Parity parity, int max_order);

}  // namespace aee
