#pragma once

#include <optional>

#include "aee/coefficient_table.hpp"
#include "aee/potential.hpp"

namespace aee {

/// sqrt(1 - y^M) on the branch continued from +1 at y = 0 along the segment [0, y].
cplx radical_branch(int N, cplx y);

/// Default number of series coefficients for a_n_taylor: ceil(n/(2N+3)) + 4.
int default_taylor_depth(int N, int n_target);

/// The local term a_{n_target}(y0), computed by running the defining
/// recurrence in truncated power-series arithmetic about y0.
///
/// `depth` is the number of coefficients carried; each nested derivative costs
/// one. Throws InsufficientDepthError when depth < ceil(n/(2N+3)) + 2 and
/// SingularityError when |1 - y0^(2N+1)| <= 1e-8. `a0_branch` overrides the
/// value of sqrt(1 - y0^(2N+1)) (either root sign).
cplx a_n_taylor(const Potential& p, cplx y0, int n_target, std::optional<int> depth = std::nullopt,
                std::optional<cplx> a0_branch = std::nullopt);

/// The same term from the coefficient tables. Throws RangeError when the
/// matching family does not reach `index`.
cplx a_m_closed_form(const TablePair& tables, cplx y, int index,
                     std::optional<cplx> a0_branch = std::nullopt);

/// Convenience overload building tables just large enough for `index`.
cplx a_m_closed_form(const Potential& p, cplx y, int index);

}  // namespace aee
