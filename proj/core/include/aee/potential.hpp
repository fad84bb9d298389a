#pragma once

#include <complex>
#include <span>
#include <vector>

namespace aee {

using cplx = std::complex<double>;

/// z^e for integer e by repeated squaring; exact at z = 0 for e >= 0.
cplx ipow(cplx z, int e);

/// Odd-degree polynomial potential V(x) = (ix)^(2N+1) + beta_1 x^(2N) + ... + beta_2N x.
///
/// betas()[k-1] holds beta_k, the coefficient of x^(2N+1-k). The leading
/// coefficient i^(2N+1) is implicit. Instances are immutable once built.
class Potential {
public:
    /// Throws DomainError for N < 1 or hbar <= 0, DimensionError when betas.size() != 2N.
    Potential(int N, std::vector<cplx> betas, double hbar = 1.0);

    int N() const noexcept { return N_; }
    /// Degree 2N+1 of the leading term.
    int degree() const noexcept { return 2 * N_ + 1; }
    double hbar() const noexcept { return hbar_; }
    std::span<const cplx> betas() const noexcept { return betas_; }
    /// beta_k for 1 <= k <= 2N (1-based, matching the polynomial's own labels).
    cplx beta(int k) const;

    /// V(x) by Horner's rule.
    cplx operator()(cplx x) const;

    friend bool operator==(const Potential&, const Potential&) = default;

private:
    int N_;
    std::vector<cplx> betas_;
    double hbar_;
};

/// Checked factory mirroring the constructor.
Potential new_potential(int N, std::vector<cplx> betas, double hbar = 1.0);

/// Potential (ix)^(2N+1) + b x, the two-term family.
Potential two_term_potential(int N, cplx b, double hbar = 1.0);

/// PT symmetry: odd-k betas real, even-k betas imaginary (1e-14 absolute on the
/// offending part). Equivalent to conj(V(-conj(x))) == V(x).
bool is_pt_symmetric(const Potential& p, double tol = 1e-14);

cplx evaluate(const Potential& p, cplx x);

/// The two enclosed roots of y^(2N+1) = 1 in scaled coordinates.
struct BranchPointPair {
    cplx left;   // (-1)^N e^{i N pi/(2N+1)}
    cplx right;  // (-1)^(N+1) e^{i (N+1) pi/(2N+1)}

    /// The member lying in the upper half plane.
    cplx upper() const noexcept { return left.imag() > 0.0 ? left : right; }
    cplx lower() const noexcept { return left.imag() > 0.0 ? right : left; }
    /// arg(upper()), in (0, pi).
    double angle() const;
};

BranchPointPair branch_points(int N);
BranchPointPair branch_points(const Potential& p);

}  // namespace aee
