#include "aee/potential.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "aee/errors.hpp"

namespace aee {

cplx ipow(cplx z, int e) {
    if (e < 0) {
        return 1.0 / ipow(z, -e);
    }
    cplx result{1.0, 0.0};
    while (e > 0) {
        if (e & 1) result *= z;
        z *= z;
        e >>= 1;
    }
    return result;
}

Potential::Potential(int N, std::vector<cplx> betas, double hbar)
    : N_(N), betas_(std::move(betas)), hbar_(hbar) {
    if (N_ < 1) {
        throw DomainError("potential: N must be >= 1 (even-degree potentials are not supported), got " +
                          std::to_string(N_));
    }
    if (betas_.size() != static_cast<std::size_t>(2 * N_)) {
        throw DimensionError("potential: expected " + std::to_string(2 * N_) + " betas for N=" +
                             std::to_string(N_) + ", got " + std::to_string(betas_.size()));
    }
    if (!(hbar_ > 0.0) || !std::isfinite(hbar_)) {
        throw DomainError("potential: hbar must be positive and finite");
    }
}

cplx Potential::beta(int k) const {
    if (k < 1 || k > 2 * N_) {
        throw RangeError("potential: beta index " + std::to_string(k) + " outside 1.." +
                         std::to_string(2 * N_));
    }
    return betas_[static_cast<std::size_t>(k - 1)];
}

cplx Potential::operator()(cplx x) const {
    // i^(2N+1) = i (-1)^N
    const cplx lead = (N_ % 2 == 0) ? cplx{0.0, 1.0} : cplx{0.0, -1.0};
    cplx acc = lead;
    for (const cplx& b : betas_) {
        acc = acc * x + b;
    }
    return acc * x;
}

Potential new_potential(int N, std::vector<cplx> betas, double hbar) {
    return Potential(N, std::move(betas), hbar);
}

Potential two_term_potential(int N, cplx b, double hbar) {
    std::vector<cplx> betas(static_cast<std::size_t>(2 * std::max(N, 0)), cplx{});
    if (!betas.empty()) {
        betas.back() = b;
    }
    return Potential(N, std::move(betas), hbar);
}

bool is_pt_symmetric(const Potential& p, double tol) {
    for (int k = 1; k <= 2 * p.N(); ++k) {
        const cplx b = p.beta(k);
        const double offending = (k % 2 == 1) ? b.imag() : b.real();
        if (std::abs(offending) > tol) {
            return false;
        }
    }
    return true;
}

cplx evaluate(const Potential& p, cplx x) { return p(x); }

double BranchPointPair::angle() const { return std::arg(upper()); }

BranchPointPair branch_points(int N) {
    if (N < 1) {
        throw DomainError("branch_points: N must be >= 1");
    }
    const double M = 2.0 * N + 1.0;
    const double sign_left = (N % 2 == 0) ? 1.0 : -1.0;
    const cplx left = sign_left * std::polar(1.0, N * std::numbers::pi / M);
    const cplx right = -sign_left * std::polar(1.0, (N + 1) * std::numbers::pi / M);
    return {left, right};
}

BranchPointPair branch_points(const Potential& p) { return branch_points(p.N()); }

}  // namespace aee
