#pragma once
// Scalar momentum-space kernels: sigma, the averaging symbols u_+ and u_n,
// the derivative-intertwiner factors, frakQ_n, D_n, the lattice Laplacian,
// and the comparison Green's function S'_n.  Everything is entire in the
// momentum via sinc ratios; removable singularities never appear explicitly.

#include <functional>

#include "blocklat/lattice.hpp"

namespace blocklat {

/// sin(z)/z, entire; even Taylor series of degree 8 below |z| = 1e-2.
Cplx sinc(Cplx z);

/// sigma(k) = sin(k0/2) prod_nu sin(kbar_nu/2)
Cplx sigma(const Cplx4& k);

/// Dispersion h0-hat: entire, even, >= 0 on reals, Hessian H at 0.
struct DispersionH0 {
  DispersionId id = DispersionId::CosineLaplacian;
  Cplx operator()(const Cplx& p1, const Cplx& p2, const Cplx& p3) const;
  double hessian_diag() const { return 2.0; }  // H = 2*Id for the cosine choice
};

// ---- averaging symbols -------------------------------------------------

/// per-axis factor of u_n: s(p/2) / s(eps_{n,nu} p/2)
Cplx un_axis_factor(Cplx p, double eps_axis);
/// per-axis factor of u_+: s(L_nu k/2) / s(k/2)
Cplx uplus_axis_factor(Cplx k, std::int64_t L_axis);

/// u_n(p) = prod_nu s(p_nu/2)/s(eps_{n,nu} p_nu/2)
Cplx u_n(const Cplx4& p, int n, int L);
/// u_+(k) = sigma(L k)/(L^5 sigma(k)) = prod_nu s(L_nu k_nu/2)/s(k_nu/2)
Cplx u_plus(const Cplx4& k, int L);

enum class AvgKind { Scale, Plus };  // u_n vs u_+
enum class Sign { Plus, Minus };

/// zeta^(s)_{.,nu}(k,l) * u^(s)_{.,nu}(k+l):  the full entire prefactor of
/// u^(q-1) in the derivative intertwiners.  l must be a minimal
/// representative of the matching period cell.
Cplx u_deriv_factor(AvgKind kind, int nu, Sign sign, const Cplx4& k,
                    const Real4& l, int n, int L);

/// forward-derivative multiplier 2i e^{i eps p/2} sin(eps p/2)/eps
Cplx deriv_multiplier(Cplx p, double eps_axis);

// ---- composite symbols ---------------------------------------------------

/// a_n = a (1-L^-2)/(1-L^-2n), n >= 1
double a_n(int n, int L, double a);

/// frakQ_n-hat(k) = a [1 + sum_{j=1}^{n-1} sum_{l in BHat_j} L^-2j
///                  u_j(k+l)^{2q}]^{-1}; the double sum factorizes per axis
/// and is evaluated exactly.
Cplx frakQ_hat(const Cplx4& k, int n, int L, double a, int qexp);

/// D_n-hat(p): heat-kernel-regularized forward time derivative plus spatial
/// dispersion, entire, spatially even.
Cplx D_hat(const Cplx4& p, int n, int L, const DispersionH0& h0);

/// Lattice Laplacian symbol Delta_n(p) = [sin(eps_n^2 p0/2)/(eps_n^2/2)]^2 +
/// sum_nu [sin(eps_n pbar_nu/2)/(eps_n/2)]^2
Cplx laplacian_hat(const Cplx4& p, int n, int L);

/// a_n * exp(-Delta_n(p))
Cplx heat_multiplier(const Cplx4& p, int n, int L, double an);

/// S'_n-hat(p) = 1/(D_n-hat(p) + a_n exp(-Delta_n(p))).
/// Throws on an (unexpected) zero denominator.
Cplx Sprime_hat(const Cplx4& p, int n, int L, double an, const DispersionH0& h0);

struct SingularEvaluation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---- exact per-axis fiber sums -------------------------------------------

/// sum over l in BHat_j of prod_nu f(k_nu + l_nu)^{2q}; exact factorized
/// evaluation, cost L^{2j} + 3 L^j.
Cplx bhat_sum_u_pow(const Cplx4& k, int j, int L, int pow2q);

/// Generic fiber sum over BHat_n of w(k+l) * u_n(k+l)^{upow}.  Exact full
/// enumeration when |BHat_n| <= full_cap; otherwise envelope-ordered partial
/// summation: terms are visited in decreasing order of the product envelope
/// prod (24/(|l_nu|+pi))^{upow} and a branch is cut once its envelope falls
/// below tail_rel times the largest term seen, which at double precision
/// leaves the sum bit-unchanged for uniformly bounded weights.
struct FiberSumOptions {
  std::int64_t full_cap = 2'000'000;
  double tail_rel = 1e-16;
  bool skip_zero = false;  // omit the l = 0 term
};
Cplx fiber_sum_un(
    const Cplx4& k, int n, int L, int upow,
    const std::function<Cplx(const Cplx4&)>& weight,
    const FiberSumOptions& opt = {});

}  // namespace blocklat
