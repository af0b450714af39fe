#include "blocklat/symbols.hpp"

#include <cmath>
#include <numbers>

namespace blocklat {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

inline Cplx cpow_int(Cplx z, int p) {
  Cplx r(1, 0);
  Cplx base = z;
  int e = p;
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}
}  // namespace

Cplx sinc(Cplx z) {
  const double m = std::abs(z);
  if (m < 1e-2) {
    const Cplx z2 = z * z;
    return 1.0 + z2 * (-1.0 / 6.0 +
                       z2 * (1.0 / 120.0 +
                             z2 * (-1.0 / 5040.0 + z2 * (1.0 / 362880.0))));
  }
  return std::sin(z) / z;
}

Cplx sigma(const Cplx4& k) {
  return std::sin(0.5 * k[0]) * std::sin(0.5 * k[1]) * std::sin(0.5 * k[2]) *
         std::sin(0.5 * k[3]);
}

Cplx DispersionH0::operator()(const Cplx& p1, const Cplx& p2,
                              const Cplx& p3) const {
  // 2(1-cos p) per axis: entire, even, zero set 2 pi Z^3, Hessian 2 Id
  return 2.0 * (3.0 - std::cos(p1) - std::cos(p2) - std::cos(p3));
}

Cplx un_axis_factor(Cplx p, double eps_axis) {
  return sinc(0.5 * p) / sinc(0.5 * eps_axis * p);
}

Cplx uplus_axis_factor(Cplx k, std::int64_t L_axis) {
  return sinc(0.5 * double(L_axis) * k) / sinc(0.5 * k);
}

Cplx u_n(const Cplx4& p, int n, int L) {
  const double eps = std::pow(double(L), -n);
  Cplx r = un_axis_factor(p[0], eps * eps);
  for (int ax = 1; ax < 4; ++ax) r *= un_axis_factor(p[ax], eps);
  return r;
}

Cplx u_plus(const Cplx4& k, int L) {
  Cplx r = uplus_axis_factor(k[0], std::int64_t(L) * L);
  for (int ax = 1; ax < 4; ++ax) r *= uplus_axis_factor(k[ax], L);
  return r;
}

Cplx u_deriv_factor(AvgKind kind, int nu, Sign sign, const Cplx4& k,
                    const Real4& l, int n, int L) {
  const Cplx i(0, 1);
  if (kind == AvgKind::Scale) {
    const double eps = std::pow(double(L), -n);
    const Real4 eps_ax = {eps * eps, eps, eps, eps};
    // u^(+)_{n,nu} omits the nu-th ratio; u^(-)_{n,nu} doubles it
    Cplx u(1, 0);
    for (int ax = 0; ax < 4; ++ax) {
      const Cplx f = un_axis_factor(k[ax] + l[ax], eps_ax[ax]);
      if (ax == nu) {
        if (sign == Sign::Minus) u *= f * f;
      } else {
        u *= f;
      }
    }
    const Cplx knu = k[nu];
    const Cplx pnu = k[nu] + l[nu];
    const double cl = std::cos(0.5 * l[nu]);  // l_nu in 2 pi Z -> +-1
    const Cplx zeta =
        (sign == Sign::Plus)
            ? std::exp(i * (0.5 * eps_ax[nu] * pnu)) * std::exp(-i * (0.5 * knu)) * cl
            : std::exp(i * (0.5 * knu)) * std::exp(-i * (0.5 * eps_ax[nu] * pnu)) * cl;
    return zeta * u;
  }
  const std::array<std::int64_t, 4> Lax = {std::int64_t(L) * L, L, L, L};
  Cplx u(1, 0);
  for (int ax = 0; ax < 4; ++ax) {
    const Cplx f = uplus_axis_factor(k[ax] + l[ax], Lax[ax]);
    if (ax == nu) {
      if (sign == Sign::Minus) u *= f * f;
    } else {
      u *= f;
    }
  }
  const Cplx knu = k[nu];
  const Cplx pnu = k[nu] + l[nu];
  const double cl = std::cos(0.5 * double(Lax[nu]) * l[nu]);
  const Cplx zeta =
      (sign == Sign::Plus)
          ? std::exp(i * (0.5 * pnu)) * std::exp(-i * (0.5 * double(Lax[nu]) * knu)) * cl
          : std::exp(i * (0.5 * double(Lax[nu]) * knu)) * std::exp(-i * (0.5 * pnu)) * cl;
  return zeta * u;
}

Cplx deriv_multiplier(Cplx p, double eps_axis) {
  const Cplx i(0, 1);
  const Cplx h = 0.5 * eps_axis * p;
  return 2.0 * i * std::exp(i * h) * std::sin(h) / eps_axis;
}

double a_n(int n, int L, double a) {
  if (n < 1) throw ConfigError("a_n requires n >= 1");
  const double Lm2 = 1.0 / (double(L) * L);
  return a * (1.0 - Lm2) / (1.0 - std::pow(Lm2, n));
}

Cplx bhat_sum_u_pow(const Cplx4& k, int j, int L, int pow2q) {
  // BHat_j is a product of per-axis sets, and u_j factorizes per axis, so
  // the fiber sum is a product of four one-dimensional sums.
  const double eps = std::pow(double(L), -j);
  const Real4 eps_ax = {eps * eps, eps, eps, eps};
  const Idx4 counts = {ipow(L, 2 * j), ipow(L, j), ipow(L, j), ipow(L, j)};
  Cplx prod(1, 0);
  for (int ax = 0; ax < 4; ++ax) {
    Cplx s(0, 0);
    const std::int64_t M = counts[ax];
    for (std::int64_t c = -(M - 1) / 2; c <= (M - 1) / 2; ++c) {
      const Cplx f = un_axis_factor(k[ax] + kTwoPi * double(c), eps_ax[ax]);
      s += cpow_int(f, pow2q);
    }
    prod *= s;
  }
  return prod;
}

Cplx frakQ_hat(const Cplx4& k, int n, int L, double a, int qexp) {
  if (n < 1) throw ConfigError("frakQ_hat requires n >= 1");
  Cplx denom(1, 0);
  double Lm2j = 1.0;
  for (int j = 1; j <= n - 1; ++j) {
    Lm2j /= double(L) * L;
    denom += Lm2j * bhat_sum_u_pow(k, j, L, 2 * qexp);
  }
  if (std::abs(denom) < 1e-12)
    throw SingularEvaluation("frakQ_hat: denominator within 1e-12 of zero");
  return a / denom;
}

Cplx D_hat(const Cplx4& p, int n, int L, const DispersionH0& h0) {
  const double eps = std::pow(double(L), -n);
  const double eps2 = eps * eps;
  const Cplx i(0, 1);
  const Cplx hbar = h0(eps * p[1], eps * p[2], eps * p[3]);
  const Cplx eh = std::exp(-hbar);
  const Cplx p0 = p[0];
  const Cplx s_half = sinc(0.5 * eps2 * p0);
  const Cplx s_full = sinc(eps2 * p0);
  // (1 - e^-h)/eps^2, series form when h is tiny to avoid cancellation
  Cplx mid;
  if (std::abs(hbar) < 1e-8) {
    mid = hbar * (1.0 - 0.5 * hbar + hbar * hbar / 6.0) / eps2;
  } else {
    mid = (1.0 - eh) / eps2;
  }
  return 0.5 * eps2 * p0 * p0 * eh * s_half * s_half + mid - i * p0 * eh * s_full;
}

Cplx laplacian_hat(const Cplx4& p, int n, int L) {
  const double eps = std::pow(double(L), -n);
  const Real4 eps_ax = {eps * eps, eps, eps, eps};
  Cplx acc(0, 0);
  for (int ax = 0; ax < 4; ++ax) {
    const Cplx s = p[ax] * sinc(0.5 * eps_ax[ax] * p[ax]);
    acc += s * s;
  }
  return acc;
}

Cplx heat_multiplier(const Cplx4& p, int n, int L, double an) {
  return an * std::exp(-laplacian_hat(p, n, L));
}

Cplx Sprime_hat(const Cplx4& p, int n, int L, double an,
                const DispersionH0& h0) {
  const Cplx den = D_hat(p, n, L, h0) + heat_multiplier(p, n, L, an);
  if (std::abs(den) < 1e-14)
    throw SingularEvaluation("Sprime_hat: zero denominator on declared strip");
  return 1.0 / den;
}

Cplx fiber_sum_un(const Cplx4& k, int n, int L, int upow,
                  const std::function<Cplx(const Cplx4&)>& weight,
                  const FiberSumOptions& opt) {
  const double eps = std::pow(double(L), -n);
  const Real4 eps_ax = {eps * eps, eps, eps, eps};
  const Idx4 counts = {ipow(L, 2 * n), ipow(L, n), ipow(L, n), ipow(L, n)};
  const std::int64_t total = counts[0] * counts[1] * counts[2] * counts[3];

  auto term = [&](const Idx4& c) -> Cplx {
    Cplx4 arg;
    Cplx u(1, 0);
    for (int ax = 0; ax < 4; ++ax) {
      arg[ax] = k[ax] + kTwoPi * double(c[ax]);
      u *= un_axis_factor(arg[ax], eps_ax[ax]);
    }
    return cpow_int(u, upow) * weight(arg);
  };

  if (total <= opt.full_cap) {
    // exact full enumeration, fixed order, compensated accumulation
    Cplx sum(0, 0), comp(0, 0);
    Idx4 c;
    for (c[0] = -(counts[0] - 1) / 2; c[0] <= (counts[0] - 1) / 2; ++c[0])
      for (c[1] = -(counts[1] - 1) / 2; c[1] <= (counts[1] - 1) / 2; ++c[1])
        for (c[2] = -(counts[2] - 1) / 2; c[2] <= (counts[2] - 1) / 2; ++c[2])
          for (c[3] = -(counts[3] - 1) / 2; c[3] <= (counts[3] - 1) / 2; ++c[3]) {
            if (opt.skip_zero && c[0] == 0 && c[1] == 0 && c[2] == 0 && c[3] == 0)
              continue;
            const Cplx t = term(c);
            const Cplx y = t - comp;
            const Cplx s = sum + y;
            comp = (s - sum) - y;
            sum = s;
          }
    return sum;
  }

  // Envelope-ordered partial summation.  Terms are bounded by
  // prod (24/(|2 pi c_nu|+pi))^upow up to the weight, which is monotone
  // decreasing in each |c_nu|; enumerate per-axis shells outward and stop
  // once the remaining envelope cannot move the accumulated sum.
  auto env1 = [&](std::int64_t c) {
    return std::pow(24.0 / (kTwoPi * std::abs(double(c)) + kPi), upow);
  };
  std::array<std::vector<std::int64_t>, 4> order;
  for (int ax = 0; ax < 4; ++ax) {
    order[ax].push_back(0);
    for (std::int64_t m = 1; m <= (counts[ax] - 1) / 2; ++m) {
      order[ax].push_back(m);
      order[ax].push_back(-m);
    }
  }
  const double env0_sp = env1(0);
  Cplx sum(0, 0);
  double scale = 0;  // running max |term| for the relative cutoff
  Idx4 c;
  for (std::size_t i0 = 0; i0 < order[0].size(); ++i0) {
    c[0] = order[0][i0];
    const double e0 = env1(c[0]);
    if (e0 * env0_sp * env0_sp * env0_sp < opt.tail_rel * scale) break;
    for (std::size_t i1 = 0; i1 < order[1].size(); ++i1) {
      c[1] = order[1][i1];
      const double e1 = e0 * env1(c[1]);
      if (e1 * env0_sp * env0_sp < opt.tail_rel * scale) break;
      for (std::size_t i2 = 0; i2 < order[2].size(); ++i2) {
        c[2] = order[2][i2];
        const double e2 = e1 * env1(c[2]);
        if (e2 * env0_sp < opt.tail_rel * scale) break;
        for (std::size_t i3 = 0; i3 < order[3].size(); ++i3) {
          c[3] = order[3][i3];
          if (e2 * env1(c[3]) < opt.tail_rel * scale) break;
          if (opt.skip_zero && c[0] == 0 && c[1] == 0 && c[2] == 0 && c[3] == 0)
            continue;
          const Cplx t = term(c);
          scale = std::max(scale, std::abs(t));
          sum += t;
        }
      }
    }
  }
  return sum;
}

}  // namespace blocklat
