#include "blocklat/lattice.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace blocklat {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

std::int64_t ipow(std::int64_t base, int exp) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

void LatticeSpec::validate() const {
  if (block_ratio < 3 || block_ratio % 2 == 0)
    throw ConfigError("block_ratio must be odd and >= 3 (got " +
                      std::to_string(block_ratio) + ")");
  if (allow_small_profile) {
    if (profile_exponent < 1)
      throw ConfigError("profile_exponent must be >= 1");
  } else if (profile_exponent < 4 || profile_exponent % 2 != 0) {
    throw ConfigError(
        "profile_exponent must be even and >= 4 (got " +
        std::to_string(profile_exponent) +
        "); values 1,2 require the regression flag");
  }
  if (scale_count < 0) throw ConfigError("scale_count must be >= 0");
  if (time_exponent < 2 * (scale_count + 1))
    throw ConfigError("time_exponent must satisfy et >= 2*(n+1) (got et=" +
                      std::to_string(time_exponent) +
                      ", n=" + std::to_string(scale_count) + ")");
  if (space_exponent < scale_count + 1)
    throw ConfigError("space_exponent must satisfy es >= n+1 (got es=" +
                      std::to_string(space_exponent) +
                      ", n=" + std::to_string(scale_count) + ")");
  if (!(a > 0)) throw ConfigError("a must be positive");
}

double LatticeSpec::eps(int j) const { return std::pow(double(block_ratio), -j); }

double LatticeSpec::eps_axis(int j, int axis) const {
  return axis == 0 ? eps(j) * eps(j) : eps(j);
}

Lattice::Lattice(const LatticeSpec& spec, int coarseness, int periods) {
  L_ = spec.block_ratio;
  j_ = coarseness;
  n_ = periods;
  et_ = spec.time_exponent;
  es_ = spec.space_exponent;
  if (j_ < -1) throw ConfigError("coarseness must be >= -1");
  if (n_ < 0) throw ConfigError("periods must be >= 0");
  // axis point counts: time L^(et-2n), space L^(es-n), independent of j
  if (et_ < 2 * n_)
    throw ConfigError("time_exponent too small for X_" + std::to_string(j_) +
                      "^(" + std::to_string(n_) + "): need et >= 2n (et=" +
                      std::to_string(et_) + ", n=" + std::to_string(n_) + ")");
  if (es_ < n_)
    throw ConfigError("space_exponent too small for X_" + std::to_string(j_) +
                      "^(" + std::to_string(n_) + "): need es >= n (es=" +
                      std::to_string(es_) + ", n=" + std::to_string(n_) + ")");
  count_[0] = ipow(L_, et_ - 2 * n_);
  count_[1] = count_[2] = count_[3] = ipow(L_, es_ - n_);
  size_ = count_[0] * count_[1] * count_[2] * count_[3];

  const double epsj = std::pow(double(L_), -j_);
  spacing_ = {epsj * epsj, epsj, epsj, epsj};
  for (int ax = 0; ax < 4; ++ax) {
    extent_[ax] = spacing_[ax] * double(count_[ax]);
    dual_spacing_[ax] = kTwoPi / extent_[ax];
    dual_extent_[ax] = kTwoPi / spacing_[ax];
  }
  measure_ = spacing_[0] * spacing_[1] * spacing_[2] * spacing_[3];
  dual_measure_ =
      1.0 / (extent_[0] * extent_[1] * extent_[2] * extent_[3]);
}

std::int64_t Lattice::min_rep(std::int64_t v, int axis) const {
  const std::int64_t N = count_[axis];
  std::int64_t r = ((v % N) + N) % N;
  // N is odd, so the minimal representative is unique; the tie rule toward
  // positive never fires but keeps the convention explicit.
  if (2 * r > N - 1) r -= N;
  return r;
}

Idx4 Lattice::min_rep(const Idx4& v) const {
  return {min_rep(v[0], 0), min_rep(v[1], 1), min_rep(v[2], 2), min_rep(v[3], 3)};
}

Idx4 Lattice::wrap(const Idx4& v) const {
  Idx4 r;
  for (int ax = 0; ax < 4; ++ax) {
    const std::int64_t N = count_[ax];
    r[ax] = ((v[ax] % N) + N) % N;
  }
  return r;
}

Real4 Lattice::position(const Idx4& a) const {
  return {spacing_[0] * double(a[0]), spacing_[1] * double(a[1]),
          spacing_[2] * double(a[2]), spacing_[3] * double(a[3])};
}

Real4 Lattice::momentum(const Idx4& b) const {
  Real4 p;
  for (int ax = 0; ax < 4; ++ax)
    p[ax] = dual_spacing_[ax] * double(min_rep(b[ax], ax));
  return p;
}

Cplx4 Lattice::momentum_c(const Idx4& b) const {
  const Real4 p = momentum(b);
  return {Cplx(p[0], 0), Cplx(p[1], 0), Cplx(p[2], 0), Cplx(p[3], 0)};
}

std::string Lattice::describe() const {
  std::ostringstream os;
  os << "X_" << j_ << "^(" << n_ << ") L=" << L_ << " counts=" << count_[0]
     << "x" << count_[1] << "x" << count_[2] << "x" << count_[3];
  return os.str();
}

Lattice build_lattice(const LatticeSpec& spec, int coarseness, int periods) {
  spec.validate();
  return Lattice(spec, coarseness, periods);
}

Idx4 PeriodCellDual::member(std::int64_t idx) const {
  Idx4 c;
  c[3] = idx % counts[3]; idx /= counts[3];
  c[2] = idx % counts[2]; idx /= counts[2];
  c[1] = idx % counts[1]; idx /= counts[1];
  c[0] = idx;
  // convert from [0,N) enumeration to minimal representative
  for (int ax = 0; ax < 4; ++ax) {
    if (2 * c[ax] > counts[ax] - 1) c[ax] -= counts[ax];
  }
  return c;
}

PeriodCellDual period_cell_dual(const LatticeSpec& spec, CellKind kind, int j) {
  spec.validate();
  PeriodCellDual cell;
  cell.kind = kind;
  cell.L = spec.block_ratio;
  const std::int64_t L = spec.block_ratio;
  if (kind == CellKind::BHatPlus) {
    // (2pi/L^2 Z / 2pi Z) x (2pi/L Z^3 / 2pi Z^3)
    cell.counts = {L * L, L, L, L};
    cell.step = {kTwoPi / double(L * L), kTwoPi / double(L), kTwoPi / double(L),
                 kTwoPi / double(L)};
  } else {
    if (j < 0) throw ConfigError("BHat_j requires j >= 0");
    cell.j = j;
    // (2pi Z / 2pi L^2j Z) x (2pi Z^3 / 2pi L^j Z^3)
    cell.counts = {ipow(L, 2 * j), ipow(L, j), ipow(L, j), ipow(L, j)};
    cell.step = {kTwoPi, kTwoPi, kTwoPi, kTwoPi};
  }
  const std::int64_t total =
      cell.counts[0] * cell.counts[1] * cell.counts[2] * cell.counts[3];
  cell.momenta.reserve(total);
  cell.abs_components.reserve(total);
  for (std::int64_t i = 0; i < total; ++i) {
    const Idx4 c = cell.member(i);
    Real4 mom, absc;
    for (int ax = 0; ax < 4; ++ax) {
      mom[ax] = cell.step[ax] * double(c[ax]);
      absc[ax] = std::abs(mom[ax]);
    }
    cell.momenta.push_back(mom);
    cell.abs_components.push_back(absc);
  }
  return cell;
}

Idx4 project_momentum(const Lattice& fine, const Lattice& coarse, const Idx4& b) {
  for (int ax = 0; ax < 4; ++ax) {
    if (fine.counts()[ax] % coarse.counts()[ax] != 0)
      throw ConfigError("project_momentum: " + coarse.describe() +
                        " does not divide " + fine.describe());
    const double rs = fine.dual_spacing(ax) / coarse.dual_spacing(ax);
    if (std::abs(rs - 1.0) > 1e-12)
      throw ConfigError("project_momentum: dual spacings differ between " +
                        fine.describe() + " and " + coarse.describe());
  }
  Idx4 r;
  for (int ax = 0; ax < 4; ++ax) {
    const std::int64_t bm = fine.min_rep(b[ax], ax);
    r[ax] = coarse.min_rep(bm, ax);
  }
  return r;
}

Lattice scale_image_lattice(const Lattice& from) {
  LatticeSpec s;
  s.block_ratio = from.L();
  s.time_exponent = from.time_exponent();
  s.space_exponent = from.space_exponent();
  s.scale_count = 0;
  return Lattice(s, from.coarseness() - 1, from.periods());
}

Lattice scale_preimage_lattice(const Lattice& from) {
  LatticeSpec s;
  s.block_ratio = from.L();
  s.time_exponent = from.time_exponent();
  s.space_exponent = from.space_exponent();
  s.scale_count = 0;
  return Lattice(s, from.coarseness() + 1, from.periods());
}

double torus_distance(const Real4& u, const Real4& v, const Real4& extents) {
  double acc = 0;
  for (int ax = 0; ax < 4; ++ax) {
    double d = u[ax] - v[ax];
    const double E = extents[ax];
    d -= E * std::round(d / E);
    acc += d * d;
  }
  return std::sqrt(acc);
}

double torus_abs(Cplx z, double period) {
  double re = z.real();
  re -= period * std::round(re / period);
  return std::hypot(re, z.imag());
}

}  // namespace blocklat
