#pragma once
// Nested space-time tori, their duals, period cells and scaling maps.
//
// A lattice X_j^(n) is the 1+3 dimensional torus
//     (eps_j^2 Z / eps_{n+j}^2 Ltp Z) x (eps_j Z^3 / eps_{n+j} Lsp Z^3)
// with eps_j = L^-j, Ltp = L^et, Lsp = L^es.  The time axis is axis 0.
// Points are enumerated time-major lexicographically; all axis counts are
// powers of the odd integer L, so minimal representatives are unique.

#include <array>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace blocklat {

using Idx4 = std::array<std::int64_t, 4>;
using Real4 = std::array<double, 4>;
using Cplx = std::complex<double>;
using Cplx4 = std::array<Cplx, 4>;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class DispersionId { CosineLaplacian };

/// Global parameters of one verification setup.
struct LatticeSpec {
  int block_ratio = 3;       // L, odd and >= 3
  int profile_exponent = 4;  // even >= 4; 1 and 2 only in regression mode
  int scale_count = 1;       // n
  int time_exponent = 4;     // et, time extent of X_0 is L^et
  int space_exponent = 2;    // es, space extent of X_0 is L^es
  double a = 1.0;
  DispersionId dispersion = DispersionId::CosineLaplacian;
  bool allow_small_profile = false;  // enables profile_exponent in {1,2}

  void validate() const;  // throws ConfigError naming the violated inequality

  // epsilon_{j,nu}: L^-2j on the time axis, L^-j on space axes
  double eps(int j) const;
  double eps_axis(int j, int axis) const;
};

std::int64_t ipow(std::int64_t base, int exp);

class Lattice {
 public:
  Lattice() = default;
  /// X_coarseness^(periods) for this spec; coarseness >= -1, periods >= 0.
  Lattice(const LatticeSpec& spec, int coarseness, int periods);

  int L() const { return L_; }
  int coarseness() const { return j_; }
  int periods() const { return n_; }
  int time_exponent() const { return et_; }
  int space_exponent() const { return es_; }

  const Idx4& counts() const { return count_; }
  std::int64_t size() const { return size_; }

  // position side
  double spacing(int axis) const { return spacing_[axis]; }
  double extent(int axis) const { return extent_[axis]; }
  double measure_weight() const { return measure_; }  // eps_j^5

  // dual side (same counts, momentum p_nu = dual_spacing * integer)
  double dual_spacing(int axis) const { return dual_spacing_[axis]; }
  double dual_extent(int axis) const { return dual_extent_[axis]; }
  double dual_measure_weight() const { return dual_measure_; }

  std::int64_t flatten(const Idx4& a) const {
    return ((a[0] * count_[1] + a[1]) * count_[2] + a[2]) * count_[3] + a[3];
  }
  Idx4 unflatten(std::int64_t f) const {
    Idx4 a;
    a[3] = f % count_[3]; f /= count_[3];
    a[2] = f % count_[2]; f /= count_[2];
    a[1] = f % count_[1]; f /= count_[1];
    a[0] = f;
    return a;
  }

  /// componentwise minimal absolute representative, ties toward positive
  std::int64_t min_rep(std::int64_t v, int axis) const;
  Idx4 min_rep(const Idx4& v) const;
  Idx4 wrap(const Idx4& v) const;  // into [0, N)

  Real4 position(const Idx4& a) const;      // spacing * index (unwrapped)
  Real4 momentum(const Idx4& b) const;      // dual_spacing * min_rep(index)
  Cplx4 momentum_c(const Idx4& b) const;

  bool operator==(const Lattice& o) const {
    return L_ == o.L_ && j_ == o.j_ && n_ == o.n_ && et_ == o.et_ &&
           es_ == o.es_;
  }
  bool operator!=(const Lattice& o) const { return !(*this == o); }

  std::string describe() const;

 private:
  int L_ = 3, j_ = 0, n_ = 0, et_ = 0, es_ = 0;
  Idx4 count_{1, 1, 1, 1};
  std::int64_t size_ = 1;
  Real4 spacing_{}, extent_{}, dual_spacing_{}, dual_extent_{};
  double measure_ = 1.0, dual_measure_ = 1.0;
};

Lattice build_lattice(const LatticeSpec& spec, int coarseness, int periods);

/// Kind of period-cell dual: BHat_j (kernel of the projection to a coarser
/// dual at fixed spacing) or BHatPlus (kernel of X^_0^(n) -> X^_{-1}^(n+1)).
enum class CellKind { BHatJ, BHatPlus };

/// The finite set of momentum shifts labelling one Floquet fiber.
struct PeriodCellDual {
  CellKind kind = CellKind::BHatJ;
  int j = 0;                           // for BHatJ
  int L = 3;
  Idx4 counts{1, 1, 1, 1};             // per-axis cell sizes, product = |cell|
  std::vector<Real4> momenta;          // minimal representatives
  std::vector<Real4> abs_components;   // |l_nu| per element
  std::int64_t size() const { return static_cast<std::int64_t>(momenta.size()); }
  Idx4 member(std::int64_t idx) const; // integer multi-index c, l = step*c
  Real4 step;                          // momentum step per axis
};

PeriodCellDual period_cell_dual(const LatticeSpec& spec, CellKind kind, int j = 0);

/// pi-hat: class of fine-dual index in the coarse dual (minimal representative).
/// fine and coarse must have equal dual spacings (same n+j).
Idx4 project_momentum(const Lattice& fine, const Lattice& coarse, const Idx4& b);

/// Scaling map L: X_j -> X_{j-1}, (u0,ub) -> (L^2 u0, L ub).  On integer
/// indices this is the identity; only the lattice tag changes.
Lattice scale_image_lattice(const Lattice& from);     // j-1, same periods
Lattice scale_preimage_lattice(const Lattice& from);  // j+1, same periods

/// Euclidean norm of the componentwise minimal representative of u-u' on the
/// common torus.  u, u' may live on lattices of different coarseness.
double torus_distance(const Real4& u, const Real4& v, const Real4& extents);

/// |z| after reducing Re z into the fundamental interval of width `period`.
double torus_abs(Cplx z, double period);

}  // namespace blocklat
