#pragma once
// Complex fields over a lattice and the dimension-wise DFT.
//
// Fourier conventions: ahat(p) = eps_j^5 sum_u a(u) e^{-ip.u},
// a(u) = dual_measure * sum_p ahat(p) e^{+iu.p}.  In integer indices the
// phase is exp(-2pi i sum_nu a_nu b_nu / N_nu).

#include <vector>

#include "blocklat/lattice.hpp"

namespace blocklat {

struct Field {
  Lattice lat;
  std::vector<Cplx> v;

  Field() = default;
  explicit Field(const Lattice& l) : lat(l), v(l.size(), Cplx(0, 0)) {}
  Field(const Lattice& l, Cplx fill) : lat(l), v(l.size(), fill) {}

  Cplx& operator[](std::int64_t i) { return v[i]; }
  const Cplx& operator[](std::int64_t i) const { return v[i]; }
  std::int64_t size() const { return static_cast<std::int64_t>(v.size()); }
};

Field operator+(const Field& a, const Field& b);
Field operator-(const Field& a, const Field& b);
Field operator*(Cplx s, const Field& a);

/// delta function with respect to the lattice measure: 1/eps_j^5 at site x
Field delta_field(const Lattice& lat, const Idx4& site);
Field constant_field(const Lattice& lat, Cplx value);
Field random_field(const Lattice& lat, std::uint64_t seed);

/// real L2 pairing <a,b> = eps^5 sum a(u) b(u)  (no conjugation)
Cplx pair_real(const Field& a, const Field& b);

double max_abs_diff(const Field& a, const Field& b);
double max_abs(const Field& a);

/// Forward / inverse DFT between position fields and dual-lattice tables.
/// Both directions include the measure weights of the conventions above.
Field dft_forward(const Field& position);
Field dft_inverse(const Field& momentum);

/// L_* push-forward: (L_* a)(L u) = a(u).  Values are reindexed identically;
/// only the lattice tag moves one step coarser (j -> j-1).
Field pushforward(const Field& a);
Field pushforward_inverse(const Field& a);

}  // namespace blocklat
