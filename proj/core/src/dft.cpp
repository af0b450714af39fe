#include <map>
#include <mutex>
#include <numbers>
#include <random>

#include "blocklat/field.hpp"

#include <Eigen/Dense>

namespace blocklat {

namespace {

using Mat = Eigen::MatrixXcd;

// twiddle matrix W(a,b) = exp(-2pi i a b / N), cached per size
const Mat& twiddle(std::int64_t N) {
  static std::map<std::int64_t, Mat> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(N);
  if (it != cache.end()) return it->second;
  Mat W(N, N);
  const double step = -2.0 * std::numbers::pi / double(N);
  for (std::int64_t a = 0; a < N; ++a)
    for (std::int64_t b = 0; b < N; ++b)
      W(a, b) = std::polar(1.0, step * double((a * b) % N));
  return cache.emplace(N, std::move(W)).first->second;
}

// in-place transform along one axis; conj=false applies W, true applies W*
void axis_transform(std::vector<Cplx>& v, const Idx4& counts, int axis,
                    bool conj) {
  const std::int64_t N = counts[axis];
  if (N == 1) return;
  std::int64_t pre = 1, post = 1;
  for (int ax = 0; ax < axis; ++ax) pre *= counts[ax];
  for (int ax = axis + 1; ax < 4; ++ax) post *= counts[ax];
  const Mat& W = twiddle(N);
  Eigen::VectorXcd in(N), out(N);
  for (std::int64_t p = 0; p < pre; ++p) {
    for (std::int64_t q = 0; q < post; ++q) {
      const std::int64_t base = (p * N) * post + q;
      for (std::int64_t a = 0; a < N; ++a) in[a] = v[base + a * post];
      if (conj)
        out.noalias() = W.conjugate() * in;
      else
        out.noalias() = W * in;
      for (std::int64_t a = 0; a < N; ++a) v[base + a * post] = out[a];
    }
  }
}

}  // namespace

Field operator+(const Field& a, const Field& b) {
  Field r = a;
  for (std::int64_t i = 0; i < r.size(); ++i) r.v[i] += b.v[i];
  return r;
}

Field operator-(const Field& a, const Field& b) {
  Field r = a;
  for (std::int64_t i = 0; i < r.size(); ++i) r.v[i] -= b.v[i];
  return r;
}

Field operator*(Cplx s, const Field& a) {
  Field r = a;
  for (auto& x : r.v) x *= s;
  return r;
}

Field delta_field(const Lattice& lat, const Idx4& site) {
  Field f(lat);
  f.v[lat.flatten(lat.wrap(site))] = Cplx(1.0 / lat.measure_weight(), 0);
  return f;
}

Field constant_field(const Lattice& lat, Cplx value) { return Field(lat, value); }

Field random_field(const Lattice& lat, std::uint64_t seed) {
  Field f(lat);
  std::mt19937_64 rng(seed);
  auto u = [&rng]() {
    return double(rng() >> 11) * 0x1.0p-53 * 2.0 - 1.0;
  };
  for (auto& x : f.v) x = Cplx(u(), u());
  return f;
}

Cplx pair_real(const Field& a, const Field& b) {
  Cplx acc(0, 0);
  for (std::int64_t i = 0; i < a.size(); ++i) acc += a.v[i] * b.v[i];
  return acc * a.lat.measure_weight();
}

double max_abs_diff(const Field& a, const Field& b) {
  double m = 0;
  for (std::int64_t i = 0; i < a.size(); ++i)
    m = std::max(m, std::abs(a.v[i] - b.v[i]));
  return m;
}

double max_abs(const Field& a) {
  double m = 0;
  for (const auto& x : a.v) m = std::max(m, std::abs(x));
  return m;
}

Field dft_forward(const Field& position) {
  Field f = position;
  const Idx4& counts = f.lat.counts();
  for (int ax = 0; ax < 4; ++ax) axis_transform(f.v, counts, ax, false);
  const double w = f.lat.measure_weight();
  for (auto& x : f.v) x *= w;
  return f;
}

Field dft_inverse(const Field& momentum) {
  Field f = momentum;
  const Idx4& counts = f.lat.counts();
  for (int ax = 0; ax < 4; ++ax) axis_transform(f.v, counts, ax, true);
  const double w = f.lat.dual_measure_weight();
  for (auto& x : f.v) x *= w;
  return f;
}

Field pushforward(const Field& a) {
  Field r = a;
  r.lat = scale_image_lattice(a.lat);
  return r;
}

Field pushforward_inverse(const Field& a) {
  Field r = a;
  r.lat = scale_preimage_lattice(a.lat);
  return r;
}

}  // namespace blocklat
