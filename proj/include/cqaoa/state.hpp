#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace cqaoa {

using cplx = std::complex<double>;

/// Dense n-qubit register: 2^n_bits complex amplitudes indexed by basis
/// bitstring. Kept normalized by the operations that promise it.
struct StateVector {
  int n_bits = 0;
  std::vector<cplx> amps;

  std::uint64_t dim() const noexcept { return amps.size(); }

  double norm_sq() const noexcept {
    double s = 0.0;
    for (const cplx& a : amps) s += std::norm(a);
    return s;
  }
  double norm() const noexcept { return std::sqrt(norm_sq()); }
};

inline StateVector basis_state(int n_bits, std::uint64_t x) {
  if (n_bits < 1 || n_bits > 62)
    throw std::invalid_argument("basis_state: bad bit count");
  const std::uint64_t dim = std::uint64_t{1} << n_bits;
  if (x >= dim) throw std::out_of_range("basis_state: index out of range");
  StateVector s;
  s.n_bits = n_bits;
  s.amps.assign(dim, cplx{0.0, 0.0});
  s.amps[x] = cplx{1.0, 0.0};
  return s;
}

/// amps[x] *= exp(-i * gamma * c(x)). Diagonal, norm-preserving.
inline void apply_phase_inplace(StateVector& state, double gamma,
                                const std::vector<std::uint32_t>& measure) {
  if (measure.size() != state.dim())
    throw std::invalid_argument("apply_phase: table size mismatch");
  if (gamma == 0.0) return;
  for (std::uint64_t x = 0; x < state.dim(); ++x) {
    const double ang = -gamma * static_cast<double>(measure[x]);
    state.amps[x] *= cplx{std::cos(ang), std::sin(ang)};
  }
}

inline StateVector apply_phase(const StateVector& state, double gamma,
                               const std::vector<std::uint32_t>& measure) {
  StateVector out = state;
  apply_phase_inplace(out, gamma, measure);
  return out;
}

/// Which single-bit-flip pairs the constrained hypercube keeps.
///   FeasibleOnly : edge iff both endpoints are feasible (sparser form;
///                  the default mixer).
///   EqualValidity: edge iff endpoints have equal validity, so infeasible
///                  states also walk among themselves.
enum class MixerVariant { FeasibleOnly, EqualValidity };

/// Raw kernel behind mixer_matvec; overwrites `out` entirely.
inline void mixer_apply_raw(const std::vector<cplx>& in, std::vector<cplx>& out,
                            int n_bits,
                            const std::vector<std::uint8_t>& validity,
                            MixerVariant variant) {
  const std::uint64_t dim = std::uint64_t{1} << n_bits;
  for (std::uint64_t x = 0; x < dim; ++x) {
    cplx acc{0.0, 0.0};
    for (int b = 0; b < n_bits; ++b) {
      const std::uint64_t y = x ^ (std::uint64_t{1} << b);
      const bool kept = variant == MixerVariant::FeasibleOnly
                            ? (validity[x] && validity[y])
                            : (validity[x] == validity[y]);
      if (kept) acc += in[y];
    }
    out[x] = acc;
  }
}

/// out[x] = sum_i amps[x ^ 2^i] * [edge kept]. This is B|psi> itself, not
/// a unitary image, so the output is not normalized.
inline StateVector mixer_matvec(const StateVector& state,
                                const std::vector<std::uint8_t>& validity,
                                MixerVariant variant = MixerVariant::FeasibleOnly) {
  if (validity.size() != state.dim())
    throw std::invalid_argument("mixer_matvec: table size mismatch");
  StateVector out;
  out.n_bits = state.n_bits;
  out.amps.resize(state.dim());
  mixer_apply_raw(state.amps, out.amps, state.n_bits, validity, variant);
  return out;
}

}  // namespace cqaoa
