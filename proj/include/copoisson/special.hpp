#pragma once

// Complex Gamma (Lanczos), Riemann zeta (Euler-Maclaurin), chi and chi_sin.

#include <copoisson/integrate.hpp>

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace copoisson {

class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

namespace detail {

inline constexpr double lanczos_g = 7.0;
inline constexpr std::array<double, 9> lanczos_p = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

inline bool is_nonpositive_integer(cplx z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::round(z.real());
}

// log Gamma for Re z >= 1/2.
inline cplx log_gamma_right(cplx z) {
  z -= 1.0;
  cplx x = lanczos_p[0];
  for (std::size_t i = 1; i < lanczos_p.size(); ++i) x += lanczos_p[i] / (z + static_cast<double>(i));
  const cplx t = z + lanczos_g + 0.5;
  return 0.5 * std::log(2 * std::numbers::pi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

// log sin(w), safe for large |Im w| (branch irrelevant: only exponentiated).
inline cplx log_sin(cplx w) {
  if (std::abs(w.imag()) < 300) return std::log(std::sin(w));
  const cplx i(0, 1);
  if (w.imag() > 0) return -i * w - std::log(2.0 * i);
  return i * w - std::log(-2.0 * i);
}

}  // namespace detail

// log Gamma(z), up to a multiple of 2 pi i.
inline cplx log_gamma(cplx z) {
  if (detail::is_nonpositive_integer(z)) throw PoleError("Gamma pole");
  if (z.real() >= 0.5) return detail::log_gamma_right(z);
  const double pi = std::numbers::pi;
  return std::log(pi) - detail::log_sin(pi * z) - detail::log_gamma_right(1.0 - z);
}

inline cplx gamma_complex(cplx z) { return std::exp(log_gamma(z)); }

// 1/Gamma(z), entire.
inline cplx rgamma(cplx z) {
  if (detail::is_nonpositive_integer(z)) return 0.0;
  return std::exp(-log_gamma(z));
}

struct ZetaValue {
  cplx s;
  cplx value;
  std::size_t N_used = 0;
  double err_estimate = 0.0;
};

inline ZetaValue zeta(cplx s);

// chi(s) = zeta(s)/zeta(1-s) = pi^(s-1/2) Gamma((1-s)/2) / Gamma(s/2).
inline cplx chi(cplx s) {
  const double pi = std::numbers::pi;
  const cplx a = (1.0 - s) / 2.0;
  if (detail::is_nonpositive_integer(a)) throw PoleError("chi pole");
  const cplx b = s / 2.0;
  if (detail::is_nonpositive_integer(b)) return 0.0;
  return std::exp((s - 0.5) * std::log(pi) + log_gamma(a) - log_gamma(b));
}

// chi_sin(s) = i pi^(s-1/2) Gamma((2-s)/2) / Gamma((s+1)/2).
inline cplx chi_sin(cplx s) {
  const double pi = std::numbers::pi;
  const cplx a = (2.0 - s) / 2.0;
  if (detail::is_nonpositive_integer(a)) throw PoleError("chi_sin pole");
  const cplx b = (s + 1.0) / 2.0;
  if (detail::is_nonpositive_integer(b)) return 0.0;
  return cplx(0, 1) * std::exp((s - 0.5) * std::log(pi) + log_gamma(a) - log_gamma(b));
}

// Euler-Maclaurin with N = max(20, 2|Im s|) and corrections through B_10;
// the B_12 term is reported as the error estimate. Re s < 0 goes through chi.
inline ZetaValue zeta(cplx s) {
  if (s == cplx(1.0, 0.0)) throw PoleError("zeta pole at s = 1");
  if (s.real() < 0) {
    const ZetaValue r = zeta(1.0 - s);
    const cplx c = chi(s);
    return {s, c * r.value, r.N_used, std::abs(c) * r.err_estimate};
  }
  static constexpr std::array<double, 6> b2k = {1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30, 5.0 / 66, -691.0 / 2730};
  const auto N = static_cast<std::size_t>(std::max(20.0, std::ceil(2 * std::abs(s.imag()))));
  cplx sum = 0.0;
  for (std::size_t n = N - 1; n >= 1; --n) sum += std::exp(-s * std::log(static_cast<double>(n)));
  const double lnN = std::log(static_cast<double>(N));
  const cplx Ns = std::exp(-s * lnN);
  sum += Ns * 0.5 + Ns * static_cast<double>(N) / (s - 1.0);
  // term_k = B_2k/(2k)! s(s+1)...(s+2k-2) N^(-s-2k+1)
  cplx rising = s;
  double fact = 2.0;
  cplx npow = Ns / static_cast<double>(N);
  double err = 0.0;
  for (std::size_t k = 1; k <= 6; ++k) {
    const cplx term = b2k[k - 1] / fact * rising * npow;
    if (k <= 5)
      sum += term;
    else
      err = std::abs(term);
    rising *= (s + static_cast<double>(2 * k - 1)) * (s + static_cast<double>(2 * k));
    fact *= static_cast<double>((2 * k + 1) * (2 * k + 2));
    npow /= static_cast<double>(N) * static_cast<double>(N);
  }
  return {s, sum, N, err};
}

}  // namespace copoisson
