#pragma once

// The complex Hermite basis h_{m,p} in three equivalent representations,
// reproducing kernels and weights of the true-poly-Fock spaces A_m.
//
// Conventions (used throughout the library):
//  * h_{m,p}(z) = sum_j (-1)^j m! p! / (j! (m-j)! (p-j)!) z^{m-j} zbar^{p-j}.
//    The Landau operator acts as  L h_{m,p} = p h_{m,p}, so the level-m space
//    A_m is spanned by {h_{p,m}}_{p >= 0}: the SECOND index is the level.
//  * Planar inner products use dmu = pi^{-1} e^{-|z|^2} dlambda. Then
//    ||h_{m,p}||^2 = m! p!, K_m(z,w) = e^{z conj(w)} L_m(|z-w|^2) and
//    omega_m(z) = e^{|z|^2}.
//  * The Laguerre and 1F1 forms carry the phase e^{+i(m-p) arg z}, which makes
//    all three forms the same function. arg 0 is taken as 0.

#include <complex>

namespace polyfock::fockbasis {

inline constexpr int kIndexCap = 64;

struct BasisIndex {
  int m = 0;
  int p = 0;
};

enum class Form { FiniteSum, LaguerreForm, Hyp1F1Form };

std::complex<double> h_eval(BasisIndex idx, std::complex<double> z, Form form = Form::FiniteSum);

/// ||h_{m,p}||^2 under dmu, i.e. m! p!.
double basis_norm_sq(BasisIndex idx);

/// h_{m,p}(z) / sqrt(m! p!), evaluated from the Laguerre form with the
/// normalization folded into log space. No index cap beyond orthopoly's
/// degree cap on min(m, p).
std::complex<double> normalized_h(int m, int p, std::complex<double> z);

/// Same, additionally multiplied by e^{-|z|^2/2} (the coherent-state
/// coefficient), which keeps large |z| finite.
std::complex<double> normalized_h_damped(int m, int p, std::complex<double> z);

/// Reproducing kernel of A_m: e^{z conj(w)} L_m^{(0)}(|z - w|^2).
std::complex<double> kernel(int m, std::complex<double> z, std::complex<double> w);

/// omega_m(z) = K_m(z, z) = e^{|z|^2}, independent of m.
double weight(int m, std::complex<double> z);

/// sum_{p < terms} h_{p,m}(z) conj(h_{p,m}(w)) / (m! p!).
std::complex<double> kernel_series(int m, std::complex<double> z, std::complex<double> w, int terms);

}  // namespace polyfock::fockbasis
