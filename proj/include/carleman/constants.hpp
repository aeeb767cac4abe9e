#pragma once

#include <optional>
#include <string>

#include "carleman/log_number.hpp"

// Explicit constants of the Sobolev-type and Carleman-type estimates.
//
// The letter n means the real dimension of the domain for the Laplace-side
// estimates and the complex dimension for the section/heat-kernel ones.
// Every entry point takes RealDim or ComplexDim so the two cannot be mixed.

namespace carleman {

struct RealDim {
  int value;
};

struct ComplexDim {
  int value;
  RealDim real() const { return RealDim{2 * value}; }
};

enum class ExponentFamily { laplace, section, holomorphic };

std::string to_string(ExponentFamily f);
ExponentFamily parse_exponent_family(const std::string& s);

struct ExponentSet {
  ExponentFamily family;
  int n;
  double p;
  double p_star;
  std::optional<double> p_sharp;  // absent for the holomorphic family
  bool valid;
};

// laplace: p* = np/(n-1), p# = np/(n+2p-1), valid iff p# > 1, n >= 3 (real).
// section: p* = 2np/(2n-1), p# = 2np/(2n+p-1), n >= 2 (complex).
// holomorphic: p* = 2np/(2n-1), n >= 2 (complex).
// Throws InvalidExponent for p <= 1, InvalidDimension for n out of range.
ExponentSet exponents(ExponentFamily family, int n, double p);

// Interior constant delta1(n, p); throws InvalidExponent if p# <= 1.
LogNumber delta1(RealDim n, double p);
// Boundary constant delta2(n, p, LD) with the max{8, LD} clamp.
LogNumber delta2(RealDim n, double p, double ld);
// Convex-domain boundary constant; equal to delta2(n, p, 0) bit for bit.
LogNumber delta2_convex(RealDim n, double p);

// Weak-type (1, n/(n-1)) constant of the boundary double-layer operator:
// the product of the boundary-potential weak-type constant and the gradient
// Green bound, 8^n n^{5/2} omega_{n-1} / ((n-1)(2^n-4) omega_n^{1+1/n}) max{8, LD}.
LogNumber boundary_weak_constant(RealDim n, double ld);

// Boundary-to-interior constant for holomorphic functions on a domain in C^n.
LogNumber carleman_holo_constant(ComplexDim n, double p, double ld, bool convex);

// Riesz potential bound ||I_a f||_{np/(n-pa)} <= C ||f||_p.
// Requires 0 < a < n, p > 1 and n > p a (DomainError otherwise).
LogNumber riesz_constant(RealDim n, double p, double a);

// n omega_n^{1-1/n}.
double weak_type_constant(RealDim n);

// Interpolation constant 2 (p-1)^{(1-n)/(np)} p^{-1/(np)} C1^{1/p} C2^{1-1/p}
// for a real parameter n > 1.
LogNumber marcinkiewicz_constant(double n, double p, LogNumber c1, LogNumber c2);

struct GreenBoundConstants {
  LogNumber pointwise;   // |G| <= c |x-y|^{2-n}
  LogNumber boundary;    // |G| <= c delta(x) |x-y|^{1-n}
  LogNumber gradient;    // |grad_y G| <= c |x-y|^{1-n}
};

GreenBoundConstants green_bound_constants(RealDim n, double ld);

// (1/2) j_{n-1}^2 (omega_{2n-1}/(2n))^{1/n} |Omega|^{-1/n}.
double curvature_threshold(ComplexDim n, double volume);

struct CurvatureParams {
  double k = 0.0;
  double k_plus = 0.0;
  double k_minus = 0.0;
};

// Which of two printed variants of a constant to use. `statement` is the
// constant as stated with the estimate; `proof` is what the
// argument actually establishes (a factor 2 larger where they differ).
enum class ConstantMode { statement, proof };
std::string to_string(ConstantMode m);

struct GreenFormConstants {
  LogNumber c1;
  LogNumber c2;
  LogNumber c11;
  LogNumber c3;
};

// C1, C2, C11 and C3 = 4^n max{C1, C2} sqrt(32 C11). Total in K: the
// admissibility bound on K is left to the caller.
GreenFormConstants green_form_constants(ComplexDim n, const CurvatureParams& curv,
                                        double diam, double ld,
                                        ConstantMode mode = ConstantMode::statement);

// Boundary term prefactor: 2n as stated, or 4n from the boundary estimate.
enum class PrefactorMode { two_n, four_n };
// Maximum-principle growth factor: e^{K diam} as printed, or e^{K diam^2/2}
// from the weight e^{K|z|^2 - K diam^2} used in its proof.
enum class GrowthMode { printed, weighted };

std::string to_string(PrefactorMode m);
std::string to_string(GrowthMode m);

double max_principle_factor(double k, double diam, GrowthMode mode);

struct SectionCarlemanOptions {
  PrefactorMode prefactor = PrefactorMode::two_n;
  GrowthMode growth = GrowthMode::printed;
};

LogNumber section_carleman_constant(ComplexDim n, double p, LogNumber c3, double k,
                                    double diam, SectionCarlemanOptions opts = {});

// Interior operator constant for sections,
// 2 omega_{2n}^{1-1/(2n)} (36^n p/(p-1))^{1-p/(2n)} ((p-1)/slot)^{(p-1)/(2n)} C3,
// where slot is n - 2p as printed, or 2n - p when the Riesz bound is applied
// in real dimension 2n with a = 1. Throws DomainError when slot <= 0.
enum class SlotMode { printed, rederived };
std::string to_string(SlotMode m);
LogNumber section_interior_constant(ComplexDim n, double p, LogNumber c3, SlotMode mode);

// 2^{n^2+4n+1} n diam^{2n}.
LogNumber heat_bound_constant(ComplexDim n, double diam);

// 4 pi n e^{-1} |Omega|^{-1/n} k^{1/n}; |Omega| is the 2n-dimensional volume.
double eigen_lower_bound(ComplexDim n, double volume, int k);

// 2^{n^2+2n} lambda^n.
LogNumber eigenfn_sup_constant(ComplexDim n, double lambda);

struct ProofConstants {
  LogNumber c5;
  LogNumber c6;
  LogNumber c7;
};

ProofConstants c5_c6_c7(ComplexDim n, double diam, double ld);

// Interior C^1 estimate constant C11 on its own.
LogNumber gradient_interior_constant(ComplexDim n, const CurvatureParams& curv, double diam);

}  // namespace carleman
