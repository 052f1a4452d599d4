#pragma once

#include <array>
#include <complex>
#include <string>
#include <vector>

#include "superorb/datum.hpp"

namespace superorb {

using Complex = std::complex<double>;

// Eta/theta constants and Weber functions, nome q = exp(2*pi*i*tau).
// All evaluators require Im tau > 0 and truncate series so the discarded
// tail stays below 1e-14 in relative terms down to Im tau = 0.02.
Complex dedekind_eta(Complex tau);
Complex jacobi_theta2(Complex tau);
Complex jacobi_theta3(Complex tau);
Complex jacobi_theta4(Complex tau);
Complex weber_f(Complex tau);
Complex weber_f1(Complex tau);
Complex weber_f2(Complex tau);

// Formal character of one supermodule of a built-in model.
struct CharacterSeries {
  Rational leading_exponent;            // lowest q-power, weight - c/24
  std::vector<long long> coefficients;  // half-integer steps from the lowest power
  std::string closed_form;
};

// Models: "fermion" (group Z2, elements 0=1, 1=sigma) and "lattice_a1"
// (group Z2xZ2 under XOR, elements 0=1, 1=sigma, 2=theta, 3=sigma*theta).
// Module ids follow the emitted fixtures: fermion V, M; lattice V, M, N, P.
CharacterSeries model_character(const std::string& model, const std::string& id,
                                int order);

// Trace over the unique supermodule of the (g, h) sector of the model;
// identically-zero sectors give 0.
Complex eval_char(const std::string& model, int g, int h, Complex tau);

struct SBlockFit {
  std::vector<std::vector<Complex>> entries;
  double residual;   // max defect of the fitted transform over the samples
  double condition;  // normal-equations condition estimate
};

// Least-squares fit of Z_{(g,h)}(-1/tau) against the (h, g^{-1}) sector
// characters, sampled on the imaginary axis.
SBlockFit numeric_sblock(const std::string& model, int g, int h);

// Characters of the fermion fixed-point subalgebra, weights 0, 1/2, 1/16,
// and the 3x3 S-matrix fitted from them.
std::array<Complex, 3> fermion_orbifold_chars(Complex tau);
SBlockFit fermion_orbifold_smatrix();

// Even-sublattice oracle: the lattice model's fixed points under sigma form
// the lattice VOA of 2Za with four modules U_j, j mod 4.
std::array<Complex, 4> lattice_even_chars(Complex tau);
// trace of the induced involution over U_0
Complex lattice_even_twining(Complex tau);
// irreducible count of the order-2 orbifold of the even sublattice VOA,
// derived from the module permutation and the twisted-sector count identity
int lattice_even_orbifold_count();

// Character ratio chi_label(iy)/chi_vacuum(iy) along a positive y grid.
// Labels: fermion "vacuum", "ramond", "ramond-super"; lattice_a1 "vacuum",
// "sigma", "theta", "sigma-theta". Plain (non-super) labels take one half
// of a swapped supermodule pair.
std::vector<double> numeric_qdim(const std::string& model, const std::string& label,
                                 const std::vector<double>& y_grid);
std::vector<std::string> qdim_labels(const std::string& model);

// Emits a complete validated datum with S-blocks recognized as exact
// cyclotomics from the numeric fits. Models: "fermion", "lattice_a1",
// "fermion_trivial_g" (fermion fixed-point data packaged as an ordinary-VOA
// datum with trivial group). Throws std::runtime_error with the numeric
// value when an entry fails recognition.
TwistedDatum make_fixture(const std::string& model);

}  // namespace superorb
