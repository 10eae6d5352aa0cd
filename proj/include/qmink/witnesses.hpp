#pragma once

#include "qmink/hermitian.hpp"
#include "qmink/states.hpp"

namespace qmink {

/// trace_norm_pt is ‖ρ^{T2}‖₁ (the N column of the CLI); negativity is
/// (‖ρ^{T2}‖₁ − 1)/2.
struct NegativityReport {
  double trace_norm_pt = 0.0;
  double negativity = 0.0;
};

struct WitnessReport {
  double trace_norm_pt = 0.0;
  double negativity = 0.0;
  double concurrence = 0.0;
};

struct WernerWitnesses {
  double trace_norm_pt = 0.0;  // 3|(r+1)/4| + |(1−3r)/4|
  double concurrence = 0.0;    // (3r−1)/2 for r > 1/3, else 0
};

NegativityReport negativity_report(const DensityMatrix& rho);

/// Wootters concurrence max(0, λ1 − λ2 − λ3 − λ4), λ's the square roots of
/// the eigenvalues of √ρ·S·conj(ρ)·S·√ρ with S = σ_y⊗σ_y, descending.
double concurrence(const DensityMatrix& rho);

WitnessReport witness_report(const DensityMatrix& rho);

WernerWitnesses werner_closed_forms(WernerParameter r);

}  // namespace qmink
