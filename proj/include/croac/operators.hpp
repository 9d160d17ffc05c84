#pragma once

#include <cstddef>
#include <vector>

#include "croac/benchmarks.hpp"
#include "croac/config.hpp"
#include "croac/molecule.hpp"
#include "croac/rng.hpp"

namespace croac {

// ---------------------------------------------------------------------------
// Boundary handling
// ---------------------------------------------------------------------------

// Fold x back into [lo, hi] by repeated reflection at the violated bound.
double reflect_into(double x, double lo, double hi);

// In-place repair of violating coordinates. Resample draws one uniform per
// violating coordinate, in index order.
void apply_boundary(std::vector<double>& x, double lo, double hi,
                    BoundaryScheme scheme, Rng& rng);

// ---------------------------------------------------------------------------
// Neighborhood search
// ---------------------------------------------------------------------------

// Gaussian perturbation of one uniformly chosen dimension, then boundary
// repair. step_size is the variance of the perturbation.
std::vector<double> neighborhood(const std::vector<double>& w, double step_size,
                                 double lo, double hi, BoundaryScheme scheme,
                                 Rng& rng);

// ---------------------------------------------------------------------------
// Energy rules, one per elementary reaction. Pure arithmetic; the reaction
// wrappers below draw the random coefficients and delegate here. Every rule
// keeps sum(pe + ke) + buffer invariant when its outputs are committed.
// ---------------------------------------------------------------------------

struct OnwallEnergy {
    bool accepted = false;
    double ke_new = 0.0;
    double to_buffer = 0.0;
};

// Accept iff pe + ke >= pe_new. The survivor keeps fraction q of the surplus
// as kinetic energy, the rest flows into the central buffer.
OnwallEnergy onwall_energy(double pe, double ke, double pe_new, double q);

struct DecEnergy {
    bool accepted = false;
    double ke1 = 0.0;
    double ke2 = 0.0;
    double buffer_draw = 0.0;  // amount taken out of the central buffer
};

// Children may draw d1*d2*buffer from the central buffer when the parent's
// own energy cannot cover them; still short of zero means rejection. The
// resulting energy is split d3 / (1 - d3) between the children.
DecEnergy dec_energy(double pe, double ke, double pe1_new, double pe2_new,
                     double buffer, double d1, double d2, double d3);

struct PairEnergy {
    bool accepted = false;
    double ke1 = 0.0;
    double ke2 = 0.0;
};

// Joint check over both colliding molecules; surplus split d4 / (1 - d4).
// No buffer interaction.
PairEnergy inter_energy(double pe1, double ke1, double pe2, double ke2,
                        double pe1_new, double pe2_new, double d4);

struct SynEnergy {
    bool accepted = false;
    double ke_new = 0.0;
};

// The merged molecule keeps the entire surplus as kinetic energy.
SynEnergy syn_energy(double pe1, double ke1, double pe2, double ke2,
                     double pe_new);

// ---------------------------------------------------------------------------
// Two-step inter manipulation. Pure, pre-boundary forms; r holds one value
// per dimension in [0, 1).
// ---------------------------------------------------------------------------

// Step 1: move the worse structure ws toward the better one wt.
// out_i = (wt_i - ws_i) * r_i + ws_i
std::vector<double> inter_ac_pull(const std::vector<double>& ws,
                                  const std::vector<double>& wt,
                                  const std::vector<double>& r);

// Step 2: move the better structure wt away from the step-1 result.
// out_i = (wt_i - ws_new_i) * r_i + wt_i
std::vector<double> inter_ac_push(const std::vector<double>& wt,
                                  const std::vector<double>& ws_new,
                                  const std::vector<double>& r);

// ---------------------------------------------------------------------------
// Elementary reactions
// ---------------------------------------------------------------------------

struct Candidate {
    std::vector<double> structure;
    double pe = 0.0;
    double ke = 0.0;
};

struct ReactionOutcome {
    ReactionKind kind = ReactionKind::Onwall;
    bool accepted = false;
    bool nonfinite = false;  // a candidate evaluated to NaN/inf; forces rejection
    std::vector<Candidate> products;  // one or two, in input-slot order
    double buffer_delta = 0.0;        // signed flow into the central buffer
    int evals = 0;
};

ReactionOutcome onwall(const Molecule& m, const AlgorithmConfig& cfg,
                       const Problem& problem, Rng& rng);

// buffer is the current central buffer value (needed for the assist rule);
// the caller applies outcome.buffer_delta on commit.
ReactionOutcome decompose(const Molecule& m, double buffer,
                          const AlgorithmConfig& cfg, const Problem& problem,
                          Rng& rng);

// Canonical inter: two independent neighborhood moves, joint energy check.
ReactionOutcome inter_canonical(const Molecule& m1, const Molecule& m2,
                                const AlgorithmConfig& cfg,
                                const Problem& problem, Rng& rng);

// Two-step inter: pull the worse molecule toward the better one, then push
// the better one away from the result. Under CroAc1Step the second step is
// skipped and only one evaluation is charged.
ReactionOutcome inter_ac(const Molecule& m1, const Molecule& m2,
                         const AlgorithmConfig& cfg, const Problem& problem,
                         Rng& rng);

// Dimension-wise 50/50 mix of both parents.
ReactionOutcome synthesize(const Molecule& m1, const Molecule& m2,
                           const AlgorithmConfig& cfg, const Problem& problem,
                           Rng& rng);

}  // namespace croac
