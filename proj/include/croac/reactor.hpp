#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "croac/benchmarks.hpp"
#include "croac/config.hpp"
#include "croac/molecule.hpp"
#include "croac/operators.hpp"
#include "croac/rng.hpp"

namespace croac {

struct ReactorState {
    std::vector<Molecule> population;
    double buffer = 0.0;
    std::int64_t counter = 0;  // successful inters minus successful onwalls
    double coll_rate = 0.0;
    std::int64_t fe_used = 0;
    std::int64_t iteration = 0;
    std::int64_t nonfinite_rejections = 0;
};

struct RunRecord {
    double best_value = 0.0;      // zero-thresholded
    double best_value_raw = 0.0;
    std::vector<double> best_structure;
    std::int64_t fe_used = 0;
    std::vector<std::pair<std::int64_t, double>> best_trajectory;   // (fe_used, raw best)
    std::vector<std::pair<std::int64_t, double>> coll_rate_trace;   // (iteration, coll_rate)
    std::uint64_t seed = 0;
    double wall_time = 0.0;  // seconds; not part of the determinism contract
    std::int64_t nonfinite_rejections = 0;
};

struct ReactionChoice {
    ReactionKind kind = ReactionKind::Onwall;
    std::size_t first = 0;
    std::size_t second = 0;  // meaningful for Inter/Syn only
};

struct StepReport {
    ReactionKind kind = ReactionKind::Onwall;
    bool accepted = false;
    int evals = 0;
};

// One random draw decides the branch: t > coll_rate picks a single molecule
// (Dec once its hit counter stalls past dec_threshold, else Onwall);
// otherwise two distinct molecules collide (Syn when both are below the
// kinetic-energy threshold, else Inter). The CroAc family forces Inter when
// only two molecules remain, which keeps the population from ever dropping
// below two; the canonical variants instead fall back to the unimolecular
// branch when a single molecule is left.
ReactionChoice select_reaction(const ReactorState& state,
                               const AlgorithmConfig& cfg, Rng& rng);

// Owns one optimization run: population, energy ledger, adaptation state and
// global-best bookkeeping. Confined to a single thread.
class Reactor {
  public:
    // Runs the initialization phase (pop_size evaluations). Throws
    // std::runtime_error if an initial point evaluates non-finite.
    Reactor(const AlgorithmConfig& cfg, const Problem& problem);

    // One elementary reaction: select, manipulate, energy-check, commit or
    // roll back. Requires fe_used < max_fe.
    StepReport step();

    bool finished() const { return state_.fe_used >= cfg_.max_fe; }

    const ReactorState& state() const { return state_; }
    const AlgorithmConfig& config() const { return cfg_; }

    // sum(pe + ke) over the population plus the central buffer.
    double total_energy() const;

    double best_value_raw() const { return best_raw_; }
    const std::vector<double>& best_structure() const { return best_structure_; }

    RunRecord make_record() const;

  private:
    void commit(const ReactionChoice& choice, ReactionOutcome& outcome);
    void replace_molecule(Molecule& m, Candidate&& c);
    void note_best(double pe, const std::vector<double>& structure);

    AlgorithmConfig cfg_;
    Problem problem_;
    Rng rng_;
    ReactorState state_;

    double best_raw_ = 0.0;
    std::vector<double> best_structure_;
    std::vector<std::pair<std::int64_t, double>> trajectory_;
    std::vector<std::pair<std::int64_t, double>> trace_;
};

// Iterates until the evaluation budget is spent and assembles the record.
RunRecord run(const AlgorithmConfig& cfg, const Problem& problem);
RunRecord run(const AlgorithmConfig& cfg, const BenchmarkSpec& spec);

}  // namespace croac
