#include "croac/reactor.hpp"

#include <cassert>
#include <chrono>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "croac/adaptive.hpp"
#include "croac/stats.hpp"

namespace croac {

namespace {
// collRate trace resolution; per-iteration data adds nothing at 300k-FE runs.
constexpr std::int64_t kTraceStride = 100;
}  // namespace

ReactionChoice select_reaction(const ReactorState& state,
                               const AlgorithmConfig& cfg, Rng& rng) {
    const std::size_t n = state.population.size();
    assert(n >= 1);
    const double t = rng.uniform01();
    const bool ac = is_ac_family(cfg.variant);

    bool unimolecular = t > state.coll_rate;
    if (!unimolecular && !ac && n == 1) unimolecular = true;

    if (unimolecular) {
        const std::size_t i = rng.index(n);
        const Molecule& m = state.population[i];
        const ReactionKind kind = (m.num_hit - m.min_hit > cfg.dec_threshold)
                                      ? ReactionKind::Dec
                                      : ReactionKind::Onwall;
        return {kind, i, i};
    }

    auto [i, j] = rng.distinct_pair(n);
    if (ac && n <= 2) {
        // Forced inter; keeps the population from shrinking below two.
        return {ReactionKind::Inter, i, j};
    }
    if (state.population[i].ke <= cfg.syn_threshold &&
        state.population[j].ke <= cfg.syn_threshold) {
        return {ReactionKind::Syn, i, j};
    }
    return {ReactionKind::Inter, i, j};
}

Reactor::Reactor(const AlgorithmConfig& cfg, const Problem& problem)
    : cfg_(cfg), problem_(problem), rng_(cfg.seed) {
    cfg_.validate();
    if (problem_.dim < 1) throw std::invalid_argument("problem dimension must be >= 1");

    state_.buffer = cfg_.init_buffer;
    state_.counter = 0;
    state_.coll_rate = uses_adaptive_rate(cfg_.variant)
                           ? adaptive::coll_rate(0, cfg_.max_fe)
                           : cfg_.coll_rate_init;

    state_.population.reserve(cfg_.pop_size);
    best_raw_ = std::numeric_limits<double>::infinity();
    for (int k = 0; k < cfg_.pop_size; ++k) {
        std::vector<double> x(problem_.dim);
        for (double& v : x) v = rng_.uniform(problem_.lower, problem_.upper);
        const double pe = problem_.objective(x);
        if (!std::isfinite(pe)) {
            std::ostringstream msg;
            msg << "non-finite objective value at initial point of molecule " << k;
            throw std::runtime_error(msg.str());
        }
        note_best(pe, x);
        state_.population.push_back(Molecule::fresh(std::move(x), pe, cfg_.init_ke));
    }
    state_.fe_used = cfg_.pop_size;

    trajectory_.emplace_back(state_.fe_used, best_raw_);
    trace_.emplace_back(0, state_.coll_rate);
}

void Reactor::note_best(double pe, const std::vector<double>& structure) {
    if (pe < best_raw_) {
        best_raw_ = pe;
        best_structure_ = structure;
    }
}

void Reactor::replace_molecule(Molecule& m, Candidate&& c) {
    m.structure = std::move(c.structure);
    m.pe = c.pe;
    m.ke = c.ke;
    m.num_hit += 1;
    if (m.pe < m.min_pe) {
        m.min_pe = m.pe;
        m.min_structure = m.structure;
        m.min_hit = m.num_hit;
    }
}

void Reactor::commit(const ReactionChoice& choice, ReactionOutcome& outcome) {
    state_.buffer += outcome.buffer_delta;
    auto& pop = state_.population;
    switch (choice.kind) {
        case ReactionKind::Onwall:
            replace_molecule(pop[choice.first], std::move(outcome.products[0]));
            break;
        case ReactionKind::Inter:
            replace_molecule(pop[choice.first], std::move(outcome.products[0]));
            replace_molecule(pop[choice.second], std::move(outcome.products[1]));
            break;
        case ReactionKind::Dec: {
            Candidate& c1 = outcome.products[0];
            Candidate& c2 = outcome.products[1];
            pop[choice.first] = Molecule::fresh(std::move(c1.structure), c1.pe, c1.ke);
            pop.push_back(Molecule::fresh(std::move(c2.structure), c2.pe, c2.ke));
            break;
        }
        case ReactionKind::Syn: {
            Candidate& c = outcome.products[0];
            pop[choice.first] = Molecule::fresh(std::move(c.structure), c.pe, c.ke);
            pop.erase(pop.begin() + static_cast<std::ptrdiff_t>(choice.second));
            break;
        }
    }
}

StepReport Reactor::step() {
    assert(state_.fe_used < cfg_.max_fe);

    if (uses_adaptive_rate(cfg_.variant)) {
        state_.coll_rate = adaptive::coll_rate(state_.counter, cfg_.max_fe);
    }

    const ReactionChoice choice = select_reaction(state_, cfg_, rng_);
    const auto& pop = state_.population;
    ReactionOutcome outcome;
    switch (choice.kind) {
        case ReactionKind::Onwall:
            outcome = onwall(pop[choice.first], cfg_, problem_, rng_);
            break;
        case ReactionKind::Dec:
            outcome = decompose(pop[choice.first], state_.buffer, cfg_, problem_, rng_);
            break;
        case ReactionKind::Inter:
            outcome = is_ac_family(cfg_.variant)
                          ? inter_ac(pop[choice.first], pop[choice.second], cfg_,
                                     problem_, rng_)
                          : inter_canonical(pop[choice.first], pop[choice.second],
                                            cfg_, problem_, rng_);
            break;
        case ReactionKind::Syn:
            outcome = synthesize(pop[choice.first], pop[choice.second], cfg_,
                                 problem_, rng_);
            break;
    }

    // Candidate evaluations are charged whether or not the reaction commits.
    state_.fe_used += outcome.evals;
    if (outcome.nonfinite) state_.nonfinite_rejections += 1;

    if (outcome.accepted) {
        for (const Candidate& c : outcome.products) note_best(c.pe, c.structure);
        commit(choice, outcome);
        if (trajectory_.back().second > best_raw_) {
            trajectory_.emplace_back(state_.fe_used, best_raw_);
        }
    }
    state_.counter =
        adaptive::update_counter(state_.counter, choice.kind, outcome.accepted);

    state_.iteration += 1;
    if (state_.iteration % kTraceStride == 0) {
        trace_.emplace_back(state_.iteration, state_.coll_rate);
    }
    return {choice.kind, outcome.accepted, outcome.evals};
}

double Reactor::total_energy() const {
    double total = state_.buffer;
    for (const Molecule& m : state_.population) total += m.pe + m.ke;
    return total;
}

RunRecord Reactor::make_record() const {
    RunRecord rec;
    rec.best_value_raw = best_raw_;
    rec.best_value = apply_zero_threshold(best_raw_);
    rec.best_structure = best_structure_;
    rec.fe_used = state_.fe_used;
    rec.best_trajectory = trajectory_;
    rec.coll_rate_trace = trace_;
    rec.seed = cfg_.seed;
    rec.nonfinite_rejections = state_.nonfinite_rejections;
    return rec;
}

RunRecord run(const AlgorithmConfig& cfg, const Problem& problem) {
    const auto t0 = std::chrono::steady_clock::now();
    Reactor reactor(cfg, problem);
    while (!reactor.finished()) reactor.step();
    RunRecord rec = reactor.make_record();
    rec.wall_time =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rec;
}

RunRecord run(const AlgorithmConfig& cfg, const BenchmarkSpec& spec) {
    return run(cfg, make_problem(spec));
}

}  // namespace croac
