#include "croac/operators.hpp"

#include <cmath>
#include <stdexcept>

namespace croac {

namespace {

bool finite(double v) { return std::isfinite(v); }

}  // namespace

// ---------------------------------------------------------------------------
// Boundary handling
// ---------------------------------------------------------------------------

double reflect_into(double x, double lo, double hi) {
    const double range = hi - lo;
    double y = std::fmod(x - lo, 2.0 * range);
    if (y < 0.0) y += 2.0 * range;
    return lo + (y <= range ? y : 2.0 * range - y);
}

void apply_boundary(std::vector<double>& x, double lo, double hi,
                    BoundaryScheme scheme, Rng& rng) {
    for (double& v : x) {
        if (v >= lo && v <= hi) continue;
        switch (scheme) {
            case BoundaryScheme::Reflect: v = reflect_into(v, lo, hi); break;
            case BoundaryScheme::Clip: v = v < lo ? lo : hi; break;
            case BoundaryScheme::Resample: v = rng.uniform(lo, hi); break;
        }
    }
}

// ---------------------------------------------------------------------------
// Neighborhood search
// ---------------------------------------------------------------------------

std::vector<double> neighborhood(const std::vector<double>& w, double step_size,
                                 double lo, double hi, BoundaryScheme scheme,
                                 Rng& rng) {
    std::vector<double> out = w;
    const std::size_t i = rng.index(out.size());
    // step_size is a variance, so the Gaussian gets its square root.
    out[i] += rng.normal(std::sqrt(step_size));
    apply_boundary(out, lo, hi, scheme, rng);
    return out;
}

// ---------------------------------------------------------------------------
// Energy rules
// ---------------------------------------------------------------------------

OnwallEnergy onwall_energy(double pe, double ke, double pe_new, double q) {
    const double surplus = pe + ke - pe_new;
    if (surplus < 0.0) return {};
    return {true, surplus * q, surplus * (1.0 - q)};
}

DecEnergy dec_energy(double pe, double ke, double pe1_new, double pe2_new,
                     double buffer, double d1, double d2, double d3) {
    double e = pe + ke - pe1_new - pe2_new;
    double draw = 0.0;
    if (e < 0.0) {
        draw = d1 * d2 * buffer;
        e += draw;
        if (e < 0.0) return {};
    }
    return {true, e * d3, e * (1.0 - d3), draw};
}

PairEnergy inter_energy(double pe1, double ke1, double pe2, double ke2,
                        double pe1_new, double pe2_new, double d4) {
    const double surplus = pe1 + ke1 + pe2 + ke2 - pe1_new - pe2_new;
    if (surplus < 0.0) return {};
    return {true, surplus * d4, surplus * (1.0 - d4)};
}

SynEnergy syn_energy(double pe1, double ke1, double pe2, double ke2,
                     double pe_new) {
    const double surplus = pe1 + ke1 + pe2 + ke2 - pe_new;
    if (surplus < 0.0) return {};
    return {true, surplus};
}

// ---------------------------------------------------------------------------
// Two-step inter manipulation
// ---------------------------------------------------------------------------

std::vector<double> inter_ac_pull(const std::vector<double>& ws,
                                  const std::vector<double>& wt,
                                  const std::vector<double>& r) {
    std::vector<double> out(ws.size());
    for (std::size_t i = 0; i < ws.size(); ++i) {
        out[i] = (wt[i] - ws[i]) * r[i] + ws[i];
    }
    return out;
}

std::vector<double> inter_ac_push(const std::vector<double>& wt,
                                  const std::vector<double>& ws_new,
                                  const std::vector<double>& r) {
    std::vector<double> out(wt.size());
    for (std::size_t i = 0; i < wt.size(); ++i) {
        out[i] = (wt[i] - ws_new[i]) * r[i] + wt[i];
    }
    return out;
}

// ---------------------------------------------------------------------------
// Elementary reactions
// ---------------------------------------------------------------------------

ReactionOutcome onwall(const Molecule& m, const AlgorithmConfig& cfg,
                       const Problem& problem, Rng& rng) {
    ReactionOutcome out;
    out.kind = ReactionKind::Onwall;
    out.evals = 1;

    Candidate c;
    c.structure = neighborhood(m.structure, cfg.step_size, problem.lower,
                               problem.upper, cfg.boundary_scheme(), rng);
    c.pe = problem.objective(c.structure);
    if (!finite(c.pe)) {
        out.nonfinite = true;
        return out;
    }
    if (m.pe + m.ke >= c.pe) {
        const double q = rng.uniform(cfg.ke_loss_rate, 1.0);
        const OnwallEnergy e = onwall_energy(m.pe, m.ke, c.pe, q);
        out.accepted = true;
        c.ke = e.ke_new;
        out.buffer_delta = e.to_buffer;
    }
    out.products.push_back(std::move(c));
    return out;
}

ReactionOutcome decompose(const Molecule& m, double buffer,
                          const AlgorithmConfig& cfg, const Problem& problem,
                          Rng& rng) {
    ReactionOutcome out;
    out.kind = ReactionKind::Dec;
    out.evals = 2;

    Candidate c1, c2;
    c1.structure = m.structure;
    c2.structure = m.structure;
    for (Candidate* c : {&c1, &c2}) {
        for (int k = 0; k < cfg.dec_perturbations; ++k) {
            c->structure = neighborhood(c->structure, cfg.step_size, problem.lower,
                                        problem.upper, cfg.boundary_scheme(), rng);
        }
        c->pe = problem.objective(c->structure);
    }
    if (!finite(c1.pe) || !finite(c2.pe)) {
        out.nonfinite = true;
        out.products.push_back(std::move(c1));
        out.products.push_back(std::move(c2));
        return out;
    }

    double e = m.pe + m.ke - c1.pe - c2.pe;
    double draw = 0.0;
    if (e < 0.0) {
        draw = rng.uniform01() * rng.uniform01() * buffer;
        e += draw;
    }
    if (e >= 0.0) {
        const double d3 = rng.uniform01();
        out.accepted = true;
        c1.ke = e * d3;
        c2.ke = e * (1.0 - d3);
        out.buffer_delta = -draw;
    }
    out.products.push_back(std::move(c1));
    out.products.push_back(std::move(c2));
    return out;
}

ReactionOutcome inter_canonical(const Molecule& m1, const Molecule& m2,
                                const AlgorithmConfig& cfg,
                                const Problem& problem, Rng& rng) {
    ReactionOutcome out;
    out.kind = ReactionKind::Inter;
    out.evals = 2;

    Candidate c1, c2;
    c1.structure = neighborhood(m1.structure, cfg.step_size, problem.lower,
                                problem.upper, cfg.boundary_scheme(), rng);
    c2.structure = neighborhood(m2.structure, cfg.step_size, problem.lower,
                                problem.upper, cfg.boundary_scheme(), rng);
    c1.pe = problem.objective(c1.structure);
    c2.pe = problem.objective(c2.structure);
    if (!finite(c1.pe) || !finite(c2.pe)) {
        out.nonfinite = true;
    } else if (m1.pe + m1.ke + m2.pe + m2.ke >= c1.pe + c2.pe) {
        const double d4 = rng.uniform01();
        const PairEnergy e =
            inter_energy(m1.pe, m1.ke, m2.pe, m2.ke, c1.pe, c2.pe, d4);
        out.accepted = true;
        c1.ke = e.ke1;
        c2.ke = e.ke2;
    }
    out.products.push_back(std::move(c1));
    out.products.push_back(std::move(c2));
    return out;
}

ReactionOutcome inter_ac(const Molecule& m1, const Molecule& m2,
                         const AlgorithmConfig& cfg, const Problem& problem,
                         Rng& rng) {
    ReactionOutcome out;
    out.kind = ReactionKind::Inter;

    const bool one_step = cfg.variant == Variant::CroAc1Step;
    // The molecule with larger pe is the source being pulled toward the
    // better target; a pe tie keeps the selection order.
    const bool m1_is_source = m1.pe >= m2.pe;
    const Molecule& src = m1_is_source ? m1 : m2;
    const Molecule& tgt = m1_is_source ? m2 : m1;

    const std::size_t d = src.structure.size();
    std::vector<double> r(d);
    for (double& v : r) v = rng.uniform01();
    std::vector<double> s_new = inter_ac_pull(src.structure, tgt.structure, r);

    Candidate cs, ct;
    if (one_step) {
        // The target is left untouched, so its known pe is reused and only
        // the source costs an evaluation.
        apply_boundary(s_new, problem.lower, problem.upper, cfg.boundary_scheme(), rng);
        cs.structure = std::move(s_new);
        cs.pe = problem.objective(cs.structure);
        ct.structure = tgt.structure;
        ct.pe = tgt.pe;
        out.evals = 1;
    } else {
        for (double& v : r) v = rng.uniform01();  // fresh draws for step 2
        std::vector<double> t_new = inter_ac_push(tgt.structure, s_new, r);
        apply_boundary(s_new, problem.lower, problem.upper, cfg.boundary_scheme(), rng);
        apply_boundary(t_new, problem.lower, problem.upper, cfg.boundary_scheme(), rng);
        cs.structure = std::move(s_new);
        ct.structure = std::move(t_new);
        cs.pe = problem.objective(cs.structure);
        ct.pe = problem.objective(ct.structure);
        out.evals = 2;
    }

    if (!finite(cs.pe) || !finite(ct.pe)) {
        out.nonfinite = true;
    } else if (m1.pe + m1.ke + m2.pe + m2.ke >= cs.pe + ct.pe) {
        const double d4 = rng.uniform01();
        double pe1_new = m1_is_source ? cs.pe : ct.pe;
        double pe2_new = m1_is_source ? ct.pe : cs.pe;
        const PairEnergy e =
            inter_energy(m1.pe, m1.ke, m2.pe, m2.ke, pe1_new, pe2_new, d4);
        out.accepted = true;
        if (m1_is_source) {
            cs.ke = e.ke1;
            ct.ke = e.ke2;
        } else {
            ct.ke = e.ke1;
            cs.ke = e.ke2;
        }
    }
    // Products in input-slot order.
    if (m1_is_source) {
        out.products.push_back(std::move(cs));
        out.products.push_back(std::move(ct));
    } else {
        out.products.push_back(std::move(ct));
        out.products.push_back(std::move(cs));
    }
    return out;
}

ReactionOutcome synthesize(const Molecule& m1, const Molecule& m2,
                           const AlgorithmConfig& cfg, const Problem& problem,
                           Rng& rng) {
    (void)cfg;
    ReactionOutcome out;
    out.kind = ReactionKind::Syn;
    out.evals = 1;

    Candidate c;
    c.structure.resize(m1.structure.size());
    for (std::size_t i = 0; i < c.structure.size(); ++i) {
        c.structure[i] = rng.uniform01() < 0.5 ? m1.structure[i] : m2.structure[i];
    }
    c.pe = problem.objective(c.structure);
    if (!finite(c.pe)) {
        out.nonfinite = true;
    } else {
        const SynEnergy e = syn_energy(m1.pe, m1.ke, m2.pe, m2.ke, c.pe);
        if (e.accepted) {
            out.accepted = true;
            c.ke = e.ke_new;
        }
    }
    out.products.push_back(std::move(c));
    return out;
}

}  // namespace croac
