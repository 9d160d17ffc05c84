#include "croac/config.hpp"

#include <stdexcept>

namespace croac {

const char* variant_name(Variant v) {
    switch (v) {
        case Variant::CroAc: return "cro-ac";
        case Variant::CroAc02: return "cro-ac-0.2";
        case Variant::CroAc1Step: return "cro-ac-1step";
        case Variant::CroBp: return "cro-bp";
        case Variant::CroHp: return "cro-hp";
        case Variant::CroBb: return "cro-bb";
    }
    throw std::logic_error("unhandled variant");
}

Variant parse_variant(const std::string& name) {
    for (Variant v : {Variant::CroAc, Variant::CroAc02, Variant::CroAc1Step,
                      Variant::CroBp, Variant::CroHp, Variant::CroBb}) {
        if (name == variant_name(v)) return v;
    }
    throw std::invalid_argument("unknown algorithm '" + name + "'");
}

const char* boundary_name(BoundaryScheme s) {
    switch (s) {
        case BoundaryScheme::Reflect: return "reflect";
        case BoundaryScheme::Clip: return "clip";
        case BoundaryScheme::Resample: return "resample";
    }
    throw std::logic_error("unhandled boundary scheme");
}

BoundaryScheme parse_boundary(const std::string& name) {
    for (BoundaryScheme s : {BoundaryScheme::Reflect, BoundaryScheme::Clip,
                             BoundaryScheme::Resample}) {
        if (name == boundary_name(s)) return s;
    }
    throw std::invalid_argument("unknown boundary scheme '" + name + "'");
}

const char* reaction_name(ReactionKind k) {
    switch (k) {
        case ReactionKind::Onwall: return "onwall";
        case ReactionKind::Dec: return "dec";
        case ReactionKind::Inter: return "inter";
        case ReactionKind::Syn: return "syn";
    }
    throw std::logic_error("unhandled reaction kind");
}

BoundaryScheme AlgorithmConfig::boundary_scheme() const {
    if (boundary) return *boundary;
    switch (variant) {
        case Variant::CroHp: return BoundaryScheme::Resample;
        case Variant::CroBb: return BoundaryScheme::Clip;
        default: return BoundaryScheme::Reflect;
    }
}

void AlgorithmConfig::validate() const {
    const auto fail = [](const std::string& msg) {
        throw std::invalid_argument("invalid config: " + msg);
    };
    const int min_pop = is_ac_family(variant) ? 2 : 1;
    if (pop_size < min_pop) {
        fail("pop_size must be >= " + std::to_string(min_pop) + " for " +
             variant_name(variant));
    }
    if (!(step_size > 0.0)) fail("step_size must be positive");
    if (!(init_buffer >= 0.0)) fail("init_buffer must be non-negative");
    if (!(init_ke >= 0.0)) fail("init_ke must be non-negative");
    if (!(coll_rate_init > 0.0 && coll_rate_init < 1.0)) {
        fail("coll_rate_init must lie in (0, 1)");
    }
    if (!(ke_loss_rate >= 0.0 && ke_loss_rate <= 1.0)) {
        fail("ke_loss_rate must lie in [0, 1]");
    }
    if (dec_threshold <= 0) fail("dec_threshold must be positive");
    if (!(syn_threshold > 0.0)) fail("syn_threshold must be positive");
    if (max_fe < pop_size) fail("max_fe must cover the initial population");
    if (dec_perturbations < 1) fail("dec_perturbations must be positive");
}

}  // namespace croac
