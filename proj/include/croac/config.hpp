#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace croac {

// Algorithm variants. CroAc is the adaptive two-step design, CroAc02 pins the
// collision rate at its initial value, CroAc1Step drops the second inter
// manipulation step. CroBp/CroHp/CroBb are the canonical designs they are
// compared against.
enum class Variant { CroAc, CroAc02, CroAc1Step, CroBp, CroHp, CroBb };

enum class ReactionKind { Onwall, Dec, Inter, Syn };

enum class BoundaryScheme { Reflect, Clip, Resample };

// The CroAc family shares the two-molecule floor and the new inter operator.
constexpr bool is_ac_family(Variant v) {
    return v == Variant::CroAc || v == Variant::CroAc02 || v == Variant::CroAc1Step;
}

// Only these recompute collRate from the success counter each iteration.
constexpr bool uses_adaptive_rate(Variant v) {
    return v == Variant::CroAc || v == Variant::CroAc1Step;
}

const char* variant_name(Variant v);
Variant parse_variant(const std::string& name);

const char* boundary_name(BoundaryScheme s);
BoundaryScheme parse_boundary(const std::string& name);

const char* reaction_name(ReactionKind k);

struct AlgorithmConfig {
    Variant variant = Variant::CroAc;
    int pop_size = 20;
    double step_size = 1.0;        // variance of the Gaussian perturbation
    double init_buffer = 1e5;
    double init_ke = 1e7;
    double coll_rate_init = 0.2;   // fixed-rate variants only
    double ke_loss_rate = 0.1;
    std::int64_t dec_threshold = 150000;  // alpha
    double syn_threshold = 10.0;          // beta
    std::int64_t max_fe = 300000;
    std::optional<BoundaryScheme> boundary;  // unset -> variant default
    int dec_perturbations = 10;
    std::uint64_t seed = 0;

    // Reflect for the CroAc family; the canonical variants differ in their
    // constraint handling, mapped here as bp->reflect, hp->resample, bb->clip.
    BoundaryScheme boundary_scheme() const;

    // Throws std::invalid_argument on out-of-range parameters.
    void validate() const;
};

}  // namespace croac
