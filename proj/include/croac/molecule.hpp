#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace croac {

// One candidate solution with its energies and hit bookkeeping.
struct Molecule {
    std::vector<double> structure;
    double pe = 0.0;  // objective value at structure
    double ke = 0.0;  // tolerance for accepting worse structures
    std::int64_t num_hit = 0;
    std::int64_t min_hit = 0;  // num_hit when min_pe last improved
    double min_pe = 0.0;
    std::vector<double> min_structure;

    static Molecule fresh(std::vector<double> structure, double pe, double ke) {
        Molecule m;
        m.pe = pe;
        m.ke = ke;
        m.min_pe = pe;
        m.min_structure = structure;
        m.structure = std::move(structure);
        return m;
    }
};

}  // namespace croac
