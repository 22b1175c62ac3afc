#pragma once

#include "ears/ears.hpp"
#include "ears/words.hpp"

#include <string>
#include <vector>

namespace ears {

// A1, nullity 2, S = {z : z1 z2 even}; basis (z1, z2, z3, z1*, z2*).
struct Nullity2Example {
    EarsDescriptor ears;
    RationalMatrix gram;                    // the 5x5 form as displayed
    std::vector<RationalVector> alpha;      // alpha_1, alpha_2, alpha_3
    std::vector<RationalMatrix> reflections; // displayed matrices of r_1, r_2, r_3
    GeneratorWord relation;                 // r1 r2 r3 r1 r2 r3 r2 r1 r3 r2 r1 r3
};

// Same system restricted to U = span(e1, e2, e3).
struct KernelExample {
    EarsDescriptor ears;
    std::vector<RationalVector> alpha; // alpha_0 .. alpha_3
    GeneratorWord word;
    std::size_t restrict_dim = 3;
};

// A1, nullity 3, S = Z^3.
struct Nullity3Example {
    EarsDescriptor ears;
    RationalVector gamma;
    std::vector<RationalVector> alpha; // alpha_0 .. alpha_6, columns as displayed
    GeneratorWord certificate;         // in the displayed order
};

Nullity2Example nullity2_example();
KernelExample kernel_example();
Nullity3Example nullity3_example();

struct GoldenCheck {
    std::string fixture;
    std::string name;
    bool pass = false;
    std::string expected, actual; // filled on mismatch
};

std::vector<GoldenCheck> golden_checks();
std::vector<GoldenCheck> golden_checks(const Nullity2Example& n2, const KernelExample& k, const Nullity3Example& n3);

} // namespace ears
