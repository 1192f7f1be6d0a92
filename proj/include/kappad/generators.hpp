#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace kappad {

using GenId = unsigned char;

enum class GenClass {
    CoordTime,
    CoordSpace,
    LorentzMatrix,
    Boost,
    Rotation,
    MomentumTime,
    MomentumSpace,
    Auxiliary,
};

struct GeneratorInfo {
    std::string name;
    GenClass cls;
    int weight;              // unique rank in the global total order
    std::array<int, 2> idx;  // indices where applicable, else {-1,-1}
};

// Fixed global alphabet. Ascending weight:
//   x0..x3 < L[0,0]..L[3,3] < M rotations < M boosts < P1 P2 P3 P0
//   < xh0..xh3 < ph1 ph2 ph3 ph0
const std::vector<GeneratorInfo>& generator_table();

const GeneratorInfo& gen_info(GenId g);
int gen_weight(GenId g);
const std::string& gen_name(GenId g);

GenId gen_x(int mu);             // spacetime coordinate
GenId gen_L(int mu, int nu);     // Lorentz matrix element
GenId gen_P(int mu);             // fourmomentum
GenId gen_xh(int mu);            // Weyl position
GenId gen_ph(int mu);            // Weyl momentum
// M_{mu nu} is stored with mu < nu; returns (canonical id, sign).
std::pair<GenId, int> gen_M(int mu, int nu);

std::optional<GenId> gen_by_name(const std::string& name);

// diag(-1, 1, 1, 1); same with raised indices
int metric(int mu, int nu);

}  // namespace kappad
