#include "kappad/generators.hpp"

#include <map>
#include <stdexcept>

namespace kappad {

static std::vector<GeneratorInfo> build_table() {
    std::vector<GeneratorInfo> t;
    auto add = [&](std::string name, GenClass cls, int a = -1, int b = -1) {
        t.push_back({std::move(name), cls, static_cast<int>(t.size()), {a, b}});
    };
    add("x0", GenClass::CoordTime, 0);
    for (int k = 1; k <= 3; ++k) add("x" + std::to_string(k), GenClass::CoordSpace, k);
    for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n)
            add("L[" + std::to_string(m) + "," + std::to_string(n) + "]",
                GenClass::LorentzMatrix, m, n);
    // rotations before boosts
    for (auto [i, j] : {std::pair{1, 2}, {1, 3}, {2, 3}})
        add("M[" + std::to_string(i) + "," + std::to_string(j) + "]", GenClass::Rotation, i, j);
    for (int i = 1; i <= 3; ++i)
        add("M[0," + std::to_string(i) + "]", GenClass::Boost, 0, i);
    for (int k = 1; k <= 3; ++k) add("P" + std::to_string(k), GenClass::MomentumSpace, k);
    add("P0", GenClass::MomentumTime, 0);
    for (int mu = 0; mu < 4; ++mu)
        add("xh" + std::to_string(mu), mu == 0 ? GenClass::CoordTime : GenClass::CoordSpace, mu);
    for (int k = 1; k <= 3; ++k) add("ph" + std::to_string(k), GenClass::MomentumSpace, k);
    add("ph0", GenClass::MomentumTime, 0);
    return t;
}

const std::vector<GeneratorInfo>& generator_table() {
    static const std::vector<GeneratorInfo> t = build_table();
    return t;
}

const GeneratorInfo& gen_info(GenId g) { return generator_table().at(g); }
int gen_weight(GenId g) { return gen_info(g).weight; }
const std::string& gen_name(GenId g) { return gen_info(g).name; }

GenId gen_x(int mu) { return static_cast<GenId>(mu); }
GenId gen_L(int mu, int nu) { return static_cast<GenId>(4 + 4 * mu + nu); }

std::pair<GenId, int> gen_M(int mu, int nu) {
    if (mu == nu) throw std::invalid_argument("M[mu,mu] vanishes");
    int sign = 1;
    if (mu > nu) {
        std::swap(mu, nu);
        sign = -1;
    }
    if (mu == 0) return {static_cast<GenId>(23 + nu - 1), sign};
    static const int rot[4][4] = {{0}, {0, 0, 20, 21}, {0, 0, 0, 22}, {0}};
    return {static_cast<GenId>(rot[mu][nu]), sign};
}

GenId gen_P(int mu) { return static_cast<GenId>(mu == 0 ? 29 : 25 + mu); }
GenId gen_xh(int mu) { return static_cast<GenId>(30 + mu); }
GenId gen_ph(int mu) { return static_cast<GenId>(mu == 0 ? 37 : 33 + mu); }

std::optional<GenId> gen_by_name(const std::string& name) {
    static const std::map<std::string, GenId> index = [] {
        std::map<std::string, GenId> m;
        for (const auto& gi : generator_table())
            m.emplace(gi.name, static_cast<GenId>(gi.weight));
        return m;
    }();
    auto it = index.find(name);
    if (it == index.end()) return std::nullopt;
    return it->second;
}

int metric(int mu, int nu) {
    if (mu != nu) return 0;
    return mu == 0 ? -1 : 1;
}

}  // namespace kappad
