#include "cloven/arity.hpp"

#include <sstream>

namespace cloven {

std::vector<LeafRole> boundary_sequence(const Arity& arity) {
    std::vector<LeafRole> roles;
    roles.reserve(arity.total_leaves());
    for (int a = 0; a < arity.k; ++a) {
        roles.push_back(LeafRole::Output);
        for (int j = 0; j < arity.inputs[a]; ++j)
            roles.push_back(LeafRole::Input);
    }
    return roles;
}

Arity Arity::rotated(int steps) const {
    std::vector<int> rot(inputs.size());
    for (int a = 0; a < k; ++a)
        rot[a] = inputs[(a + steps) % k];
    return Arity(k, rot);
}

std::string Arity::to_string() const {
    std::ostringstream os;
    os << "(" << k << ";";
    for (int a = 0; a < k; ++a)
        os << (a ? "," : "") << inputs[a];
    os << ")";
    return os.str();
}

}  // namespace cloven
