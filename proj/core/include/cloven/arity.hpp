#pragma once

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace cloven {

// Thrown when an input exceeds the configured size guard.
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

enum class LeafRole { Output, Input };

// The tuple (k; i_1,...,i_k): k outputs, i_a inputs after output a.
// Boundary leaves are numbered 0..N-1 counterclockwise, leaf 0 being
// output 1. Gap j sits between leaf j and leaf j+1 (mod N).
struct Arity {
    int k = 0;
    std::vector<int> inputs;

    Arity() = default;
    Arity(int k_, std::vector<int> inputs_) : k(k_), inputs(std::move(inputs_)) {
        if (k < 2)
            throw std::invalid_argument("arity: k must be >= 2");
        if (static_cast<int>(inputs.size()) != k)
            throw std::invalid_argument("arity: need exactly k input counts");
        for (int i : inputs)
            if (i < 0)
                throw std::invalid_argument("arity: input counts must be >= 0");
    }

    int total_leaves() const {
        return k + std::accumulate(inputs.begin(), inputs.end(), 0);
    }
    int total_inputs() const { return total_leaves() - k; }

    // Dimension of the top cells: 2k + sum(i_a) - 4.
    int top_dimension() const { return total_leaves() + k - 4; }
    // Syzygy degree of a cell with V internal vertices is (N+k-3) - V.
    int syzygy_offset() const { return total_leaves() + k - 3; }

    // Rotates the input blocks: (i_1,...,i_k) -> (i_2,...,i_k,i_1).
    Arity rotated(int steps = 1) const;

    bool operator==(const Arity& o) const { return k == o.k && inputs == o.inputs; }
    bool operator<(const Arity& o) const {
        if (total_leaves() != o.total_leaves()) return total_leaves() < o.total_leaves();
        if (k != o.k) return k < o.k;
        return inputs < o.inputs;
    }

    std::string to_string() const;
};

// Leaf roles indexed by boundary position 0..N-1.
std::vector<LeafRole> boundary_sequence(const Arity& arity);

}  // namespace cloven
