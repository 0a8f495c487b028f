#pragma once

#include <string>
#include <vector>

#include "curvedop/formal_sum.hpp"
#include "curvedop/generator_key.hpp"
#include "curvedop/permutation.hpp"

namespace curvedop {

// Child of a corolla, owning the listed composite slot positions (ascending).
// Position count equals slots(key); the k-list of a CCX key is aligned with
// the ascending positions.
struct CorollaChild {
    GeneratorKey key;
    std::vector<int> positions;

    bool operator==(const CorollaChild& o) const {
        return key == o.key && positions == o.positions;
    }
    bool operator<(const CorollaChild& o) const {
        if (!(key == o.key))
            return key < o.key;
        return positions < o.positions;
    }
};

// One level of decomposition: root generator with slots(root) children in
// canonical order (position-sorted for the symmetric families, slot order for
// CUAS; arity-zero children last).
struct Corolla {
    GeneratorKey root;
    std::vector<CorollaChild> children;

    int total_weight() const;
    int total_degree() const;
    bool operator==(const Corolla& o) const { return root == o.root && children == o.children; }
    bool operator<(const Corolla& o) const {
        if (!(root == o.root))
            return root < o.root;
        return children < o.children;
    }
    std::string to_string() const;
};

// Two-level tree in unshuffle normal form: the inner vertex sits in slot `pos`
// of the root and consumes the listed composite slots (ascending). For the
// symmetric families pos is always 1.
struct TwoLevelTree {
    GeneratorKey root;
    int pos = 1;
    GeneratorKey inner;
    std::vector<int> inner_positions;

    int composite_slots() const { return root.slots() + inner.slots() - 1; }
    // The paper's sigma^{-1} decoration: inverse of the monotone shuffle whose
    // first block lands on inner_positions.
    Permutation unshuffle_decoration() const;

    bool operator==(const TwoLevelTree& o) const {
        return root == o.root && pos == o.pos && inner == o.inner &&
               inner_positions == o.inner_positions;
    }
    bool operator<(const TwoLevelTree& o) const;
    std::string to_string() const;
};

// A generator with an explicit assignment of composite slot positions,
// normal form for contraction results.
struct PositionedKey {
    GeneratorKey key;
    std::vector<int> positions;

    bool operator==(const PositionedKey& o) const {
        return key == o.key && positions == o.positions;
    }
    bool operator<(const PositionedKey& o) const {
        if (!(key == o.key))
            return key < o.key;
        return positions < o.positions;
    }
};

// Infinitesimal decomposition with exact rational coefficients: the two-vertex
// component of the full decomposition under the counit projection.
FormalSum<TwoLevelTree> delta1(const GeneratorKey& key);

// Full decomposition, truncated to output corollas of total weight <= max_weight.
FormalSum<Corolla> delta_full(const GeneratorKey& key, int max_weight);

// Counit projection of delta_full to two-vertex trees; must agree with delta1.
FormalSum<TwoLevelTree> delta1_from_full(const GeneratorKey& key);

// Canonicalizes child order in place (symmetric families); returns the sign.
int normalize_children(Family family, GeneratorKey& root, std::vector<CorollaChild>& children);

}  // namespace curvedop
