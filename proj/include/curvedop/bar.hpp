#pragma once

#include <climits>
#include <optional>
#include <stdexcept>

#include "curvedop/algebra.hpp"
#include "curvedop/sparse_matrix.hpp"

namespace curvedop {

class TruncationTooLarge : public std::runtime_error {
public:
    explicit TruncationTooLarge(std::size_t n)
        : std::runtime_error("bar basis would exceed the configured bound (" +
                             std::to_string(n) + " words)") {}
};

struct Truncation {
    int max_weight = 3;
    int max_length = 3;
    int max_k = 2;  // CCX: bound on each letter shift
    int deg_min = INT_MIN / 2;
    int deg_max = INT_MAX / 2;

    Truncation shrunk() const {
        Truncation t = *this;
        t.max_weight = std::max(0, max_weight - 1);
        t.max_length = std::max(0, max_length - 1);
        return t;
    }
};

// Basis word of the bar construction. CUAS: ordered letters under the key's
// unmarked slots. CCX: the multiset of (shift, letter) pairs in canonical
// sorted order, the key recording the shifts.
struct BarWord {
    GeneratorKey key;
    std::vector<int> letters;

    int length() const { return key.arity_label(); }
    int degree(const GrDgModule& m) const;
    int weight(const GrDgModule& m) const;

    bool operator==(const BarWord& o) const { return key == o.key && letters == o.letters; }
    bool operator<(const BarWord& o) const {
        if (!(key == o.key))
            return key < o.key;
        return letters < o.letters;
    }
    std::string to_string(const GrDgModule& m) const;
};

// Canonical form of a CCX word given parallel shift/letter lists; returns
// nothing when the word self-annihilates (repeated odd pair), else the word
// and the normalization sign.
std::optional<std::pair<BarWord, int>> make_ccx_word(const GrDgModule& m,
                                                     const std::vector<int>& ks,
                                                     const std::vector<int>& letters);

std::vector<BarWord> bar_basis(const AlgebraStructure& alg, const Truncation& t);

struct BarComplex {
    std::vector<BarWord> basis;
    SparseMatrix d_b;
    SparseMatrix theta_insertion;
    std::vector<bool> interior;  // d_b and theta images stay inside the basis

    int index_of(const BarWord& w) const;
    std::map<BarWord, int> index;
};

// d_b(word) as an exact formal sum, before any truncation.
FormalSum<BarWord> bar_d(const AlgebraStructure& alg, const BarWord& w);

// theta^c (x) id applied to the coalgebra decomposition of the word.
FormalSum<BarWord> bar_theta(const AlgebraStructure& alg, const BarWord& w);

BarComplex bar_differential(const AlgebraStructure& alg, const Truncation& t);

struct BarSquareReport {
    bool pass = true;
    std::optional<BarWord> witness;
    int interior_count = 0;
    int boundary_count = 0;
    std::string detail;
};

// d_b^2 + theta_insertion = 0 on every interior word whose d_b image is again
// interior.
BarSquareReport check_bar_square(const AlgebraStructure& alg, const Truncation& t);

// One level of the word coalgebra: the root key with the child words.
struct WordCorolla {
    GeneratorKey root;
    std::vector<BarWord> children;

    bool operator==(const WordCorolla& o) const {
        return root == o.root && children == o.children;
    }
    bool operator<(const WordCorolla& o) const {
        if (!(root == o.root))
            return root < o.root;
        return children < o.children;
    }
};

FormalSum<WordCorolla> coalgebra_delta(const AlgebraStructure& alg, const BarWord& w,
                                       int max_weight);

struct SymAgreementReport {
    bool pass = true;
    std::optional<BarWord> witness;
    std::string detail;
};

// The generic bar differential against the directly transcribed symmetric-model
// formula (CCX only).
SymAgreementReport sym_model_agreement(const AlgebraStructure& alg, const Truncation& t);

}  // namespace curvedop
