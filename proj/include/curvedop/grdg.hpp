#pragma once

#include <optional>
#include <string>
#include <vector>

#include "curvedop/formal_sum.hpp"
#include "curvedop/sparse_matrix.hpp"

namespace curvedop {

struct BasisElement {
    std::string label;
    int degree = 0;  // homological
    int weight = 0;  // filtration realized as a graduation, >= 0
};

// Finite complete filtered gr-dg module: the predifferential d has homological
// degree -1, is weight-nondecreasing, its weight-preserving part squares to
// zero and d^2 lands in strictly higher weight.
class GrDgModule {
public:
    GrDgModule() = default;
    explicit GrDgModule(std::vector<BasisElement> basis) : basis_(std::move(basis)) {}

    int dim() const { return static_cast<int>(basis_.size()); }
    const BasisElement& element(int i) const { return basis_[i]; }
    const std::vector<BasisElement>& basis() const { return basis_; }

    int index_of(const std::string& label) const;  // -1 when absent

    void set_d(int from, const FormalSum<int>& image);
    void add_d(int from, int to, const Rational& coeff);
    const FormalSum<int>& d_column(int from) const;

    SparseMatrix d_matrix() const;
    SparseMatrix gr_part() const;  // weight-preserving component of d

    bool operator==(const GrDgModule& other) const;

private:
    std::vector<BasisElement> basis_;
    std::vector<FormalSum<int>> d_;  // lazily sized to dim()
    mutable FormalSum<int> zero_;
};

struct CheckReport {
    bool pass = true;
    std::string clause;    // violated invariant, empty when passing
    std::string witness;   // offending basis element / generator / word
    std::string detail;

    void fail(std::string the_clause, std::string the_witness, std::string the_detail = "") {
        if (!pass)
            return;
        pass = false;
        clause = std::move(the_clause);
        witness = std::move(the_witness);
        detail = std::move(the_detail);
    }
};

CheckReport check_grdg(const GrDgModule& m);

struct HomElement {
    const GrDgModule* source = nullptr;
    const GrDgModule* target = nullptr;
    int degree = 0;  // homological
    SparseMatrix matrix;  // rows indexed by target basis, cols by source basis
};

// d_target . f - (-1)^{|f|} f . d_source
HomElement hom_differential(const HomElement& f);

// Entries must connect basis pairs with the declared degree shift; optionally
// weight-nondecreasing.
CheckReport check_hom_element(const HomElement& f, bool require_filtered = true);

GrDgModule direct_sum(const GrDgModule& a, const GrDgModule& b,
                      const std::string& prefix_a, const std::string& prefix_b);

}  // namespace curvedop
