#pragma once

#include <string>
#include <vector>

#include "curvedop/rational.hpp"

namespace curvedop {

enum class Family { SCLIE, CUAS, CCX };

std::string family_name(Family f);
Family family_from_name(const std::string& s);

// A generator of one of the three cooperad families:
//   SCLIE  l_n          (n >= 0)
//   CUAS   nu_n^T       (n >= 0, T a sorted subset of {1..n}, 1-based)
//   CCX    j_{k_1..k_n} (k_i >= 0)
// CUAS keys use "extra" for T, CCX keys use it for the k-list.
struct GeneratorKey {
    Family family = Family::SCLIE;
    int n = 0;
    std::vector<int> extra;

    static GeneratorKey sclie(int n) { return {Family::SCLIE, n, {}}; }
    static GeneratorKey cuas(int n, std::vector<int> T = {});
    static GeneratorKey ccx(std::vector<int> ks);

    int degree() const;        // homological
    int weight() const;        // 0 or 1; the arity-zero generators carry 1
    int arity_label() const;   // the paper index n (leaf count incl. unit marks)
    int slots() const;         // number of operadic inputs

    bool is_coaugmentation() const;  // l_1, nu_1^empty, j_(0)
    Rational curvature() const;      // theta^c on this generator
    Rational counit() const;         // 1 on the coaugmentation key, else 0

    bool operator==(const GeneratorKey& o) const {
        return family == o.family && n == o.n && extra == o.extra;
    }
    bool operator!=(const GeneratorKey& o) const { return !(*this == o); }
    bool operator<(const GeneratorKey& o) const;

    std::string to_string() const;
};

GeneratorKey coaugmentation_key(Family f);
GeneratorKey curvature_key(Family f);  // nu_0^empty, j_empty, l_0

// All keys of the family with arity_label <= max_arity (CUAS: every T subset;
// CCX: every k-list with sum <= max_k).
std::vector<GeneratorKey> keys_up_to(Family f, int max_arity, int max_k = 3);

}  // namespace curvedop
