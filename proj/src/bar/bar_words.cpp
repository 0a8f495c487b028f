#include "curvedop/bar.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>

#include "curvedop/signs.hpp"

namespace curvedop {

int BarWord::degree(const GrDgModule& m) const {
    int d = key.degree();
    for (int a : letters)
        d += m.element(a).degree;
    return d;
}

int BarWord::weight(const GrDgModule& m) const {
    int w = key.weight();
    for (int a : letters)
        w += m.element(a).weight;
    return w;
}

std::string BarWord::to_string(const GrDgModule& m) const {
    std::string s = "(" + key.to_string() + ";";
    for (int a : letters)
        s += " " + m.element(a).label;
    return s + ")";
}

std::optional<std::pair<BarWord, int>> make_ccx_word(const GrDgModule& m,
                                                     const std::vector<int>& ks,
                                                     const std::vector<int>& letters) {
    int n = static_cast<int>(ks.size());
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        if (ks[a] != ks[b])
            return ks[a] < ks[b];
        return letters[a] < letters[b];
    });
    // Words with a repeated pair of odd total degree vanish.
    for (int i = 0; i + 1 < n; ++i) {
        int a = order[i], b = order[i + 1];
        if (ks[a] == ks[b] && letters[a] == letters[b]) {
            int pair_deg = ks[a] + m.element(letters[a]).degree;
            if (pair_deg % 2 != 0)
                return std::nullopt;
        }
    }
    // Sign: key action on the shifts times the Koszul sign of the letters.
    std::vector<int> tau(n), sorted_ks(n), sorted_letters(n), degs(n);
    for (int i = 0; i < n; ++i) {
        tau[i] = order[i] + 1;
        sorted_ks[i] = ks[order[i]];
        sorted_letters[i] = letters[order[i]];
        degs[i] = m.element(letters[i]).degree;
    }
    int sign = 1;
    Permutation perm(tau);
    if (!perm.is_identity()) {
        sign = sgn_restricted(perm, ks) * koszul_sign(perm, degs);
    }
    BarWord w;
    w.key = GeneratorKey::ccx(std::move(sorted_ks));
    w.letters = std::move(sorted_letters);
    return std::make_pair(std::move(w), sign);
}

namespace {

std::size_t basis_cap() {
    if (const char* env = std::getenv("CURVEDOP_MAX_BASIS")) {
        long v = std::atol(env);
        if (v > 0)
            return static_cast<std::size_t>(v);
    }
    return 200000;
}

void enumerate_letter_tuples(const GrDgModule& m, int count, int weight_budget,
                             std::vector<int>& cur, const std::function<void()>& emit) {
    if (count == 0) {
        emit();
        return;
    }
    for (int a = 0; a < m.dim(); ++a) {
        if (m.element(a).weight > weight_budget)
            continue;
        cur.push_back(a);
        enumerate_letter_tuples(m, count - 1, weight_budget - m.element(a).weight, cur, emit);
        cur.pop_back();
    }
}

// Nondecreasing (k, letter) sequences for the CCX multiset words.
void enumerate_ccx_pairs(const GrDgModule& m, int remaining, int max_k, int weight_budget,
                         std::pair<int, int> min_pair, std::vector<std::pair<int, int>>& cur,
                         const std::function<void()>& emit) {
    emit();
    if (remaining == 0)
        return;
    for (int k = min_pair.first; k <= max_k; ++k) {
        for (int a = (k == min_pair.first ? min_pair.second : 0); a < m.dim(); ++a) {
            if (m.element(a).weight > weight_budget)
                continue;
            // Repeated odd pairs vanish.
            if (!cur.empty() && cur.back() == std::make_pair(k, a) &&
                (k + m.element(a).degree) % 2 != 0)
                continue;
            cur.emplace_back(k, a);
            enumerate_ccx_pairs(m, remaining - 1, max_k, weight_budget - m.element(a).weight,
                                {k, a}, cur, emit);
            cur.pop_back();
        }
    }
}

}  // namespace

std::vector<BarWord> bar_basis(const AlgebraStructure& alg, const Truncation& t) {
    const GrDgModule& m = alg.module;
    std::vector<BarWord> out;
    std::size_t cap = basis_cap();
    auto push = [&](BarWord w) {
        int d = w.degree(m);
        if (d < t.deg_min || d > t.deg_max)
            return;
        if (w.weight(m) > t.max_weight)
            return;
        out.push_back(std::move(w));
        if (out.size() > cap)
            throw TruncationTooLarge(out.size());
    };
    if (alg.family == Family::CUAS) {
        for (const GeneratorKey& key : keys_up_to(Family::CUAS, t.max_length)) {
            int count = key.slots();
            std::vector<int> cur;
            enumerate_letter_tuples(m, count, t.max_weight - key.weight(), cur, [&]() {
                BarWord w;
                w.key = key;
                w.letters = cur;
                push(std::move(w));
            });
        }
    } else if (alg.family == Family::CCX) {
        std::vector<std::pair<int, int>> cur;
        enumerate_ccx_pairs(m, t.max_length, t.max_k, t.max_weight, {0, 0}, cur, [&]() {
            std::vector<int> ks, letters;
            for (auto& [k, a] : cur) {
                ks.push_back(k);
                letters.push_back(a);
            }
            BarWord w;
            w.key = GeneratorKey::ccx(std::move(ks));
            w.letters = std::move(letters);
            push(std::move(w));
        });
    } else {
        throw std::invalid_argument("bar construction covers the CUAS and CCX families");
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace curvedop
