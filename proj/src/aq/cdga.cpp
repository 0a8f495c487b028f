#include "curvedop/cdga.hpp"

#include <random>

#include "curvedop/signs.hpp"

namespace curvedop {

namespace {

// Complex multiplication on the two-dimensional line with basis (one, i).
FormalSum<int> complex_mul(const FormalSum<int>& a, const FormalSum<int>& b) {
    FormalSum<int> out;
    for (const auto& [x, cx] : a) {
        for (const auto& [y, cy] : b) {
            Rational c = cx * cy;
            if (x == 0 && y == 0)
                out.add(0, c);
            else if (x == 1 && y == 1)
                out.add(0, -c);
            else
                out.add(1, c);
        }
    }
    return out;
}

FormalSum<int> complex_scale_i(const FormalSum<int>& a) {
    FormalSum<int> out;
    for (const auto& [x, c] : a)
        out.add(x == 0 ? 1 : 0, x == 0 ? c : -c);
    return out;
}

bool all_zero_shifts(const GeneratorKey& key) {
    for (int k : key.extra)
        if (k != 0)
            return false;
    return true;
}

}  // namespace

HomCochain cdga_product(const AlgebraStructure& alg, const GrDgModule& line,
                        const HomCochain& phi, const HomCochain& psi,
                        const std::vector<BarWord>& words, int max_weight) {
    (void)line;
    const GrDgModule& src = alg.module;
    HomCochain out;
    out.degree = phi.degree + psi.degree;
    const HomCochain* phis[2] = {&phi, &psi};
    for (const BarWord& w : words) {
        FormalSum<int> val;
        for (const auto& [corolla, coeff] : coalgebra_delta(alg, w, max_weight)) {
            if (corolla.children.size() != 2 || !all_zero_shifts(corolla.root))
                continue;
            int d1 = corolla.children[0].degree(src);
            // Transfer-normalized pairing of the two cochains with the
            // symmetric-word class.
            for (int swap = 0; swap < 2; ++swap) {
                const HomCochain& f = *phis[swap];
                const HomCochain& g = *phis[1 - swap];
                FormalSum<int> a = f.at(corolla.children[0]);
                FormalSum<int> b = g.at(corolla.children[1]);
                if (a.empty() || b.empty())
                    continue;
                int parity = g.degree * d1;  // g passes the first subword
                if (swap)
                    parity += phi.degree * psi.degree;  // reorder the cochains
                Rational c = coeff * Rational(parity % 2 == 0 ? 1 : -1) / 2;
                val.add(complex_mul(a, b), c);
            }
        }
        if (!val.empty())
            out.add(w, val);
    }
    return out;
}

CdgaReport check_cdga(const AlgebraStructure& alg, const Truncation& t, int random_trials) {
    CdgaReport rep;
    if (alg.family != Family::CCX) {
        rep.pass = false;
        rep.failed_law = "family";
        return rep;
    }
    ModuleCoefficients triv = trivial_complex_module(alg);
    AQComplex cx = aq_differential(alg, triv, t);
    const std::vector<BarWord>& words = cx.words;
    const GrDgModule& line = triv.module;
    int max_weight = t.max_weight + 1;

    // Basis cochains grouped for reuse.
    std::vector<HomCochain> basis;
    for (const CochainBasisElement& e : cx.cochains) {
        HomCochain f;
        f.degree = line.element(e.target).degree - e.word.degree(alg.module);
        f.add(e.word, FormalSum<int>(e.target, Rational(1)));
        basis.push_back(std::move(f));
    }

    auto scale_i = [&](const HomCochain& f) {
        HomCochain out;
        out.degree = f.degree;
        for (const auto& [w, v] : f.values)
            out.add(w, complex_scale_i(v));
        return out;
    };
    auto dtau_cols = cx.d_tau.to_cols();
    auto apply_dtau = [&](const HomCochain& f) {
        HomCochain out;
        out.degree = f.degree - 1;
        for (const auto& [w, v] : f.values) {
            for (const auto& [tgt, c] : v) {
                int col = cx.cochain_index.at({w, tgt});
                for (const auto& [row, vv] : dtau_cols[col])
                    out.add(cx.cochains[row].word,
                            FormalSum<int>(cx.cochains[row].target, vv * c));
            }
        }
        return out;
    };

    auto product = [&](const HomCochain& f, const HomCochain& g) {
        return cdga_product(alg, line, f, g, words, max_weight);
    };
    auto minus = [&](HomCochain a, const HomCochain& b) {
        for (const auto& [w, v] : b.values)
            a.add(w, v, Rational(-1));
        return a;
    };
    auto scaled = [&](HomCochain a, const Rational& s) {
        HomCochain out;
        out.degree = a.degree;
        for (const auto& [w, v] : a.values)
            out.add(w, v, s);
        return out;
    };

    // Commutativity and bilinearity on every basis pair; bilinear laws make
    // the basis check complete.
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = i; j < basis.size(); ++j) {
            HomCochain fg = product(basis[i], basis[j]);
            HomCochain gf = product(basis[j], basis[i]);
            int sign = (basis[i].degree * basis[j].degree) % 2 == 0 ? 1 : -1;
            if (!(minus(fg, scaled(gf, Rational(sign))).is_zero())) {
                rep.pass = false;
                rep.failed_law = "commutativity";
                rep.detail = "basis pair " + std::to_string(i) + "," + std::to_string(j);
                return rep;
            }
            HomCochain left = product(scale_i(basis[i]), basis[j]);
            HomCochain right = scale_i(product(basis[i], basis[j]));
            if (!minus(left, right).is_zero()) {
                rep.pass = false;
                rep.failed_law = "complex_bilinearity";
                rep.detail = "basis pair " + std::to_string(i) + "," + std::to_string(j);
                return rep;
            }
        }
    }

    // Leibniz on every basis pair.
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = 0; j < basis.size(); ++j) {
            HomCochain lhs = apply_dtau(product(basis[i], basis[j]));
            HomCochain rhs = product(apply_dtau(basis[i]), basis[j]);
            Rational s(basis[i].degree % 2 == 0 ? 1 : -1);
            HomCochain second = product(basis[i], apply_dtau(basis[j]));
            for (const auto& [w, v] : second.values)
                rhs.add(w, v, s);
            if (!minus(lhs, rhs).is_zero()) {
                rep.pass = false;
                rep.failed_law = "leibniz";
                rep.detail = "basis pair " + std::to_string(i) + "," + std::to_string(j);
                return rep;
            }
        }
    }

    // Associativity: exact randomized combinations (multilinear in each slot).
    std::mt19937 rng(20240401u);
    std::uniform_int_distribution<int> coeff_dist(-3, 3);
    for (int trial = 0; trial < random_trials; ++trial) {
        HomCochain f, g, h;
        // Random degree-homogeneous combinations keep the law graded.
        int pick = trial % 3;
        auto random_cochain = [&](int offset) {
            HomCochain out;
            bool first = true;
            int want = 0;
            for (std::size_t i = offset % basis.size(); i < basis.size(); ++i) {
                if (first) {
                    want = basis[i].degree;
                    out.degree = want;
                    first = false;
                }
                if (basis[i].degree != want)
                    continue;
                Rational c(coeff_dist(rng));
                for (const auto& [w, v] : basis[i].values)
                    out.add(w, v, c);
            }
            return out;
        };
        f = random_cochain(pick);
        g = random_cochain(pick + 1);
        h = random_cochain(pick + 2);
        HomCochain lhs = product(product(f, g), h);
        HomCochain rhs = product(f, product(g, h));
        if (!minus(lhs, rhs).is_zero()) {
            rep.pass = false;
            rep.failed_law = "associativity";
            rep.detail = "randomized trial " + std::to_string(trial);
            return rep;
        }
    }
    return rep;
}

}  // namespace curvedop
