#include "curvedop/generator_key.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace curvedop {

std::string family_name(Family f) {
    switch (f) {
        case Family::SCLIE: return "sclie";
        case Family::CUAS: return "cuas";
        case Family::CCX: return "ccx";
    }
    return "?";
}

Family family_from_name(const std::string& s) {
    if (s == "sclie")
        return Family::SCLIE;
    if (s == "cuas")
        return Family::CUAS;
    if (s == "ccx")
        return Family::CCX;
    throw std::invalid_argument("unknown family: " + s);
}

GeneratorKey GeneratorKey::cuas(int n, std::vector<int> T) {
    for (std::size_t i = 0; i < T.size(); ++i) {
        if (T[i] < 1 || T[i] > n || (i > 0 && T[i] <= T[i - 1]))
            throw std::invalid_argument("cuas key: T must be a sorted subset of [n]");
    }
    return {Family::CUAS, n, std::move(T)};
}

GeneratorKey GeneratorKey::ccx(std::vector<int> ks) {
    for (int k : ks)
        if (k < 0)
            throw std::invalid_argument("ccx key: negative k");
    return {Family::CCX, static_cast<int>(ks.size()), std::move(ks)};
}

int GeneratorKey::degree() const {
    switch (family) {
        case Family::SCLIE:
            return 0;
        case Family::CUAS:
            return n - 1 + static_cast<int>(extra.size());
        case Family::CCX:
            // cohomological degree -(k_1+...+k_n), so homological +sum.
            return std::accumulate(extra.begin(), extra.end(), 0);
    }
    return 0;
}

int GeneratorKey::weight() const {
    // F_1 of each cooperad is spanned by its arity-zero generator.
    return (n == 0 && extra.empty()) ? 1 : 0;
}

int GeneratorKey::arity_label() const { return n; }

int GeneratorKey::slots() const {
    return family == Family::CUAS ? n - static_cast<int>(extra.size()) : n;
}

bool GeneratorKey::is_coaugmentation() const {
    switch (family) {
        case Family::SCLIE:
            return n == 1;
        case Family::CUAS:
            return n == 1 && extra.empty();
        case Family::CCX:
            return n == 1 && extra[0] == 0;
    }
    return false;
}

Rational GeneratorKey::curvature() const {
    switch (family) {
        case Family::SCLIE:
            return Rational(0);
        case Family::CUAS:
            if (n == 2 && extra.size() == 1)
                return Rational(1);
            return Rational(0);
        case Family::CCX:
            // Nonzero exactly on j_(2). The sign follows the uncurved complex
            // family's display; the positive variant fails the Maurer-Cartan
            // validation of the multiplication-by-i algebra.
            if (n == 1 && extra[0] == 2)
                return Rational(-1);
            return Rational(0);
    }
    return Rational(0);
}

Rational GeneratorKey::counit() const {
    return is_coaugmentation() ? Rational(1) : Rational(0);
}

bool GeneratorKey::operator<(const GeneratorKey& o) const {
    if (family != o.family)
        return family < o.family;
    if (n != o.n)
        return n < o.n;
    return extra < o.extra;
}

std::string GeneratorKey::to_string() const {
    switch (family) {
        case Family::SCLIE:
            return "l" + std::to_string(n);
        case Family::CUAS: {
            std::string s = "nu" + std::to_string(n);
            if (!extra.empty()) {
                s += "^{";
                for (std::size_t i = 0; i < extra.size(); ++i) {
                    if (i)
                        s += ",";
                    s += std::to_string(extra[i]);
                }
                s += "}";
            }
            return s;
        }
        case Family::CCX: {
            std::string s = "j(";
            for (std::size_t i = 0; i < extra.size(); ++i) {
                if (i)
                    s += ",";
                s += std::to_string(extra[i]);
            }
            return s + ")";
        }
    }
    return "?";
}

GeneratorKey coaugmentation_key(Family f) {
    switch (f) {
        case Family::SCLIE: return GeneratorKey::sclie(1);
        case Family::CUAS: return GeneratorKey::cuas(1);
        case Family::CCX: return GeneratorKey::ccx({0});
    }
    throw std::logic_error("bad family");
}

GeneratorKey curvature_key(Family f) {
    switch (f) {
        case Family::SCLIE: return GeneratorKey::sclie(0);
        case Family::CUAS: return GeneratorKey::cuas(0);
        case Family::CCX: return GeneratorKey::ccx({});
    }
    throw std::logic_error("bad family");
}

namespace {

void subsets_of(int n, std::vector<std::vector<int>>& out) {
    out.clear();
    for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<int> T;
        for (int i = 1; i <= n; ++i)
            if (mask & (1 << (i - 1)))
                T.push_back(i);
        out.push_back(std::move(T));
    }
}

void klists_of(int n, int max_sum, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == n) {
        out.push_back(cur);
        return;
    }
    int used = std::accumulate(cur.begin(), cur.end(), 0);
    for (int k = 0; k + used <= max_sum; ++k) {
        cur.push_back(k);
        klists_of(n, max_sum, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<GeneratorKey> keys_up_to(Family f, int max_arity, int max_k) {
    std::vector<GeneratorKey> keys;
    for (int n = 0; n <= max_arity; ++n) {
        switch (f) {
            case Family::SCLIE:
                keys.push_back(GeneratorKey::sclie(n));
                break;
            case Family::CUAS: {
                std::vector<std::vector<int>> subs;
                subsets_of(n, subs);
                for (auto& T : subs)
                    keys.push_back(GeneratorKey::cuas(n, std::move(T)));
                break;
            }
            case Family::CCX: {
                std::vector<std::vector<int>> lists;
                std::vector<int> cur;
                klists_of(n, max_k, cur, lists);
                for (auto& ks : lists)
                    keys.push_back(GeneratorKey::ccx(std::move(ks)));
                break;
            }
        }
    }
    std::sort(keys.begin(), keys.end());
    return keys;
}

}  // namespace curvedop
