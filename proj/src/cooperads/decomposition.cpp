#include "curvedop/decomposition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <numeric>
#include <stdexcept>

#include "curvedop/signs.hpp"

namespace curvedop {

int Corolla::total_weight() const {
    int w = root.weight();
    for (const auto& c : children)
        w += c.key.weight();
    return w;
}

int Corolla::total_degree() const {
    int d = root.degree();
    for (const auto& c : children)
        d += c.key.degree();
    return d;
}

std::string Corolla::to_string() const {
    std::string s = "(" + root.to_string() + ";";
    for (const auto& c : children) {
        s += " " + c.key.to_string() + "@{";
        for (std::size_t i = 0; i < c.positions.size(); ++i) {
            if (i)
                s += ",";
            s += std::to_string(c.positions[i]);
        }
        s += "}";
    }
    return s + ")";
}

Permutation TwoLevelTree::unshuffle_decoration() const {
    int n = composite_slots();
    std::vector<int> im(n);
    std::vector<bool> used(n + 1, false);
    int q = inner.slots();
    for (int j = 0; j < q; ++j) {
        im[j] = inner_positions[j];
        used[im[j]] = true;
    }
    int idx = q;
    for (int v = 1; v <= n; ++v)
        if (!used[v])
            im[idx++] = v;
    return Permutation(im).inverse();
}

bool TwoLevelTree::operator<(const TwoLevelTree& o) const {
    if (!(root == o.root))
        return root < o.root;
    if (pos != o.pos)
        return pos < o.pos;
    if (!(inner == o.inner))
        return inner < o.inner;
    return inner_positions < o.inner_positions;
}

std::string TwoLevelTree::to_string() const {
    std::string s = root.to_string() + " o_" + std::to_string(pos) + " " + inner.to_string() + "@{";
    for (std::size_t i = 0; i < inner_positions.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(inner_positions[i]);
    }
    return s + "}";
}

namespace {

// Compare children for canonical order: leaf-carrying blocks by first position,
// leafless blocks afterwards by key.
bool child_before(const CorollaChild& a, const CorollaChild& b) {
    bool ae = a.positions.empty(), be = b.positions.empty();
    if (ae != be)
        return be;
    if (!ae)
        return a.positions.front() < b.positions.front();
    return a < b;
}

std::vector<std::vector<int>> compositions(int total, int parts) {
    std::vector<std::vector<int>> out;
    if (parts == 0) {
        if (total == 0)
            out.push_back({});
        return out;
    }
    std::vector<int> cur(parts, 0);
    // Iterate lexicographically over nonnegative integer tuples with the sum.
    std::function<void(int, int)> rec = [&](int idx, int remaining) {
        if (idx == parts - 1) {
            cur[idx] = remaining;
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            cur[idx] = v;
            rec(idx + 1, remaining - v);
        }
    };
    rec(0, total);
    return out;
}

}  // namespace

int normalize_children(Family family, GeneratorKey& root, std::vector<CorollaChild>& children) {
    if (family == Family::CUAS || children.size() <= 1)
        return 1;
    int p = static_cast<int>(children.size());
    std::vector<int> order(p);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return child_before(children[a], children[b]);
    });
    bool already = true;
    for (int i = 0; i < p; ++i)
        if (order[i] != i)
            already = false;
    if (already)
        return 1;
    std::vector<int> tau(p);
    for (int i = 0; i < p; ++i)
        tau[i] = order[i] + 1;
    Permutation perm(tau);
    std::vector<int> degs(p);
    for (int i = 0; i < p; ++i)
        degs[i] = children[i].key.degree();
    int sign = koszul_sign(perm, degs);
    if (family == Family::CCX) {
        sign *= sgn_restricted(perm, root.extra);
        std::vector<int> new_ks(p);
        for (int i = 0; i < p; ++i)
            new_ks[i] = root.extra[order[i]];
        root = GeneratorKey::ccx(std::move(new_ks));
    }
    std::vector<CorollaChild> sorted;
    sorted.reserve(p);
    for (int i = 0; i < p; ++i)
        sorted.push_back(std::move(children[order[i]]));
    children = std::move(sorted);
    return sign;
}

// ---------------------------------------------------------------------------
// CUAS: the unit-marked family. A corolla is parametrized by the number of
// children, the sizes of the root's marked runs between graft slots, each
// child's leaf count and marked subset; the composite leaf pattern must
// reproduce the input key.
// ---------------------------------------------------------------------------

namespace {

struct CuasProfile {
    int m = 0;                       // root arity label
    std::vector<int> root_marks;     // T_0 in root coordinates
    std::vector<int> run_sizes;      // t_0^0 .. t_0^{m'}
    std::vector<GeneratorKey> kids;  // child keys in slot order
    std::vector<std::vector<int>> kid_slot_positions;  // composite slots per child
    int eps_parity = 0;
};

// Scans the composite leaf pattern for the given run/child layout. Returns
// false if the root-marked leaves do not all lie in T.
bool scan_cuas(const std::vector<int>& T, const std::vector<int>& run_sizes,
               const std::vector<int>& child_sizes, CuasProfile& out) {
    int mprime = static_cast<int>(child_sizes.size());
    auto in_T = [&](int pos) { return std::binary_search(T.begin(), T.end(), pos); };
    int leaf = 0;   // composite leaf counter
    int slot = 0;   // composite slot counter
    int root_coord = 0;
    out.root_marks.clear();
    out.kids.clear();
    out.kid_slot_positions.clear();
    std::vector<int> kid_mark_counts;
    for (int j = 0; j <= mprime; ++j) {
        for (int r = 0; r < run_sizes[j]; ++r) {
            ++leaf;
            ++root_coord;
            if (!in_T(leaf))
                return false;
            out.root_marks.push_back(root_coord);
        }
        if (j == mprime)
            break;
        ++root_coord;  // graft slot occupies one root leaf
        std::vector<int> Tj;
        std::vector<int> slots_j;
        for (int r = 1; r <= child_sizes[j]; ++r) {
            ++leaf;
            if (in_T(leaf)) {
                Tj.push_back(r);
            } else {
                ++slot;
                slots_j.push_back(slot);
            }
        }
        kid_mark_counts.push_back(static_cast<int>(Tj.size()));
        out.kids.push_back(GeneratorKey::cuas(child_sizes[j], std::move(Tj)));
        out.kid_slot_positions.push_back(std::move(slots_j));
    }
    int t0 = static_cast<int>(out.root_marks.size());
    out.m = mprime + t0;
    // Every T position must be accounted for (root marks or child marks).
    int marks = t0;
    for (int c : kid_mark_counts)
        marks += c;
    if (marks != static_cast<int>(T.size()))
        return false;
    // Epsilon exponent, verbatim from the decomposition formula.
    int n = leaf;
    long eps = 0;
    long prefix = 0;  // sum_{l<j} i_l + t_0^0 + sum_{l<j} (|T_l| + t_0^l)
    prefix += run_sizes[0];
    for (int j = 1; j <= mprime; ++j) {
        eps += static_cast<long>(child_sizes[j - 1] - 1) * prefix;
        prefix += child_sizes[j - 1] + kid_mark_counts[j - 1] + run_sizes[j];
    }
    eps += static_cast<long>(t0) * (n - out.m);
    long mark_prefix = 0;
    for (int j = 1; j <= mprime; ++j) {
        mark_prefix += kid_mark_counts[j - 1];
        eps += static_cast<long>(run_sizes[j]) * mark_prefix;
    }
    out.eps_parity = static_cast<int>(((eps % 2) + 2) % 2);
    return true;
}

FormalSum<Corolla> cuas_delta_full(const GeneratorKey& key, int max_weight) {
    FormalSum<Corolla> out;
    int n = key.n;
    const std::vector<int>& T = key.extra;
    int t = static_cast<int>(T.size());
    for (int mprime = 0; mprime <= n + max_weight; ++mprime) {
        for (int t0 = 0; t0 <= t; ++t0) {
            int leaves = n - t0;
            if (leaves < 0)
                continue;
            for (const auto& sizes : compositions(leaves, mprime)) {
                int zero_kids = 0;
                for (int s : sizes)
                    if (s == 0)
                        ++zero_kids;
                int w = zero_kids + (mprime == 0 && t0 == 0 && n == 0 ? 1 : 0);
                if (w > max_weight)
                    continue;
                for (const auto& runs : compositions(t0, mprime + 1)) {
                    CuasProfile prof;
                    if (!scan_cuas(T, runs, sizes, prof))
                        continue;
                    Corolla c;
                    c.root = GeneratorKey::cuas(prof.m, prof.root_marks);
                    for (int j = 0; j < mprime; ++j)
                        c.children.push_back({prof.kids[j], prof.kid_slot_positions[j]});
                    out.add(c, Rational(prof.eps_parity == 0 ? 1 : -1));
                }
            }
        }
    }
    return out;
}

FormalSum<TwoLevelTree> cuas_delta1(const GeneratorKey& key) {
    FormalSum<TwoLevelTree> out;
    int n = key.n;
    const std::vector<int>& T = key.extra;
    int t = static_cast<int>(T.size());
    for (int mprime = 1; mprime <= n + 1; ++mprime) {
        for (int t0 = 0; t0 <= t; ++t0) {
            int q = n - t0 - (mprime - 1);
            if (q < 0)
                continue;
            for (int s = 1; s <= mprime; ++s) {
                std::vector<int> sizes(mprime, 1);
                sizes[s - 1] = q;
                for (const auto& runs : compositions(t0, mprime + 1)) {
                    CuasProfile prof;
                    if (!scan_cuas(T, runs, sizes, prof))
                        continue;
                    bool ok = true;
                    for (int j = 0; j < mprime; ++j)
                        if (j != s - 1 && !prof.kids[j].is_coaugmentation())
                            ok = false;
                    if (!ok)
                        continue;
                    TwoLevelTree tree;
                    tree.root = GeneratorKey::cuas(prof.m, prof.root_marks);
                    tree.pos = s;
                    tree.inner = prof.kids[s - 1];
                    tree.inner_positions = prof.kid_slot_positions[s - 1];
                    out.add(tree, Rational(prof.eps_parity == 0 ? 1 : -1));
                }
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// SCLIE
// ---------------------------------------------------------------------------

FormalSum<Corolla> sclie_delta_full(const GeneratorKey& key, int max_weight) {
    FormalSum<Corolla> out;
    int n = key.n;
    for (int p = 0; p <= n + max_weight; ++p) {
        Rational inv_p = inverse_factorial(p);
        for (const auto& blocks : compositions(n, p)) {
            int zero_blocks = 0;
            for (int q : blocks)
                if (q == 0)
                    ++zero_blocks;
            int w = zero_blocks + (p == 0 && n == 0 ? 1 : 0);
            if (w > max_weight)
                continue;
            for (const Permutation& sigma : monotone_shuffles(blocks)) {
                Corolla c;
                c.root = GeneratorKey::sclie(p);
                int start = 0;
                for (int i = 0; i < p; ++i) {
                    std::vector<int> pos;
                    for (int j = 1; j <= blocks[i]; ++j)
                        pos.push_back(sigma(start + j));
                    c.children.push_back({GeneratorKey::sclie(blocks[i]), std::move(pos)});
                    start += blocks[i];
                }
                int sign = normalize_children(Family::SCLIE, c.root, c.children);
                out.add(c, inv_p * sign);
            }
        }
    }
    return out;
}

FormalSum<TwoLevelTree> sclie_delta1(const GeneratorKey& key) {
    FormalSum<TwoLevelTree> out;
    int n = key.n;
    for (int p = 1; p <= n + 1; ++p) {
        int q = n + 1 - p;
        for (const Permutation& sigma : monotone_shuffles({q, p - 1})) {
            TwoLevelTree tree;
            tree.root = GeneratorKey::sclie(p);
            tree.pos = 1;
            tree.inner = GeneratorKey::sclie(q);
            for (int j = 1; j <= q; ++j)
                tree.inner_positions.push_back(sigma(j));
            out.add(tree, Rational(1));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// CCX
// ---------------------------------------------------------------------------

namespace ccx_detail {

// Enumerate kp[j] in 0..ks[j] for j in the free positions; kpp = ks - kp.
void for_each_split(const std::vector<int>& ks, const std::vector<int>& free_positions,
                    std::vector<int>& kp, std::vector<int>& kpp, std::size_t idx,
                    const std::function<void()>& emit) {
    if (idx == free_positions.size()) {
        emit();
        return;
    }
    int j = free_positions[idx];
    for (int v = 0; v <= ks[j - 1]; ++v) {
        kp[j - 1] = v;
        kpp[j - 1] = ks[j - 1] - v;
        for_each_split(ks, free_positions, kp, kpp, idx + 1, emit);
    }
}

}  // namespace ccx_detail

FormalSum<Corolla> ccx_delta_full(const GeneratorKey& key, int max_weight) {
    FormalSum<Corolla> out;
    const std::vector<int>& ks = key.extra;
    int n = key.n;
    for (int p = 0; p <= n + max_weight; ++p) {
        Rational inv_p = inverse_factorial(p);
        for (const auto& blocks : compositions(n, p)) {
            int zero_blocks = 0;
            for (int q : blocks)
                if (q == 0)
                    ++zero_blocks;
            int w = zero_blocks + (p == 0 && n == 0 ? 1 : 0);
            if (w > max_weight)
                continue;
            for (const Permutation& sigma : monotone_shuffles(blocks)) {
                std::vector<int> all_positions;
                for (int j = 1; j <= n; ++j)
                    all_positions.push_back(j);
                std::vector<int> kp(n, 0), kpp(n, 0);
                ccx_detail::for_each_split(ks, all_positions, kp, kpp, 0, [&]() {
                    int restriction = sgn_restricted(sigma, ks);
                    int eps = epsilon_sigma(kp, kpp, sigma);
                    Rational coeff = inv_p * Rational(restriction * eps);
                    std::vector<int> root_ks;
                    Corolla c;
                    int start = 0;
                    for (int i = 0; i < p; ++i) {
                        std::vector<int> pos, kid_ks, block_kp;
                        int lsum = 0;
                        for (int j = 1; j <= blocks[i]; ++j) {
                            int src = sigma(start + j);
                            pos.push_back(src);
                            kid_ks.push_back(kpp[src - 1]);
                            block_kp.push_back(kp[src - 1]);
                            lsum += kp[src - 1];
                        }
                        coeff *= alpha_coeff(block_kp);
                        root_ks.push_back(lsum);
                        c.children.push_back({GeneratorKey::ccx(std::move(kid_ks)), std::move(pos)});
                        start += blocks[i];
                    }
                    if (is_zero(coeff))
                        return;
                    c.root = GeneratorKey::ccx(std::move(root_ks));
                    int sign = normalize_children(Family::CCX, c.root, c.children);
                    out.add(c, coeff * sign);
                });
            }
        }
    }
    return out;
}

FormalSum<TwoLevelTree> ccx_delta1(const GeneratorKey& key) {
    FormalSum<TwoLevelTree> out;
    const std::vector<int>& ks = key.extra;
    int n = key.n;
    for (int p = 1; p <= n + 1; ++p) {
        int q = n + 1 - p;
        if (q < 0)
            continue;
        for (const Permutation& sigma : monotone_shuffles({q, p - 1})) {
            std::vector<int> inner_pos;
            for (int j = 1; j <= q; ++j)
                inner_pos.push_back(sigma(j));
            std::vector<int> kp(n, 0), kpp(n, 0);
            for (int j = q + 1; j <= n; ++j) {
                kp[sigma(j) - 1] = ks[sigma(j) - 1];
                kpp[sigma(j) - 1] = 0;
            }
            ccx_detail::for_each_split(ks, inner_pos, kp, kpp, 0, [&]() {
                std::vector<int> block_kp, inner_ks;
                int kprime = 0;
                for (int j = 1; j <= q; ++j) {
                    int src = sigma(j);
                    block_kp.push_back(kp[src - 1]);
                    inner_ks.push_back(kpp[src - 1]);
                    kprime += kp[src - 1];
                }
                Rational coeff = alpha_coeff(block_kp) *
                                 Rational(sgn_restricted(sigma, ks) * epsilon_sigma(kp, kpp, sigma));
                if (is_zero(coeff))
                    return;
                std::vector<int> root_ks;
                root_ks.push_back(kprime);
                for (int j = q + 1; j <= n; ++j)
                    root_ks.push_back(ks[sigma(j) - 1]);
                TwoLevelTree tree;
                tree.root = GeneratorKey::ccx(std::move(root_ks));
                tree.pos = 1;
                tree.inner = GeneratorKey::ccx(std::move(inner_ks));
                tree.inner_positions = inner_pos;
                out.add(tree, coeff);
            });
        }
    }
    return out;
}

}  // namespace

FormalSum<TwoLevelTree> delta1(const GeneratorKey& key) {
    static std::map<GeneratorKey, FormalSum<TwoLevelTree>> cache;
    static std::shared_mutex mutex;
    {
        std::shared_lock lock(mutex);
        auto it = cache.find(key);
        if (it != cache.end())
            return it->second;
    }
    FormalSum<TwoLevelTree> out;
    switch (key.family) {
        case Family::SCLIE: out = sclie_delta1(key); break;
        case Family::CUAS: out = cuas_delta1(key); break;
        case Family::CCX: out = ccx_delta1(key); break;
    }
    std::unique_lock lock(mutex);
    return cache.emplace(key, std::move(out)).first->second;
}

FormalSum<Corolla> delta_full(const GeneratorKey& key, int max_weight) {
    static std::map<std::pair<GeneratorKey, int>, FormalSum<Corolla>> cache;
    static std::shared_mutex mutex;
    auto cache_key = std::make_pair(key, max_weight);
    {
        std::shared_lock lock(mutex);
        auto it = cache.find(cache_key);
        if (it != cache.end())
            return it->second;
    }
    FormalSum<Corolla> out;
    switch (key.family) {
        case Family::SCLIE: out = sclie_delta_full(key, max_weight); break;
        case Family::CUAS: out = cuas_delta_full(key, max_weight); break;
        case Family::CCX: out = ccx_delta_full(key, max_weight); break;
    }
    std::unique_lock lock(mutex);
    return cache.emplace(std::move(cache_key), std::move(out)).first->second;
}

FormalSum<TwoLevelTree> delta1_from_full(const GeneratorKey& key) {
    FormalSum<TwoLevelTree> out;
    for (const auto& [corolla, coeff] : delta_full(key, key.weight() + 2)) {
        const auto& kids = corolla.children;
        for (std::size_t s = 0; s < kids.size(); ++s) {
            bool others_trivial = true;
            for (std::size_t j = 0; j < kids.size(); ++j)
                if (j != s && !kids[j].key.is_coaugmentation())
                    others_trivial = false;
            if (!others_trivial)
                continue;
            TwoLevelTree tree;
            tree.inner = kids[s].key;
            tree.inner_positions = kids[s].positions;
            Rational c = coeff;
            if (corolla.root.family == Family::CUAS) {
                tree.root = corolla.root;
                tree.pos = static_cast<int>(s) + 1;
            } else {
                // Rotate the kept child to the front; the bystanders have
                // degree zero so only the root key action contributes a sign.
                tree.pos = 1;
                GeneratorKey root = corolla.root;
                if (root.family == Family::CCX && s > 0) {
                    int p = static_cast<int>(kids.size());
                    std::vector<int> tau(p);
                    tau[0] = static_cast<int>(s) + 1;
                    int idx = 1;
                    for (int j = 1; j <= p; ++j)
                        if (j != static_cast<int>(s) + 1)
                            tau[idx++] = j;
                    Permutation perm(tau);
                    c *= Rational(sgn_restricted(perm, root.extra));
                    std::vector<int> new_ks(p);
                    for (int i = 0; i < p; ++i)
                        new_ks[i] = root.extra[perm(i + 1) - 1];
                    root = GeneratorKey::ccx(std::move(new_ks));
                }
                tree.root = root;
            }
            out.add(tree, c);
        }
    }
    return out;
}

}  // namespace curvedop
