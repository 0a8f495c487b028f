#include "curvedop/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace curvedop {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
        if (v < 1 || v > static_cast<int>(images_.size()) || seen[v - 1])
            throw std::invalid_argument("not a permutation of {1..n}");
        seen[v - 1] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 1);
    return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
    std::vector<int> im(images_.size());
    for (int i = 1; i <= size(); ++i)
        im[images_[i - 1] - 1] = i;
    return Permutation(std::move(im));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("permutation size mismatch");
    std::vector<int> im(a.size());
    for (int i = 1; i <= a.size(); ++i)
        im[i - 1] = a(b(i));
    return Permutation(std::move(im));
}

int Permutation::sign() const {
    // Cycle decomposition: sign = (-1)^(n - #cycles).
    int n = size();
    std::vector<bool> seen(n, false);
    int cycles = 0;
    for (int i = 0; i < n; ++i) {
        if (seen[i])
            continue;
        ++cycles;
        int j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = images_[j] - 1;
        }
    }
    return ((n - cycles) % 2 == 0) ? 1 : -1;
}

bool Permutation::is_identity() const {
    for (int i = 1; i <= size(); ++i)
        if (images_[i - 1] != i)
            return false;
    return true;
}

std::string Permutation::to_string() const {
    if (size() <= 9) {
        std::string s;
        for (int v : images_)
            s += static_cast<char>('0' + v);
        return s;
    }
    std::string s = "[";
    for (int i = 0; i < size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(images_[i]);
    }
    return s + "]";
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(im);
    } while (std::next_permutation(im.begin(), im.end()));
    return out;
}

namespace {

void build_shuffles(const std::vector<int>& blocks, std::vector<std::vector<int>>& chosen,
                    std::vector<int>& pool, std::size_t b, std::vector<Permutation>& out) {
    if (b == blocks.size()) {
        int n = 0;
        for (int q : blocks)
            n += q;
        std::vector<int> im(n);
        int pos = 0;
        for (const auto& vals : chosen)
            for (int v : vals)
                im[pos++] = v;
        out.emplace_back(std::move(im));
        return;
    }
    int q = blocks[b];
    // Choose the ascending image set of block b from the remaining values.
    std::vector<int> mask(pool.size(), 0);
    std::fill(mask.begin(), mask.begin() + q, 1);
    std::sort(mask.begin(), mask.end(), std::greater<int>());
    do {
        std::vector<int> take, rest;
        for (std::size_t i = 0; i < pool.size(); ++i)
            (mask[i] ? take : rest).push_back(pool[i]);
        chosen.push_back(take);
        std::vector<int> saved = pool;
        pool = rest;
        build_shuffles(blocks, chosen, pool, b + 1, out);
        pool = saved;
        chosen.pop_back();
    } while (std::prev_permutation(mask.begin(), mask.end()));
}

}  // namespace

std::vector<Permutation> monotone_shuffles(const std::vector<int>& block_sizes) {
    for (int q : block_sizes)
        if (q < 0)
            throw std::invalid_argument("negative block size");
    static std::map<std::vector<int>, std::vector<Permutation>> cache;
    static std::shared_mutex mutex;
    {
        std::shared_lock lock(mutex);
        auto it = cache.find(block_sizes);
        if (it != cache.end())
            return it->second;
    }
    int n = 0;
    for (int q : block_sizes)
        n += q;
    std::vector<int> pool(n);
    std::iota(pool.begin(), pool.end(), 1);
    std::vector<std::vector<int>> chosen;
    std::vector<Permutation> out;
    build_shuffles(block_sizes, chosen, pool, 0, out);
    std::sort(out.begin(), out.end());
    std::unique_lock lock(mutex);
    return cache.emplace(block_sizes, std::move(out)).first->second;
}

std::vector<Permutation> monotone_shuffles_by_filter(const std::vector<int>& block_sizes) {
    int n = 0;
    for (int q : block_sizes)
        n += q;
    std::vector<Permutation> out;
    for (const Permutation& sigma : all_permutations(n)) {
        bool ok = true;
        int start = 0;
        for (int q : block_sizes) {
            for (int i = 1; i < q && ok; ++i)
                if (sigma(start + i) > sigma(start + i + 1))
                    ok = false;
            start += q;
        }
        if (ok)
            out.push_back(sigma);
    }
    return out;
}

std::vector<Permutation> shuffles(const std::vector<int>& block_sizes, bool invert) {
    int n = 0;
    for (int q : block_sizes)
        n += q;
    std::vector<Permutation> mono = n <= 8 ? monotone_shuffles_by_filter(block_sizes)
                                           : monotone_shuffles(block_sizes);
    if (invert)
        return mono;
    std::vector<Permutation> out;
    out.reserve(mono.size());
    for (const Permutation& s : mono)
        out.push_back(s.inverse());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace curvedop
