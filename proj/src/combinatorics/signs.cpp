#include "curvedop/signs.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace curvedop {

int koszul_sign(const Permutation& sigma, const std::vector<int>& degrees) {
    int n = sigma.size();
    if (static_cast<int>(degrees.size()) != n)
        throw std::invalid_argument("koszul_sign: degree list size mismatch");
    int parity = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (sigma(i) > sigma(j))
                parity += degrees[sigma(i) - 1] * degrees[sigma(j) - 1];
    return (parity % 2 == 0) ? 1 : -1;
}

int sgn_restricted(const Permutation& sigma, const std::vector<int>& ks) {
    int n = sigma.size();
    if (static_cast<int>(ks.size()) != n)
        throw std::invalid_argument("sgn_restricted: ks size mismatch");
    // Source positions whose image index carries an odd k, in source order;
    // the relabeled image pattern determines the restricted permutation.
    std::vector<int> pattern;
    for (int i = 1; i <= n; ++i)
        if (ks[sigma(i) - 1] % 2 != 0)
            pattern.push_back(sigma(i));
    std::vector<int> sorted = pattern;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> relabeled(pattern.size());
    for (std::size_t i = 0; i < pattern.size(); ++i) {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), pattern[i]);
        relabeled[i] = static_cast<int>(it - sorted.begin()) + 1;
    }
    return pattern.empty() ? 1 : Permutation(relabeled).sign();
}

int epsilon_sigma(const std::vector<int>& kp, const std::vector<int>& kpp,
                  const Permutation& sigma) {
    int n = sigma.size();
    if (static_cast<int>(kp.size()) != n || static_cast<int>(kpp.size()) != n)
        throw std::invalid_argument("epsilon_sigma: list size mismatch");
    long parity = 0;
    for (int i = 1; i <= n; ++i) {
        long tail = 0;
        for (int l = i + 1; l <= n; ++l)
            tail += kp[sigma(l) - 1];
        parity += static_cast<long>(kpp[sigma(i) - 1]) * tail;
    }
    return (parity % 2 == 0) ? 1 : -1;
}

Rational alpha_coeff(const std::vector<int>& kp) {
    for (int k : kp)
        if (k < 0)
            throw std::invalid_argument("alpha_coeff: negative entry");
    bool all_zero = true;
    for (int k : kp)
        if (k != 0)
            all_zero = false;
    if (all_zero)
        return Rational(1);
    static std::map<std::vector<int>, long> cache;
    static std::shared_mutex mutex;
    {
        std::shared_lock lock(mutex);
        auto it = cache.find(kp);
        if (it != cache.end())
            return Rational(it->second);
    }
    long acc = 0;
    for (const Permutation& s : monotone_shuffles(kp))
        acc += s.sign();
    std::unique_lock lock(mutex);
    cache.emplace(kp, acc);
    return Rational(acc);
}

Rational beta_coeff(const Permutation& sigma, const std::vector<int>& kp,
                    const std::vector<int>& kpp, const std::vector<int>& block_sizes) {
    int n = sigma.size();
    if (static_cast<int>(kp.size()) != n || static_cast<int>(kpp.size()) != n)
        throw std::invalid_argument("beta_coeff: list size mismatch");
    std::vector<int> ks(n);
    for (int i = 0; i < n; ++i)
        ks[i] = kp[i] + kpp[i];
    Rational out(sgn_restricted(sigma, ks) * epsilon_sigma(kp, kpp, sigma));
    int start = 0;
    for (int q : block_sizes) {
        std::vector<int> block;
        for (int j = 1; j <= q; ++j)
            block.push_back(kp[sigma(start + j) - 1]);
        out *= alpha_coeff(block);
        start += q;
    }
    if (start != n)
        throw std::invalid_argument("beta_coeff: blocks do not cover the index set");
    return out;
}

}  // namespace curvedop
