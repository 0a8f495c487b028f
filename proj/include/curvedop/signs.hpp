#pragma once

#include <vector>

#include "curvedop/permutation.hpp"
#include "curvedop/rational.hpp"

namespace curvedop {

// Sign accumulated when graded symbols of the given degrees are reordered from
// (x_1,...,x_n) to (x_sigma(1),...,x_sigma(n)): product of (-1)^(d_sigma(i) d_sigma(j))
// over the inversions i < j, sigma(i) > sigma(j).
int koszul_sign(const Permutation& sigma, const std::vector<int>& degrees);

// Signature of sigma restricted to the indices j with ks[j] odd, after
// order-preserving relabeling of the remaining values.
int sgn_restricted(const Permutation& sigma, const std::vector<int>& ks);

// (-1)^{ sum_i k''_sigma(i) * (k'_sigma(i+1) + ... + k'_sigma(n)) }
int epsilon_sigma(const std::vector<int>& kp, const std::vector<int>& kpp,
                  const Permutation& sigma);

// Sum of signatures over the monotone shuffles with the given block sizes;
// the all-zero (and empty) list gives 1.
Rational alpha_coeff(const std::vector<int>& kp);

// sgn_restricted(sigma, k) * epsilon_sigma(kp, kpp, sigma) * product over the
// blocks of alpha applied to the sigma-reordered kp entries of each block.
// kp[i] + kpp[i] must be the caller's k[i].
Rational beta_coeff(const Permutation& sigma, const std::vector<int>& kp,
                    const std::vector<int>& kpp, const std::vector<int>& block_sizes);

}  // namespace curvedop
