#pragma once

#include <string>
#include <vector>

namespace curvedop {

// Permutation of {1..n} in one-line notation: images[i-1] = sigma(i).
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int n);

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[i - 1]; }
    const std::vector<int>& images() const { return images_; }

    Permutation inverse() const;
    // (a * b)(i) = a(b(i))
    friend Permutation operator*(const Permutation& a, const Permutation& b);

    int sign() const;
    bool is_identity() const;

    bool operator==(const Permutation& other) const { return images_ == other.images_; }
    bool operator<(const Permutation& other) const { return images_ < other.images_; }

    std::string to_string() const;  // "213" style for n <= 9, "[2,1,3]" otherwise

private:
    std::vector<int> images_;
};

std::vector<Permutation> all_permutations(int n);

// Permutations sigma of {1..sum q_i} monotone on each consecutive source block:
// sigma(s+1) < ... < sigma(s+q_i) for every block. This is the shuffle set the
// decomposition formulas quantify over.
std::vector<Permutation> monotone_shuffles(const std::vector<int>& block_sizes);

// Slow oracle: filter all permutations by block monotonicity.
std::vector<Permutation> monotone_shuffles_by_filter(const std::vector<int>& block_sizes);

// Public enumeration: with invert=false returns the inverses of the monotone
// shuffles (the unshuffle normal form the library prints); with invert=true
// the monotone shuffles themselves.
std::vector<Permutation> shuffles(const std::vector<int>& block_sizes, bool invert = false);

}  // namespace curvedop
