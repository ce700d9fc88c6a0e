#pragma once

#include <compare>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

namespace eg {

/// The total order 1 < 2 < ... < -2 < -1 < 0 on the integers.
/// key(i) = (i <= 0, i) is strictly monotone for it.
struct ZOrder {
    static bool less(int i, int j) {
        if ((i <= 0) != (j <= 0)) return j <= 0;
        return i < j;
    }
    bool operator()(int i, int j) const { return less(i, j); }
};

/// A permutation of Z with finitely many non-fixed points, stored in
/// one-line notation on its minimal window. The identity has an empty
/// window; every value outside the window is fixed. Two permutations
/// with equal underlying maps compare equal.
class Permutation {
public:
    Permutation() = default;

    /// One-line notation images = [w(lo), w(lo+1), ...]; trims to the
    /// minimal window.
    Permutation(int window_lo, std::vector<int> images);

    static Permutation identity() { return {}; }
    static Permutation transposition(int i, int j);
    static Permutation adjacent(int i) { return transposition(i, i + 1); }

    int operator()(int i) const {
        if (i < lo_ || i >= lo_ + static_cast<int>(img_.size())) return i;
        return img_[static_cast<size_t>(i - lo_)];
    }

    bool is_identity() const { return img_.empty(); }
    int window_lo() const { return lo_; }
    int window_hi() const { return lo_ + static_cast<int>(img_.size()) - 1; }
    const std::vector<int>& images() const { return img_; }

    Permutation inverse() const;
    /// Composition (u * v)(i) = u(v(i)).
    friend Permutation operator*(const Permutation& u, const Permutation& v);

    long length() const;
    std::set<int> descents() const;
    int max_descent_or(int fallback) const;

    /// True when every non-fixed point lies in [a, n].
    bool supported_in(int a, int n) const;

    bool operator==(const Permutation&) const = default;
    auto operator<=>(const Permutation&) const = default;

    std::string to_string() const;
    /// Parses "[v1,...,vk]@a"; "[]@a" and "[]" denote the identity.
    static Permutation parse(const std::string& text);

private:
    int lo_ = 0;
    std::vector<int> img_;
};

/// Image of w under the automorphism sending s_i to s_{-i}; computed by the
/// closed formula i -> 1 - w(1 - i).
Permutation neg(const Permutation& w);

/// Standardization of w in S_{[a,n]} to S_{n-a+1}: std(w)(i) = w(i+a-1)-a+1.
/// Rejects w that move a point outside [a, n].
Permutation standardize(const Permutation& w, int a, int n);

/// Bruhat order test via the rank-matrix criterion.
bool bruhat_leq(const Permutation& u, const Permutation& w);

/// Whether w is decreasing on every pair of positions in [lo, hi].
bool decreasing_on(const Permutation& w, int lo, int hi);

/// A partition: weakly decreasing positive parts, trailing zeros trimmed.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    long size() const;
    int part(int i) const {  // 1-indexed, 0 beyond the last row
        return (i >= 1 && i <= rows()) ? parts_[static_cast<size_t>(i - 1)] : 0;
    }
    bool empty() const { return parts_.empty(); }

    Partition conjugate() const;

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;

    std::string to_string() const;       // "3,1,1"; "" for the empty partition
    static Partition parse(const std::string& text);

private:
    std::vector<int> parts_;
};

/// All partitions of total size n, largest part first, in the canonical
/// order (size is fixed; lexicographic descending by parts).
std::vector<Partition> partitions_of(int n);

/// The 0-Grassmannian permutation w_lambda with w(i) = i + lambda_{1-i} for
/// i <= 0 and ascending fill on positive positions.
Permutation grassmannian_of_partition(const Partition& lambda);

/// Inverse of grassmannian_of_partition; rejects w with Des(w) not in {0}.
Partition partition_of_grassmannian(const Permutation& w);

}  // namespace eg
