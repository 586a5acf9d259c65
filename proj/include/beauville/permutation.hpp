#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace beauville {

using Point = std::uint32_t;

class DegreeMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class InvalidPermutation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A bijection of {0, ..., n-1}. Externally points are written 1-based.
///
/// Products apply the left factor first: (p * q)(k) = q(p(k)). With that
/// convention conjugation is x^y = y^-1 * x * y.
class Permutation;
Permutation compose(const Permutation& p, const Permutation& q);

class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::size_t degree);

    /// 0-based images; throws InvalidPermutation unless a bijection.
    static Permutation from_images(std::vector<Point> images);
    static Permutation from_one_based(std::span<const std::int64_t> images);
    /// Cycle notation such as "(1,2,3)(4,5)" or "()"; commas or blanks separate points.
    static Permutation from_cycles(std::string_view text, std::size_t degree);

    std::size_t degree() const noexcept { return images_.size(); }
    Point operator[](std::size_t k) const noexcept { return images_[k]; }
    std::span<const Point> images() const noexcept { return images_; }

    bool is_identity() const noexcept;
    Permutation inverse() const;
    Permutation pow(std::int64_t e) const;
    /// y^-1 * this * y
    Permutation conjugated_by(const Permutation& y) const;
    bool commutes_with(const Permutation& other) const;

    /// Least k >= 1 with p^k = id. Throws std::overflow_error past 64 bits.
    std::uint64_t order() const;
    /// Cycle lengths in non-increasing order, fixed points included.
    std::vector<std::size_t> cycle_type() const;
    std::size_t moved_points() const noexcept;

    std::string to_cycle_string() const;
    std::string to_image_string() const;

    std::size_t hash() const noexcept;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
        return a.images_ <=> b.images_;
    }

private:
    friend Permutation compose(const Permutation& p, const Permutation& q);
    std::vector<Point> images_;
};

/// p * q: apply p, then q.
Permutation compose(const Permutation& p, const Permutation& q);
inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

/// [x, y] = x^-1 y^-1 x y
Permutation commutator(const Permutation& x, const Permutation& y);

struct PermutationHash {
    std::size_t operator()(const Permutation& p) const noexcept { return p.hash(); }
};

std::size_t hash_points(std::span<const Point> pts) noexcept;

}  // namespace beauville
