#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "beauville/permutation.hpp"

namespace beauville {

using BigInt = boost::multiprecision::cpp_int;

class NotAMember : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct GroupOptions {
    /// Points (0-based) forced to the front of the base, in order.
    std::vector<Point> base_prefix;
};

/// Permutation group with a stabilizer chain (deterministic Schreier-Sims,
/// explicit transversals). Immutable; copies share the chain.
class PermGroup {
public:
    PermGroup() : PermGroup(0) {}
    explicit PermGroup(std::size_t degree, std::vector<Permutation> generators = {}, GroupOptions options = {});

    std::size_t degree() const noexcept;
    const std::vector<Permutation>& generators() const noexcept;
    const BigInt& order() const noexcept;
    /// Order if it fits in 64 bits.
    std::optional<std::uint64_t> order_u64() const noexcept;
    bool is_trivial() const noexcept { return order() == 1; }

    std::vector<Point> base() const;
    std::vector<Permutation> strong_generators() const;
    std::vector<std::size_t> orbit_lengths() const;
    /// Basic orbit of level i (0-based points; entry 0 is the base point).
    std::span<const Point> basic_orbit(std::size_t level) const;
    /// Generators of the i-th stabilizer in the chain.
    const std::vector<Permutation>& level_generators(std::size_t level) const;
    std::size_t base_length() const noexcept;

    bool contains(const Permutation& p) const;
    /// Residue after sifting through the chain; identity iff p is a member.
    Permutation sift(const Permutation& p) const;

    /// Bijection between elements and 0..|G|-1 (mixed radix on the chain).
    /// Requires |G| < 2^64; throws NotAMember for non-members.
    std::uint64_t rank(const Permutation& p) const;
    /// Like rank() but returns nullopt for non-members.
    std::optional<std::uint64_t> try_rank(const Permutation& p) const;
    Permutation unrank(std::uint64_t r) const;

    /// Uniformly distributed element (product of random transversal elements).
    Permutation random_element(std::mt19937_64& rng) const;

    /// Coset representative u_i[k] mapping the i-th base point to basic_orbit(i)[k].
    const Permutation& transversal(std::size_t level, std::size_t k) const;

    struct Chain;  // implementation detail

private:
    std::shared_ptr<const Chain> chain_;
};

PermGroup build_group(std::size_t degree, std::vector<Permutation> gens);

/// True iff the elements of S generate G. Throws NotAMember if some s is outside G.
bool generates(const PermGroup& G, std::span<const Permutation> S);

/// Is H (given by generators) a subgroup of G?
bool is_subgroup(const PermGroup& H, const PermGroup& G);

/// Smallest normal subgroup of G containing the given elements.
PermGroup normal_closure(const PermGroup& G, std::vector<Permutation> elements);

/// [G, G]
PermGroup derived_subgroup(const PermGroup& G);

bool is_perfect(const PermGroup& G);

/// Subgroups of index exactly 2, as kernels of the nonzero maps to C2.
std::vector<PermGroup> index_two_subgroups(const PermGroup& G);

/// Fixed seed for everything randomized unless the caller overrides it.
inline constexpr std::uint64_t kDefaultSeed = 20130101;

}  // namespace beauville
