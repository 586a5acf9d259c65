#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "beauville/structure.hpp"

namespace beauville {

/// For an involution t: (t t^g)^r if o(t t^g) = 2r, g (t t^g)^r if o(t t^g) = 2r+1.
/// Either way the result commutes with t.
Permutation bray_element(const Permutation& t, const Permutation& g);

struct BrayCandidate {
    Permutation t, g1, g2, u;
    std::int64_t j1 = 1, j2 = 1;
    GeneratingTriple first, second;  // x_i = t t^{g_i}, y_i = (x_i^{j_i})^u
};

/// Throws std::invalid_argument if t is not an involution or u does not commute with t.
BrayCandidate build_candidate(const Permutation& t, const Permutation& g1, const Permutation& g2, const Permutation& u,
                              std::int64_t j1, std::int64_t j2);

/// Candidate from already-formed x_i (as when the x_i come from table words).
BrayCandidate build_candidate_from_x(const Permutation& t, const Permutation& x1, const Permutation& x2,
                                     const Permutation& u, std::int64_t j1, std::int64_t j2);

struct BrayFind {
    BeauvilleStructure structure;
    BrayCandidate candidate;
};

struct BrayScanOptions {
    std::size_t trials = 200;
    std::uint64_t seed = kDefaultSeed;
    Limits limits;
    /// Bray elements collected per trial before products are formed.
    std::size_t pool = 4;
};

/// Randomised scan: per trial draw g1, g2 and a pool of Bray elements,
/// try every u from the pool and its pairwise products (skipping u that
/// normalise <x1>), and every j. t may lie in G or merely normalise it.
/// Each trial contributes at most one structure; output is a pure function
/// of (G, t, options).
std::vector<BrayFind> bray_scan(const PermGroup& G, const Permutation& t, const BrayScanOptions& opts = {});

}  // namespace beauville
