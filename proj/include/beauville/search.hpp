#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "beauville/structure.hpp"

namespace beauville {

enum class SearchStatus { Found, Absent, Inconclusive };
std::string to_string(SearchStatus s);

/// Where automorphisms come from: conjugation by elements of `overgroup`
/// (which must normalize G). Without an overgroup only inner automorphisms
/// are available. `complete` asserts that these are all of Aut(G); absence
/// results are only conclusive when it holds.
struct AutomorphismSource {
    std::optional<PermGroup> overgroup;
    bool complete = false;
};

struct SearchOptions {
    Limits limits;
    bool strongly_real = false;
    AutomorphismSource automorphisms;
    unsigned jobs = 1;
};

/// Counts that make an exhaustive negative answer auditable.
struct SearchCertificate {
    std::size_t x_classes = 0;          // class representatives tried for x
    std::size_t pairs = 0;              // (x, y) orbit representatives examined
    std::size_t hyperbolic = 0;         // ... of hyperbolic type
    std::size_t inverted = 0;           // ... also inverted by an available automorphism
    std::size_t generating = 0;         // ... also generating G
    std::size_t distinct_profiles = 0;  // distinct (Sigma, automorphism-class) keys
    std::string summary() const;
};

struct UnmixedSearchResult {
    SearchStatus status = SearchStatus::Absent;
    std::optional<BeauvilleStructure> structure;
    /// Inverting elements (strongly real mode), one per triple; equal when one suffices.
    std::optional<Permutation> phi1, phi2;
    SearchCertificate certificate;
    std::string note;
};

/// Exhaustive search up to simultaneous conjugacy: x over class
/// representatives, y over C_G(x)-orbit representatives.
UnmixedSearchResult search_unmixed(const PermGroup& G, const SearchOptions& opts = {});

struct StronglyGenerated {
    GeneratingTriple triple;
    Permutation inverter;  // element of the automorphism source inverting x and y
};

struct StronglyGeneratedResult {
    SearchStatus status = SearchStatus::Absent;
    std::optional<StronglyGenerated> witness;
    SearchCertificate certificate;
};

/// A generating triple of type (l, m, n) whose x and y are inverted by a
/// single automorphism from the source.
StronglyGeneratedResult strongly_generated_search(const PermGroup& G, std::uint64_t l, std::uint64_t m,
                                                  std::uint64_t n, const SearchOptions& opts = {});
std::optional<StronglyGenerated> strongly_generated(const PermGroup& G, std::uint64_t l, std::uint64_t m,
                                                    std::uint64_t n, const SearchOptions& opts = {});

// --- mixed structures -----------------------------------------------------------

/// Every element of G \ G0 has order divisible by 4.
bool mixed_order_filter(const PermGroup& G, const PermGroup& G0, Limits limits = {});

struct MixedOptions {
    Limits limits;
    /// Sigma over G instead of G0, and the identity counts in condition 3.
    bool strict = false;
    std::string group_name;
};

/// Verdicts for the triple (x, y, (xy)^-1) as a mixed structure of G.
Report verify_mixed(const PermGroup& G, const Permutation& x, const Permutation& y, const MixedOptions& opts = {});

struct MixedSubgroupNote {
    std::string subgroup;  // generators in cycle notation
    bool order_filter = false;
    std::optional<Permutation> filter_witness;  // outer element of order not divisible by 4
    bool odd_reduction = false;
    std::size_t triples = 0;
    std::size_t profiles = 0;
};

struct MixedSearchResult {
    SearchStatus status = SearchStatus::Absent;
    std::optional<std::pair<Permutation, Permutation>> structure;  // (x, y)
    std::vector<MixedSubgroupNote> subgroups;
};

MixedSearchResult search_mixed(const PermGroup& G, const MixedOptions& opts = {});

}  // namespace beauville
