#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "beauville/conjugacy.hpp"
#include "beauville/homomorphism.hpp"
#include "beauville/report.hpp"

namespace beauville {

struct TripleType {
    std::uint64_t l = 1, m = 1, n = 1;
    friend auto operator<=>(const TripleType&, const TripleType&) = default;
    std::string str() const;
};

/// (x, y, z) with xyz = 1.
struct GeneratingTriple {
    Permutation x, y, z;
    TripleType type;
};

GeneratingTriple make_triple(const Permutation& x, const Permutation& y);

/// 1/l + 1/m + 1/n < 1, compared exactly.
bool is_hyperbolic(const TripleType& t);

std::string type_string(const TripleType& a, const TripleType& b);

struct BeauvilleStructure {
    GeneratingTriple first, second;
    PermGroup ambient;
};

/// An automorphism of a fixed permutation group, either conjugation by an
/// element of some overgroup or given by generator images.
class Automorphism {
public:
    enum class Form { Conjugation, Images };

    /// Form (i). Validated against `ambient`: g must normalize it.
    static Automorphism conjugation(const PermGroup& ambient, Permutation g);
    /// Form (ii): images of ambient.generators(); validated via the graph group.
    static Automorphism from_images(const PermGroup& ambient, std::vector<Permutation> images);
    static Automorphism identity(const PermGroup& ambient);

    Form form() const noexcept { return form_; }
    /// The conjugating element (form (i) only).
    const Permutation& conjugator() const;
    Permutation apply(const Permutation& x) const;
    std::string describe() const;

private:
    Form form_ = Form::Conjugation;
    Permutation g_;
    std::optional<Homomorphism> hom_;
};

class InvalidAutomorphism : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Classes of all powers of x, y, z (identity class included).
struct SigmaProfile {
    struct Entry {
        std::string label;
        std::uint64_t element_order;
        std::size_t index;
    };
    std::vector<Entry> classes;
};

SigmaProfile sigma_profile(const ClassTable& T, const GeneratingTriple& t);
SigmaProfile sigma_profile(const PermGroup& G, const GeneratingTriple& t, Limits limits = {});

struct SigmaCheck {
    bool disjoint = true;
    std::vector<std::uint64_t> shared_primes;  // primes dividing orders on both sides
    std::size_t conjugacy_tests = 0;           // tests that reached class enumeration or lookup
    std::size_t fast_rejects = 0;
    std::optional<std::array<Permutation, 3>> witness;  // (side-1 element, side-2 element, conjugator)
};

/// Sigma-disjointness via prime-order powers: a shared nontrivial element
/// has a shared element of prime order, so only primes common to both
/// sides need conjugacy tests.
SigmaCheck sigma_check(const PermGroup& G, const GeneratingTriple& t1, const GeneratingTriple& t2, Limits limits = {},
                       const ClassTable* table = nullptr);
bool sigma_disjoint(const PermGroup& G, const GeneratingTriple& t1, const GeneratingTriple& t2, Limits limits = {});

struct VerifyOptions {
    Limits limits;
    const ClassTable* table = nullptr;
    std::string group_name;
};

Report verify_unmixed(const PermGroup& G, const GeneratingTriple& t1, const GeneratingTriple& t2,
                      const VerifyOptions& opts = {});

/// Single-automorphism mode, or two automorphisms that must differ by an
/// inner automorphism (decided by solving a conjugacy problem on generator images).
Report strongly_real_report(const BeauvilleStructure& S, const Automorphism& phi,
                            const std::optional<Automorphism>& phi2 = std::nullopt, const VerifyOptions& opts = {});
bool verify_strongly_real(const BeauvilleStructure& S, const Automorphism& phi,
                          const std::optional<Automorphism>& phi2 = std::nullopt);

/// Is phi1 * phi2^-1 inner? Returns the conjugating element of G if so.
std::optional<Permutation> inner_difference(const PermGroup& G, const Automorphism& phi1, const Automorphism& phi2,
                                            Limits limits = {});

std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

}  // namespace beauville
