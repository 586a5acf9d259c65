#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "beauville/perm_group.hpp"

namespace beauville {

/// Thrown when an enumeration would exceed its element budget. Distinct from
/// any "no" answer: callers must not read it as non-conjugacy.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Limits {
    /// Maximum number of group elements held by one enumeration.
    std::size_t class_cap = 10'000'000;
};

struct ConjClass {
    Permutation representative;  // lexicographically least image sequence
    BigInt size;
    std::uint64_t element_order = 1;
    std::vector<std::size_t> cycle_type;
    std::string label;  // e.g. "4A"
};

/// Complete conjugacy class decomposition of a group small enough to index
/// every element. Each element's class and a conjugating witness are kept.
class ClassTable {
public:
    explicit ClassTable(PermGroup G, Limits limits = {});

    const PermGroup& group() const noexcept { return G_; }
    const std::vector<ConjClass>& classes() const noexcept { return classes_; }
    std::size_t size() const noexcept { return classes_.size(); }

    std::size_t class_of(const Permutation& p) const;
    std::size_t class_of_rank(std::uint64_t r) const { return class_id_[r]; }
    std::size_t identity_class() const noexcept { return 0; }

    /// w with representative^w = p.
    Permutation witness(const Permutation& p) const;
    /// w with u^w = v, or nullopt.
    std::optional<Permutation> conjugator(const Permutation& u, const Permutation& v) const;

    /// Class of rep(c)^k.
    std::size_t power_class(std::size_t c, std::int64_t k) const;
    /// Classes of all powers of elements of class c (bitmask over class indices).
    const std::vector<bool>& power_closure(std::size_t c) const { return power_closure_[c]; }

    /// Index of the class with this label, or nullopt.
    std::optional<std::size_t> find_label(const std::string& label) const;

private:
    PermGroup G_;
    std::vector<ConjClass> classes_;
    std::vector<std::uint32_t> class_id_;  // by rank
    std::vector<std::uint32_t> parent_;    // by rank: BFS parent rank
    std::vector<std::uint16_t> via_;       // by rank: generator index used from the parent
    std::vector<std::uint64_t> root_;      // per class: BFS root rank
    std::vector<Permutation> root_to_rep_inv_;
    std::vector<std::vector<bool>> power_closure_;

    Permutation path_from_root(std::uint64_t r) const;
};

struct ConjugacyStats {
    std::size_t tests = 0;          // calls that reached the enumeration stage
    std::size_t fast_rejects = 0;   // decided by order or cycle type
};

/// w in G with u^w = v, or nullopt. Uses `table` when given; otherwise
/// enumerates the class of u breadth-first within the budget.
std::optional<Permutation> is_conjugate(const PermGroup& G, const Permutation& u, const Permutation& v,
                                        Limits limits = {}, const ClassTable* table = nullptr,
                                        ConjugacyStats* stats = nullptr);

std::vector<ConjClass> conjugacy_classes(const PermGroup& G, Limits limits = {});

/// All elements of C_G(x), by brute force over G (requires |G| within budget).
std::vector<Permutation> centralizer_elements(const PermGroup& G, const Permutation& x, Limits limits = {});

/// C_G(x) as a group, generated greedily from its elements.
PermGroup centralizer(const PermGroup& G, const Permutation& x, Limits limits = {});

/// Elements t of G with x^t = x^-1.
std::vector<Permutation> inverters(const PermGroup& G, const Permutation& x, Limits limits = {});

/// Classes whose elements are inverted by an involution (or are trivial).
std::vector<ConjClass> strongly_real_classes(const ClassTable& T);
std::vector<ConjClass> strongly_real_classes(const PermGroup& G, Limits limits = {});

/// Classes whose elements are conjugate to their inverses.
std::vector<ConjClass> real_classes(const ClassTable& T);

/// Every element of G (by rank order); throws BudgetExceeded past the cap.
std::vector<Permutation> all_elements(const PermGroup& G, Limits limits = {});

}  // namespace beauville
