#pragma once

#include <vector>

#include "beauville/perm_group.hpp"

namespace beauville {

/// Map defined by images of the source generators, checked through its graph
/// D = <(g_i, h_i)> acting on the disjoint union of both point sets: the
/// assignment extends to a homomorphism iff |D| = |source|.
class Homomorphism {
public:
    Homomorphism(PermGroup source, std::vector<Permutation> images);

    const PermGroup& source() const noexcept { return source_; }
    const std::vector<Permutation>& images() const noexcept { return images_; }
    bool is_homomorphism() const noexcept { return valid_; }

    /// phi(s). Throws std::logic_error if not a homomorphism, NotAMember if s is outside the source.
    Permutation image(const Permutation& s) const;
    PermGroup image_group() const;
    /// Kernel as a subgroup of the source.
    PermGroup kernel() const;
    bool is_injective() const;
    bool is_surjective_onto(const PermGroup& target) const;

private:
    PermGroup source_;
    std::vector<Permutation> images_;
    std::size_t target_degree_ = 0;
    PermGroup graph_;  // base starts with the source base
    bool valid_ = false;
    std::vector<std::vector<std::int32_t>> pos_;  // per level: point -> orbit index
};

}  // namespace beauville
