#include "beauville/homomorphism.hpp"

#include <stdexcept>

namespace beauville {

namespace {

Permutation pair_of(const Permutation& g, const Permutation& h) {
    const std::size_t n = g.degree(), m = h.degree();
    std::vector<Point> im(n + m);
    for (std::size_t k = 0; k < n; ++k) im[k] = g[k];
    for (std::size_t k = 0; k < m; ++k) im[n + k] = static_cast<Point>(n + h[k]);
    return Permutation::from_images(std::move(im));
}

Permutation second_block(const Permutation& d, std::size_t n, std::size_t m) {
    std::vector<Point> im(m);
    for (std::size_t k = 0; k < m; ++k) im[k] = d[n + k] - static_cast<Point>(n);
    return Permutation::from_images(std::move(im));
}

Permutation first_block(const Permutation& d, std::size_t n) {
    std::vector<Point> im(n);
    for (std::size_t k = 0; k < n; ++k) im[k] = d[k];
    return Permutation::from_images(std::move(im));
}

}  // namespace

Homomorphism::Homomorphism(PermGroup source, std::vector<Permutation> images)
    : source_(std::move(source)), images_(std::move(images)) {
    if (images_.size() != source_.generators().size())
        throw std::invalid_argument("homomorphism: need one image per source generator");
    target_degree_ = images_.empty() ? 0 : images_.front().degree();
    for (const auto& h : images_)
        if (h.degree() != target_degree_) throw DegreeMismatch("homomorphism: images of unequal degree");
    std::vector<Permutation> gens;
    for (std::size_t i = 0; i < images_.size(); ++i) gens.push_back(pair_of(source_.generators()[i], images_[i]));
    graph_ = PermGroup(source_.degree() + target_degree_, std::move(gens), GroupOptions{source_.base()});
    valid_ = graph_.order() == source_.order();
    for (std::size_t i = 0; i < graph_.base_length(); ++i) {
        std::vector<std::int32_t> pos(graph_.degree(), -1);
        const auto orb = graph_.basic_orbit(i);
        for (std::size_t k = 0; k < orb.size(); ++k) pos[orb[k]] = static_cast<std::int32_t>(k);
        pos_.push_back(std::move(pos));
    }
}

Permutation Homomorphism::image(const Permutation& s) const {
    if (!valid_) throw std::logic_error("generator images do not define a homomorphism");
    if (!source_.contains(s)) throw NotAMember("homomorphism: element outside the source group");
    const std::size_t n = source_.degree();
    // Sift (s, 1); only first-block base points are inspected, so the
    // transversal digits are those of the unique graph element (s, phi(s)).
    Permutation h = pair_of(s, Permutation(target_degree_));
    Permutation acc(graph_.degree());
    const auto base = graph_.base();
    for (std::size_t i = 0; i < base.size(); ++i) {
        if (base[i] >= n) throw std::logic_error("homomorphism: graph base left the source block");
        const std::int32_t k = pos_[i][h[base[i]]];
        if (k < 0) throw std::logic_error("homomorphism: sift failed");
        const Permutation& u = graph_.transversal(i, static_cast<std::size_t>(k));
        h = h * u.inverse();
        acc = u * acc;
    }
    return second_block(acc, n, target_degree_);
}

PermGroup Homomorphism::image_group() const { return PermGroup(target_degree_, images_); }

PermGroup Homomorphism::kernel() const {
    if (!valid_) throw std::logic_error("generator images do not define a homomorphism");
    const std::size_t n = source_.degree();
    std::vector<Point> prefix;
    for (std::size_t k = 0; k < target_degree_; ++k) prefix.push_back(static_cast<Point>(n + k));
    PermGroup D(graph_.degree(), graph_.generators(), GroupOptions{prefix});
    std::vector<Permutation> gens;
    if (D.base_length() > prefix.size())
        for (const auto& g : D.level_generators(prefix.size())) gens.push_back(first_block(g, n));
    return PermGroup(n, std::move(gens));
}

bool Homomorphism::is_injective() const { return valid_ && kernel().is_trivial(); }

bool Homomorphism::is_surjective_onto(const PermGroup& target) const {
    return valid_ && is_subgroup(image_group(), target) && image_group().order() == target.order();
}

}  // namespace beauville
