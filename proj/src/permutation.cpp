#include "beauville/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace beauville {

namespace {

std::uint64_t checked_lcm(std::uint64_t a, std::uint64_t b) {
    const std::uint64_t g = std::gcd(a, b);
    const std::uint64_t q = a / g;
    if (q != 0 && b > UINT64_MAX / q) throw std::overflow_error("element order exceeds 64 bits");
    return q * b;
}

}  // namespace

std::size_t hash_points(std::span<const Point> pts) noexcept {
    // FNV-1a over 32-bit words, then a final avalanche.
    std::uint64_t h = 1469598103934665603ULL;
    for (Point p : pts) {
        h ^= p;
        h *= 1099511628211ULL;
    }
    h ^= h >> 33;
    h *= 0xff51afd7ed558ccdULL;
    h ^= h >> 33;
    return static_cast<std::size_t>(h);
}

Permutation::Permutation(std::size_t degree) : images_(degree) {
    std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation Permutation::from_images(std::vector<Point> images) {
    std::vector<bool> seen(images.size(), false);
    for (Point p : images) {
        if (p >= images.size()) throw InvalidPermutation("image out of range: " + std::to_string(p + 1));
        if (seen[p]) throw InvalidPermutation("repeated image: " + std::to_string(p + 1));
        seen[p] = true;
    }
    Permutation out;
    out.images_ = std::move(images);
    return out;
}

Permutation Permutation::from_one_based(std::span<const std::int64_t> images) {
    std::vector<Point> im;
    im.reserve(images.size());
    for (auto v : images) {
        if (v < 1 || static_cast<std::size_t>(v) > images.size())
            throw InvalidPermutation("image out of range: " + std::to_string(v));
        im.push_back(static_cast<Point>(v - 1));
    }
    return from_images(std::move(im));
}

Permutation Permutation::from_cycles(std::string_view text, std::size_t degree) {
    std::vector<Point> im(degree);
    std::iota(im.begin(), im.end(), Point{0});
    std::vector<bool> used(degree, false);
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    while (i < text.size()) {
        if (text[i] != '(') throw InvalidPermutation("expected '(' in cycle notation");
        ++i;
        std::vector<Point> cycle;
        for (;;) {
            skip_ws();
            if (i < text.size() && text[i] == ')') {
                ++i;
                break;
            }
            if (i < text.size() && text[i] == ',') {
                ++i;
                continue;
            }
            if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
                throw InvalidPermutation("malformed cycle notation");
            std::size_t v = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                v = v * 10 + static_cast<std::size_t>(text[i] - '0');
                if (v > degree) throw InvalidPermutation("point " + std::to_string(v) + " exceeds degree");
                ++i;
            }
            if (v == 0) throw InvalidPermutation("points are 1-based");
            if (used[v - 1]) throw InvalidPermutation("point " + std::to_string(v) + " repeated");
            used[v - 1] = true;
            cycle.push_back(static_cast<Point>(v - 1));
        }
        for (std::size_t k = 0; k < cycle.size(); ++k) im[cycle[k]] = cycle[(k + 1) % cycle.size()];
        skip_ws();
    }
    Permutation out;
    out.images_ = std::move(im);
    return out;
}

bool Permutation::is_identity() const noexcept {
    for (std::size_t k = 0; k < images_.size(); ++k)
        if (images_[k] != k) return false;
    return true;
}

Permutation Permutation::inverse() const {
    Permutation out;
    out.images_.resize(images_.size());
    for (std::size_t k = 0; k < images_.size(); ++k) out.images_[images_[k]] = static_cast<Point>(k);
    return out;
}

Permutation Permutation::pow(std::int64_t e) const {
    Permutation base = e < 0 ? inverse() : *this;
    std::uint64_t n = e < 0 ? static_cast<std::uint64_t>(-(e + 1)) + 1 : static_cast<std::uint64_t>(e);
    // Reduce on each cycle directly: cheaper than repeated squaring.
    Permutation out(images_.size());
    std::vector<bool> seen(images_.size(), false);
    std::vector<Point> cyc;
    for (std::size_t s = 0; s < images_.size(); ++s) {
        if (seen[s]) continue;
        cyc.clear();
        for (Point p = static_cast<Point>(s); !seen[p]; p = base.images_[p]) {
            seen[p] = true;
            cyc.push_back(p);
        }
        const std::size_t len = cyc.size();
        const std::size_t shift = static_cast<std::size_t>(n % len);
        for (std::size_t k = 0; k < len; ++k) out.images_[cyc[k]] = cyc[(k + shift) % len];
    }
    return out;
}

Permutation Permutation::conjugated_by(const Permutation& y) const {
    if (y.degree() != degree()) throw DegreeMismatch("conjugation of permutations of unequal degree");
    Permutation out;
    out.images_.resize(images_.size());
    for (std::size_t k = 0; k < images_.size(); ++k) out.images_[y.images_[k]] = y.images_[images_[k]];
    return out;
}

bool Permutation::commutes_with(const Permutation& other) const {
    if (other.degree() != degree()) throw DegreeMismatch("commutation test on unequal degrees");
    for (std::size_t k = 0; k < images_.size(); ++k)
        if (other.images_[images_[k]] != images_[other.images_[k]]) return false;
    return true;
}

std::uint64_t Permutation::order() const {
    std::uint64_t o = 1;
    for (auto len : cycle_type()) o = checked_lcm(o, len);
    return o;
}

std::vector<std::size_t> Permutation::cycle_type() const {
    std::vector<std::size_t> lens;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t s = 0; s < images_.size(); ++s) {
        if (seen[s]) continue;
        std::size_t len = 0;
        for (Point p = static_cast<Point>(s); !seen[p]; p = images_[p]) {
            seen[p] = true;
            ++len;
        }
        lens.push_back(len);
    }
    std::sort(lens.begin(), lens.end(), std::greater<>());
    return lens;
}

std::size_t Permutation::moved_points() const noexcept {
    std::size_t n = 0;
    for (std::size_t k = 0; k < images_.size(); ++k) n += images_[k] != k;
    return n;
}

std::string Permutation::to_cycle_string() const {
    std::ostringstream os;
    std::vector<bool> seen(images_.size(), false);
    bool any = false;
    for (std::size_t s = 0; s < images_.size(); ++s) {
        if (seen[s] || images_[s] == s) continue;
        any = true;
        os << '(';
        bool first = true;
        for (Point p = static_cast<Point>(s); !seen[p]; p = images_[p]) {
            seen[p] = true;
            if (!first) os << ',';
            os << p + 1;
            first = false;
        }
        os << ')';
    }
    if (!any) os << "()";
    return os.str();
}

std::string Permutation::to_image_string() const {
    std::ostringstream os;
    for (std::size_t k = 0; k < images_.size(); ++k) {
        if (k) os << ' ';
        os << images_[k] + 1;
    }
    return os.str();
}

std::size_t Permutation::hash() const noexcept { return hash_points(images_); }

Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.degree() != q.degree())
        throw DegreeMismatch("degree mismatch: " + std::to_string(p.degree()) + " vs " + std::to_string(q.degree()));
    Permutation out;
    out.images_.resize(p.degree());
    for (std::size_t k = 0; k < p.degree(); ++k) out.images_[k] = q.images_[p.images_[k]];
    return out;
}

Permutation commutator(const Permutation& x, const Permutation& y) {
    return x.inverse() * y.inverse() * x * y;
}

}  // namespace beauville
