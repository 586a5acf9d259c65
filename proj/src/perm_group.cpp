#include "beauville/perm_group.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace beauville {

struct PermGroup::Chain {
    struct Level {
        Point base = 0;
        std::vector<Permutation> gens;
        std::vector<Point> orbit;
        std::vector<std::int32_t> pos;  // point -> index in orbit, or -1
        std::vector<Permutation> u;     // u[k] maps base to orbit[k]
        std::vector<Permutation> uinv;
    };

    std::size_t degree = 0;
    std::vector<Permutation> generators;
    std::vector<Level> levels;
    BigInt order = 1;
    std::optional<std::uint64_t> order64;
};

namespace {

using Chain = std::vector<PermGroup::Chain::Level>;

void rebuild_orbit(PermGroup::Chain::Level& L, std::size_t n) {
    L.orbit.assign(1, L.base);
    L.pos.assign(n, -1);
    L.pos[L.base] = 0;
    L.u.assign(1, Permutation(n));
    L.uinv.assign(1, Permutation(n));
    for (std::size_t head = 0; head < L.orbit.size(); ++head) {
        const Point p = L.orbit[head];
        for (const auto& s : L.gens) {
            const Point q = s[p];
            if (L.pos[q] >= 0) continue;
            L.pos[q] = static_cast<std::int32_t>(L.orbit.size());
            L.orbit.push_back(q);
            L.u.push_back(L.u[head] * s);
            L.uinv.push_back(L.u.back().inverse());
        }
    }
}

Point first_moved(const Permutation& p) {
    for (std::size_t k = 0; k < p.degree(); ++k)
        if (p[k] != k) return static_cast<Point>(k);
    return std::numeric_limits<Point>::max();
}

// Sift h from level `start`; returns the residue and the level where sifting stopped.
std::pair<Permutation, std::size_t> strip(const std::vector<PermGroup::Chain::Level>& levels, Permutation h,
                                          std::size_t start) {
    for (std::size_t i = start; i < levels.size(); ++i) {
        const auto& L = levels[i];
        const std::int32_t k = L.pos[h[L.base]];
        if (k < 0) return {std::move(h), i};
        h = h * L.uinv[static_cast<std::size_t>(k)];
    }
    return {std::move(h), levels.size()};
}

bool fixes_prefix(const Permutation& s, const std::vector<PermGroup::Chain::Level>& levels, std::size_t upto) {
    for (std::size_t i = 0; i < upto; ++i)
        if (s[levels[i].base] != levels[i].base) return false;
    return true;
}

}  // namespace

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators, GroupOptions options) {
    auto c = std::make_shared<Chain>();
    c->degree = degree;
    for (const auto& g : generators)
        if (g.degree() != degree)
            throw DegreeMismatch("generator of degree " + std::to_string(g.degree()) + " in group of degree " +
                                 std::to_string(degree));
    c->generators = std::move(generators);

    auto& levels = c->levels;
    const std::size_t n = degree;
    std::vector<Permutation> S;
    for (const auto& g : c->generators)
        if (!g.is_identity()) S.push_back(g);

    if (!S.empty()) {
        for (Point b : options.base_prefix) {
            if (b >= n) throw std::invalid_argument("base point out of range");
            levels.push_back({});
            levels.back().base = b;
        }
        for (const auto& s : S) {
            if (!fixes_prefix(s, levels, levels.size())) continue;
            levels.push_back({});
            levels.back().base = first_moved(s);
        }
        for (std::size_t i = 0; i < levels.size(); ++i) {
            for (const auto& s : S)
                if (fixes_prefix(s, levels, i)) levels[i].gens.push_back(s);
            rebuild_orbit(levels[i], n);
        }

        // Holt's SCHREIERSIMS: work from the bottom level up; on a failed
        // sift, push the residue down and restart at the deepest touched level.
        std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels.size()) - 1;
        while (i >= 0) {
            bool restarted = false;
            auto& L = levels[static_cast<std::size_t>(i)];
            for (std::size_t k = 0; k < L.orbit.size() && !restarted; ++k) {
                for (std::size_t gi = 0; gi < L.gens.size(); ++gi) {
                    const Permutation& s = L.gens[gi];
                    const Point img = s[L.orbit[k]];
                    Permutation h = L.u[k] * s * L.uinv[static_cast<std::size_t>(L.pos[img])];
                    if (h.is_identity()) continue;
                    auto [res, j] = strip(levels, std::move(h), static_cast<std::size_t>(i) + 1);
                    if (res.is_identity()) continue;
                    if (j == levels.size()) {
                        levels.push_back({});
                        levels.back().base = first_moved(res);
                    }
                    for (std::size_t l = static_cast<std::size_t>(i) + 1; l <= j; ++l) {
                        levels[l].gens.push_back(res);
                        rebuild_orbit(levels[l], n);
                    }
                    i = static_cast<std::ptrdiff_t>(j);
                    restarted = true;
                    break;
                }
            }
            if (!restarted) --i;
        }
    }

    // Trailing levels whose orbit is trivial carry no information.
    while (!levels.empty() && levels.back().orbit.size() == 1) levels.pop_back();

    BigInt ord = 1;
    for (const auto& L : levels) ord *= L.orbit.size();
    c->order = ord;
    if (ord <= std::numeric_limits<std::uint64_t>::max()) c->order64 = static_cast<std::uint64_t>(ord);
    chain_ = std::move(c);
}

std::size_t PermGroup::degree() const noexcept { return chain_->degree; }
const std::vector<Permutation>& PermGroup::generators() const noexcept { return chain_->generators; }
const BigInt& PermGroup::order() const noexcept { return chain_->order; }
std::optional<std::uint64_t> PermGroup::order_u64() const noexcept { return chain_->order64; }
std::size_t PermGroup::base_length() const noexcept { return chain_->levels.size(); }

std::vector<Point> PermGroup::base() const {
    std::vector<Point> b;
    for (const auto& L : chain_->levels) b.push_back(L.base);
    return b;
}

std::vector<Permutation> PermGroup::strong_generators() const {
    std::vector<Permutation> out;
    for (const auto& L : chain_->levels)
        for (const auto& s : L.gens)
            if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
    return out;
}

std::vector<std::size_t> PermGroup::orbit_lengths() const {
    std::vector<std::size_t> out;
    for (const auto& L : chain_->levels) out.push_back(L.orbit.size());
    return out;
}

std::span<const Point> PermGroup::basic_orbit(std::size_t level) const { return chain_->levels.at(level).orbit; }

const std::vector<Permutation>& PermGroup::level_generators(std::size_t level) const {
    return chain_->levels.at(level).gens;
}

const Permutation& PermGroup::transversal(std::size_t level, std::size_t k) const {
    return chain_->levels.at(level).u.at(k);
}

Permutation PermGroup::sift(const Permutation& p) const {
    if (p.degree() != degree()) throw DegreeMismatch("sift: degree mismatch");
    return strip(chain_->levels, p, 0).first;
}

bool PermGroup::contains(const Permutation& p) const { return sift(p).is_identity(); }

std::optional<std::uint64_t> PermGroup::try_rank(const Permutation& p) const {
    if (!chain_->order64) throw std::overflow_error("group too large for element ranking");
    if (p.degree() != degree()) throw DegreeMismatch("rank: degree mismatch");
    const auto& levels = chain_->levels;
    std::vector<Point> h(p.images().begin(), p.images().end());
    std::vector<Point> tmp(h.size());
    std::uint64_t r = 0;
    for (const auto& L : levels) {
        const std::int32_t k = L.pos[h[L.base]];
        if (k < 0) return std::nullopt;
        r = r * L.orbit.size() + static_cast<std::uint64_t>(k);
        const auto& ui = L.uinv[static_cast<std::size_t>(k)];
        for (std::size_t x = 0; x < h.size(); ++x) tmp[x] = ui[h[x]];
        h.swap(tmp);
    }
    for (std::size_t x = 0; x < h.size(); ++x)
        if (h[x] != x) return std::nullopt;
    return r;
}

std::uint64_t PermGroup::rank(const Permutation& p) const {
    auto r = try_rank(p);
    if (!r) throw NotAMember("rank: element is not in the group");
    return *r;
}

Permutation PermGroup::unrank(std::uint64_t r) const {
    const auto& levels = chain_->levels;
    if (!chain_->order64 || r >= *chain_->order64) throw std::out_of_range("unrank: rank out of range");
    // digits are stored most-significant first (level 0); element = u_{k-1} * ... * u_0
    std::vector<std::size_t> digits(levels.size());
    for (std::size_t i = levels.size(); i-- > 0;) {
        digits[i] = static_cast<std::size_t>(r % levels[i].orbit.size());
        r /= levels[i].orbit.size();
    }
    std::vector<Point> out(degree());
    std::iota(out.begin(), out.end(), Point{0});
    std::vector<Point> tmp(out.size());
    for (std::size_t i = levels.size(); i-- > 0;) {
        const auto& u = levels[i].u[digits[i]];
        for (std::size_t x = 0; x < out.size(); ++x) tmp[x] = u[out[x]];
        out.swap(tmp);
    }
    return Permutation::from_images(std::move(out));
}

Permutation PermGroup::random_element(std::mt19937_64& rng) const {
    Permutation g(degree());
    for (std::size_t i = chain_->levels.size(); i-- > 0;) {
        const auto& L = chain_->levels[i];
        std::uniform_int_distribution<std::size_t> pick(0, L.orbit.size() - 1);
        g = g * L.u[pick(rng)];
    }
    return g;
}

PermGroup build_group(std::size_t degree, std::vector<Permutation> gens) {
    return PermGroup(degree, std::move(gens));
}

bool generates(const PermGroup& G, std::span<const Permutation> S) {
    for (const auto& s : S)
        if (!G.contains(s)) throw NotAMember("generates: element " + s.to_cycle_string() + " is outside the group");
    PermGroup H(G.degree(), std::vector<Permutation>(S.begin(), S.end()));
    return H.order() == G.order();
}

bool is_subgroup(const PermGroup& H, const PermGroup& G) {
    if (H.degree() != G.degree()) return false;
    for (const auto& h : H.generators())
        if (!G.contains(h)) return false;
    return true;
}

PermGroup normal_closure(const PermGroup& G, std::vector<Permutation> elements) {
    std::vector<Permutation> gens;
    for (auto& e : elements)
        if (!e.is_identity()) gens.push_back(std::move(e));
    PermGroup N(G.degree(), gens);
    // Close under conjugation by the generators of G.
    for (std::size_t k = 0; k < gens.size(); ++k) {
        for (const auto& g : G.generators()) {
            Permutation c = gens[k].conjugated_by(g);
            if (N.contains(c)) continue;
            gens.push_back(std::move(c));
            N = PermGroup(G.degree(), gens);
        }
    }
    return N;
}

PermGroup derived_subgroup(const PermGroup& G) {
    std::vector<Permutation> comms;
    const auto& gs = G.generators();
    for (std::size_t i = 0; i < gs.size(); ++i)
        for (std::size_t j = i + 1; j < gs.size(); ++j) comms.push_back(commutator(gs[i], gs[j]));
    return normal_closure(G, std::move(comms));
}

bool is_perfect(const PermGroup& G) { return derived_subgroup(G).order() == G.order(); }

std::vector<PermGroup> index_two_subgroups(const PermGroup& G) {
    const auto& gs = G.generators();
    const std::size_t m = gs.size();
    if (m > 24) throw std::invalid_argument("index_two_subgroups: too many generators");
    // K = G^2 [G,G]; G/K is elementary abelian and generated by the images of gs.
    std::vector<Permutation> seeds;
    for (std::size_t i = 0; i < m; ++i) {
        seeds.push_back(gs[i] * gs[i]);
        for (std::size_t j = i + 1; j < m; ++j) seeds.push_back(commutator(gs[i], gs[j]));
    }
    const PermGroup K = normal_closure(G, std::move(seeds));
    std::vector<PermGroup> out;
    if (K.order() == G.order()) return out;
    const BigInt half = G.order() / 2;
    for (std::uint32_t eps = 1; eps < (1u << m); ++eps) {
        std::size_t j0 = 0;
        while (!(eps >> j0 & 1u)) ++j0;
        std::vector<Permutation> hg = K.generators();
        for (std::size_t i = 0; i < m; ++i) hg.push_back((eps >> i & 1u) ? gs[i] * gs[j0] : gs[i]);
        PermGroup H(G.degree(), std::move(hg));
        if (H.order() != half) continue;
        bool dup = false;
        for (const auto& prev : out)
            if (is_subgroup(H, prev)) dup = true;
        if (!dup) out.push_back(std::move(H));
    }
    return out;
}

}  // namespace beauville
