#include "beauville/structure.hpp"

#include <chrono>
#include <map>
#include <set>
#include <sstream>

namespace beauville {

std::string TripleType::str() const {
    return "(" + std::to_string(l) + "," + std::to_string(m) + "," + std::to_string(n) + ")";
}

std::string type_string(const TripleType& a, const TripleType& b) { return "(" + a.str() + "," + b.str() + ")"; }

GeneratingTriple make_triple(const Permutation& x, const Permutation& y) {
    GeneratingTriple t{x, y, (x * y).inverse(), {}};
    t.type = {t.x.order(), t.y.order(), t.z.order()};
    return t;
}

bool is_hyperbolic(const TripleType& t) {
    if (t.l == 0 || t.m == 0 || t.n == 0) throw std::invalid_argument("element orders are positive");
    const BigInt l = t.l, m = t.m, n = t.n;
    return m * n + l * n + l * m < l * m * n;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        out.push_back(p);
        while (n % p == 0) n /= p;
    }
    if (n > 1) out.push_back(n);
    return out;
}

// --- automorphisms ---------------------------------------------------------

Automorphism Automorphism::conjugation(const PermGroup& ambient, Permutation g) {
    if (g.degree() != ambient.degree()) throw DegreeMismatch("automorphism: conjugating element has the wrong degree");
    for (const auto& s : ambient.generators())
        if (!ambient.contains(s.conjugated_by(g)))
            throw InvalidAutomorphism("conjugation by " + g.to_cycle_string() + " does not preserve the group");
    Automorphism a;
    a.form_ = Form::Conjugation;
    a.g_ = std::move(g);
    return a;
}

Automorphism Automorphism::from_images(const PermGroup& ambient, std::vector<Permutation> images) {
    for (const auto& h : images)
        if (h.degree() != ambient.degree() || !ambient.contains(h))
            throw InvalidAutomorphism("automorphism: generator image outside the group");
    Homomorphism hom(ambient, std::move(images));
    if (!hom.is_homomorphism()) throw InvalidAutomorphism("generator images do not define a homomorphism");
    if (hom.image_group().order() != ambient.order()) throw InvalidAutomorphism("generator images do not generate the group");
    Automorphism a;
    a.form_ = Form::Images;
    a.hom_ = std::move(hom);
    return a;
}

Automorphism Automorphism::identity(const PermGroup& ambient) { return conjugation(ambient, Permutation(ambient.degree())); }

const Permutation& Automorphism::conjugator() const {
    if (form_ != Form::Conjugation) throw std::logic_error("automorphism is not given by conjugation");
    return g_;
}

Permutation Automorphism::apply(const Permutation& x) const {
    return form_ == Form::Conjugation ? x.conjugated_by(g_) : hom_->image(x);
}

std::string Automorphism::describe() const {
    if (form_ == Form::Conjugation) return "conjugation by " + g_.to_cycle_string();
    std::ostringstream os;
    os << "generator images [";
    for (std::size_t i = 0; i < hom_->images().size(); ++i) os << (i ? ", " : "") << hom_->images()[i].to_cycle_string();
    os << "]";
    return os.str();
}

std::optional<Permutation> inner_difference(const PermGroup& G, const Automorphism& phi1, const Automorphism& phi2,
                                            Limits limits) {
    const auto& gens = G.generators();
    std::vector<Permutation> t1, t2;
    for (const auto& g : gens) {
        t1.push_back(phi1.apply(g));
        t2.push_back(phi2.apply(g));
    }
    if (gens.empty()) return Permutation(G.degree());
    // w0 handles the first coordinate; the others are fixed up inside C(t2[0]).
    auto w0 = is_conjugate(G, t2[0], t1[0], limits);
    if (!w0) return std::nullopt;
    for (const auto& c : centralizer_elements(G, t2[0], limits)) {
        const Permutation w = c * *w0;
        bool ok = true;
        for (std::size_t i = 1; i < gens.size() && ok; ++i) ok = t2[i].conjugated_by(w) == t1[i];
        if (ok) return w;
    }
    return std::nullopt;
}

// --- Sigma ------------------------------------------------------------------

SigmaProfile sigma_profile(const ClassTable& T, const GeneratingTriple& t) {
    std::vector<bool> in(T.size(), false);
    for (const auto* e : {&t.x, &t.y, &t.z}) {
        const auto& pc = T.power_closure(T.class_of(*e));
        for (std::size_t k = 0; k < pc.size(); ++k)
            if (pc[k]) in[k] = true;
    }
    SigmaProfile s;
    for (std::size_t k = 0; k < in.size(); ++k)
        if (in[k]) s.classes.push_back({T.classes()[k].label, T.classes()[k].element_order, k});
    return s;
}

SigmaProfile sigma_profile(const PermGroup& G, const GeneratingTriple& t, Limits limits) {
    return sigma_profile(ClassTable(G, limits), t);
}

namespace {

// prime -> generators of the distinct order-p subgroups among powers of x, y, z
std::map<std::uint64_t, std::vector<Permutation>> prime_order_powers(const GeneratingTriple& t) {
    std::map<std::uint64_t, std::vector<Permutation>> out;
    for (const auto* e : {&t.x, &t.y, &t.z}) {
        const std::uint64_t o = e->order();
        for (auto p : prime_divisors(o)) {
            Permutation a = e->pow(static_cast<std::int64_t>(o / p));
            auto& list = out[p];
            bool seen = false;
            for (const auto& b : list)
                for (std::uint64_t i = 1; i < p && !seen; ++i) seen = b.pow(static_cast<std::int64_t>(i)) == a;
            if (!seen) list.push_back(std::move(a));
        }
    }
    return out;
}

}  // namespace

SigmaCheck sigma_check(const PermGroup& G, const GeneratingTriple& t1, const GeneratingTriple& t2, Limits limits,
                       const ClassTable* table) {
    SigmaCheck res;
    const auto side1 = prime_order_powers(t1);
    const auto side2 = prime_order_powers(t2);
    ConjugacyStats stats;
    for (const auto& [p, as] : side1) {
        auto it = side2.find(p);
        if (it == side2.end()) continue;
        res.shared_primes.push_back(p);
        for (const auto& a : as) {
            for (const auto& b : it->second) {
                for (std::uint64_t i = 1; i < p; ++i) {
                    const Permutation ai = a.pow(static_cast<std::int64_t>(i));
                    if (auto w = is_conjugate(G, ai, b, limits, table, &stats)) {
                        res.disjoint = false;
                        res.witness = std::array<Permutation, 3>{ai, b, *w};
                        res.conjugacy_tests = stats.tests;
                        res.fast_rejects = stats.fast_rejects;
                        return res;
                    }
                }
            }
        }
    }
    res.conjugacy_tests = stats.tests;
    res.fast_rejects = stats.fast_rejects;
    return res;
}

bool sigma_disjoint(const PermGroup& G, const GeneratingTriple& t1, const GeneratingTriple& t2, Limits limits) {
    return sigma_check(G, t1, t2, limits).disjoint;
}

// --- verification ---------------------------------------------------------------

namespace {

std::string hyperbolic_detail(const TripleType& t) {
    const BigInt l = t.l, m = t.m, n = t.n;
    const BigInt num = m * n + l * n + l * m, den = l * m * n;
    const BigInt g = boost::multiprecision::gcd(num, den);
    return "1/" + std::to_string(t.l) + " + 1/" + std::to_string(t.m) + " + 1/" + std::to_string(t.n) + " = " +
           BigInt(num / g).str() + "/" + BigInt(den / g).str();
}

double since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

Report verify_unmixed(const PermGroup& G, const GeneratingTriple& t1, const GeneratingTriple& t2,
                      const VerifyOptions& opts) {
    const auto t0 = std::chrono::steady_clock::now();
    Report r;
    r.group = opts.group_name;
    r.claim = "unmixed Beauville structure";
    r.fact("group order", G.order().str());
    r.fact("type", type_string(t1.type, t2.type));

    bool members = true;
    for (const auto* t : {&t1, &t2})
        for (const auto* e : {&t->x, &t->y, &t->z})
            if (e->degree() != G.degree() || !G.contains(*e)) members = false;
    auto& mem = r.add("elements lie in the group", members);
    if (!members) {
        mem.detail = "at least one of the six elements is outside the group";
        r.seconds = since(t0);
        return r;
    }

    int i = 0;
    for (const auto* t : {&t1, &t2}) {
        ++i;
        const std::string k = std::to_string(i);
        auto& c1 = r.add("x" + k + "y" + k + "z" + k + " = 1", (t->x * t->y * t->z).is_identity());
        c1.witnesses = {{"x" + k, t->x.to_cycle_string()}, {"y" + k, t->y.to_cycle_string()}};
        const Permutation pair[] = {t->x, t->y};
        PermGroup H(G.degree(), {pair[0], pair[1]});
        r.add("triple " + k + " generates", H.order() == G.order(),
              "|<x" + k + ",y" + k + ">| = " + H.order().str());
        r.add("triple " + k + " hyperbolic", is_hyperbolic(t->type), t->type.str() + ": " + hyperbolic_detail(t->type));
    }

    const SigmaCheck s = sigma_check(G, t1, t2, opts.limits, opts.table);
    std::string primes;
    for (auto p : s.shared_primes) primes += (primes.empty() ? "" : ",") + std::to_string(p);
    auto& sc = r.add("Sigma disjoint", s.disjoint,
                     "shared primes {" + primes + "}, " + std::to_string(s.conjugacy_tests) + " conjugacy tests");
    if (s.witness) {
        sc.witnesses = {{"side 1", (*s.witness)[0].to_cycle_string()},
                        {"side 2", (*s.witness)[1].to_cycle_string()},
                        {"conjugator", (*s.witness)[2].to_cycle_string()}};
    }
    r.fact("shared primes", "{" + primes + "}");
    r.fact("conjugacy tests", std::to_string(s.conjugacy_tests));
    r.seconds = since(t0);
    return r;
}

Report strongly_real_report(const BeauvilleStructure& S, const Automorphism& phi, const std::optional<Automorphism>& phi2,
                            const VerifyOptions& opts) {
    const auto t0 = std::chrono::steady_clock::now();
    Report r;
    r.group = opts.group_name;
    r.claim = "strongly real (automorphisms invert x_i and y_i)";
    r.fact("type", type_string(S.first.type, S.second.type));
    r.fact("phi_1", phi.describe());
    const Automorphism& second = phi2 ? *phi2 : phi;
    if (phi2) r.fact("phi_2", phi2->describe());
    int i = 0;
    for (const auto* t : {&S.first, &S.second}) {
        ++i;
        const Automorphism& f = i == 1 ? phi : second;
        const std::string k = std::to_string(i);
        const std::string who = phi2 ? "phi_" + k : "phi";
        r.add(who + " inverts x" + k, f.apply(t->x) == t->x.inverse());
        r.add(who + " inverts y" + k, f.apply(t->y) == t->y.inverse());
    }
    if (phi2) {
        auto w = inner_difference(S.ambient, phi, *phi2, opts.limits);
        auto& c = r.add("phi_1 and phi_2 differ by an inner automorphism", w.has_value());
        if (w) c.witnesses = {{"w", w->to_cycle_string()}};
    }
    r.seconds = since(t0);
    return r;
}

bool verify_strongly_real(const BeauvilleStructure& S, const Automorphism& phi, const std::optional<Automorphism>& phi2) {
    return strongly_real_report(S, phi, phi2).pass();
}

}  // namespace beauville
