#include "beauville/lift.hpp"

#include <sstream>

namespace beauville {

namespace {

void check_preconditions(const PermGroup& cover, const Homomorphism& q) {
    if (q.source().order() != cover.order() || !is_subgroup(q.source(), cover))
        throw LiftPreconditionFailed("quotient map is defined on a different group");
    if (!q.is_homomorphism()) throw LiftPreconditionFailed("generator images do not define a homomorphism");
    if (!is_perfect(cover)) throw LiftPreconditionFailed("cover is not perfect");
    const PermGroup K = q.kernel();
    for (const auto& k : K.generators())
        for (const auto& g : cover.generators())
            if (!k.commutes_with(g)) throw LiftPreconditionFailed("kernel is not central");
}

}  // namespace

LiftCheck check_lift(const PermGroup& cover, const Homomorphism& quotient, const std::vector<Permutation>& S) {
    check_preconditions(cover, quotient);
    LiftCheck r;
    std::vector<Permutation> images;
    for (const auto& s : S) images.push_back(quotient.image(s));
    r.image_generates = PermGroup(quotient.image_group().degree(), images).order() == quotient.image_group().order();
    r.generates_cover = PermGroup(cover.degree(), S).order() == cover.order();
    if (!r.consistent()) throw std::logic_error("lifting lemma violated: image generates but S does not");
    return r;
}

StructureLift check_structure_lift(const PermGroup& cover, const Homomorphism& quotient, const GeneratingTriple& t1,
                                   const GeneratingTriple& t2, Limits limits) {
    check_preconditions(cover, quotient);
    StructureLift r;
    const PermGroup Q = quotient.image_group();
    auto image = [&](const GeneratingTriple& t) { return make_triple(quotient.image(t.x), quotient.image(t.y)); };
    const auto q1 = image(t1), q2 = image(t2);
    r.faithful_triple = q1.type == t1.type || q2.type == t2.type;
    r.quotient_structure = verify_unmixed(Q, q1, q2, {limits, nullptr, {}}).pass();
    r.cover_structure = verify_unmixed(cover, t1, t2, {limits, nullptr, {}}).pass();
    return r;
}

std::vector<CertificateLine> order_certificate_lines(const Binding& env,
                                                     const std::vector<std::pair<std::string, std::uint64_t>>& cert) {
    std::vector<CertificateLine> out;
    for (const auto& [w, o] : cert) out.push_back({w, o, evaluate(w, env).order()});
    return out;
}

bool check_order_certificate(const Binding& env, const std::vector<std::pair<std::string, std::uint64_t>>& cert) {
    for (const auto& line : order_certificate_lines(env, cert))
        if (!line.ok()) return false;
    return true;
}

std::vector<std::pair<std::string, std::uint64_t>> parse_certificate(std::string_view text) {
    std::vector<std::pair<std::string, std::uint64_t>> out;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        std::istringstream ls(line);
        std::string word, order;
        if (!(ls >> word)) continue;
        if (!(ls >> order)) throw std::invalid_argument("certificate line " + std::to_string(lineno) + ": missing order");
        parse_word(word);
        out.emplace_back(word, std::stoull(order));
    }
    return out;
}

}  // namespace beauville
