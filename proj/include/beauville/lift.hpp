#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "beauville/structure.hpp"
#include "beauville/words.hpp"

namespace beauville {

class LiftPreconditionFailed : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct LiftCheck {
    bool image_generates = false;  // what the lemma looks at
    bool generates_cover = false;  // checked independently
    /// The lemma promises image_generates => generates_cover.
    bool consistent() const { return !image_generates || generates_cover; }
};

/// Perfect cover with central kernel: if the image of S generates the
/// quotient then S generates the cover. `quotient` maps the cover's
/// generators to generators of the quotient. Throws LiftPreconditionFailed
/// if the cover is not perfect, the map is not a surjective homomorphism,
/// or its kernel is not central. A violated conclusion throws std::logic_error.
LiftCheck check_lift(const PermGroup& cover, const Homomorphism& quotient, const std::vector<Permutation>& S);

struct StructureLift {
    bool faithful_triple = false;  // some triple keeps its element orders in the quotient
    bool quotient_structure = false;
    bool cover_structure = false;  // checked directly on the cover
    bool consistent() const { return !(faithful_triple && quotient_structure) || cover_structure; }
};

/// Second lifting statement: triples whose images form a Beauville structure
/// of the quotient, one of them faithfully represented there, form one of the cover.
StructureLift check_structure_lift(const PermGroup& cover, const Homomorphism& quotient, const GeneratingTriple& t1,
                                   const GeneratingTriple& t2, Limits limits = {});

struct CertificateLine {
    std::string word;
    std::uint64_t expected = 0;
    std::uint64_t actual = 0;
    bool ok() const { return expected == actual; }
};

/// Each word must evaluate to an element of exactly the claimed order.
std::vector<CertificateLine> order_certificate_lines(const Binding& env,
                                                     const std::vector<std::pair<std::string, std::uint64_t>>& cert);
bool check_order_certificate(const Binding& env, const std::vector<std::pair<std::string, std::uint64_t>>& cert);

/// Lines "word order", '#' comments.
std::vector<std::pair<std::string, std::uint64_t>> parse_certificate(std::string_view text);

}  // namespace beauville
