#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "beauville/bray.hpp"
#include "beauville/homomorphism.hpp"
#include "beauville/search.hpp"
#include "beauville/words.hpp"

namespace beauville {

class DatasetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NoRepresentation : public DatasetError {
public:
    using DatasetError::DatasetError;
};

struct NamedGenerator {
    char name;
    Permutation perm;
};

/// A named generating set with optional metadata. `group` is built and
/// checked against `order` by finalize(), which every loader calls.
struct GroupDataset {
    std::string name;
    std::size_t degree = 0;
    std::vector<NamedGenerator> generators;
    std::optional<BigInt> order;
    std::optional<std::string> overgroup;  // dataset name, same points
    std::string embedding;
    bool automorphisms_complete = false;  // Aut(G) is realised by the overgroup (or is inner)
    std::optional<std::pair<char, char>> standard;
    std::optional<std::string> quotient;  // dataset name; same generator names map across
    std::optional<char> involution;
    std::vector<std::string> comments;
    PermGroup group;

    void finalize();
    Binding binding() const;
    const Permutation& generator(char name) const;
};

GroupDataset parse_group(std::string_view text, const std::string& source = "<text>");
GroupDataset load_group(const std::filesystem::path& path);
std::string save_group(const GroupDataset& ds);

/// Names accepted by bundled(), in canonical spelling.
std::vector<std::string> bundled_names();
bool is_bundled(std::string_view name);
/// Throws DatasetError for unknown names. Case, underscores and brackets are
/// ignored, and PΓL may be spelt PGammaL.
GroupDataset bundled(std::string_view name);

/// Overgroup (bundled) for strongly-real work, with the completeness flag.
AutomorphismSource automorphism_source(const GroupDataset& ds);
/// Quotient map named by the dataset, matching generators by name.
std::optional<Homomorphism> quotient_map(const GroupDataset& ds);

struct TypeClaim {
    TripleType first, second;
    std::string str() const { return type_string(first, second); }
};
TypeClaim parse_type_claim(std::string_view text);

struct WordTableRow {
    std::string group;
    std::string x1, x2, u;
    std::int64_t j1 = 1, j2 = 1;
    std::optional<std::string> c;
    std::optional<TypeClaim> type;
    bool gens_of_g2 = false;  // words are in standard generators of G:2
};

/// Tab-separated "group x1 x2 u j1 j2 gens_of_G.2" with a header line.
/// Rows for groups without a bundled representation load with a warning.
std::vector<WordTableRow> parse_word_table(std::string_view text, std::vector<std::string>* warnings = nullptr);
std::vector<WordTableRow> load_word_table(const std::filesystem::path& path, std::vector<std::string>* warnings = nullptr);
/// "group type" rows.
void attach_types(std::vector<WordTableRow>& rows, std::string_view table1);
/// "group c" rows.
void attach_c_words(std::vector<WordTableRow>& rows, std::string_view table3);
/// The shipped tables, merged.
std::vector<WordTableRow> bundled_word_table();
const WordTableRow& bundled_row(std::string_view group);

struct RowElements {
    Binding env;  // a, b and, when used, c
    char t_name = 'a';
    BrayCandidate candidate;
};

/// Evaluate a row in a representation: bind a, b; evaluate c if the row
/// has one; then x_i, u and y_i = (x_i^{j_i})^u.
RowElements evaluate_row(const WordTableRow& row, const GroupDataset& ds);

/// Canonical key used for name matching.
std::string normalize_name(std::string_view name);

}  // namespace beauville
