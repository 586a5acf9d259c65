#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "beauville/permutation.hpp"

namespace beauville {

class WordParseError : public std::invalid_argument {
public:
    WordParseError(const std::string& what, std::size_t position)
        : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class UnboundGenerator : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Word in single-letter generators:
///
///   word     := term+
///   term     := atom ('^' exponent)*
///   atom     := name | '(' word ')'
///   exponent := signed-integer | name | '(' word ')'
///
/// A parenthesised exponent holding only an integer is a power, so the
/// TeX forms b^{23} and b^(23) agree. Braces are accepted for parentheses.
/// Exponent chains associate to the left: a^b^2 = (a^b)^2.
class WordExpr {
public:
    enum class Kind { Generator, Product, Power, Conjugation };

    static WordExpr generator(char name);
    static WordExpr product(std::vector<WordExpr> factors);
    static WordExpr power(WordExpr base, std::int64_t exponent);
    static WordExpr conjugation(WordExpr base, WordExpr by);

    Kind kind() const noexcept { return kind_; }
    char name() const noexcept { return name_; }
    std::int64_t exponent() const noexcept { return exponent_; }
    /// Product: the factors. Power: {base}. Conjugation: {base, conjugator}.
    const std::vector<WordExpr>& children() const noexcept { return children_; }

    friend bool operator==(const WordExpr&, const WordExpr&) = default;

private:
    Kind kind_ = Kind::Generator;
    char name_ = 0;
    std::int64_t exponent_ = 0;
    std::vector<WordExpr> children_;
};

using Binding = std::map<char, Permutation>;

WordExpr parse_word(std::string_view text);
std::string print_word(const WordExpr& w);
Permutation evaluate(const WordExpr& w, const Binding& env);
Permutation evaluate(std::string_view text, const Binding& env);

/// Generator names referenced by w, sorted.
std::vector<char> word_generators(const WordExpr& w);

/// One word per line; '#' starts a comment; blank lines skipped.
std::vector<WordExpr> parse_word_lines(std::string_view text);

}  // namespace beauville
