#include "beauville/words.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>
#include <sstream>

namespace beauville {

WordExpr WordExpr::generator(char name) {
    if (!std::islower(static_cast<unsigned char>(name))) throw std::invalid_argument("generator names are lowercase letters");
    WordExpr w;
    w.kind_ = Kind::Generator;
    w.name_ = name;
    return w;
}

WordExpr WordExpr::product(std::vector<WordExpr> factors) {
    if (factors.empty()) throw std::invalid_argument("empty product");
    if (factors.size() == 1) return std::move(factors.front());
    WordExpr w;
    w.kind_ = Kind::Product;
    w.children_ = std::move(factors);
    return w;
}

WordExpr WordExpr::power(WordExpr base, std::int64_t exponent) {
    WordExpr w;
    w.kind_ = Kind::Power;
    w.exponent_ = exponent;
    w.children_.push_back(std::move(base));
    return w;
}

WordExpr WordExpr::conjugation(WordExpr base, WordExpr by) {
    WordExpr w;
    w.kind_ = Kind::Conjugation;
    w.children_.push_back(std::move(base));
    w.children_.push_back(std::move(by));
    return w;
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    WordExpr parse_all() {
        skip();
        if (at_end()) throw WordParseError("empty word", pos_);
        WordExpr w = word();
        skip();
        if (!at_end()) {
            if (peek() == ')' || peek() == '}') throw WordParseError("unbalanced parenthesis", pos_);
            throw WordParseError(std::string("unexpected character '") + peek() + "'", pos_);
        }
        return w;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;

    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }
    void skip() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    static bool is_open(char c) { return c == '(' || c == '{'; }
    static bool is_close(char c) { return c == ')' || c == '}'; }
    static char closer(char open) { return open == '(' ? ')' : '}'; }

    WordExpr word() {
        std::vector<WordExpr> terms;
        for (;;) {
            skip();
            if (at_end() || is_close(peek())) break;
            terms.push_back(term());
        }
        if (terms.empty()) throw WordParseError("empty word", pos_);
        return WordExpr::product(std::move(terms));
    }

    WordExpr term() {
        WordExpr w = atom();
        for (;;) {
            skip();
            if (at_end() || peek() != '^') break;
            ++pos_;
            w = exponent(std::move(w));
        }
        return w;
    }

    WordExpr atom() {
        const char c = peek();
        if (std::islower(static_cast<unsigned char>(c))) {
            ++pos_;
            return WordExpr::generator(c);
        }
        if (is_open(c)) {
            const std::size_t open_at = pos_++;
            WordExpr w = word();
            skip();
            if (at_end() || peek() != closer(c)) throw WordParseError("unbalanced parenthesis", open_at);
            ++pos_;
            return w;
        }
        if (is_close(c)) throw WordParseError("unbalanced parenthesis", pos_);
        throw WordParseError(std::string("unknown token '") + c + "'", pos_);
    }

    // Integer literal with optional sign; nullopt if none here.
    std::optional<std::int64_t> integer() {
        const std::size_t start = pos_;
        bool neg = false;
        if (!at_end() && (peek() == '-' || peek() == '+')) {
            neg = peek() == '-';
            ++pos_;
            skip();
        }
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
            if (pos_ != start) throw WordParseError("sign without digits", start);
            return std::nullopt;
        }
        std::int64_t v = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            if (v > (INT64_MAX - 9) / 10) throw WordParseError("exponent too large", start);
            v = v * 10 + (peek() - '0');
            ++pos_;
        }
        return neg ? -v : v;
    }

    WordExpr exponent(WordExpr base) {
        skip();
        if (at_end()) throw WordParseError("empty exponent", pos_);
        const char c = peek();
        if (auto v = integer()) return WordExpr::power(std::move(base), *v);
        if (std::islower(static_cast<unsigned char>(c))) {
            ++pos_;
            return WordExpr::conjugation(std::move(base), WordExpr::generator(c));
        }
        if (is_open(c)) {
            const std::size_t open_at = pos_++;
            skip();
            if (!at_end() && is_close(peek())) throw WordParseError("empty exponent", pos_);
            // integer-only group: a power
            const std::size_t save = pos_;
            if (auto v = integer()) {
                skip();
                if (!at_end() && peek() == closer(c)) {
                    ++pos_;
                    return WordExpr::power(std::move(base), *v);
                }
                pos_ = save;
            }
            WordExpr by = word();
            skip();
            if (at_end() || peek() != closer(c)) throw WordParseError("unbalanced parenthesis", open_at);
            ++pos_;
            return WordExpr::conjugation(std::move(base), std::move(by));
        }
        throw WordParseError(std::string("bad exponent '") + c + "'", pos_);
    }
};

void print_into(const WordExpr& w, std::ostringstream& os);

void print_atom(const WordExpr& w, std::ostringstream& os) {
    if (w.kind() == WordExpr::Kind::Product) {
        os << '(';
        print_into(w, os);
        os << ')';
    } else {
        print_into(w, os);
    }
}

void print_into(const WordExpr& w, std::ostringstream& os) {
    switch (w.kind()) {
    case WordExpr::Kind::Generator:
        os << w.name();
        break;
    case WordExpr::Kind::Product:
        for (const auto& f : w.children()) print_atom(f, os);
        break;
    case WordExpr::Kind::Power:
        print_atom(w.children()[0], os);
        os << '^' << w.exponent();
        break;
    case WordExpr::Kind::Conjugation: {
        print_atom(w.children()[0], os);
        const auto& by = w.children()[1];
        os << '^';
        if (by.kind() == WordExpr::Kind::Generator) {
            os << by.name();
        } else {
            os << '(';
            print_into(by, os);
            os << ')';
        }
        break;
    }
    }
}

void collect(const WordExpr& w, std::set<char>& out) {
    if (w.kind() == WordExpr::Kind::Generator) out.insert(w.name());
    for (const auto& c : w.children()) collect(c, out);
}

}  // namespace

WordExpr parse_word(std::string_view text) { return Parser(text).parse_all(); }

std::string print_word(const WordExpr& w) {
    std::ostringstream os;
    print_into(w, os);
    return os.str();
}

Permutation evaluate(const WordExpr& w, const Binding& env) {
    switch (w.kind()) {
    case WordExpr::Kind::Generator: {
        auto it = env.find(w.name());
        if (it == env.end()) throw UnboundGenerator(std::string("unbound generator '") + w.name() + "'");
        return it->second;
    }
    case WordExpr::Kind::Product: {
        Permutation acc = evaluate(w.children()[0], env);
        for (std::size_t k = 1; k < w.children().size(); ++k) acc = acc * evaluate(w.children()[k], env);
        return acc;
    }
    case WordExpr::Kind::Power:
        return evaluate(w.children()[0], env).pow(w.exponent());
    case WordExpr::Kind::Conjugation:
        return evaluate(w.children()[0], env).conjugated_by(evaluate(w.children()[1], env));
    }
    throw std::logic_error("unreachable");
}

Permutation evaluate(std::string_view text, const Binding& env) { return evaluate(parse_word(text), env); }

std::vector<char> word_generators(const WordExpr& w) {
    std::set<char> s;
    collect(w, s);
    return {s.begin(), s.end()};
}

std::vector<WordExpr> parse_word_lines(std::string_view text) {
    std::vector<WordExpr> out;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        if (std::all_of(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); })) continue;
        out.push_back(parse_word(line));
    }
    return out;
}

}  // namespace beauville
