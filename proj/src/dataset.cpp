#include "beauville/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

#include "embedded.hpp"

namespace beauville {

namespace {

std::string trim(std::string_view s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return std::string(s.substr(a, b - a));
}

std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == '\t') {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(trim(cur));
    return out;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DatasetError("cannot open " + path.string());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

std::string normalize_name(std::string_view name) {
    std::string s(name), out;
    for (std::size_t p; (p = s.find("\xCE\x93")) != std::string::npos;) s.replace(p, 2, "gamma");
    for (char c : s)
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '\'') out += static_cast<char>(std::tolower(c));
    return out;
}

// --- group files -----------------------------------------------------------------

void GroupDataset::finalize() {
    std::set<char> names;
    std::vector<Permutation> gens;
    for (const auto& g : generators) {
        if (!names.insert(g.name).second) throw DatasetError(name + ": generator '" + g.name + "' defined twice");
        if (g.perm.degree() != degree) throw DatasetError(name + ": generator '" + g.name + "' has the wrong degree");
        gens.push_back(g.perm);
    }
    group = PermGroup(degree, std::move(gens));
    if (order && *order != group.order())
        throw DatasetError(name + ": declared order " + order->str() + " but the generators give " + group.order().str());
}

Binding GroupDataset::binding() const {
    Binding b;
    for (const auto& g : generators) b.emplace(g.name, g.perm);
    return b;
}

const Permutation& GroupDataset::generator(char n) const {
    for (const auto& g : generators)
        if (g.name == n) return g.perm;
    throw DatasetError(name + ": no generator named '" + std::string(1, n) + "'");
}

GroupDataset parse_group(std::string_view text, const std::string& source) {
    GroupDataset ds;
    bool have_degree = false;
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t lineno = 0;
    auto fail = [&](const std::string& msg) { return DatasetError(source + ":" + std::to_string(lineno) + ": " + msg); };
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        if (auto h = line.find('#'); h != std::string::npos) {
            if (trim(line.substr(0, h)).empty()) ds.comments.push_back(trim(line.substr(h + 1)));
            line.erase(h);
        }
        line = trim(line);
        if (line.empty()) continue;

        if (line.size() >= 2 && std::islower(static_cast<unsigned char>(line[0])) && line[1] == ':') {
            if (!have_degree) throw fail("generator before the degree line");
            const std::string body = trim(line.substr(2));
            try {
                Permutation p;
                if (!body.empty() && body[0] == '(') {
                    p = Permutation::from_cycles(body, ds.degree);
                } else {
                    std::istringstream ls(body);
                    std::vector<std::int64_t> im;
                    std::string tok;
                    while (ls >> tok) {
                        std::size_t used = 0;
                        long long v = std::stoll(tok, &used);
                        if (used != tok.size()) throw std::invalid_argument("bad number '" + tok + "'");
                        im.push_back(v);
                    }
                    if (im.size() != ds.degree)
                        throw std::invalid_argument(std::to_string(im.size()) + " images for degree " +
                                                    std::to_string(ds.degree));
                    p = Permutation::from_one_based(im);
                }
                ds.generators.push_back({line[0], std::move(p)});
            } catch (const std::invalid_argument& e) {
                throw fail(std::string("generator '") + line[0] + "': " + e.what());
            }
            continue;
        }

        std::istringstream ls(line);
        std::string key;
        ls >> key;
        std::string rest;
        std::getline(ls, rest);
        rest = trim(rest);
        if (key == "degree") {
            if (have_degree) throw fail("degree given twice");
            try {
                std::size_t used = 0;
                ds.degree = std::stoull(rest, &used);
                if (used != rest.size()) throw std::invalid_argument(rest);
            } catch (const std::exception&) {
                throw fail("bad degree '" + rest + "'");
            }
            have_degree = true;
        } else if (key == "name") {
            ds.name = rest;
        } else if (key == "order") {
            try {
                ds.order = BigInt(rest);
            } catch (const std::exception&) {
                throw fail("bad order '" + rest + "'");
            }
        } else if (key == "overgroup") {
            ds.overgroup = rest;
        } else if (key == "embedding") {
            ds.embedding = rest;
        } else if (key == "automorphisms") {
            if (rest != "complete") throw fail("expected 'automorphisms complete'");
            ds.automorphisms_complete = true;
        } else if (key == "standard") {
            std::istringstream ss(rest);
            std::string a, b;
            if (!(ss >> a >> b) || a.size() != 1 || b.size() != 1) throw fail("expected 'standard a b'");
            ds.standard = std::make_pair(a[0], b[0]);
        } else if (key == "quotient") {
            ds.quotient = rest;
        } else if (key == "involution") {
            if (rest.size() != 1) throw fail("expected a generator name");
            ds.involution = rest[0];
        } else {
            throw fail("unknown keyword '" + key + "'");
        }
    }
    if (!have_degree) throw DatasetError(source + ": missing degree line");
    if (ds.name.empty()) ds.name = source;
    ds.finalize();
    return ds;
}

GroupDataset load_group(const std::filesystem::path& path) {
    GroupDataset ds = parse_group(read_file(path), path.string());
    return ds;
}

std::string save_group(const GroupDataset& ds) {
    std::ostringstream os;
    for (const auto& c : ds.comments) os << "# " << c << '\n';
    os << "degree " << ds.degree << '\n';
    os << "name " << ds.name << '\n';
    for (const auto& g : ds.generators) os << g.name << ": " << g.perm.to_image_string() << '\n';
    if (ds.order) os << "order " << ds.order->str() << '\n';
    if (ds.overgroup) os << "overgroup " << *ds.overgroup << '\n';
    if (!ds.embedding.empty()) os << "embedding " << ds.embedding << '\n';
    if (ds.automorphisms_complete) os << "automorphisms complete\n";
    if (ds.standard) os << "standard " << ds.standard->first << ' ' << ds.standard->second << '\n';
    if (ds.quotient) os << "quotient " << *ds.quotient << '\n';
    if (ds.involution) os << "involution " << *ds.involution << '\n';
    return os.str();
}

// --- bundled data ------------------------------------------------------------------

namespace {

struct BundledIndex {
    std::map<std::string, std::size_t> by_key;  // normalized name or file stem -> file
    std::vector<std::string> names;
    std::map<std::size_t, GroupDataset> cache;
    std::mutex mu;
};

BundledIndex& index() {
    static BundledIndex* idx = [] {
        auto* i = new BundledIndex;
        for (std::size_t k = 0; k < embedded::group_count; ++k) {
            const auto& f = embedded::groups[k];
            std::istringstream in(f.text);
            std::string line, name = f.name;
            while (std::getline(in, line))
                if (line.rfind("name ", 0) == 0) name = trim(line.substr(5));
            i->names.push_back(name);
            i->by_key[normalize_name(name)] = k;
            i->by_key[normalize_name(f.name)] = k;
        }
        std::sort(i->names.begin(), i->names.end());
        return i;
    }();
    return *idx;
}

std::string_view table_text(std::string_view name) {
    for (std::size_t k = 0; k < embedded::table_count; ++k)
        if (name == embedded::tables[k].name) return embedded::tables[k].text;
    throw DatasetError("missing bundled table " + std::string(name));
}

}  // namespace

std::vector<std::string> bundled_names() { return index().names; }

bool is_bundled(std::string_view name) { return index().by_key.count(normalize_name(name)) > 0; }

GroupDataset bundled(std::string_view name) {
    auto& idx = index();
    auto it = idx.by_key.find(normalize_name(name));
    if (it == idx.by_key.end()) throw DatasetError("no bundled group named '" + std::string(name) + "'");
    std::lock_guard lock(idx.mu);
    auto c = idx.cache.find(it->second);
    if (c == idx.cache.end()) {
        const auto& f = embedded::groups[it->second];
        c = idx.cache.emplace(it->second, parse_group(f.text, std::string(f.name) + ".grp")).first;
    }
    return c->second;
}

AutomorphismSource automorphism_source(const GroupDataset& ds) {
    AutomorphismSource src;
    src.complete = ds.automorphisms_complete;
    if (ds.overgroup) {
        const GroupDataset over = bundled(*ds.overgroup);
        if (over.degree != ds.degree) throw DatasetError(ds.name + ": overgroup acts on a different number of points");
        src.overgroup = over.group;
    }
    return src;
}

std::optional<Homomorphism> quotient_map(const GroupDataset& ds) {
    if (!ds.quotient) return std::nullopt;
    const GroupDataset q = bundled(*ds.quotient);
    std::vector<Permutation> images;
    for (const auto& g : ds.generators) images.push_back(q.generator(g.name));
    Homomorphism h(ds.group, std::move(images));
    if (!h.is_homomorphism()) throw DatasetError(ds.name + ": generator images in " + q.name + " do not define a homomorphism");
    return h;
}

// --- word tables -------------------------------------------------------------------

TypeClaim parse_type_claim(std::string_view text) {
    std::vector<std::uint64_t> nums;
    std::uint64_t cur = 0;
    bool in_num = false;
    for (char c : text) {
        if (std::isdigit(static_cast<unsigned char>(c))) {
            cur = cur * 10 + static_cast<std::uint64_t>(c - '0');
            in_num = true;
        } else {
            if (in_num) nums.push_back(cur);
            cur = 0;
            in_num = false;
            if (!std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')' && c != ',')
                throw DatasetError("bad type claim '" + std::string(text) + "'");
        }
    }
    if (in_num) nums.push_back(cur);
    if (nums.size() != 6) throw DatasetError("type claim needs six entries: '" + std::string(text) + "'");
    for (auto v : nums)
        if (v < 1) throw DatasetError("type claim entries must be at least 1");
    return {{nums[0], nums[1], nums[2]}, {nums[3], nums[4], nums[5]}};
}

namespace {

template <class F>
void for_each_row(std::string_view text, std::size_t columns, F&& f) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    bool header = true;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty() || trim(line)[0] == '#') continue;
        if (header) {
            header = false;
            continue;
        }
        auto cols = split_tabs(line);
        if (cols.size() != columns)
            throw DatasetError("table line " + std::to_string(lineno) + ": expected " + std::to_string(columns) +
                               " columns, got " + std::to_string(cols.size()));
        f(cols, lineno);
    }
}

std::int64_t parse_int(const std::string& s, std::size_t lineno) {
    try {
        std::size_t used = 0;
        const long long v = std::stoll(s, &used);
        if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
    throw DatasetError("table line " + std::to_string(lineno) + ": bad integer '" + s + "'");
}

}  // namespace

std::vector<WordTableRow> parse_word_table(std::string_view text, std::vector<std::string>* warnings) {
    std::vector<WordTableRow> rows;
    for_each_row(text, 7, [&](const std::vector<std::string>& c, std::size_t lineno) {
        WordTableRow r;
        r.group = c[0];
        r.x1 = c[1];
        r.x2 = c[2];
        r.u = c[3];
        r.j1 = parse_int(c[4], lineno);
        r.j2 = parse_int(c[5], lineno);
        const auto flag = parse_int(c[6], lineno);
        if (flag != 0 && flag != 1) throw DatasetError("table line " + std::to_string(lineno) + ": flag must be 0 or 1");
        r.gens_of_g2 = flag == 1;
        for (const auto* w : {&r.x1, &r.x2, &r.u}) {
            try {
                parse_word(*w);
            } catch (const WordParseError& e) {
                throw DatasetError("table line " + std::to_string(lineno) + ": " + e.what());
            }
        }
        if (warnings && !is_bundled(r.group)) warnings->push_back("no bundled representation for " + r.group);
        rows.push_back(std::move(r));
    });
    return rows;
}

std::vector<WordTableRow> load_word_table(const std::filesystem::path& path, std::vector<std::string>* warnings) {
    return parse_word_table(read_file(path), warnings);
}

void attach_types(std::vector<WordTableRow>& rows, std::string_view table1) {
    for_each_row(table1, 2, [&](const std::vector<std::string>& c, std::size_t) {
        for (auto& r : rows)
            if (r.group == c[0]) r.type = parse_type_claim(c[1]);
    });
}

void attach_c_words(std::vector<WordTableRow>& rows, std::string_view table3) {
    for_each_row(table3, 2, [&](const std::vector<std::string>& c, std::size_t lineno) {
        try {
            parse_word(c[1]);
        } catch (const WordParseError& e) {
            throw DatasetError("table line " + std::to_string(lineno) + ": " + e.what());
        }
        for (auto& r : rows)
            if (r.group == c[0]) r.c = c[1];
    });
}

std::vector<WordTableRow> bundled_word_table() {
    auto rows = parse_word_table(table_text("table2"));
    attach_types(rows, table_text("table1"));
    attach_c_words(rows, table_text("table3"));
    return rows;
}

const WordTableRow& bundled_row(std::string_view group) {
    static const std::vector<WordTableRow> rows = bundled_word_table();
    for (const auto& r : rows)
        if (r.group == group) return r;
    throw DatasetError("no table row for " + std::string(group));
}

RowElements evaluate_row(const WordTableRow& row, const GroupDataset& ds) {
    RowElements out;
    const char a = ds.standard ? ds.standard->first : 'a';
    const char b = ds.standard ? ds.standard->second : 'b';
    out.env.emplace('a', ds.generator(a));
    out.env.emplace('b', ds.generator(b));
    if (row.c) out.env.emplace('c', evaluate(*row.c, out.env));
    const WordExpr x1 = parse_word(row.x1);
    // x_i = t t^{g_i}: the involution is the leading generator of the word.
    const WordExpr* lead = &x1;
    while (lead->kind() != WordExpr::Kind::Generator) lead = &lead->children().front();
    out.t_name = lead->name();
    out.candidate = build_candidate_from_x(out.env.at(out.t_name), evaluate(x1, out.env), evaluate(row.x2, out.env),
                                           evaluate(row.u, out.env), row.j1, row.j2);
    return out;
}

}  // namespace beauville
