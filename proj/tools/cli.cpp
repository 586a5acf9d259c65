// beauville: command-line front end.
//
// Exit codes: 0 claim verified / structure found, 1 claim refuted / proven
// absent, 2 operational error, 3 no verdict (inconclusive search, or a
// randomised scan that found nothing).
#include <atomic>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "beauville/bray.hpp"
#include "beauville/dataset.hpp"
#include "beauville/lift.hpp"
#include "beauville/search.hpp"

using namespace beauville;
using json = nlohmann::ordered_json;

namespace {

constexpr int kVerified = 0, kRefuted = 1, kError = 2, kNoVerdict = 3;

struct Common {
    std::string group, file;
    std::string format = "text";
    std::uint64_t seed = kDefaultSeed;
    std::size_t budget = Limits{}.class_cap;
    unsigned jobs = 1;
    double time_limit = 0;
    bool timing = true;
};

void add_common(CLI::App* sub, Common& c) {
    auto* g = sub->add_option("--group,-g", c.group, "bundled group name or path to a .grp file");
    auto* f = sub->add_option("--file", c.file, "group file")->check(CLI::ExistingFile);
    g->excludes(f);
    sub->add_option("--format", c.format, "output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--seed", c.seed, "random seed");
    sub->add_option("--budget", c.budget, "maximum number of elements one enumeration may hold")
        ->check(CLI::PositiveNumber);
    sub->add_option("--jobs,-j", c.jobs, "worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--time-limit", c.time_limit, "wall-clock limit in seconds (0 = none)")
        ->check(CLI::NonNegativeNumber);
    sub->add_flag("!--no-timing", c.timing, "omit timing from the output");
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DatasetError("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

GroupDataset resolve_group(const Common& c) {
    if (!c.file.empty()) return load_group(c.file);
    if (c.group.empty()) throw DatasetError("no group given (use --group or --file)");
    if (is_bundled(c.group)) return bundled(c.group);
    if (std::filesystem::exists(c.group)) return load_group(c.group);
    throw DatasetError("unknown group '" + c.group + "' (not bundled, not a file); try 'beauville info'");
}

/// Cycle notation when the text has no generator letters, otherwise a word.
Permutation element(const std::string& text, const GroupDataset& ds, const Binding& env) {
    const bool has_letter =
        std::any_of(text.begin(), text.end(), [](char ch) { return std::islower(static_cast<unsigned char>(ch)); });
    if (!has_letter) return Permutation::from_cycles(text, ds.degree);
    return evaluate(text, env);
}

/// Non-blank, non-comment lines of a words file.
std::vector<std::string> word_file_lines(const std::string& path) {
    std::istringstream in(slurp(path));
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        line.erase(0, line.find_first_not_of(" \t\r"));
        line.erase(line.find_last_not_of(" \t\r") + 1);
        if (!line.empty()) out.push_back(line);
    }
    return out;
}

Automorphism parse_automorphism(const std::string& text, const GroupDataset& ds, const Binding& env) {
    if (text == "identity" || text == "id") return Automorphism::identity(ds.group);
    if (text.rfind("images:", 0) == 0) {
        std::vector<Permutation> images;
        std::stringstream ss(text.substr(7));
        std::string w;
        while (std::getline(ss, w, ';')) images.push_back(element(w, ds, env));
        return Automorphism::from_images(ds.group, std::move(images));
    }
    const std::string body = text.rfind("conj:", 0) == 0 ? text.substr(5) : text;
    return Automorphism::conjugation(ds.group, element(body, ds, env));
}

void emit(const Report& r, const Common& c) {
    if (c.format == "json")
        std::cout << to_json(r, c.timing) << '\n';
    else {
        std::cout << to_text(r);
        if (c.timing) std::printf("time: %.3f s\n", r.seconds);
    }
}

int exit_for(const Report& r) {
    if (!r.verdict_override.empty()) return kNoVerdict;
    return r.pass() ? kVerified : kRefuted;
}

double since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// --- triples -----------------------------------------------------------------------

struct TripleArgs {
    std::string words, row;
    std::string x1, y1, x2, y2;
};

void add_triple_options(CLI::App* sub, TripleArgs& t) {
    sub->add_option("--words", t.words, "file with x1, y1, x2, y2 (one word or cycle list per line)")
        ->check(CLI::ExistingFile);
    sub->add_option("--row", t.row, "use the shipped word-table row for this group");
    sub->add_option("--x1", t.x1);
    sub->add_option("--y1", t.y1);
    sub->add_option("--x2", t.x2);
    sub->add_option("--y2", t.y2);
}

struct ResolvedTriples {
    GeneratingTriple first, second;
    Binding env;
};

ResolvedTriples resolve_triples(const TripleArgs& t, const GroupDataset& ds) {
    ResolvedTriples out;
    out.env = ds.binding();
    if (!t.row.empty()) {
        const auto el = evaluate_row(bundled_row(t.row), ds);
        for (const auto& [k, v] : el.env) out.env[k] = v;
        out.first = el.candidate.first;
        out.second = el.candidate.second;
        return out;
    }
    std::vector<std::string> w = {t.x1, t.y1, t.x2, t.y2};
    if (!t.words.empty()) {
        w = word_file_lines(t.words);
        if (w.size() != 4) throw std::invalid_argument("words file needs exactly four lines: x1, y1, x2, y2");
    }
    for (const auto& s : w)
        if (s.empty()) throw std::invalid_argument("give --row, --words, or all of --x1 --y1 --x2 --y2");
    out.first = make_triple(element(w[0], ds, out.env), element(w[1], ds, out.env));
    out.second = make_triple(element(w[2], ds, out.env), element(w[3], ds, out.env));
    return out;
}

// --- subcommands ---------------------------------------------------------------------

int cmd_verify_unmixed(const Common& c, const TripleArgs& t) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto ds = resolve_group(c);
    const auto tr = resolve_triples(t, ds);
    Report r = verify_unmixed(ds.group, tr.first, tr.second, {Limits{c.budget}, nullptr, ds.name});
    r.seconds = since(t0);
    emit(r, c);
    return exit_for(r);
}

int cmd_verify_strongly_real(const Common& c, const TripleArgs& t, const std::vector<std::string>& auts) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto ds = resolve_group(c);
    const auto tr = resolve_triples(t, ds);
    if (auts.empty() || auts.size() > 2) throw std::invalid_argument("give one or two --aut specifications");
    const auto phi = parse_automorphism(auts[0], ds, tr.env);
    std::optional<Automorphism> phi2;
    if (auts.size() == 2) phi2 = parse_automorphism(auts[1], ds, tr.env);
    const BeauvilleStructure S{tr.first, tr.second, ds.group};
    Report r = strongly_real_report(S, phi, phi2, {Limits{c.budget}, nullptr, ds.name});
    r.seconds = since(t0);
    emit(r, c);
    return exit_for(r);
}

int cmd_verify_mixed(const Common& c, const std::string& xs, const std::string& ys, bool strict) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto ds = resolve_group(c);
    const auto env = ds.binding();
    MixedOptions mo{Limits{c.budget}, strict, ds.name};
    Report r = verify_mixed(ds.group, element(xs, ds, env), element(ys, ds, env), mo);
    r.seconds = since(t0);
    emit(r, c);
    return exit_for(r);
}

void describe_triple(Report& r, const std::string& k, const GeneratingTriple& t) {
    auto& cond = r.conditions.back();
    cond.witnesses.emplace_back("x" + k, t.x.to_cycle_string());
    cond.witnesses.emplace_back("y" + k, t.y.to_cycle_string());
}

struct SearchArgs {
    std::string mode = "unmixed";
    bool strict = false;
    std::size_t trials = 200;
    std::string involution;
};

int cmd_search(const Common& c, const SearchArgs& a) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto ds = resolve_group(c);
    Report r;
    r.group = ds.name;
    r.fact("group order", ds.group.order().str());
    r.fact("mode", a.mode);

    if (a.mode == "unmixed" || a.mode == "strongly-real") {
        SearchOptions opts;
        opts.limits.class_cap = c.budget;
        opts.jobs = c.jobs;
        opts.strongly_real = a.mode == "strongly-real";
        if (opts.strongly_real) opts.automorphisms = automorphism_source(ds);
        r.claim = opts.strongly_real ? "a strongly real Beauville structure exists" : "a Beauville structure exists";
        const auto res = search_unmixed(ds.group, opts);
        r.fact("status", to_string(res.status));
        r.fact("certificate", res.certificate.summary());
        if (!res.note.empty()) r.fact("note", res.note);
        if (res.structure) {
            r.fact("type", type_string(res.structure->first.type, res.structure->second.type));
            r.add("structure found", true);
            describe_triple(r, "1", res.structure->first);
            describe_triple(r, "2", res.structure->second);
            if (res.phi1) r.conditions.back().witnesses.emplace_back("phi_1", "conjugation by " + res.phi1->to_cycle_string());
            if (res.phi2) r.conditions.back().witnesses.emplace_back("phi_2", "conjugation by " + res.phi2->to_cycle_string());
        } else {
            r.add("structure found", false, to_string(res.status));
            if (res.status == SearchStatus::Inconclusive) r.verdict_override = "inconclusive";
        }
    } else if (a.mode == "mixed") {
        r.claim = "a mixed Beauville structure exists";
        MixedOptions mo{Limits{c.budget}, a.strict, ds.name};
        const auto res = search_mixed(ds.group, mo);
        r.fact("status", to_string(res.status));
        r.fact("index-2 subgroups", std::to_string(res.subgroups.size()));
        for (std::size_t k = 0; k < res.subgroups.size(); ++k) {
            const auto& n = res.subgroups[k];
            std::string d = n.subgroup + ": ";
            if (!n.order_filter)
                d += "excluded, outer element " + (n.filter_witness ? n.filter_witness->to_cycle_string() : "") +
                     " has order not divisible by 4";
            else
                d += std::string(n.odd_reduction ? "odd orders only; " : "") + std::to_string(n.triples) +
                     " triples, " + std::to_string(n.profiles) + " profiles";
            r.fact("G0 #" + std::to_string(k + 1), d);
        }
        if (res.structure) {
            r.add("structure found", true);
            r.conditions.back().witnesses = {{"x", res.structure->first.to_cycle_string()},
                                             {"y", res.structure->second.to_cycle_string()}};
        } else {
            r.add("structure found", false, to_string(res.status));
            if (res.status == SearchStatus::Inconclusive) r.verdict_override = "inconclusive";
        }
    } else {  // bray
        r.claim = "the Bray scan finds a strongly real Beauville structure";
        Permutation t;
        const auto env = ds.binding();
        if (!a.involution.empty())
            t = element(a.involution, ds, env);
        else if (ds.involution)
            t = ds.generator(*ds.involution);
        else if (ds.overgroup) {
            // An outer involution may be needed (the natural A6 case), so look in the overgroup too.
            const auto over = bundled(*ds.overgroup);
            for (const auto& g : over.generators)
                if (g.perm.order() == 2) t = g.perm;
            if (t.degree() == 0) t = ds.generators.front().perm;
        } else {
            t = ds.generators.front().perm;
        }
        r.fact("involution", t.to_cycle_string());
        BrayScanOptions bo;
        bo.trials = a.trials;
        bo.seed = c.seed;
        bo.limits.class_cap = c.budget;
        r.fact("seed", std::to_string(c.seed));
        r.fact("trials", std::to_string(a.trials));
        const auto finds = bray_scan(ds.group, t, bo);
        r.fact("structures found", std::to_string(finds.size()));
        if (!finds.empty()) {
            const auto& f = finds.front();
            r.fact("type", type_string(f.structure.first.type, f.structure.second.type));
            r.add("structure found", true);
            describe_triple(r, "1", f.structure.first);
            describe_triple(r, "2", f.structure.second);
            r.conditions.back().witnesses.emplace_back("u", f.candidate.u.to_cycle_string());
            r.conditions.back().witnesses.emplace_back("j1, j2",
                                                       std::to_string(f.candidate.j1) + ", " + std::to_string(f.candidate.j2));
        } else {
            r.add("structure found", false, "randomised scan; absence is not a proof");
            r.verdict_override = "no structure found";
        }
    }
    r.seconds = since(t0);
    emit(r, c);
    return exit_for(r);
}

int cmd_classes(const Common& c, bool strongly_real_only) {
    const auto ds = resolve_group(c);
    const ClassTable T(ds.group, Limits{c.budget});
    const auto sr = strongly_real_classes(T);
    std::set<std::string> sr_labels;
    for (const auto& k : sr) sr_labels.insert(k.label);
    json rows = json::array();
    for (const auto& k : T.classes()) {
        const bool is_sr = sr_labels.count(k.label) > 0;
        if (strongly_real_only && !is_sr) continue;
        std::string ct;
        for (auto v : k.cycle_type)
            if (v > 1) ct += (ct.empty() ? "" : " ") + std::to_string(v);
        rows.push_back({{"label", k.label},
                        {"order", k.element_order},
                        {"size", k.size.str()},
                        {"cycle type", ct.empty() ? "1" : ct},
                        {"strongly real", is_sr},
                        {"representative", k.representative.to_cycle_string()}});
    }
    if (c.format == "json") {
        json j;
        j["group"] = ds.name;
        j["order"] = ds.group.order().str();
        j["classes"] = rows;
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << ds.name << ", order " << ds.group.order().str() << ", " << T.size() << " classes"
                  << (strongly_real_only ? " (strongly real shown)" : "") << '\n';
        std::printf("%-6s %6s %12s  %-3s %-16s %s\n", "class", "order", "size", "sr", "cycle type", "representative");
        for (const auto& k : rows)
            std::printf("%-6s %6llu %12s  %-3s %-16s %s\n", k["label"].get<std::string>().c_str(),
                        static_cast<unsigned long long>(k["order"].get<std::uint64_t>()),
                        k["size"].get<std::string>().c_str(), k["strongly real"].get<bool>() ? "yes" : "no",
                        k["cycle type"].get<std::string>().c_str(), k["representative"].get<std::string>().c_str());
    }
    return kVerified;
}

int cmd_certificate(const Common& c, const std::string& path) {
    const auto ds = resolve_group(c);
    const auto cert = parse_certificate(slurp(path));
    const auto lines = order_certificate_lines(ds.binding(), cert);
    Report r;
    r.group = ds.name;
    r.claim = "every certificate word has its stated order";
    for (const auto& l : lines)
        r.add("o(" + l.word + ") = " + std::to_string(l.expected), l.ok(), "computed " + std::to_string(l.actual));
    if (lines.empty()) r.add("certificate is non-empty", false);
    emit(r, c);
    return exit_for(r);
}

int cmd_eval(const Common& c, const std::vector<std::string>& words) {
    const auto ds = resolve_group(c);
    auto env = ds.binding();
    json out = json::array();
    for (const auto& w : words) {
        const auto p = element(w, ds, env);
        out.push_back({{"word", w}, {"order", p.order()}, {"cycles", p.to_cycle_string()}, {"in group", ds.group.contains(p)}});
    }
    if (c.format == "json") {
        std::cout << out.dump(2) << '\n';
    } else {
        for (const auto& e : out)
            std::cout << e["word"].get<std::string>() << "  order " << e["order"].get<std::uint64_t>() << "  "
                      << e["cycles"].get<std::string>() << '\n';
    }
    return kVerified;
}

int cmd_info(const Common& c) {
    if (c.group.empty() && c.file.empty()) {
        json names = bundled_names();
        if (c.format == "json")
            std::cout << json{{"bundled", names}}.dump(2) << '\n';
        else
            for (const auto& n : bundled_names()) std::cout << n << '\n';
        return kVerified;
    }
    const auto ds = resolve_group(c);
    json j;
    j["name"] = ds.name;
    j["degree"] = ds.degree;
    j["order"] = ds.group.order().str();
    json gens = json::object();
    for (const auto& g : ds.generators) gens[std::string(1, g.name)] = g.perm.to_cycle_string();
    j["generators"] = gens;
    std::vector<std::size_t> base;
    for (auto b : ds.group.base()) base.push_back(b + 1);
    j["base"] = base;
    j["orbit lengths"] = ds.group.orbit_lengths();
    if (ds.overgroup) j["overgroup"] = *ds.overgroup;
    if (ds.quotient) j["quotient"] = *ds.quotient;
    j["automorphisms complete"] = ds.automorphisms_complete;
    j["perfect"] = is_perfect(ds.group);
    if (c.format == "json") {
        std::cout << j.dump(2) << '\n';
    } else {
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (it.key() == "generators") {
                for (auto g = it->begin(); g != it->end(); ++g)
                    std::cout << g.key() << ": " << g->get<std::string>() << '\n';
                continue;
            }
            std::cout << it.key() << ": " << (it->is_string() ? it->get<std::string>() : it->dump()) << '\n';
        }
    }
    return kVerified;
}

void start_watchdog(double seconds) {
    if (seconds <= 0) return;
    std::thread([seconds] {
        std::this_thread::sleep_for(std::chrono::duration<double>(seconds));
        std::fprintf(stderr, "error: time limit of %g s exceeded\n", seconds);
        std::fflush(stdout);
        std::_Exit(kError);
    }).detach();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Beauville structures on permutation groups"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "beauville 0.1");

    Common common;
    TripleArgs triples;
    std::vector<std::string> auts;
    std::string mx, my, cert_path;
    bool strict = false, sr_only = false;
    SearchArgs search;
    std::vector<std::string> words;

    auto* vu = app.add_subcommand("verify-unmixed", "check two triples form a Beauville structure");
    add_common(vu, common);
    add_triple_options(vu, triples);

    auto* vs = app.add_subcommand("verify-strongly-real", "check a structure is strongly real");
    add_common(vs, common);
    add_triple_options(vs, triples);
    vs->add_option("--aut", auts, "conj:<element>, images:<w1;w2;...>, identity (give twice for phi_1, phi_2)")
        ->required();

    auto* vm = app.add_subcommand("verify-mixed", "check a triple (x, y, (xy)^-1) gives a mixed structure");
    add_common(vm, common);
    vm->add_option("--x", mx)->required();
    vm->add_option("--y", my)->required();
    vm->add_flag("--strict-sigma", strict, "Sigma over G and count the identity in condition 3");

    auto* se = app.add_subcommand("search", "search for structures");
    add_common(se, common);
    se->add_option("--mode", search.mode)->check(CLI::IsMember({"unmixed", "strongly-real", "mixed", "bray"}));
    se->add_flag("--strict-sigma", search.strict, "mixed mode: strict Sigma");
    se->add_option("--trials", search.trials, "bray mode: number of trials")->check(CLI::PositiveNumber);
    se->add_option("--involution", search.involution, "bray mode: the involution t (word or cycles)");

    auto* cl = app.add_subcommand("classes", "conjugacy classes");
    add_common(cl, common);
    cl->add_flag("--strongly-real", sr_only, "only classes inverted by an involution");

    auto* ce = app.add_subcommand("certificate", "check an order certificate");
    add_common(ce, common);
    ce->add_option("cert", cert_path, "certificate file: lines 'word order'")->required()->check(CLI::ExistingFile);

    auto* ev = app.add_subcommand("eval-word", "evaluate words in the group's generators");
    add_common(ev, common);
    ev->add_option("words", words)->required();

    auto* in = app.add_subcommand("info", "describe a group, or list bundled groups");
    add_common(in, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kError;
    }

    start_watchdog(common.time_limit);
    try {
        if (*vu) return cmd_verify_unmixed(common, triples);
        if (*vs) return cmd_verify_strongly_real(common, triples, auts);
        if (*vm) return cmd_verify_mixed(common, mx, my, strict);
        if (*se) return cmd_search(common, search);
        if (*cl) return cmd_classes(common, sr_only);
        if (*ce) return cmd_certificate(common, cert_path);
        if (*ev) return cmd_eval(common, words);
        if (*in) return cmd_info(common);
    } catch (const BudgetExceeded& e) {
        std::fprintf(stderr, "error: budget exceeded: %s (raise --budget)\n", e.what());
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
    }
    return kError;
}
