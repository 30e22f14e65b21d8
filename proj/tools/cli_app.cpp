#include "cli_app.hpp"

#include "stirlab/combgen.hpp"
#include "stirlab/decomp.hpp"
#include "stirlab/families.hpp"
#include "stirlab/grammar.hpp"
#include "stirlab/identities.hpp"
#include "stirlab/jsonio.hpp"
#include "stirlab/stats.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

namespace stirlab::cli {

namespace {

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << text;
    } else {
        std::ofstream f(out_path);
        if (!f) throw Error("cannot open output file: " + out_path);
        f << text;
    }
}

int default_jobs() {
    if (const char* env = std::getenv("STIRLING_LAB_JOBS")) {
        int j = std::atoi(env);
        if (j >= 1) return j;
    }
    return 1;
}

FamilyTag parse_family(const std::string& name) {
    auto tag = family_from_string(name);
    if (!tag)
        throw Error("unknown family '" + name +
                    "'; expected one of A, B, M, N, Ak, PQ, AlphaBeta, Pxy, Mq, GammaK, "
                    "ZetaK2, XiEta, FG, ABdecomp, Fn, ank");
    return *tag;
}

std::string table_text(FamilyTag tag, const CoeffTables& t) {
    std::ostringstream os;
    auto assembled = [](const std::map<std::pair<int, int>, Poly>& entries) {
        Poly p;
        for (const auto& [ij, v] : entries)
            p += v * Poly::term(Rat(1), Monomial::var("x", ij.first));
        return p;
    };
    switch (tag) {
        case FamilyTag::XiEta:
            os << "xi = " << assembled(t.primary).to_string() << "\n";
            os << "eta = " << assembled(t.secondary).to_string() << "\n";
            return os.str();
        case FamilyTag::FG:
            for (const auto& [ij, v] : t.primary)
                os << "f[" << ij.first << "] = " << v.to_string() << "\n";
            for (const auto& [ij, v] : t.secondary)
                os << "g[" << ij.first << "] = " << v.to_string() << "\n";
            return os.str();
        case FamilyTag::ABdecomp:
            os << "a = " << table_get(t.primary, 0, 0).to_string() << "\n";
            os << "b = " << table_get(t.secondary, 0, 0).to_string() << "\n";
            return os.str();
        case FamilyTag::Fn:
            os << table_get(t.primary, 0, 0).to_string() << "\n";
            return os.str();
        case FamilyTag::Ank:
            for (const auto& [ij, v] : t.primary)
                os << "a[" << ij.first << "] = " << v.to_string() << "\n";
            return os.str();
        default: // GammaK, ZetaK2
            for (const auto& [ij, v] : t.primary)
                os << "(" << ij.first << "," << ij.second << "): " << v.to_string() << "\n";
            return os.str();
    }
}

nlohmann::json table_json(const CoeffTables& t) {
    auto dump = [](const std::map<std::pair<int, int>, Poly>& entries) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& [ij, v] : entries)
            arr.push_back({{"i", ij.first}, {"j", ij.second}, {"poly", poly_to_json(v)}});
        return arr;
    };
    nlohmann::json j = {{"primary", dump(t.primary)}};
    if (!t.secondary.empty()) j["secondary"] = dump(t.secondary);
    return j;
}

// --- subcommand implementations --------------------------------------------

struct CommonOpts {
    std::string format = "text";
    std::string out_path;
};

int cmd_table(FamilyTag tag, int n, std::optional<int> k, const std::string& route_name,
              const CommonOpts& opts, std::ostream& out) {
    std::ostringstream os;
    if (family_is_table(tag)) {
        CoeffTables t = coeff_table(tag, n, k);
        if (opts.format == "json") {
            nlohmann::json j = {{"schema", kJsonSchema},
                                {"family", family_name(tag)},
                                {"n", n},
                                {"table", table_json(t)}};
            if (k) j["k"] = *k;
            os << j.dump() << "\n";
        } else {
            os << table_text(tag, t);
        }
    } else {
        auto route = route_from_string(route_name);
        if (!route) throw Error("unknown route '" + route_name + "'; expected enum|rec|grammar");
        Poly p = build(tag, *route, n, k);
        if (opts.format == "json") {
            nlohmann::json j = {{"schema", kJsonSchema},
                                {"family", family_name(tag)},
                                {"n", n},
                                {"poly", poly_to_json(p)}};
            if (k) j["k"] = *k;
            os << j.dump() << "\n";
        } else {
            os << p.to_string() << "\n";
        }
    }
    emit(os.str(), opts.out_path, out);
    return 0;
}

int cmd_check(const std::string& id, std::optional<int> max_n, int jobs, bool timings,
              const CommonOpts& opts, std::ostream& out) {
    std::vector<IdentityReport> reports;
    if (id == "all") {
        std::map<std::string, int> overrides;
        if (max_n)
            for (const auto& check : identity_registry()) overrides[check.id] = *max_n;
        reports = run_all(overrides, jobs);
    } else {
        reports.push_back(run_identity(id, max_n));
    }
    bool all_pass = true;
    std::ostringstream os;
    if (opts.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : reports) {
            all_pass = all_pass && r.pass;
            nlohmann::json j = report_to_json(r);
            if (!timings) j.erase("seconds");
            arr.push_back(j);
        }
        os << nlohmann::json{{"schema", kJsonSchema}, {"all_pass", all_pass}, {"reports", arr}}
                  .dump()
           << "\n";
    } else {
        for (const auto& r : reports) {
            all_pass = all_pass && r.pass;
            os << r.id << ": " << (r.pass ? "PASS" : "FAIL") << " (bound " << r.bound << ")";
            if (timings) {
                char buf[32];
                std::snprintf(buf, sizeof buf, " [%.3fs]", r.seconds);
                os << buf;
            }
            if (!r.pass) os << " counterexample: " << r.counterexample;
            if (!r.note.empty()) os << " -- " << r.note;
            os << "\n";
        }
        os << (all_pass ? "all checks passed\n" : "some checks FAILED\n");
    }
    emit(os.str(), opts.out_path, out);
    return all_pass ? 0 : 1;
}

int cmd_decompose(FamilyTag tag, int n, std::optional<int> k, const std::string& q_str,
                  const CommonOpts& opts, std::ostream& out) {
    Poly f = build_by_recurrence(tag, n, k);
    if (!q_str.empty()) {
        Rat q(q_str);
        q.canonicalize();
        f = f.substitute({{"q", Poly(q)}});
    }
    const int deg = f.degree_in("x");
    auto d = symmetric_decompose(f, deg, "x");
    auto rep = positivity_report(f, deg, "x");

    nlohmann::json j = {{"schema", kJsonSchema},
                        {"family", family_name(tag)},
                        {"n", n},
                        {"reference_degree", deg},
                        {"poly", f.to_string()},
                        {"a", d.a.to_string()},
                        {"b", d.b.to_string()},
                        {"flags",
                         {{"symmetric", rep.symmetric},
                          {"unimodal", rep.unimodal},
                          {"gamma_positive", rep.gamma_positive},
                          {"alternatingly_increasing", rep.alternatingly_increasing},
                          {"bi_gamma_positive", rep.bi_gamma_positive}}}};
    if (k) j["k"] = *k;
    if (!q_str.empty()) j["q"] = q_str;
    auto gamma_strings = [](const Poly& part, int degree) {
        nlohmann::json arr = nlohmann::json::array();
        if (part.is_zero()) return arr;
        for (const auto& g : gamma_expand(part, degree, "x")) arr.push_back(g.to_string());
        return arr;
    };
    j["a_gammas"] = gamma_strings(d.a, deg);
    j["b_gammas"] = gamma_strings(d.b, deg - 1);

    std::ostringstream os;
    os << j.dump() << "\n";
    emit(os.str(), opts.out_path, out);
    return 0;
}

int cmd_grammar(const std::string& spec_path, const std::string& start, int steps,
                const std::vector<std::string>& sets, const CommonOpts& opts, std::ostream& out) {
    Grammar g = load_grammar_file(spec_path);
    Poly seed = parse_poly(start);
    std::map<VarName, Poly> bindings;
    for (const auto& s : sets) {
        auto eq = s.find('=');
        if (eq == std::string::npos) throw Error("--set expects var=poly, got '" + s + "'");
        bindings[s.substr(0, eq)] = parse_poly(s.substr(eq + 1));
    }
    Poly result = bindings.empty() ? derive_n(g, seed, steps)
                                   : derive_then_substitute(g, seed, steps, bindings);
    std::ostringstream os;
    if (opts.format == "json")
        os << nlohmann::json{{"schema", kJsonSchema},
                             {"start", start},
                             {"steps", steps},
                             {"poly", poly_to_json(result)}}
                  .dump()
           << "\n";
    else
        os << result.to_string() << "\n";
    emit(os.str(), opts.out_path, out);
    return 0;
}

template <class T>
std::string object_text(const std::vector<T>& values) {
    std::ostringstream os;
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) os << " ";
        os << values[i];
    }
    return os.str();
}

using PermField = std::pair<const char*, std::function<int(const PermStatRecord&)>>;
const std::vector<PermField>& perm_fields() {
    static const std::vector<PermField> fs = {
        {"des", [](const PermStatRecord& r) { return r.des; }},
        {"asc", [](const PermStatRecord& r) { return r.asc; }},
        {"des_star", [](const PermStatRecord& r) { return r.des_star; }},
        {"asc_star", [](const PermStatRecord& r) { return r.asc_star; }},
        {"exc", [](const PermStatRecord& r) { return r.exc; }},
        {"drop", [](const PermStatRecord& r) { return r.drop; }},
        {"fix", [](const PermStatRecord& r) { return r.fix; }},
        {"cyc", [](const PermStatRecord& r) { return r.cyc; }},
        {"lrmin", [](const PermStatRecord& r) { return r.lrmin; }},
        {"rlmin", [](const PermStatRecord& r) { return r.rlmin; }},
        {"lrmax", [](const PermStatRecord& r) { return r.lrmax; }},
        {"rlmax", [](const PermStatRecord& r) { return r.rlmax; }},
        {"pk", [](const PermStatRecord& r) { return r.pk; }},
        {"val", [](const PermStatRecord& r) { return r.val; }},
        {"dasc", [](const PermStatRecord& r) { return r.dasc; }},
        {"ddes", [](const PermStatRecord& r) { return r.ddes; }},
        {"pasc", [](const PermStatRecord& r) { return r.pasc; }},
        {"pdes", [](const PermStatRecord& r) { return r.pdes; }},
        {"impasc", [](const PermStatRecord& r) { return r.impasc; }},
        {"impdes", [](const PermStatRecord& r) { return r.impdes; }},
        {"pasc_hat", [](const PermStatRecord& r) { return r.pasc_hat; }},
        {"impasc_hat", [](const PermStatRecord& r) { return r.impasc_hat; }},
    };
    return fs;
}

using WordField = std::pair<const char*, std::function<int(const StirlingStatRecord&)>>;
const std::vector<WordField>& word_fields() {
    static const std::vector<WordField> fs = {
        {"ap", [](const StirlingStatRecord& r) { return r.ap; }},
        {"lap", [](const StirlingStatRecord& r) { return r.lap; }},
        {"ap2", [](const StirlingStatRecord& r) { return r.ap2; }},
        {"plap", [](const StirlingStatRecord& r) { return r.plap; }},
        {"implap", [](const StirlingStatRecord& r) { return r.implap; }},
        {"lrmin", [](const StirlingStatRecord& r) { return r.lrmin; }},
        {"rlmin", [](const StirlingStatRecord& r) { return r.rlmin; }},
    };
    return fs;
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) out.push_back(item);
    return out;
}

int cmd_enumerate(const std::string& type, int n, int k, bool with_stats,
                  const std::string& fields_csv, long long max_objects, const CommonOpts& opts,
                  std::ostream& out) {
    std::ostringstream os;
    if (type == "perm") {
        std::vector<std::string> names =
            fields_csv.empty()
                ? std::vector<std::string>{"des", "asc", "exc", "drop", "fix", "cyc", "lrmin", "rlmin"}
                : split_csv(fields_csv);
        std::vector<std::function<int(const PermStatRecord&)>> getters;
        for (const auto& name : names) {
            bool found = false;
            for (const auto& [fname, fn] : perm_fields())
                if (name == fname) {
                    getters.push_back(fn);
                    found = true;
                }
            if (!found) throw Error("unknown permutation statistic '" + name + "'");
        }
        if (with_stats) {
            os << "object";
            for (const auto& name : names) os << "," << name;
            os << "\n";
        }
        int guard = std::max(n, kDefaultPermGuard);
        if (perm_count(n) > Int(static_cast<long>(max_objects)))
            throw GuardError("would enumerate " + perm_count(n).get_str() +
                             " permutations; raise the guard with --max-objects");
        for_each_perm(n, [&](const Perm& p) {
            os << object_text(p.v);
            if (with_stats) {
                auto r = perm_stats(p);
                for (const auto& g : getters) os << "," << g(r);
            }
            os << "\n";
        }, guard);
    } else if (type == "signed") {
        if (signed_perm_count(n) > Int(static_cast<long>(max_objects)))
            throw GuardError("would enumerate " + signed_perm_count(n).get_str() +
                             " signed permutations; raise the guard with --max-objects");
        if (with_stats) os << "object,des_B\n";
        for_each_signed_perm(n, [&](const SignedPerm& s) {
            os << object_text(s.v);
            if (with_stats) os << "," << signed_stats(s).des_B;
            os << "\n";
        }, std::max(n, kDefaultSignedGuard));
    } else if (type == "stirling") {
        std::vector<std::string> names;
        if (fields_csv.empty())
            for (const auto& [fname, fn] : word_fields()) names.push_back(fname);
        else
            names = split_csv(fields_csv);
        std::vector<std::function<int(const StirlingStatRecord&)>> getters;
        for (const auto& name : names) {
            bool found = false;
            for (const auto& [fname, fn] : word_fields())
                if (name == fname) {
                    getters.push_back(fn);
                    found = true;
                }
            if (!found) throw Error("unknown word statistic '" + name + "'");
        }
        if (with_stats) {
            os << "object";
            for (const auto& name : names) os << "," << name;
            os << "\n";
        }
        for_each_stirling(n, k, [&](const StirlingWord& w) {
            os << object_text(w.w);
            if (with_stats) {
                auto r = stirling_stats(w);
                for (const auto& g : getters) os << "," << g(r);
            }
            os << "\n";
        }, max_objects);
    } else {
        throw Error("unknown enumeration type '" + type + "'; expected perm|signed|stirling");
    }
    emit(os.str(), opts.out_path, out);
    return 0;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact workbench for Euler-Stirling statistics on permutations and "
                 "Stirling permutations"};
    app.require_subcommand(1);

    CommonOpts opts;

    // table
    auto* table = app.add_subcommand("table", "print a polynomial family member or coefficient table");
    std::string t_family, t_route = "rec";
    int t_n = 0;
    int t_k = -1;
    table->add_option("--family", t_family, "family tag")->required();
    table->add_option("--n", t_n, "index n")->required();
    table->add_option("--k", t_k, "parameter k (symbolic when omitted)");
    table->add_option("--route", t_route, "enum|rec|grammar (default rec)");
    table->add_option("--format", opts.format, "text|json");
    table->add_option("--out", opts.out_path, "write output to a file");

    // check
    auto* check = app.add_subcommand("check", "run identity checks");
    std::string c_id;
    int c_max_n = -1, c_jobs = default_jobs();
    bool c_timings = false;
    check->add_option("--identity", c_id, "identity id or 'all'")->required();
    check->add_option("--max-n", c_max_n, "override the size bound");
    check->add_option("--jobs", c_jobs, "parallel checkers (default STIRLING_LAB_JOBS or 1)");
    check->add_flag("--timings", c_timings, "include wall times (output no longer byte-stable)");
    check->add_option("--format", opts.format, "text|json");
    check->add_option("--out", opts.out_path, "write output to a file");

    // decompose
    auto* dec = app.add_subcommand("decompose", "symmetric decomposition, gamma vectors and flags");
    std::string d_family, d_q;
    int d_n = 0, d_k = -1;
    dec->add_option("--family", d_family, "family tag")->required();
    dec->add_option("--n", d_n, "index n")->required();
    dec->add_option("--k", d_k, "parameter k");
    dec->add_option("--q", d_q, "rational value substituted for q (e.g. 3/2)");
    dec->add_option("--out", opts.out_path, "write output to a file");

    // grammar
    auto* gram = app.add_subcommand("grammar", "iterate a formal derivative");
    std::string g_spec, g_start;
    int g_steps = 0;
    std::vector<std::string> g_sets;
    gram->add_option("--spec", g_spec, "rule file (.gram)")->required();
    gram->add_option("--start", g_start, "seed polynomial expression")->required();
    gram->add_option("--steps", g_steps, "number of derivative steps")->required();
    gram->add_option("--set", g_sets, "substitution var=poly applied after deriving");
    gram->add_option("--format", opts.format, "text|json");
    gram->add_option("--out", opts.out_path, "write output to a file");

    // enumerate
    auto* en = app.add_subcommand("enumerate", "dump combinatorial objects, optionally with statistics");
    std::string e_type, e_fields;
    int e_n = 0, e_k = 2;
    bool e_stats = false;
    long long e_max = kDefaultStirlingGuard;
    en->add_option("--type", e_type, "perm|signed|stirling")->required();
    en->add_option("--n", e_n, "size n")->required();
    en->add_option("--k", e_k, "letter multiplicity for stirling (default 2)");
    en->add_flag("--stats", e_stats, "append statistics as CSV");
    en->add_option("--fields", e_fields, "comma-separated statistic names");
    en->add_option("--max-objects", e_max, "enumeration guard override");
    en->add_option("--out", opts.out_path, "write output to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (*table)
            return cmd_table(parse_family(t_family), t_n,
                             t_k >= 0 ? std::optional<int>(t_k) : std::nullopt, t_route, opts, out);
        if (*check)
            return cmd_check(c_id, c_max_n >= 0 ? std::optional<int>(c_max_n) : std::nullopt,
                             c_jobs, c_timings, opts, out);
        if (*dec)
            return cmd_decompose(parse_family(d_family), d_n,
                                 d_k >= 0 ? std::optional<int>(d_k) : std::nullopt, d_q, opts, out);
        if (*gram) return cmd_grammar(g_spec, g_start, g_steps, g_sets, opts, out);
        if (*en) return cmd_enumerate(e_type, e_n, e_k, e_stats, e_fields, e_max, opts, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

} // namespace stirlab::cli
