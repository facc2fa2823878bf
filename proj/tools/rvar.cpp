#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rvar/bounds.hpp"
#include "rvar/canonical.hpp"
#include "rvar/constructions.hpp"
#include "rvar/enumerate.hpp"
#include "rvar/errors.hpp"
#include "rvar/graph.hpp"
#include "rvar/indices.hpp"

using nlohmann::json;

namespace {

std::string decimal(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12f", x);
    return buf;
}

json rational_json(const rvar::Rational& r) {
    return json{{"num", r.num()}, {"den", r.den()}};
}

int default_workers() {
    if (const char* env = std::getenv("RVAR_WORKERS")) {
        char* end = nullptr;
        long w = std::strtol(env, &end, 10);
        if (end && *end == '\0' && w >= 1 && w <= 1024) return int(w);
    }
    return 1;
}

rvar::Graph parse_graph(const std::string& text, const std::string& format) {
    if (format == "edgelist") return rvar::from_edge_list(text);
    return rvar::from_graph6(text);
}

std::string serialize_graph(const rvar::Graph& g, const std::string& format) {
    if (format == "edgelist") return rvar::to_edge_list(g);
    return rvar::to_graph6(g);
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw rvar::input_error("cannot open " + path + " for writing");
    out << text;
}

struct ComputeArgs {
    std::string input = "-";
    std::string index = "rprime";
    std::string format = "graph6";
    double alpha = 0.0;
    bool have_alpha = false;
    bool decimal_out = false;
};

int cmd_compute(const ComputeArgs& a) {
    if (a.index == "general" && !a.have_alpha)
        throw rvar::input_error("--alpha is required with --index general");
    std::ifstream file;
    if (a.input != "-") {
        file.open(a.input);
        if (!file) throw rvar::input_error("cannot open " + a.input);
    }
    std::istream& in = a.input == "-" ? std::cin : file;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        rvar::Graph g(1);
        try {
            g = parse_graph(line, a.format);
        } catch (const std::exception& e) {
            std::cerr << "line " << line_no << ": " << e.what() << "\n";
            return 2;
        }
        if (a.index == "rprime") {
            rvar::Rational r = rvar::variation_randic(g);
            std::cout << (a.decimal_out ? decimal(r.to_double()) : r.str()) << "\n";
        } else if (a.index == "randic") {
            std::cout << decimal(rvar::randic(g)) << "\n";
        } else {
            std::cout << decimal(rvar::general_randic(g, a.alpha)) << "\n";
        }
    }
    return 0;
}

struct ConstructArgs {
    std::string family;
    int n = 0, p = 0, k = 0, d = 0, m = -1;
    std::string format = "graph6";
    std::string output;
};

int cmd_construct(const ConstructArgs& a) {
    rvar::Graph g(1);
    if (a.family == "complete_split") {
        g = rvar::complete_split(a.n, a.k);
    } else if (a.family == "kn_minus_regular") {
        g = rvar::kn_minus_regular(a.n, a.p, a.k);
    } else if (a.family == "kn_minus_two_regular") {
        if (a.m < 0) throw rvar::input_error("--family kn_minus_two_regular needs --m");
        g = rvar::kn_minus_two_regular(a.n, a.p, a.k, a.m);
    } else if (a.family == "regular") {
        g = rvar::regular_graph(a.p, a.d);
    } else {
        throw rvar::input_error("unknown family: " + a.family);
    }
    std::string text = serialize_graph(g, a.format) + "\n";
    if (a.output.empty())
        std::cout << text;
    else
        write_text(a.output, text);
    return 0;
}

std::string describe_params(const rvar::FamilyParams& p) {
    std::ostringstream out;
    out << "n=" << p.n << " p=" << p.p << " k=" << p.k;
    if (p.m) out << " m=" << *p.m;
    return out.str();
}

int cmd_bound(int n, int k, int m) {
    rvar::BoundResult b =
        m < 0 ? rvar::min_variation_bound(n, k) : rvar::min_variation_bound(n, k, m);
    std::cout << "bound " << b.value.str() << " = " << decimal(b.value.to_double()) << "\n";
    std::cout << "regime " << (b.regime == rvar::Regime::split ? "split" : "half") << "\n";
    std::cout << "extremal " << b.extremal.family << " " << describe_params(b.extremal.params)
              << (b.extremal.parity_feasible ? "" : " (parity infeasible)") << "\n";
    return 0;
}

int cmd_certify(int n, int k) {
    json minors = json::array();
    for (int j = 1; j <= n - k - 1; ++j) {
        rvar::Rational d = rvar::hessian_minor(n, k, j);
        minors.push_back({{"j", j}, {"num", d.num()}, {"den", d.den()}});
    }
    json residuals = json::array();
    std::vector<rvar::Rational> rs = rvar::stationarity_residuals(n, k);
    for (size_t t = 0; t < rs.size(); ++t)
        residuals.push_back({{"i", k + int(t)}, {"num", rs[t].num()}, {"den", rs[t].den()}});
    rvar::GapProductMax pm = rvar::product_term_max(n, k);
    json out{{"n", n},
             {"k", k},
             {"product_term_max", rational_json(pm.value)},
             {"hessian_minors", minors},
             {"stationarity_residuals", residuals}};
    std::cout << out.dump(2) << "\n";
    return 0;
}

json spec_json(const rvar::SearchSpec& s) {
    json j{{"n", s.n},
           {"k_min", s.k_min},
           {"connected_only", s.connected_only},
           {"exact_min_degree", s.exact_min_degree},
           {"time_limit_seconds", s.time_limit_seconds},
           {"workers", s.workers}};
    j["m_max"] = s.m_max ? json(*s.m_max) : json(nullptr);
    j["budget"] = s.budget ? json(*s.budget) : json(nullptr);
    return j;
}

json report_json(const rvar::SearchReport& r) {
    json j;
    j["spec"] = spec_json(r.spec);
    j["bound"] = r.bound_comparison.applicable ? rational_json(r.bound_comparison.bound)
                                               : json(nullptr);
    j["minimum"] = r.empty ? json(nullptr) : rational_json(r.minimum);
    j["minimizers"] = r.minimizers;
    j["equal"] = r.bound_comparison.equal;
    j["partial"] = r.partial;
    j["class_size"] = r.class_size;
    j["labeled_explored"] = r.labeled_explored;
    j["elapsed_seconds"] = r.elapsed_seconds;
    return j;
}

struct SearchArgs {
    int n = 0, k = 0, m = -1;
    bool exact = false;
    int workers = 0;
    long long budget = -1;
    double time_limit = 0.0;
    std::string emit_minimizers;
    std::string report;
};

rvar::SearchSpec make_spec(const SearchArgs& a) {
    rvar::SearchSpec spec;
    spec.n = a.n;
    spec.k_min = a.k;
    if (a.m >= 0) spec.m_max = a.m;
    spec.exact_min_degree = a.exact;
    spec.workers = a.workers > 0 ? a.workers : default_workers();
    if (a.budget >= 0) spec.budget = a.budget;
    spec.time_limit_seconds = a.time_limit;
    return spec;
}

int cmd_search(const SearchArgs& a) {
    rvar::SearchReport r = rvar::min_variation(make_spec(a));
    std::cout << "class_size " << r.class_size << "\n";
    std::cout << "labeled_explored " << r.labeled_explored << "\n";
    if (r.empty) {
        std::cout << "class empty\n";
    } else {
        std::cout << "minimum " << r.minimum.str() << " = " << decimal(r.minimum.to_double())
                  << "\n";
        std::cout << "minimizers " << r.minimizers.size() << "\n";
    }
    if (r.bound_comparison.applicable)
        std::cout << "bound " << r.bound_comparison.bound.str()
                  << (r.bound_comparison.equal ? " (attained)" : " (not attained)") << "\n";
    if (r.partial) std::cout << "partial run: stopped at budget or time limit\n";

    if (!a.emit_minimizers.empty()) {
        std::string lines;
        for (const auto& g6 : r.minimizers) lines += g6 + "\n";
        write_text(a.emit_minimizers, lines);
    }
    if (!a.report.empty()) write_text(a.report, report_json(r).dump(2) + "\n");

    bool mismatch = false;
    if (!r.partial && !r.empty && r.bound_comparison.applicable) {
        if (r.minimum < r.bound_comparison.bound) mismatch = true;
        rvar::BoundResult b = a.m >= 0 ? rvar::min_variation_bound(a.n, a.k, a.m)
                                       : rvar::min_variation_bound(a.n, a.k);
        if (b.extremal.parity_feasible && !r.bound_comparison.equal) mismatch = true;
    }
    return mismatch ? 1 : 0;
}

struct ConjectureArgs {
    int n = 0, k = 0;
    int workers = 0;
    long long budget = -1;
    double time_limit = 0.0;
    std::string report;
};

int cmd_conjecture(const ConjectureArgs& a) {
    rvar::ProbeOptions opt;
    opt.workers = a.workers > 0 ? a.workers : default_workers();
    if (a.budget >= 0) opt.budget = a.budget;
    opt.time_limit_seconds = a.time_limit;
    rvar::ConjectureProbe pr = rvar::probe_conjecture(a.n, a.k, opt);

    json out{{"n", pr.n},
             {"k", pr.k},
             {"theorem_regime", pr.theorem_regime},
             {"p_values", pr.p_values},
             {"conjectured", rational_json(pr.conjectured)},
             {"minimum_matches", pr.minimum_matches},
             {"minimizers_in_family", pr.minimizers_in_family},
             {"search", report_json(pr.search)}};
    std::cout << out.dump(2) << "\n";
    if (!a.report.empty()) write_text(a.report, out.dump(2) + "\n");
    return !pr.search.partial && !pr.minimum_matches ? 1 : 0;
}

struct VerifyArgs {
    int n_from = 0, n_to = 0;
    int k_from = 1, k_to = 0;  // k_to = 0 means n-2 per row
    int m = -1;
    bool search = false;
    int workers = 0;
    std::string output;
};

std::optional<rvar::Graph> build_extremal(const rvar::ExtremalDescriptor& d) {
    if (!d.parity_feasible) return std::nullopt;
    const rvar::FamilyParams& p = d.params;
    if (d.family == "complete_split") return rvar::complete_split(p.n, p.k);
    if (d.family == "kn_minus_regular") return rvar::kn_minus_regular(p.n, p.p, p.k);
    return rvar::kn_minus_two_regular(p.n, p.p, p.k, *p.m);
}

int cmd_verify(const VerifyArgs& a) {
    const int order_cap = a.search ? rvar::kMaxSearchOrder : 14;
    if (a.n_from < 2 || a.n_from > a.n_to || a.n_to > order_cap)
        throw rvar::input_error("order range must sit within 2.." + std::to_string(order_cap));
    const int workers = a.workers > 0 ? a.workers : default_workers();

    std::ofstream file;
    if (!a.output.empty()) {
        file.open(a.output);
        if (!file) throw rvar::input_error("cannot open " + a.output);
    }
    std::ostream& os = a.output.empty() ? static_cast<std::ostream&>(std::cout) : file;

    os << "n,k,m,bound,constructed,equal,parity_feasible";
    if (a.search) os << ",search_min,search_unique";
    os << "\n";

    bool mismatch = false;
    for (int n = a.n_from; n <= a.n_to; ++n) {
        const int k_hi = std::min(a.k_to > 0 ? a.k_to : n - 2, n - 2);
        for (int k = std::max(1, a.k_from); k <= k_hi; ++k) {
            const int m = a.m < 0 ? n - 1 : a.m;
            if (m < k) continue;
            os << n << "," << k << "," << m << ",";
            rvar::BoundResult b;
            try {
                b = rvar::min_variation_bound(n, k, m);
            } catch (const rvar::regime_error&) {
                os << "-,-,false,false";
                if (a.search) os << ",-,-";
                os << "\n" << std::flush;
                continue;
            }
            os << b.value.fraction_str() << ",";
            std::optional<rvar::Graph> g = build_extremal(b.extremal);
            bool equal = false;
            if (g) {
                rvar::Rational got = rvar::variation_randic(*g);
                equal = got == b.value;
                os << got.fraction_str() << ",";
                if (!equal) mismatch = true;
            } else {
                os << "-,";
            }
            os << (equal ? "true" : "false") << ","
               << (b.extremal.parity_feasible ? "true" : "false");
            if (a.search) {
                rvar::SearchSpec spec;
                spec.n = n;
                spec.k_min = k;
                if (a.m >= 0) spec.m_max = a.m;
                spec.workers = workers;
                rvar::SearchReport r = rvar::min_variation(spec);
                if (r.empty) {
                    os << ",-,-";
                } else {
                    os << "," << r.minimum.fraction_str() << ","
                       << (r.minimizers.size() == 1 ? "true" : "false");
                    if (r.minimum < b.value) mismatch = true;
                    if (b.extremal.parity_feasible && r.minimum != b.value) mismatch = true;
                }
            }
            os << "\n" << std::flush;
        }
    }
    return mismatch ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"variation of the Randic index: exact values, bounds, extremal families, search"};
    app.require_subcommand(1);

    ComputeArgs ca;
    CLI::App* compute = app.add_subcommand("compute", "evaluate an index, one graph per line");
    compute->add_option("input", ca.input, "input file of graphs, - for stdin");
    compute->add_option("--index", ca.index, "rprime, randic, or general")
        ->check(CLI::IsMember({"rprime", "randic", "general"}));
    compute->add_option("--format", ca.format, "graph6 or edgelist")
        ->check(CLI::IsMember({"graph6", "edgelist"}));
    CLI::Option* alpha_opt = compute->add_option("--alpha", ca.alpha, "exponent for general");
    compute->add_flag("--decimal", ca.decimal_out, "print rprime as decimal too");

    ConstructArgs na;
    CLI::App* construct = app.add_subcommand("construct", "emit a member of an extremal family");
    construct->add_option("--family", na.family,
                          "complete_split, kn_minus_regular, kn_minus_two_regular, regular")
        ->required();
    construct->add_option("--n", na.n, "order");
    construct->add_option("--p", na.p, "gadget order / regular graph order");
    construct->add_option("--k", na.k, "minimum degree");
    construct->add_option("--d", na.d, "regular graph degree");
    construct->add_option("--m", na.m, "maximum degree");
    construct->add_option("--format", na.format, "graph6 or edgelist")
        ->check(CLI::IsMember({"graph6", "edgelist"}));
    construct->add_option("--output", na.output, "write here instead of stdout");

    int bn = 0, bk = 0, bm = -1;
    CLI::App* bound = app.add_subcommand("bound", "closed-form lower bound and extremal profile");
    bound->add_option("--n", bn, "order")->required();
    bound->add_option("--k", bk, "minimum degree")->required();
    bound->add_option("--m", bm, "maximum degree cap");

    int cn = 0, ck = 0;
    CLI::App* certify = app.add_subcommand(
        "certify", "Hessian minors and stationarity residuals for n/2 <= k");
    certify->add_option("--n", cn, "order")->required();
    certify->add_option("--k", ck, "minimum degree")->required();

    SearchArgs sa;
    CLI::App* search = app.add_subcommand("search", "exhaustive minimum over a degree class");
    search->add_option("--n", sa.n, "order")->required();
    search->add_option("--k", sa.k, "minimum degree")->required();
    search->add_option("--m", sa.m, "maximum degree cap");
    search->add_flag("--exact-min-degree", sa.exact, "minimum degree exactly k");
    search->add_option("--workers", sa.workers, "worker threads (default RVAR_WORKERS or 1)");
    search->add_option("--budget", sa.budget, "cap on labeled graphs examined");
    search->add_option("--time-limit", sa.time_limit, "wall-clock cap in seconds");
    search->add_option("--emit-minimizers", sa.emit_minimizers, "write minimizers as graph6 lines");
    search->add_option("--report", sa.report, "write JSON report here");

    ConjectureArgs ja;
    CLI::App* conjecture = app.add_subcommand("conjecture", "probe the conjectured bound");
    conjecture->add_option("--n", ja.n, "order")->required();
    conjecture->add_option("--k", ja.k, "minimum degree")->required();
    conjecture->add_option("--workers", ja.workers, "worker threads");
    conjecture->add_option("--budget", ja.budget, "cap on labeled graphs examined");
    conjecture->add_option("--time-limit", ja.time_limit, "wall-clock cap in seconds");
    conjecture->add_option("--report", ja.report, "write JSON report here");

    VerifyArgs va;
    CLI::App* verify = app.add_subcommand("verify", "CSV tightness table over (n,k) ranges");
    verify->add_option("--n-from", va.n_from, "first order")->required();
    verify->add_option("--n-to", va.n_to, "last order")->required();
    verify->add_option("--k-from", va.k_from, "first minimum degree");
    verify->add_option("--k-to", va.k_to, "last minimum degree (default n-2 per row)");
    verify->add_option("--m", va.m, "maximum degree cap");
    verify->add_flag("--search", va.search, "back each row with an exhaustive search");
    verify->add_option("--workers", va.workers, "worker threads for search-backed rows");
    verify->add_option("--output", va.output, "write the CSV here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    ca.have_alpha = alpha_opt->count() > 0;
    try {
        if (compute->parsed()) return cmd_compute(ca);
        if (construct->parsed()) return cmd_construct(na);
        if (bound->parsed()) return cmd_bound(bn, bk, bm);
        if (certify->parsed()) return cmd_certify(cn, ck);
        if (search->parsed()) return cmd_search(sa);
        if (conjecture->parsed()) return cmd_conjecture(ja);
        if (verify->parsed()) return cmd_verify(va);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
