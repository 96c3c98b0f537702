// Command-line front end.

#include <CLI11.hpp>

#include <array>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "totpos/json_io.hpp"
#include "totpos/totpos.hpp"

namespace {

using totpos::json::Json;

constexpr int kHolds = 0;
constexpr int kFails = 1;
constexpr int kUsage = 2;

struct Options {
    std::string file;
    std::string method;
    std::string diagram;
    std::string scheme;
    std::string emit_product;
    std::string criterion = "all";
    std::string format = "text";
    std::string word;
    std::string seed;
    std::string report;
    int guard = 0;  // 0: per-command default
    int n = 3;
    std::size_t terms = 11;
    std::size_t scale = 1;
    bool enumerate = false;
    bool symbolic = false;
};

bool json_report(const Options& o) { return o.report == "json"; }

int guard_or(const Options& o, int fallback) { return o.guard > 0 ? o.guard : fallback; }

void print(const Json& j) { std::cout << j.dump(2) << '\n'; }

int emit_check(const Options& o, const std::string& what, const totpos::CheckReport& r) {
    if (json_report(o)) {
        print(totpos::json::to_json(r));
    } else {
        std::cout << what << ": " << (r.verdict ? "holds" : "fails") << " (" << r.minors_checked << " minors checked)\n";
        for (const auto& w : r.witnesses) std::cout << "  " << totpos::to_string(w.minor) << " = " << w.value << '\n';
    }
    return r.verdict ? kHolds : kFails;
}

int cmd_test(const Options& o) {
    const auto x = totpos::json::read_matrix(o.file);
    const int n = static_cast<int>(x.size());
    if (o.method == "initial") return emit_check(o, "initial minors positive", totpos::initial_minors_report(x));
    if (o.method == "fekete") return emit_check(o, "solid minors positive", totpos::fekete_solid_report(x));
    if (o.method == "brute") return emit_check(o, "totally positive", totpos::tp_bruteforce(x, guard_or(o, totpos::default_guard)));
    const auto d = o.diagram.empty() ? totpos::lex_minimal(n) : totpos::DoubleWiringDiagram::parse(o.diagram, n);
    return emit_check(o, "chamber minors positive", totpos::chamber_minors_report(x, d));
}

int cmd_tnn(const Options& o) {
    const auto x = totpos::json::read_matrix(o.file);
    if (o.method == "brute") return emit_check(o, "totally nonnegative", totpos::tnn_bruteforce(x, guard_or(o, totpos::default_guard)));
    return emit_check(o, "totally nonnegative", totpos::tnn_efficient(x));
}

int cmd_oscillatory(const Options& o) {
    const auto x = totpos::json::read_matrix(o.file);
    using C = totpos::OscillatoryCriterion;
    std::vector<std::pair<std::string, C>> crit;
    if (o.criterion == "all" || o.criterion == "b") crit.emplace_back("b", C::Adjacent);
    if (o.criterion == "all" || o.criterion == "c") crit.emplace_back("c", C::Power);
    if (o.criterion == "all" || o.criterion == "d") crit.emplace_back("d", C::Irreducible);
    Json j;
    bool verdict = true, first = true, agree = true;
    for (const auto& [name, c] : crit) {
        bool v = false;
        try {
            v = totpos::is_oscillatory(x, c, guard_or(o, totpos::default_guard));
        } catch (const totpos::PositivityViolation& e) {
            throw totpos::InvalidArgument(e.what());
        }
        if (!first && v != verdict) agree = false;
        verdict = first ? v : verdict && v;
        first = false;
        j[name] = v;
    }
    if (json_report(o)) {
        print(Json{{"verdict", verdict}, {"criteria", j}, {"agree", agree}});
    } else {
        std::cout << "oscillatory: " << (verdict ? "yes" : "no");
        for (auto it = j.begin(); it != j.end(); ++it) std::cout << "  " << it.key() << "=" << (it.value().get<bool>() ? "yes" : "no");
        std::cout << '\n';
    }
    return verdict ? kHolds : kFails;
}

int cmd_type(const Options& o) {
    const auto x = totpos::json::read_matrix(o.file);
    const auto t = totpos::bruhat_type(x);
    if (json_report(o)) print(Json{{"u", t.u.images()}, {"v", t.v.images()}});
    else std::cout << "u = " << t.u.str() << "\nv = " << t.v.str() << '\n';
    return kHolds;
}

int cmd_factor(const Options& o) {
    const auto x = totpos::json::read_matrix(o.file);
    const int n = static_cast<int>(x.size());
    const auto scheme = o.scheme.empty() ? totpos::i_max(n) : totpos::Word::parse(o.scheme, n);
    std::vector<totpos::Scalar> t;
    try {
        t = totpos::factor_scheme(x, scheme);
    } catch (const totpos::PositivityViolation& e) {
        std::cerr << e.what() << '\n';
        return kFails;
    }
    if (!o.emit_product.empty()) {
        std::ofstream out(o.emit_product);
        out << totpos::json::to_json(totpos::product_map(scheme, t)).dump(2) << '\n';
    }
    if (json_report(o)) {
        Json params = Json::array();
        for (const auto& v : t) params.push_back(v.str());
        print(Json{{"scheme", scheme.str()}, {"params", params}});
    } else {
        for (std::size_t k = 0; k < t.size(); ++k) std::cout << totpos::to_string(scheme[k]) << '\t' << t[k] << '\n';
    }
    return kHolds;
}

int cmd_twist(const Options& o) {
    const auto x = totpos::json::read_matrix(o.file);
    try {
        const auto y = totpos::twist(x);
        if (json_report(o)) print(totpos::json::to_json(y));
        else std::cout << y << '\n';
    } catch (const totpos::PositivityViolation& e) {
        std::cerr << e.what() << '\n';
        return kFails;
    }
    return kHolds;
}

Json diagram_json(const totpos::DoubleWiringDiagram& d) {
    Json ch = Json::array();
    for (const auto& c : totpos::chambers(d))
        ch.push_back(Json{{"height", c.height}, {"minor", totpos::to_string(c.minor)}, {"bounded", c.bounded}});
    return Json{{"word", d.str()}, {"chambers", ch}};
}

int cmd_diagrams(const Options& o) {
    if (!o.enumerate) {
        const auto d = o.word.empty() ? totpos::lex_minimal(o.n) : totpos::DoubleWiringDiagram::parse(o.word, o.n);
        if (o.format == "json") {
            print(diagram_json(d));
        } else {
            std::cout << d.str() << '\n';
            for (const auto& c : totpos::chambers(d))
                std::cout << "  h" << c.height << "  " << totpos::to_string(c.minor) << (c.bounded ? "  bounded" : "") << '\n';
        }
        return kHolds;
    }
    const auto g = totpos::enumerate_phi(o.n, guard_or(o, 4));
    if (o.format == "dot") {
        std::cout << totpos::to_dot(g);
    } else if (o.format == "json") {
        Json vs = Json::array(), es = Json::array();
        for (const auto& v : g.vertices) {
            Json b = Json::array();
            for (const auto& s : v.bounded) b.push_back(totpos::to_string(s));
            vs.push_back(Json{{"word", v.representative.str()}, {"bounded", b}});
        }
        for (const auto& e : g.edges) es.push_back(Json{{"from", e.from}, {"to", e.to}});
        print(Json{{"n", g.n}, {"vertices", vs}, {"edges", es}});
    } else {
        std::cout << g.vertices.size() << " vertices, " << g.edges.size() << " edges\n";
    }
    return kHolds;
}

int cmd_network(const Options& o) {
    const auto net = totpos::json::read_network(o.file);
    const auto x = totpos::weight_matrix(net);
    if (json_report(o)) print(totpos::json::to_json(x));
    else std::cout << x << '\n';
    return kHolds;
}

int cmd_somos(const Options& o) {
    if (o.symbolic) {
        const auto terms = totpos::somos5_symbolic(o.terms, static_cast<std::size_t>(guard_or(o, static_cast<int>(totpos::somos_symbolic_guard))));
        bool all = true;
        Json arr = Json::array();
        for (const auto& t : terms) {
            all = all && t.nonnegative;
            if (json_report(o))
                arr.push_back(Json{{"index", t.index}, {"nonnegative", t.nonnegative}, {"terms", t.value.term_count()}, {"value", totpos::json::to_json(t.value)}});
            else
                std::cout << "a" << t.index << " = " << t.value << (t.nonnegative ? "" : "   [negative coefficient]") << '\n';
        }
        if (json_report(o)) print(Json{{"verdict", all}, {"terms", arr}});
        return all ? kHolds : kFails;
    }
    std::array<totpos::Scalar, 5> seed{1, 1, 1, 1, 1};
    if (!o.seed.empty()) {
        std::stringstream ss(o.seed);
        std::string part;
        std::size_t k = 0;
        while (std::getline(ss, part, ',')) {
            if (k >= 5) throw totpos::ParseError("--seed takes exactly five values");
            seed[k++] = totpos::Scalar::parse(part);
        }
        if (k != 5) throw totpos::ParseError("--seed takes exactly five values");
    }
    const auto a = totpos::somos5_numeric(seed, o.terms);
    if (json_report(o)) {
        Json arr = Json::array();
        for (const auto& v : a) arr.push_back(v.str());
        print(Json{{"terms", arr}});
    } else {
        for (std::size_t k = 0; k < a.size(); ++k) std::cout << "a" << k + 1 << " = " << a[k] << '\n';
    }
    return kHolds;
}

int cmd_selfcheck(const Options& o) {
    const auto results = totpos::selfcheck(o.scale);
    bool ok = true;
    Json arr = Json::array();
    for (const auto& r : results) {
        ok = ok && r.passed;
        if (json_report(o)) arr.push_back(Json{{"suite", r.name}, {"passed", r.passed}, {"cases", r.cases}, {"detail", r.detail}});
        else std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases)" << (r.detail.empty() ? "" : ": " + r.detail) << '\n';
    }
    if (json_report(o)) print(Json{{"verdict", ok}, {"suites", arr}});
    return ok ? kHolds : kFails;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact total-positivity toolkit"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--report", o.report, "Report format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--guard-n", o.guard, "Override the size guard of brute-force enumerations")->check(CLI::PositiveNumber);

    auto* test = app.add_subcommand("test", "Total positivity test");
    test->add_option("matrix", o.file, "Matrix JSON file ('-' for stdin)")->required();
    test->add_option("--method", o.method, "initial|chamber|fekete|brute")
        ->default_val("initial")
        ->check(CLI::IsMember({"initial", "chamber", "fekete", "brute"}));
    test->add_option("--diagram", o.diagram, "Diagram word for --method chamber");

    auto* tnn = app.add_subcommand("tnn", "Total nonnegativity test");
    tnn->add_option("matrix", o.file, "Matrix JSON file")->required();
    tnn->add_option("--method", o.method, "efficient|brute")->default_val("efficient")->check(CLI::IsMember({"efficient", "brute"}));

    auto* osc = app.add_subcommand("oscillatory", "Oscillation test for invertible TNN matrices");
    osc->add_option("matrix", o.file, "Matrix JSON file")->required();
    osc->add_option("--criterion", o.criterion, "b|c|d|all")->check(CLI::IsMember({"b", "c", "d", "all"}));

    auto* type = app.add_subcommand("type", "Double Bruhat cell of an invertible matrix");
    type->add_option("matrix", o.file, "Matrix JSON file")->required();

    auto* factor = app.add_subcommand("factor", "Factorization parameters of a totally positive matrix");
    factor->add_option("matrix", o.file, "Matrix JSON file")->required();
    factor->add_option("--scheme", o.scheme, "Factorization scheme word (default i_max)");
    factor->add_option("--emit-product", o.emit_product, "Write the reassembled product to this JSON file");

    auto* twist = app.add_subcommand("twist", "Twisted matrix x'");
    twist->add_option("matrix", o.file, "Matrix JSON file")->required();

    auto* diagrams = app.add_subcommand("diagrams", "Double wiring diagrams");
    diagrams->add_option("--n", o.n, "Matrix size")->check(CLI::PositiveNumber);
    diagrams->add_flag("--enumerate", o.enumerate, "Enumerate the move graph");
    diagrams->add_option("--format", o.format, "text|dot|json")->check(CLI::IsMember({"text", "dot", "json"}));
    diagrams->add_option("--word", o.word, "Diagram word to print");

    auto* network = app.add_subcommand("network", "Planar networks");
    network->require_subcommand(1);
    auto* eval = network->add_subcommand("eval", "Weight matrix of a network");
    eval->add_option("network", o.file, "Network JSON file")->required();

    auto* somos = app.add_subcommand("somos", "Somos-5 sequence");
    somos->add_option("--terms", o.terms, "Number of terms")->check(CLI::PositiveNumber);
    somos->add_flag("--symbolic", o.symbolic, "Laurent polynomials in a1..a5");
    somos->add_option("--seed", o.seed, "Five comma-separated rationals");

    auto* self = app.add_subcommand("selfcheck", "Cross-oracle property suites");
    self->add_option("--scale", o.scale, "Case-count multiplier")->check(CLI::PositiveNumber);

    for (auto* sub : {test, tnn, osc, type, factor, twist, diagrams, somos, self}) {
        sub->add_option("--report", o.report, "Report format")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--guard-n", o.guard, "Override the size guard of brute-force enumerations")->check(CLI::PositiveNumber);
    }
    eval->add_option("--report", o.report, "Report format")->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kUsage;
    }

    try {
        if (*test) return cmd_test(o);
        if (*tnn) return cmd_tnn(o);
        if (*osc) return cmd_oscillatory(o);
        if (*type) return cmd_type(o);
        if (*factor) return cmd_factor(o);
        if (*twist) return cmd_twist(o);
        if (*diagrams) return cmd_diagrams(o);
        if (*eval) return cmd_network(o);
        if (*somos) return cmd_somos(o);
        if (*self) return cmd_selfcheck(o);
    } catch (const totpos::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kUsage;
    } catch (const totpos::PositivityViolation& e) {
        std::cerr << e.what() << '\n';
        return kFails;
    } catch (const totpos::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
