#include "hcf/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hcf/engine.hpp"
#include "hcf/figures.hpp"
#include "hcf/regularizer.hpp"
#include "hcf/seqspec.hpp"
#include "hcf/stats.hpp"
#include "hcf/wordlab.hpp"

namespace hcf {

namespace {

// Inline JSON, or @path to read it from a file.
json read_json(const std::string& arg) {
    std::string text = arg;
    if (!arg.empty() && arg[0] == '@') {
        std::ifstream in(arg.substr(1));
        if (!in) fail(ErrorKind::Usage, "cannot read " + arg.substr(1));
        std::ostringstream os;
        os << in.rdbuf();
        text = os.str();
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        fail(ErrorKind::Usage, std::string("bad JSON: ") + e.what());
    }
}

Word read_word(const std::string& arg) {
    json j = read_json(arg);
    Word w = word_from_json(j);
    check_digits(w);
    return w;
}

json convergents_json(const Word& w) {
    json out = json::array();
    for (const auto& c : convergents(w)) out.push_back({{"n", c.n}, {"p", to_json(c.p)}, {"q", to_json(c.q)}});
    return out;
}

std::string sci(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", x);
    return buf;
}

// |x - p/q| bound 1/|q|^2 as a double, rounded up enough for reporting.
double inv_norm(const GaussianInt& q) { return 1.0 / q.norm().get_d(); }

int cmd_expand(std::ostream& out, const std::string& zs, size_t n, long d, long precision) {
    QuadComplex z = complex_from_json(read_json(zs));
    for (const QuadScalar* s : {&z.re(), &z.im()})
        if (!s->is_rational() && s->d() != d)
            fail(ErrorKind::FieldMismatch, "value lives in Q(sqrt " + std::to_string(s->d()) + "), session d = " + std::to_string(d));
    Expansion e = precision > 0 ? expand_certified(z, n, precision) : expand(z, n);
    json j{{"z", to_json(z)}, {"a0", to_json(e.a0)}, {"digits", word_json(e.digits)}, {"terminated", e.terminated},
           {"convergents", convergents_json(e.digits)}};
    if (precision > 0) j["precision"] = e.precision;
    const auto cv = convergents(e.digits);
    j["ball"] = ComplexBall::from_quad(z, precision > 0 ? precision : 128).to_json();
    j["error_bound"] = sci(inv_norm(cv.back().q));
    out << j.dump(2) << "\n";
    return 0;
}

int cmd_eval(std::ostream& out, const std::string& ws, const std::string& radius, bool mirror_sides) {
    json in = read_json(ws);
    DigitSeq seq = parse_sequence(in);
    json j;
    if (!radius.empty()) {
        mpq_class r = parse_rational(radius);
        size_t m = lambda_prefix_length(r);
        j["ball"] = lambda_bar(seq, r).to_json();
        j["prefix_length_bound"] = m;
    } else {
        if (!seq.finite()) fail(ErrorKind::Usage, "an infinite sequence needs --radius");
        Word w = seq.prefix(seq.size());
        check_digits(w);
        j["value"] = to_json(evaluate_finite(w));
        j["convergents"] = convergents_json(w);
        if (mirror_sides) {
            MirrorSides s = mirror(w);
            j["mirror"] = {{"lhs", to_json(s.lhs)}, {"rhs", to_json(s.rhs)}, {"equal", s.lhs == s.rhs}};
        }
    }
    out << j.dump(2) << "\n";
    return 0;
}

json states_json(const std::vector<int>& st) {
    json a = json::array();
    for (int s : st) a.push_back(PrototypeState{s}.name());
    return a;
}

int cmd_classify(std::ostream& out, const std::string& ws) {
    Word w = read_word(ws);
    Classification c = classify_report(w);
    json j{{"word", word_json(w)}, {"tag", class_name(c.tag)}, {"regular_len", c.regular_len}, {"states", states_json(c.states)}};
    if (c.prototype) j["prototype"] = region_json(*c.prototype);
    out << j.dump(2) << "\n";
    return 0;
}

int cmd_cylinder(std::ostream& out, const std::string& ws, bool svg) {
    Word w = read_word(ws);
    Region proto = prototype_region(w), cyl = cylinder_region(w);
    if (svg) {
        out << emit_svg(std::vector<std::vector<std::pair<Region, Style>>>{
            {{cyl, Style{"#9ecae1", "#08519c", "cylinder " + word_str(w)}}},
            {{proto, Style{"#fdd0a2", "#a63603", "prototype"}}},
        });
        return 0;
    }
    out << json{{"word", word_json(w)}, {"cylinder", region_json(cyl)}, {"prototype", region_json(proto)}}.dump(2) << "\n";
    return 0;
}

int cmd_graph(std::ostream& out, const std::string& format) {
    const auto& g = SoficGraph::instance();
    if (format == "text")
        out << g.export_text();
    else
        out << g.export_json().dump(2) << "\n";
    return 0;
}

int cmd_regularize(std::ostream& out, const std::string& ws, size_t out_len, size_t slack, bool trace) {
    DigitSeq a = parse_sequence(read_json(ws));
    RegularizeResult r = regularize_report(a, out_len, slack);
    if (trace)
        for (const auto& line : r.trace) out << line.dump() << "\n";
    json j{{"input_class", class_name(r.input_class)}, {"digits", word_json(r.digits)}, {"iterations", r.state.N}};
    json bps = json::array();
    for (size_t b : r.state.j_history) bps.push_back(b);
    j["breakpoints"] = bps;
    // |Lambda(a) - Lambda-bar(b)| <= |p/q(a) - p/q(b)| + 1/|q(a)|^2 + 1/|q(b)|^2
    if (!r.digits.empty()) {
        const auto cb = convergents(r.digits);
        const auto ca = convergents(r.state.b.size() ? a.prefix(r.state.b.size()) : Word{});
        QuadComplex va = QuadComplex(ca.back().p) / QuadComplex(ca.back().q);
        QuadComplex vb = QuadComplex(cb.back().p) / QuadComplex(cb.back().q);
        QuadComplex diff = va - vb;
        double dd = std::hypot(diff.re().a().get_d(), diff.im().a().get_d());
        j["gap_bound"] = sci(dd + inv_norm(ca.back().q) + inv_norm(cb.back().q));
    }
    out << (trace ? j.dump() : j.dump(2)) << "\n";
    return 0;
}

int cmd_rep(std::ostream& out, const std::string& ws, size_t max_n, size_t window, size_t len, bool wuv, bool even) {
    DigitSeq a = parse_sequence(read_json(ws));
    Word w = a.finite() ? a.prefix(a.size()) : a.prefix(len);
    json j = to_json(repetition_profile(w, max_n, window));
    if (auto p = detect_period(w)) j["period"] = {{"preperiod", p->first}, {"period", p->second}};
    if (wuv) {
        json ds = json::array();
        for (const auto& d : find_wuv(w)) {
            if (even) {
                if (auto e = even_u(d)) ds.push_back(to_json(*e));
            } else {
                ds.push_back(to_json(d));
            }
        }
        j["wuv"] = ds;
    }
    out << j.dump(2) << "\n";
    return 0;
}

int cmd_gen(std::ostream& out, std::ostream& err, const std::string& family, const std::string& spec, size_t len) {
    json s = read_json(spec);
    GenResult g;
    if (family == "thm14")
        g = gen_theorem14(s.contains("B") ? s.at("B") : s, len);
    else if (family == "new")
        g = gen_theorem_new(s.at("A"), s.at("B"), len, s.value("b_form", std::string("iB")));
    else
        fail(ErrorKind::Usage, "unknown family " + family);
    for (const auto& w : g.warnings) err << "warning: " << w << "\n";
    json warnings = g.warnings;
    out << json{{"family", family}, {"digits", word_json(g.prefix)}, {"class", class_name(classify(g.prefix))},
                {"warnings", warnings}}
               .dump(2)
        << "\n";
    return 0;
}

std::vector<Word> read_patterns(const std::string& arg) {
    json j = read_json(arg);
    std::vector<Word> ps;
    // a single word is [[re, im], ...]; a list of words nests one level deeper
    if (j.is_array() && !j.empty() && j[0].is_array() && !j[0].empty() && j[0][0].is_array()) {
        for (const auto& w : j) ps.push_back(word_from_json(w));
    } else if (j.is_array() && !j.empty()) {
        ps.push_back(word_from_json(j));
    }
    for (const auto& w : ps) check_digits(w);
    return ps;
}

int cmd_freq(std::ostream& out, const std::string& ws, size_t samples, size_t orbit, uint64_t seed,
             const std::string& format, const std::string& xs, size_t n, long partition) {
    if (partition > 0) {
        auto est = estimate_level1_partition(partition, samples, orbit, seed);
        json rows = json::array();
        double sum = 0, var = 0;
        for (const auto& m : est) {
            rows.push_back(to_json(m));
            sum += m.estimate;
            var += m.stderr_ * m.stderr_;
        }
        out << json{{"partition", rows}, {"sum", sum}, {"sum_stderr", std::sqrt(var)}}.dump(2) << "\n";
        return 0;
    }
    std::vector<Word> ps = ws.empty() ? std::vector<Word>{} : read_patterns(ws);
    if (!xs.empty()) {
        DigitSeq x = parse_sequence(read_json(xs));
        auto rows = normality_report(x, ps, n, samples, orbit, seed);
        if (format == "csv") {
            out << normality_csv(rows);
        } else {
            json a = json::array();
            for (const auto& r : rows) a.push_back(to_json(r));
            out << json{{"n", n}, {"rows", a}}.dump(2) << "\n";
        }
        return 0;
    }
    auto est = estimate_measures(ps, samples, orbit, seed);
    if (format == "csv") {
        out << "word,estimate,stderr,samples,boundary_skips\n";
        for (const auto& m : est)
            out << '"' << word_str(m.word) << "\"," << m.estimate << ',' << m.stderr_ << ',' << m.samples << ','
                << m.boundary_skips << "\n";
    } else {
        json a = json::array();
        for (const auto& m : est) a.push_back(to_json(m));
        out << a.dump(2) << "\n";
    }
    return 0;
}

int cmd_plot(std::ostream& out, const std::string& name, const std::string& path) {
    std::string svg = plot_figure(name);
    if (path.empty()) {
        out << svg;
    } else {
        std::ofstream f(path);
        if (!f) fail(ErrorKind::Usage, "cannot write " + path);
        f << svg;
    }
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hurwitz continued fractions over the Gaussian integers", "hcf"};
    app.require_subcommand(1, 1);

    std::string word, z, radius, format = "json", family, spec, figure, path, xs;
    size_t n_digits = 10, out_len = 40, slack = 4, max_n = 20, window = 0, len = 200, samples = 200, orbit = 1000,
           n = 10000;
    long d = 3, precision = 0, partition = 0;
    uint64_t seed = 1;
    bool trace = false, svg = false, wuv = false, even = false, mirror_sides = false;

    auto* expand = app.add_subcommand("expand", "HCF digits of an exact value");
    expand->add_option("--z", z, "value as JSON: {\"re\":..,\"im\":..}; scalars are rationals or {a,b,d}")->required();
    expand->add_option("--digits", n_digits, "number of digits");
    expand->add_option("--d", d, "session field Q(sqrt d)");
    expand->add_option("--precision", precision, "certify with balls from this many bits (0 = exact only)");

    auto* eval = app.add_subcommand("eval", "evaluate a word or sequence");
    eval->add_option("--word", word, "digits or generator spec")->required();
    eval->add_option("--radius", radius, "target ball radius (rational) for infinite sequences");
    eval->add_flag("--mirror", mirror_sides, "also evaluate both sides of the mirror formula");

    auto* classify_cmd = app.add_subcommand("classify", "regular / irregular / invalid");
    classify_cmd->add_option("--word", word, "digits")->required();

    auto* cylinder = app.add_subcommand("cylinder", "exact cylinder and prototype sets");
    cylinder->add_option("--word", word, "digits")->required();
    cylinder->add_flag("--svg", svg, "draw instead of JSON");

    auto* graph = app.add_subcommand("graph", "the prototype transition graph");
    graph->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

    auto* reg = app.add_subcommand("regularize", "rewrite a valid sequence into the closed regular shift");
    reg->add_option("--word", word, "digits or generator spec")->required();
    reg->add_option("--out-len", out_len, "digits to emit");
    reg->add_option("--slack", slack, "extra lookahead digits");
    reg->add_flag("--trace", trace, "emit each rewrite as a JSON line");

    auto* rep = app.add_subcommand("rep", "repetition profile and W U V U decompositions");
    rep->add_option("--word", word, "digits or generator spec")->required();
    rep->add_option("--max-n", max_n, "largest n");
    rep->add_option("--window", window, "window length (default n + 2)");
    rep->add_option("--len", len, "prefix length for infinite sequences");
    rep->add_flag("--wuv", wuv, "list decompositions");
    rep->add_flag("--even", even, "normalize decompositions to even |U|");

    auto* gen = app.add_subcommand("gen", "digit families");
    gen->add_option("--family", family, "thm14 or new")->required()->check(CLI::IsMember({"thm14", "new"}));
    gen->add_option("--spec", spec, "generator spec JSON")->required();
    gen->add_option("--len", len, "digits to emit");

    auto* freq = app.add_subcommand("freq", "pattern frequencies and measure estimates");
    freq->add_option("--word", word, "pattern or list of patterns");
    freq->add_option("--samples", samples, "Monte Carlo seeds");
    freq->add_option("--orbit", orbit, "orbit length per seed");
    freq->add_option("--seed", seed, "RNG seed");
    freq->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    freq->add_option("--x", xs, "sequence to test (normality report)");
    freq->add_option("--n", n, "window count for --x");
    freq->add_option("--partition", partition, "level-1 partition up to this digit norm");

    auto* plot = app.add_subcommand("plot", "SVG figures");
    plot->add_option("--figure", figure, "figure name")->required();
    plot->add_option("--out", path, "output file (default stdout)");

    std::vector<const char*> argv{"hcf"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 3;
    }

    try {
        if (expand->parsed()) return cmd_expand(out, z, n_digits, d, precision);
        if (eval->parsed()) return cmd_eval(out, word, radius, mirror_sides);
        if (classify_cmd->parsed()) return cmd_classify(out, word);
        if (cylinder->parsed()) return cmd_cylinder(out, word, svg);
        if (graph->parsed()) return cmd_graph(out, format);
        if (reg->parsed()) return cmd_regularize(out, word, out_len, slack, trace);
        if (rep->parsed()) return cmd_rep(out, word, max_n, window, len, wuv, even);
        if (gen->parsed()) return cmd_gen(out, err, family, spec, len);
        if (freq->parsed()) return cmd_freq(out, word, samples, orbit, seed, format, xs, n, partition);
        if (plot->parsed()) return cmd_plot(out, figure, path);
    } catch (const Error& e) {
        err << e.what() << "\n";
        return exit_code(e.kind());
    } catch (const json::exception& e) {
        err << "usage error: " << e.what() << "\n";
        return 3;
    }
    return 3;
}

int run(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, std::cout, std::cerr);
}

}  // namespace hcf
