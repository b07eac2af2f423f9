// Command-line driver: parse an algebra description (file or builtin spec),
// realize it on a window, run the requested check suite and emit a
// human-readable summary or a deterministic machine-readable report.

#include "zalg/workbench.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace zalg;

namespace {

struct CommonOpts {
    std::string input;            // path or builtin spec
    int lo = 0, hi = 0;
    bool window_set = false;
    bool json = false;
    bool timing = false;
    int margin = 0;               // 0 = default policy
    int jobs = 1;
    std::string field_override;   // "Q" or "GF(p)"
};

InputSpec load_input(const CommonOpts& o) {
    if (auto b = parse_builtin(o.input)) return *b;
    std::ifstream in(o.input);
    if (!in) throw std::runtime_error("cannot open input '" + o.input + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return input_from_text(ss.str());
}

FieldSpec effective_field(const InputSpec& spec, const CommonOpts& o) {
    std::string ov = o.field_override;
    if (ov.empty())
        if (const char* env = std::getenv("ZALG_FIELD")) ov = env;
    if (ov.empty()) return spec.pres.field;
    if (ov == "Q") return {FieldKind::Q, 0};
    if (ov.rfind("GF(", 0) == 0 && ov.back() == ')')
        return {FieldKind::GF, std::stoull(ov.substr(3, ov.size() - 4))};
    throw std::runtime_error("bad field override '" + ov + "' (use Q or GF(p))");
}

std::pair<int, int> effective_window(const InputSpec& spec, const CommonOpts& o) {
    if (o.window_set) return {o.lo, o.hi};
    if (spec.pres.window.first != 0 || spec.pres.window.second != 0) return spec.pres.window;
    return {-2, 2};
}

Horizon horizon_for(int lo, int hi, const CommonOpts& o) {
    Horizon hz = Horizon::standard(lo, hi);
    if (o.margin > 0) hz.margin = o.margin;
    return hz;
}

int emit(Report& rep, const CommonOpts& o,
         std::chrono::steady_clock::time_point started) {
    if (o.timing) {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - started)
                      .count();
        rep.extra["timing_ms"] = ms;
    }
    if (o.json)
        std::cout << rep.to_json().dump(2) << "\n";
    else
        std::cout << rep.human();
    return rep.exit_code();
}

template <class Fn>
int with_field(const FieldSpec& f, Fn&& fn) {
    if (f.kind == FieldKind::Q) return fn(Rational());
    GFpContext ctx(f.prime);
    return fn(GFp());
}

void add_common(CLI::App* cmd, CommonOpts& o, bool need_input = true) {
    if (need_input)
        cmd->add_option("input", o.input,
                        "algebra file or builtin spec, e.g. projective_space(2)")
            ->required();
    auto* wopt = cmd->add_option("--window", [&o](const CLI::results_t& r) {
        o.lo = std::stoi(r.at(0));
        o.hi = std::stoi(r.at(1));
        o.window_set = true;
        return true;
    }, "object window lo hi");
    wopt->expected(2);
    cmd->add_flag("--json", o.json, "emit the machine-readable report");
    cmd->add_flag("--timing", o.timing, "attach wall-clock timing (breaks byte-determinism)");
    cmd->add_option("--margin", o.margin, "horizon margin (objects reserved at the window top)");
    cmd->add_option("--jobs", o.jobs, "worker count for parallel sweeps (library is pure)");
    cmd->add_option("--field", o.field_override, "field override: Q or GF(p)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"desk-scale workbench for presented Z-algebras on finite windows"};
    app.require_subcommand(1);

    CommonOpts o;
    std::string gen_name = "projective_space(2)";
    std::string out_path;
    int from = 1, to = 0, period = 2, shiftd = 2;
    std::vector<int> thread_spec;

    auto* generate = app.add_subcommand("generate", "emit a builtin presentation as a file");
    generate->add_option("builtin", gen_name, "builtin spec")->required();
    generate->add_option("-o,--output", out_path, "output path (default: stdout)");
    auto* gwin = generate->add_option("--window", [&](const CLI::results_t& r) {
        o.lo = std::stoi(r.at(0));
        o.hi = std::stoi(r.at(1));
        o.window_set = true;
        return true;
    }, "window header to embed");
    gwin->expected(2);

    auto* check = app.add_subcommand("check-algebra",
                                     "grading, finite generation and tails axioms");
    add_common(check, o);

    auto* zgen = app.add_subcommand("zgen", "ampleness and T-projectivity suite");
    add_common(zgen, o);

    auto* glue = app.add_subcommand("glueing", "one-step glueing failure detection");
    add_common(glue, o);

    auto* helix = app.add_subcommand("helix", "exceptional sequences and helix verification");
    add_common(helix, o);
    helix->add_option("--period", period, "helix period n")->required();
    helix->add_option("--shift", shiftd, "helix shift parameter d")->required();
    helix->add_option("--thread", thread_spec, "thread i,l (top object and length)")
        ->delimiter(',')
        ->expected(2);

    auto* deform = app.add_subcommand("deform", "flatness, lifting and restriction probes");
    add_common(deform, o);
    deform->add_option("--thread", thread_spec, "thread i,l (top object and length)")
        ->delimiter(',')
        ->expected(2);

    auto* qh = app.add_subcommand("qhom", "stabilized hom in the quotient category");
    add_common(qh, o);
    qh->add_option("--from", from, "source twist object")->required();
    qh->add_option("--to", to, "target twist object")->required();

    CLI11_PARSE(app, argc, argv);
    auto started = std::chrono::steady_clock::now();

    try {
        if (generate->parsed()) {
            auto spec = parse_builtin(gen_name);
            if (!spec) throw std::runtime_error("unknown builtin '" + gen_name + "'");
            if (o.window_set) spec->pres.window = {o.lo, o.hi};
            std::string text = print_algebra_file(spec->pres);
            if (out_path.empty()) {
                std::cout << text;
            } else {
                std::ofstream out(out_path);
                out << text;
            }
            return 0;
        }

        InputSpec spec = load_input(o);
        FieldSpec field = effective_field(spec, o);
        auto [lo, hi] = effective_window(spec, o);
        Horizon hz = horizon_for(lo, hi, o);

        auto run = [&](auto tag) {
            using F = decltype(tag);
            Report rep;
            if (check->parsed()) {
                stamp(rep, "check-algebra", spec, field, lo, hi);
                auto w = realize_spec<F>(spec, lo, hi, o.jobs);
                check_algebra_suite(rep, w, hz);
            } else if (zgen->parsed()) {
                stamp(rep, "zgen", spec, field, lo, hi);
                auto w = realize_spec<F>(spec, lo, hi, o.jobs);
                zgen_suite(rep, w, hz);
            } else if (glue->parsed()) {
                stamp(rep, "glueing", spec, field, lo, hi);
                auto w = realize_spec<F>(spec, lo, hi, o.jobs);
                glueing_suite(rep, w, hz, static_cast<int>(w.dim(w.lo() + 1, w.lo())));
            } else if (helix->parsed()) {
                stamp(rep, "helix", spec, field, lo, hi);
                auto w = realize_spec<F>(spec, lo, hi, o.jobs);
                int ti = thread_spec.size() == 2 ? thread_spec[0] : 0;
                int tl = thread_spec.size() == 2
                             ? thread_spec[1]
                             : static_cast<int>(spec.pres.generators.size()) - 1;
                helix_suite(rep, w, ti, tl, period, shiftd);
            } else if (deform->parsed()) {
                stamp(rep, "deform", spec, field, lo, hi);
                int ti = thread_spec.size() == 2 ? thread_spec[0] : 0;
                int tl = thread_spec.size() == 2
                             ? thread_spec[1]
                             : static_cast<int>(spec.pres.generators.size()) - 1;
                deform_suite<F>(rep, spec.pres, lo, hi, ti, tl);
            } else if (qh->parsed()) {
                stamp(rep, "qhom", spec, field, lo, hi);
                auto w = realize_spec<F>(spec, lo, hi, o.jobs);
                qhom_suite(rep, w, hz, from, to);
            }
            return emit(rep, o, started);
        };
        return with_field(field, run);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
