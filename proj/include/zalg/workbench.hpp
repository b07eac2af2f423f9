#pragma once
// Suite orchestration shared by the command-line driver and the acceptance
// harness: resolve an input (file text or builtin spec), realize it over the
// requested field, and run the named check suite into a Report.

#include "zalg/algebra_file.hpp"
#include "zalg/deformation.hpp"
#include "zalg/qmod.hpp"
#include "zalg/report.hpp"

#include <optional>
#include <string>

namespace zalg {

struct InputSpec {
    GradedPresentation pres;
    bool dead_socle = false; // inject the dead-socle fixture after realization
    int socle_object = 0;
    std::string canonical;   // canonical text used for the digest
};

// builtin specs: projective_space(d), quantum_projective_space(d, q|eps),
// truncated_infinite_polynomial(N), dead_socle(d)
inline std::optional<InputSpec> parse_builtin(const std::string& s) {
    auto args_of = [&](const std::string& head) -> std::optional<std::vector<std::string>> {
        if (s.rfind(head + "(", 0) != 0 || s.back() != ')') return std::nullopt;
        std::string inner = s.substr(head.size() + 1, s.size() - head.size() - 2);
        std::vector<std::string> out;
        std::string cur;
        for (char c : inner) {
            if (c == ',') { out.push_back(detail::trim(cur)); cur.clear(); }
            else cur += c;
        }
        if (!detail::trim(cur).empty()) out.push_back(detail::trim(cur));
        return out;
    };
    InputSpec spec;
    if (auto a = args_of("projective_space"); a && a->size() == 1) {
        spec.pres = projective_space(std::stoi((*a)[0]));
    } else if (auto q = args_of("quantum_projective_space"); q && q->size() == 2) {
        if ((*q)[1] == "eps") {
            spec.pres = quantum_projective_space_eps(std::stoi((*q)[0]));
        } else {
            Rational qq;
            if (!detail::parse_rational((*q)[1], qq))
                throw std::invalid_argument("quantum_projective_space: bad q");
            spec.pres = quantum_projective_space(std::stoi((*q)[0]), qq);
        }
    } else if (auto t = args_of("truncated_infinite_polynomial"); t && t->size() == 1) {
        spec.pres = truncated_infinite_polynomial(std::stoi((*t)[0]));
    } else if (auto d = args_of("dead_socle"); d && d->size() == 1) {
        spec.pres = projective_space(std::stoi((*d)[0]));
        spec.pres.name = "dead_socle(" + (*d)[0] + ")";
        spec.dead_socle = true;
    } else {
        return std::nullopt;
    }
    spec.canonical = print_algebra_file(spec.pres);
    return spec;
}

inline InputSpec input_from_text(const std::string& text) {
    InputSpec spec;
    spec.pres = parse_algebra_file(text);
    spec.canonical = print_algebra_file(spec.pres);
    return spec;
}

template <class F>
WindowAlgebra<F> realize_spec(const InputSpec& spec, int lo, int hi, int jobs = 1) {
    auto w = realize_window<F>(spec.pres, lo, hi, jobs);
    if (spec.dead_socle) {
        int obj = spec.socle_object != 0 ? spec.socle_object : lo + 1;
        for (int n = obj + 1; n <= hi; ++n)
            w.inject_dead_element(n, obj, "zdead_" + std::to_string(n));
    }
    return w;
}

inline void stamp(Report& rep, const std::string& command, const InputSpec& spec,
                  const FieldSpec& field, int lo, int hi) {
    rep.command = command;
    rep.input_name = spec.pres.name;
    rep.input_digest = fnv1a64(spec.canonical);
    rep.field = field.str();
    rep.window_lo = lo;
    rep.window_hi = hi;
}

// ---- suites --------------------------------------------------------------------

template <class F>
void check_algebra_suite(Report& rep, const WindowAlgebra<F>& w, const Horizon& hz) {
    auto g = w.grading_report();
    rep.add("positively_graded", g.positively_graded ? Status::pass : Status::fail);
    rep.add("connected", g.connected ? Status::pass : Status::fail);
    rep.add("locally_finite", g.locally_finite ? Status::pass : Status::fail, g.note);

    auto fg = w.is_finitely_generated_window(hz);
    Json w1 = Json::object();
    if (fg.pinpointed_object) w1["object"] = *fg.pinpointed_object;
    Json per = Json::array();
    for (const auto& po : fg.objects)
        per.push_back(Json{{"object", po.object},
                           {"generators", WindowAlgebra<F>::generators_at(po)}});
    w1["generators_per_object"] = per;
    rep.add("finitely_generated", fg.status, fg.reason, w1);

    // tails axioms: identity and pullback, exhaustively over basis elements
    bool id_ok = true, pb_ok = true;
    Json viol = Json::object();
    for (int m = w.lo(); m <= hz.top() && id_ok; ++m) {
        auto st = in_L_tails(Cover<F>::whole(w, m), hz);
        if (st.status != Status::pass || st.least_n != m) {
            id_ok = false;
            viol["identity_at"] = m;
        }
    }
    for (int m = w.lo(); m <= w.hi() && pb_ok; ++m)
        for (int n = m; n <= w.hi() && pb_ok; ++n)
            for (int k = m; k <= w.hi() && pb_ok; ++k)
                for (std::size_t i = 0; i < w.dim(k, m) && pb_ok; ++i) {
                    auto lvl = pullback_tail_level(Cover<F>::tail(w, m, n),
                                                   w.basis_element(k, m, i));
                    if (!lvl || *lvl > std::max(n, k)) {
                        pb_ok = false;
                        viol["pullback"] = Json{{"m", m}, {"n", n}, {"k", k},
                                                {"element", w.basis_label(k, m, i)}};
                    }
                }
    rep.add("tails_identity_axiom", id_ok ? Status::pass : Status::fail, "", viol);
    rep.add("tails_pullback_axiom", pb_ok ? Status::pass : Status::fail, "", viol);
}

template <class F>
void zgen_suite(Report& rep, const WindowAlgebra<F>& w, const Horizon& hz) {
    auto zr = zgen_report(w, hz);
    Json aw = Json::object();
    if (zr.ample.witness)
        aw = Json{{"m", zr.ample.witness->m},
                  {"n", zr.ample.witness->n},
                  {"k", zr.ample.witness->k},
                  {"missing", zr.ample.witness->missing_label}};
    rep.add("ample", zr.ample.status, "", aw);
    for (const auto& e : zr.projectivity) {
        Json wj = Json::object();
        if (e.n0) wj["n0"] = *e.n0;
        rep.add("t_projective_at_" + std::to_string(e.object), e.status, "", wj);
    }
    rep.add("t_full_t_faithful", Status::pass, zr.fullness_note);
    rep.add("hypothesis", Status::pass, zr.hypothesis_note);
}

template <class F>
void glueing_suite(Report& rep, const WindowAlgebra<F>& w, const Horizon& hz, int nvars) {
    // the countably-many-variables example cover, truncated to nvars
    auto r0 = WindowModule<F>::representable(w, 0);
    std::vector<std::size_t> ambient;
    for (int n = w.lo(); n <= w.hi(); ++n) ambient.push_back(r0.dim(n));
    Cover<F> s{0, Submodule<F>(&w, ambient)};
    for (int i = 1; i <= nvars; ++i) {
        std::vector<F> xi(w.dim(1, 0), F(0));
        xi[static_cast<std::size_t>(i - 1)] = F(1);
        auto part = submodule_product(r0, {{1, xi}}, IdealKind::tail, i);
        for (int n = w.lo(); n <= w.hi(); ++n)
            for (std::size_t b = 0; b < part.dim(n); ++b)
                s.sub.component(n).add(part.component(n).basis_row(b));
    }
    auto g = glueing_failure_witness(w, s, hz);
    Status st = g.verdict == GlueingReport<F>::Verdict::glueing_failure ? Status::pass
                                                                        : Status::fail;
    Json wj{{"witness", g.cover_status.witness_label},
            {"component", g.cover_status.witness_component ? Json(*g.cover_status.witness_component)
                                                           : Json()}};
    rep.add("glueing_failure_detected", st, g.summary, wj);
}

template <class F>
void helix_suite(Report& rep, const WindowAlgebra<F>& w, int i, int l, int period, int shiftpar) {
    auto thread = extract_thread(w, i, l);
    const int tlo = -thread.hi(), thi = -thread.lo();
    // exceptional-sequence report on the thread twists
    std::vector<Complex<F>> twists;
    for (int t = tlo; t <= thi; ++t) twists.push_back(twist_rep(thread, t));
    std::vector<const Complex<F>*> ptrs;
    for (auto& c : twists) ptrs.push_back(&c);
    auto sr = sequence_report(ptrs);
    Json tables = Json::array();
    for (auto& [pair, dims] : sr.tables) {
        Json t{{"i", pair.first}, {"j", pair.second}};
        Json dd = Json::object();
        for (auto& [deg, dim] : dims) dd[std::to_string(deg)] = dim;
        t["dims"] = dd;
        tables.push_back(std::move(t));
    }
    rep.extra["rhom_tables"] = tables;
    rep.add("exceptional_sequence", sr.exceptional, sr.witness);
    rep.add("strong_exceptional", sr.strong, sr.witness);
    rep.add("geometric_within_range", sr.geometric_within_range);

    std::map<int, Complex<F>> family;
    for (int t = tlo - 1; t <= thi + 1; ++t) family.emplace(t, twist_rep(thread, t));
    auto hx = verify_helix(family, period, shiftpar);
    for (auto& e : hx.checks)
        rep.add("helix_condition_at_" + std::to_string(e.i), e.iso, e.note);
    rep.add("helix_threads_exceptional", hx.threads_exceptional);
    rep.add("helix_generation_k0", hx.k_class_spans ? Status::pass : Status::inconclusive,
            hx.note);
}

template <class F>
void qhom_suite(Report& rep, const WindowAlgebra<F>& w, const Horizon& hz, int from, int to) {
    auto m = WindowModule<F>::representable(w, from);
    auto n = WindowModule<F>::representable(w, to);
    auto q = qhom(m, n, hz);
    Json dims = Json::array();
    for (auto& [lvl, d] : q.dims) dims.push_back(Json::array({lvl, d}));
    Json wj{{"dims", dims}};
    if (q.stabilization_index) wj["stabilization_index"] = *q.stabilization_index;
    if (q.stabilized_dim) wj["stabilized_dim"] = *q.stabilized_dim;
    rep.add("qhom_stabilizes",
            q.stabilized_dim ? Status::pass : Status::inconclusive, q.note, wj);
}

template <class F>
void deform_suite(Report& rep, const GradedPresentation& pres, int lo, int hi, int i, int l) {
    DeformedWindow<F> dw = deform_window<F>(pres, lo, hi);
    Json fw = Json::object();
    if (dw.failing_pair)
        fw = Json{{"pair", Json::array({dw.failing_pair->first, dw.failing_pair->second})}};
    rep.add("flatness", dw.flat,
            dw.flat == Status::pass ? "every hom-piece free with the base rank" : "", fw);
    if (dw.flat != Status::pass) return;

    auto hz = Horizon::standard(lo, hi);
    auto lift = finiteness_lift_report(dw, hz);
    rep.add("finiteness_lifts", lift.status, lift.note);

    auto thread_base = extract_thread(dw.base, i, l);
    auto ext = ext_vanishing_check(thread_base);
    rep.add("ext_vanishing_deg12", ext.status, ext.note);

    auto datum = datum_from_deformed(dw, hi, hi - lo);
    rep.add("cocycle", cocycle_check(datum));

    auto restricted = restrict_deformation(datum, i, l);
    rep.add("thread_restriction_cocycle", cocycle_check(restricted));

    // informational: whether the window datum is a coboundary (exact either way)
    auto trivial = DeformationDatum<F>::trivial(datum.base);
    auto gauge = gauge_equivalent(datum, trivial);
    rep.add("gauge_vs_trivial", Status::pass,
            gauge.status == Status::pass ? "window datum is gauge-trivial"
                                         : "window datum is not a coboundary (certified)");

    auto probe = restriction_equivalence_probe(dw.base, i, l);
    Json pw{{"h2_interior", probe.h2_interior},
            {"h2_thread", probe.h2_thread},
            {"restriction_rank", probe.restriction_rank},
            {"interior", Json::array({probe.interior.first, probe.interior.second})}};
    rep.add("restriction_equivalence", probe.status, probe.note, pw);
}

} // namespace zalg
