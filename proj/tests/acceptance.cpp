// Acceptance suite: one pass/fail line per criterion, exact tolerances, exit
// code = number of failed criteria. Expected values come from independent
// oracles (monomial counting, Koszul resolutions, the full bar complex) or
// are exact by construction.

#include "zalg/workbench.hpp"

#include "bar_oracle.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>

using namespace zalg;

namespace {

int g_failures = 0;

void criterion(int num, const std::string& what, const std::function<bool()>& run) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string err;
    try {
        ok = run();
    } catch (const std::exception& e) {
        err = e.what();
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    std::printf("criterion %02d [%s] %s (%lld ms)%s\n", num, ok ? "PASS" : "FAIL", what.c_str(),
                static_cast<long long>(ms), err.empty() ? "" : (" error: " + err).c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

std::size_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    unsigned long long num = 1, den = 1;
    for (int i = 1; i <= k; ++i) {
        num *= static_cast<unsigned long long>(n - k + i);
        den *= static_cast<unsigned long long>(i);
    }
    return static_cast<std::size_t>(num / den);
}

} // namespace

int main() {
    criterion(1, "dimension oracle: dim a(n,m) = C(n-m+d,d) for P^1, P^2 on [-4,4]", [] {
        auto t0 = std::chrono::steady_clock::now();
        for (int d = 1; d <= 2; ++d) {
            auto w = realize_window<Rational>(projective_space(d), -4, 4);
            for (int m = -4; m <= 4; ++m)
                for (int n = m; n <= 4; ++n)
                    if (w.dim(n, m) != binomial(n - m + d, d)) return false;
        }
        auto secs = std::chrono::duration_cast<std::chrono::seconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
        return secs < 10;
    });

    criterion(2, "tails identity and pullback axioms, exhaustive, zero violations", [] {
        auto check = [](const WindowAlgebra<Rational>& w) {
            Horizon hz = Horizon::standard(w.lo(), w.hi());
            for (int m = w.lo(); m <= hz.top(); ++m) {
                auto st = in_L_tails(Cover<Rational>::whole(w, m), hz);
                if (st.status != Status::pass || st.least_n != m) return false;
            }
            for (int m = w.lo(); m <= w.hi(); ++m)
                for (int n = m; n <= w.hi(); ++n)
                    for (int k = m; k <= w.hi(); ++k)
                        for (std::size_t i = 0; i < w.dim(k, m); ++i) {
                            auto lvl = pullback_tail_level(Cover<Rational>::tail(w, m, n),
                                                           w.basis_element(k, m, i));
                            if (!lvl || *lvl > std::max(n, k)) return false;
                        }
            return true;
        };
        return check(realize_window<Rational>(projective_space(1), -3, 3)) &&
               check(realize_window<Rational>(projective_space(2), -2, 2)) &&
               check(realize_window<Rational>(truncated_infinite_polynomial(5), 0, 5));
    });

    criterion(3, "glueing counterexample: verdict and witness x5^4, stable at N = 6", [] {
        auto run = [](int nvars) {
            auto w = realize_window<Rational>(truncated_infinite_polynomial(nvars), 0, nvars);
            Horizon hz = Horizon::standard(0, nvars);
            auto r0 = WindowModule<Rational>::representable(w, 0);
            std::vector<std::size_t> ambient;
            for (int n = 0; n <= nvars; ++n) ambient.push_back(r0.dim(n));
            Cover<Rational> s{0, Submodule<Rational>(&w, ambient)};
            for (int i = 1; i <= nvars; ++i) {
                std::vector<Rational> xi(w.dim(1, 0), Rational(0));
                xi[static_cast<std::size_t>(i - 1)] = Rational(1);
                auto part = submodule_product(r0, {{1, xi}}, IdealKind::tail, i);
                for (int n = 0; n <= nvars; ++n)
                    for (std::size_t b = 0; b < part.dim(n); ++b)
                        s.sub.component(n).add(part.component(n).basis_row(b));
            }
            return glueing_failure_witness(w, s, hz);
        };
        auto g5 = run(5);
        auto g6 = run(6);
        return g5.verdict == GlueingReport<Rational>::Verdict::glueing_failure &&
               g5.cover_status.witness_label == "x5^4" &&
               g6.verdict == GlueingReport<Rational>::Verdict::glueing_failure &&
               g6.cover_status.witness_label == "x6^5";
    });

    criterion(4, "finite generation: P^d passes with d+1 generators, fixture pinpointed", [] {
        Horizon hz = Horizon::standard(0, 5);
        for (int d = 1; d <= 2; ++d) {
            auto w = realize_window<Rational>(projective_space(d), 0, 5);
            auto fg = w.is_finitely_generated_window(hz);
            if (fg.status != Status::pass) return false;
            for (const auto& po : fg.objects)
                if (WindowAlgebra<Rational>::generators_at(po) !=
                    static_cast<std::size_t>(d + 1))
                    return false;
        }
        auto bad = dead_socle_fixture<Rational>(1, 0, 5, 1);
        auto fgb = bad.is_finitely_generated_window(hz);
        return fgb.status == Status::fail && fgb.pinpointed_object && *fgb.pinpointed_object == 1;
    });

    criterion(5, "mutation oracle: minimized L_{P(O)}(P(O(1))) = O(-1)[1] on the Kronecker", [] {
        auto w = realize_window<Rational>(projective_space(1), -3, 3);
        auto kron = extract_thread(w, 0, 1);
        auto p0 = Complex<Rational>::single(&kron, 0);
        auto p1 = Complex<Rational>::single(&kron, -1);
        auto lm = left_mutation(p0, p1);
        auto oracle = shift(twist_rep(kron, -1), 1);
        return iso_in_derived(lm, oracle).status == Status::pass;
    });

    criterion(6, "helix verification: P^1 (2,2) and P^2 (3,3) pass, P^2 (3,2) fails", [] {
        auto t0 = std::chrono::steady_clock::now();
        auto w1 = realize_window<Rational>(projective_space(1), -3, 3);
        auto kron = extract_thread(w1, 0, 1);
        std::map<int, Complex<Rational>> fam1;
        for (int j = -1; j <= 2; ++j) fam1.emplace(j, twist_rep(kron, j));
        if (verify_helix(fam1, 2, 2).status != Status::pass) return false;

        auto w2 = realize_window<Rational>(projective_space(2), -3, 3);
        auto beil = extract_thread(w2, 0, 2);
        std::map<int, Complex<Rational>> fam2;
        for (int j = -1; j <= 3; ++j) fam2.emplace(j, twist_rep(beil, j));
        if (verify_helix(fam2, 3, 3).status != Status::pass) return false;

        auto bad = verify_helix(fam2, 3, 2);
        if (bad.status != Status::fail) return false;
        bool witnessed = false;
        for (auto& e : bad.checks)
            if (e.iso != Status::pass && !e.note.empty()) witnessed = true;
        auto secs = std::chrono::duration_cast<std::chrono::seconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
        return witnessed && secs < 60;
    });

    criterion(7, "strong exceptionality tables on the Beilinson thread: (3,3,6) in degree 0", [] {
        auto w = realize_window<Rational>(projective_space(2), -3, 3);
        auto beil = extract_thread(w, 0, 2);
        auto b0 = Complex<Rational>::single(&beil, 0);
        auto b1 = Complex<Rational>::single(&beil, -1);
        auto b2 = Complex<Rational>::single(&beil, -2);
        auto rep = sequence_report<Rational>({&b0, &b1, &b2});
        if (rep.exceptional != Status::pass || rep.strong != Status::pass) return false;
        using T = std::map<int, std::size_t>;
        return rep.tables.at({0, 0}) == T{{0, 1}} && rep.tables.at({1, 1}) == T{{0, 1}} &&
               rep.tables.at({2, 2}) == T{{0, 1}} && rep.tables.at({1, 0}).empty() &&
               rep.tables.at({2, 0}).empty() && rep.tables.at({2, 1}).empty() &&
               rep.tables.at({0, 1}) == T{{0, 3}} && rep.tables.at({1, 2}) == T{{0, 3}} &&
               rep.tables.at({0, 2}) == T{{0, 6}};
    });

    criterion(8, "Hochschild: H^2(Kronecker) = 0 and H^2(Beilinson P^2) = 10, oracle-matched", [] {
        auto w1 = realize_window<Rational>(projective_space(1), -2, 2);
        auto w2 = realize_window<Rational>(projective_space(2), -2, 2);
        auto kron = extract_thread(w1, 0, 1);
        auto beil = extract_thread(w2, 0, 2);
        auto hk = hochschild_dims(kron, 2);
        auto hb = hochschild_dims(beil, 2);
        zalg_test::FullBar ok(kron, 3), ob(beil, 3);
        return hk[2] == 0 && hb[2] == 10 && ok.cohomology(2) == hk && ob.cohomology(2) == hb;
    });

    criterion(9, "restriction equivalence: interior H^2 = thread H^2 with full-rank restriction", [] {
        auto w = realize_window<Rational>(projective_space(2), -3, 3);
        auto probe = restriction_equivalence_probe(w, 1, 2); // interior [-2,2], width 5
        bool primary = probe.status == Status::pass && probe.h2_interior == probe.h2_thread &&
                       probe.restriction_rank == probe.h2_interior;
        if (!primary) return false;
        if (probe.h2_interior == 10) return true;
        // fallback: dim equality and full rank at two successive window sizes
        auto w6 = realize_window<Rational>(projective_space(2), -3, 4);
        auto probe6 = restriction_equivalence_probe(w6, 1, 2);
        return probe6.status == Status::pass && probe6.h2_interior == probe.h2_interior;
    });

    criterion(10, "gauge triviality of the eps-quantum P^1 window datum, witness substituted", [] {
        auto dw = deform_window<Rational>(quantum_projective_space_eps(1), -2, 2);
        if (dw.flat != Status::pass) return false;
        auto datum = datum_from_deformed(dw, 2, 4);
        auto trivial = DeformationDatum<Rational>::trivial(datum.base);
        auto g = gauge_equivalent(datum, trivial);
        if (g.status != Status::pass) return false;
        // independent substitution: d(gamma)(a,b) = a o gamma(b) - gamma(a o b)
        // + gamma(a) o b computed through compositions must equal mu exactly
        const auto& alg = datum.base;
        HochschildComplex<Rational> hh(alg, 2);
        auto gamma_at = [&](std::size_t arrow) {
            auto t = hh.tuple_index(1, {arrow});
            const auto& a = alg.arrows()[arrow];
            std::vector<Rational> v(alg.dim(a.tgt, a.src), Rational(0));
            for (std::size_t q = 0; q < v.size(); ++q) v[q] = g.gamma[hh.var(1, *t, q)];
            return v;
        };
        const auto& as = alg.arrows();
        for (std::size_t ia = 0; ia < as.size(); ++ia)
            for (std::size_t ib = 0; ib < as.size(); ++ib) {
                if (as[ia].src != as[ib].tgt) continue;
                const auto &a = as[ia], &b = as[ib];
                std::size_t vd = alg.dim(a.tgt, b.src);
                std::vector<Rational> lhs(vd, Rational(0));
                {
                    Element<Rational> gb{b.src, b.tgt, gamma_at(ib)};
                    auto img = alg.compose(alg.basis_element(a.tgt, a.src, a.idx), gb);
                    for (std::size_t q = 0; q < vd; ++q) lhs[q] += img.coords[q];
                }
                {
                    const auto& ab = alg.table(a.tgt, a.src, b.src, a.idx, b.idx);
                    for (std::size_t k = 0; k < ab.size(); ++k) {
                        if (ab[k] == 0) continue;
                        std::size_t ak = 0;
                        while (!(as[ak].tgt == a.tgt && as[ak].src == b.src && as[ak].idx == k))
                            ++ak;
                        auto gk = gamma_at(ak);
                        for (std::size_t q = 0; q < vd; ++q) lhs[q] -= ab[k] * gk[q];
                    }
                }
                {
                    Element<Rational> ga{a.src, a.tgt, gamma_at(ia)};
                    auto img = alg.compose(ga, alg.basis_element(b.tgt, b.src, b.idx));
                    for (std::size_t q = 0; q < vd; ++q) lhs[q] += img.coords[q];
                }
                auto t = hh.tuple_index(2, {ia, ib});
                for (std::size_t q = 0; q < vd; ++q)
                    if (lhs[q] != datum.mu2[hh.var(2, *t, q)]) return false;
            }
        return true;
    });

    criterion(11, "flatness and lifting: quantum P^2 flat everywhere, fixture rejected", [] {
        auto dw = deform_window<Rational>(quantum_projective_space_eps(2), -2, 2);
        if (dw.flat != Status::pass) return false;
        for (int m = -2; m <= 2; ++m)
            for (int n = m; n <= 2; ++n)
                if (dw.free_ranks.at({n, m}) != dw.base.dim(n, m)) return false;
        auto lift = finiteness_lift_report(dw, Horizon::standard(-2, 2));
        if (lift.status != Status::pass) return false;

        auto bad = quantum_projective_space_eps(2);
        RelationScheme junk;
        junk.terms.push_back({{Rational(0), Rational(1)}, {"x0", "x0"}});
        bad.deformation.push_back(junk);
        auto dbad = deform_window<Rational>(bad, 0, 3);
        return dbad.flat == Status::fail && dbad.failing_pair &&
               *dbad.failing_pair == std::pair<int, int>{2, 0};
    });

    criterion(12, "reduce-then-mutate equals mutate-then-reduce on the quantum Kronecker", [] {
        using D = Dual<Rational>;
        auto dw = deform_window<Rational>(quantum_projective_space_eps(1), -2, 2);
        if (dw.flat != Status::pass) return false;
        auto dthread = extract_thread(dw.algebra, 0, 1);
        auto bthread = extract_thread(dw.base, 0, 1);
        auto mut = left_mutation(Complex<D>::single(&dthread, 0),
                                 Complex<D>::single(&dthread, -1));
        auto reduced = minimize(reduce_complex(mut, &bthread));
        auto base_mut = left_mutation(Complex<Rational>::single(&bthread, 0),
                                      Complex<Rational>::single(&bthread, -1));
        return iso_in_derived(reduced, base_mut).status == Status::pass;
    });

    criterion(13, "determinism: two full runs produce byte-identical reports", [] {
        auto once = []() {
            std::string out;
            {
                auto spec = *parse_builtin("projective_space(2)");
                Report rep;
                stamp(rep, "check-algebra", spec, {FieldKind::Q, 0}, -2, 2);
                auto w = realize_spec<Rational>(spec, -2, 2);
                check_algebra_suite(rep, w, Horizon::standard(-2, 2));
                out += rep.to_json().dump(2);
            }
            {
                auto spec = *parse_builtin("projective_space(2)");
                Report rep;
                stamp(rep, "zgen", spec, {FieldKind::Q, 0}, -2, 2);
                auto w = realize_spec<Rational>(spec, -2, 2);
                zgen_suite(rep, w, Horizon::standard(-2, 2));
                out += rep.to_json().dump(2);
            }
            {
                auto spec = *parse_builtin("quantum_projective_space(1,eps)");
                Report rep;
                stamp(rep, "deform", spec, {FieldKind::Q, 0}, -2, 2);
                deform_suite<Rational>(rep, spec.pres, -2, 2, 0, 1);
                out += rep.to_json().dump(2);
            }
            {
                auto spec = *parse_builtin("projective_space(1)");
                Report rep;
                stamp(rep, "helix", spec, {FieldKind::Q, 0}, -3, 3);
                auto w = realize_spec<Rational>(spec, -3, 3);
                helix_suite(rep, w, 0, 1, 2, 2);
                out += rep.to_json().dump(2);
            }
            return out;
        };
        return once() == once();
    });

    if (g_failures == 0)
        std::printf("all 13 acceptance criteria passed\n");
    else
        std::printf("%d acceptance criteria FAILED\n", g_failures);
    return g_failures;
}
