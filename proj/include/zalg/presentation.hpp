#pragma once
// Symbolic presentations of positively graded Z-algebras: generator schemes
// repeated at every object, homogeneous relation schemes, ground field spec.

#include "zalg/field.hpp"

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace zalg {

enum class FieldKind { Q, GF };

struct FieldSpec {
    FieldKind kind = FieldKind::Q;
    std::uint64_t prime = 0;
    std::string str() const {
        return kind == FieldKind::Q ? "Q" : ("GF(" + std::to_string(prime) + ")");
    }
};

struct GeneratorScheme {
    std::string label;
    int degree = 1;
    // if set, the scheme provides an instance g_m in a(m+degree, m) only for
    // m in [first, second]; otherwise for every object
    std::optional<std::pair<int, int>> objects;

    bool instance_at(int m) const {
        return !objects || (m >= objects->first && m <= objects->second);
    }
};

// coefficient a + b*eps; base relations must have b = 0
struct DualCoeff {
    Rational base{0}, eps{0};
};

// A word is written leftmost-outermost: word = [w0, w1, ..., wk] denotes
// w0 o w1 o ... o wk, with wk applied first at the base object.
struct RelationTerm {
    DualCoeff coeff;
    std::vector<std::string> word;
};

struct RelationScheme {
    std::vector<RelationTerm> terms;
    std::optional<int> at_object; // pinned base object; otherwise periodic
};

struct GradedPresentation {
    std::string name = "unnamed";
    FieldSpec field;
    std::pair<int, int> window{0, 0};
    std::vector<GeneratorScheme> generators;
    std::vector<RelationScheme> relations;   // base relations (no eps parts)
    std::vector<RelationScheme> deformation; // optional eps-perturbed relation set

    int generator_index(const std::string& label) const {
        for (std::size_t i = 0; i < generators.size(); ++i)
            if (generators[i].label == label) return static_cast<int>(i);
        return -1;
    }

    int word_degree(const std::vector<std::string>& word) const {
        int d = 0;
        for (const auto& l : word) {
            int gi = generator_index(l);
            if (gi < 0) throw std::invalid_argument("unknown generator label '" + l + "'");
            d += generators[gi].degree;
        }
        return d;
    }

    int max_generator_degree() const {
        int d = 0;
        for (const auto& g : generators) d = std::max(d, g.degree);
        return d;
    }

    void validate() const {
        std::map<std::string, int> seen;
        for (const auto& g : generators) {
            if (g.degree < 1)
                throw std::invalid_argument("generator '" + g.label +
                                            "' has degree < 1; positively graded algebras only");
            if (seen.count(g.label))
                throw std::invalid_argument("duplicate generator label '" + g.label + "'");
            seen[g.label] = 1;
        }
        auto check_homogeneous = [&](const RelationScheme& r, bool allow_eps) {
            if (r.terms.empty()) throw std::invalid_argument("empty relation");
            int d = word_degree(r.terms[0].word);
            for (const auto& t : r.terms) {
                if (t.word.empty()) throw std::invalid_argument("relation term with empty word");
                if (word_degree(t.word) != d)
                    throw std::invalid_argument("inhomogeneous relation: word degrees differ");
                if (!allow_eps && t.coeff.eps != 0)
                    throw std::invalid_argument("eps coefficient outside the deformation section");
            }
        };
        for (const auto& r : relations) check_homogeneous(r, false);
        for (const auto& r : deformation) check_homogeneous(r, true);
        if (field.kind == FieldKind::GF && field.prime < 2)
            throw std::invalid_argument("GF(p) needs a prime p >= 2");
    }
};

// ---- built-in presentations ----------------------------------------------

namespace detail {
inline std::string var_label(int i) { return "x" + std::to_string(i); }
}

// Homogeneous coordinate algebra of P^d: generators x0..xd of degree 1 at
// every object, relations xi*xj = xj*xi instantiated at every object.
inline GradedPresentation projective_space(int d) {
    if (d < 1) throw std::invalid_argument("projective_space: d >= 1 required");
    GradedPresentation p;
    p.name = "projective_space(" + std::to_string(d) + ")";
    for (int i = 0; i <= d; ++i) p.generators.push_back({detail::var_label(i), 1, {}});
    for (int i = 0; i <= d; ++i)
        for (int j = i + 1; j <= d; ++j) {
            RelationScheme r;
            r.terms.push_back({{Rational(1), Rational(0)},
                               {detail::var_label(i), detail::var_label(j)}});
            r.terms.push_back({{Rational(-1), Rational(0)},
                               {detail::var_label(j), detail::var_label(i)}});
            p.relations.push_back(std::move(r));
        }
    return p;
}

// q-deformed variant: xi*xj = q*xj*xi for i < j. q must be invertible.
inline GradedPresentation quantum_projective_space(int d, const Rational& q) {
    if (q == 0) throw std::invalid_argument("quantum_projective_space: q must be nonzero");
    GradedPresentation p = projective_space(d);
    p.name = "quantum_projective_space(" + std::to_string(d) + "," + q.str() + ")";
    std::size_t k = 0;
    for (int i = 0; i <= d; ++i)
        for (int j = i + 1; j <= d; ++j, ++k)
            p.relations[k].terms[1].coeff.base = -q;
    return p;
}

// First-order variant over k[eps]/(eps^2): base relations commutative, the
// deformation section carries xi*xj = xj*xi + eps*c*xj*xi for i < j.
inline GradedPresentation quantum_projective_space_eps(int d, const Rational& c = Rational(1)) {
    GradedPresentation p = projective_space(d);
    p.name = "quantum_projective_space(" + std::to_string(d) + ",eps)";
    for (int i = 0; i <= d; ++i)
        for (int j = i + 1; j <= d; ++j) {
            RelationScheme r;
            r.terms.push_back({{Rational(1), Rational(0)},
                               {detail::var_label(i), detail::var_label(j)}});
            r.terms.push_back({{Rational(-1), Rational(0)},
                               {detail::var_label(j), detail::var_label(i)}});
            r.terms.push_back({{Rational(0), -c},
                               {detail::var_label(j), detail::var_label(i)}});
            p.deformation.push_back(std::move(r));
        }
    return p;
}

// k[x1..xN] viewed as a Z-algebra: the N-variable truncation of the
// countably-many-variables polynomial ring.
inline GradedPresentation truncated_infinite_polynomial(int n) {
    if (n < 1) throw std::invalid_argument("truncated_infinite_polynomial: N >= 1 required");
    GradedPresentation p;
    p.name = "truncated_infinite_polynomial(" + std::to_string(n) + ")";
    for (int i = 1; i <= n; ++i) p.generators.push_back({detail::var_label(i), 1, {}});
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            RelationScheme r;
            r.terms.push_back({{Rational(1), Rational(0)},
                               {detail::var_label(i), detail::var_label(j)}});
            r.terms.push_back({{Rational(-1), Rational(0)},
                               {detail::var_label(j), detail::var_label(i)}});
            p.relations.push_back(std::move(r));
        }
    return p;
}

// coefficient conversion into the working scalar ring
template <class F>
F from_rational(const Rational& q) {
    if constexpr (std::is_same_v<F, Rational>) {
        return q;
    } else if constexpr (std::is_same_v<F, GFp>) {
        using boost::multiprecision::cpp_int;
        cpp_int num = numerator(q), den = denominator(q);
        cpp_int p = GFp::modulus();
        auto to_gfp = [&](cpp_int v) {
            cpp_int r = v % p;
            if (r < 0) r += p;
            return GFp(static_cast<long long>(r));
        };
        return to_gfp(num) / to_gfp(den);
    } else {
        static_assert(is_dual_v<F>, "unsupported scalar");
        using B = base_field_t<F>;
        return F(from_rational<B>(q));
    }
}

template <class F>
F from_dual_coeff(const DualCoeff& c) {
    if constexpr (is_dual_v<F>) {
        using B = base_field_t<F>;
        return F(from_rational<B>(c.base), from_rational<B>(c.eps));
    } else {
        if (c.eps != 0)
            throw std::invalid_argument("eps coefficient in a base-field realization");
        return from_rational<F>(c.base);
    }
}

} // namespace zalg
