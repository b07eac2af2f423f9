#pragma once
// The self-describing text format for algebra presentations. Line oriented:
// a header (algebra / field / window), then `generators`, `relations` and an
// optional `deformation` section. Words are written topmost letter first,
// x*y meaning "apply y at the base object, then x". Parsing and printing
// round-trip on the canonical form.

#include "zalg/presentation.hpp"

#include <cctype>
#include <sstream>
#include <string>
#include <vector>

namespace zalg {

namespace detail {

inline std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

inline std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string t;
    while (is >> t) out.push_back(t);
    return out;
}

inline bool parse_rational(const std::string& s, Rational& out) {
    if (s.empty()) return false;
    std::size_t slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            for (std::size_t i = 0; i < s.size(); ++i)
                if (!std::isdigit(static_cast<unsigned char>(s[i])) &&
                    !(i == 0 && (s[i] == '-' || s[i] == '+')))
                    return false;
            out = Rational(boost::multiprecision::cpp_int(s));
        } else {
            std::string num = s.substr(0, slash), den = s.substr(slash + 1);
            if (num.empty() || den.empty()) return false;
            out = Rational(boost::multiprecision::cpp_int(num)) /
                  Rational(boost::multiprecision::cpp_int(den));
        }
        return true;
    } catch (...) {
        return false;
    }
}

// one additive term: [coefficient *] label (* label)*, coefficient may be a
// rational, `eps`, or rational immediately followed by eps (e.g. 3/2eps)
inline RelationTerm parse_term(const std::string& text, const Rational& sign) {
    RelationTerm term;
    term.coeff = {sign, Rational(0)};
    std::vector<std::string> toks;
    std::string cur;
    for (char c : text) {
        if (c == '*') {
            if (!cur.empty()) toks.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!trim(cur).empty()) toks.push_back(trim(cur));
    std::size_t i = 0;
    for (; i < toks.size(); ++i) {
        std::string t = toks[i];
        bool has_eps = false;
        if (t == "eps") {
            has_eps = true;
            t = "1";
        } else if (t.size() > 3 && t.substr(t.size() - 3) == "eps") {
            has_eps = true;
            t = t.substr(0, t.size() - 3);
        }
        Rational q;
        if (!parse_rational(t, q)) break;
        if (has_eps) {
            term.coeff.eps = term.coeff.base * q;
            term.coeff.base = Rational(0);
        } else {
            Rational b = term.coeff.base * q, e = term.coeff.eps * q;
            term.coeff.base = b;
            term.coeff.eps = e;
        }
    }
    for (; i < toks.size(); ++i) term.word.push_back(toks[i]);
    if (term.word.empty())
        throw std::invalid_argument("relation term without a generator word: '" + text + "'");
    return term;
}

inline RelationScheme parse_relation_line(std::string line) {
    RelationScheme rel;
    std::size_t at = line.rfind('@');
    if (at != std::string::npos) {
        rel.at_object = std::stoi(trim(line.substr(at + 1)));
        line = line.substr(0, at);
    }
    // split on top-level + and - (the leading sign belongs to the first term)
    std::vector<std::pair<Rational, std::string>> pieces;
    Rational sign(1);
    std::string cur;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if ((c == '+' || c == '-') && !cur.empty() && trim(cur) != "") {
            pieces.emplace_back(sign, trim(cur));
            sign = (c == '-') ? Rational(-1) : Rational(1);
            cur.clear();
        } else if ((c == '+' || c == '-') && trim(cur).empty()) {
            sign = (c == '-') ? -sign : sign;
        } else {
            cur += c;
        }
    }
    if (!trim(cur).empty()) pieces.emplace_back(sign, trim(cur));
    for (auto& [s, text] : pieces) rel.terms.push_back(parse_term(text, s));
    if (rel.terms.empty()) throw std::invalid_argument("empty relation line");
    return rel;
}

} // namespace detail

inline GradedPresentation parse_algebra_file(const std::string& text) {
    GradedPresentation p;
    enum class Section { header, generators, relations, deformation } sec = Section::header;
    std::istringstream is(text);
    std::string raw;
    while (std::getline(is, raw)) {
        std::string line = detail::trim(raw);
        if (line.empty() || line[0] == '#') continue;
        if (line == "generators") { sec = Section::generators; continue; }
        if (line == "relations") { sec = Section::relations; continue; }
        if (line == "deformation") { sec = Section::deformation; continue; }
        switch (sec) {
            case Section::header: {
                auto toks = detail::split_ws(line);
                if (toks.empty()) break;
                if (toks[0] == "algebra" && toks.size() >= 2) {
                    p.name = toks[1];
                } else if (toks[0] == "field" && toks.size() >= 2) {
                    if (toks[1] == "Q") {
                        p.field = {FieldKind::Q, 0};
                    } else if (toks[1].rfind("GF(", 0) == 0 && toks[1].back() == ')') {
                        p.field = {FieldKind::GF,
                                   std::stoull(toks[1].substr(3, toks[1].size() - 4))};
                    } else {
                        throw std::invalid_argument("unknown field spec '" + toks[1] + "'");
                    }
                } else if (toks[0] == "window" && toks.size() >= 3) {
                    p.window = {std::stoi(toks[1]), std::stoi(toks[2])};
                } else {
                    throw std::invalid_argument("unrecognized header line: '" + line + "'");
                }
                break;
            }
            case Section::generators: {
                auto toks = detail::split_ws(line);
                if (toks.size() < 2) throw std::invalid_argument("generator line needs label and degree");
                GeneratorScheme g{toks[0], std::stoi(toks[1]), {}};
                if (toks.size() >= 5 && toks[2] == "objects")
                    g.objects = std::make_pair(std::stoi(toks[3]), std::stoi(toks[4]));
                p.generators.push_back(std::move(g));
                break;
            }
            case Section::relations:
                p.relations.push_back(detail::parse_relation_line(line));
                break;
            case Section::deformation:
                p.deformation.push_back(detail::parse_relation_line(line));
                break;
        }
    }
    p.validate();
    return p;
}

inline std::string print_term(const RelationTerm& t, bool first) {
    std::string out;
    Rational base = t.coeff.base, eps = t.coeff.eps;
    bool neg = false;
    if (base != 0) {
        neg = base < 0;
    } else if (eps != 0) {
        neg = eps < 0;
    }
    Rational b = neg ? -base : base, e = neg ? -eps : eps;
    if (first) {
        if (neg) out += "- ";
    } else {
        out += neg ? " - " : " + ";
    }
    std::string coeff;
    if (b != 0) {
        if (b != 1) coeff = b.str() + "*";
    } else if (e != 0) {
        coeff = (e == 1 ? std::string("eps*") : e.str() + "eps*");
    } else {
        coeff = "0*";
    }
    out += coeff;
    for (std::size_t i = 0; i < t.word.size(); ++i) {
        if (i) out += "*";
        out += t.word[i];
    }
    return out;
}

inline std::string print_algebra_file(const GradedPresentation& p) {
    std::ostringstream os;
    os << "algebra " << p.name << "\n";
    os << "field " << p.field.str() << "\n";
    os << "window " << p.window.first << " " << p.window.second << "\n\n";
    os << "generators\n";
    for (const auto& g : p.generators) {
        os << "  " << g.label << " " << g.degree;
        if (g.objects) os << " objects " << g.objects->first << " " << g.objects->second;
        os << "\n";
    }
    auto print_rel = [&](const RelationScheme& r) {
        // split mixed coefficients a + b*eps into two printable terms
        std::vector<RelationTerm> ts;
        for (const auto& t : r.terms) {
            if (t.coeff.base != 0 && t.coeff.eps != 0) {
                ts.push_back({{t.coeff.base, Rational(0)}, t.word});
                ts.push_back({{Rational(0), t.coeff.eps}, t.word});
            } else {
                ts.push_back(t);
            }
        }
        os << "  ";
        for (std::size_t i = 0; i < ts.size(); ++i) os << print_term(ts[i], i == 0);
        if (r.at_object) os << " @ " << *r.at_object;
        os << "\n";
    };
    if (!p.relations.empty()) {
        os << "\nrelations\n";
        for (const auto& r : p.relations) print_rel(r);
    }
    if (!p.deformation.empty()) {
        os << "\ndeformation\n";
        for (const auto& r : p.deformation) print_rel(r);
    }
    return os.str();
}

// stable input digest for reports
inline std::string fnv1a64(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[19];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

} // namespace zalg
