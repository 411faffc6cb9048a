#pragma once

// Named sheaves on the quadric threefold and the exact sequences relating them.
// Shifts E[k] appear only through the signs of relation terms.

#include <tiltwall/kuznetsov.hpp>

#include <map>
#include <optional>
#include <regex>

namespace tiltwall {

struct SheafDescriptor {
    std::string name;
    ChernCharacter ch;
    bool ku_member = false;
    std::string notes;
};

struct RelationTerm {
    std::string name;
    int sign;
};

struct ExactSequenceRelation {
    std::string name;
    std::vector<RelationTerm> terms;
    std::string notes;
};

struct RelationCheck {
    std::string name;
    bool pass;
    ChernCharacter residual;
};

class Catalog {
public:
    const std::vector<SheafDescriptor>& entries() const { return entries_; }

    /// Entry by name; "O(kH)" resolves for every integer k, "spinor" means S.
    std::optional<SheafDescriptor> lookup(std::string_view name) const
    {
        std::string key(detail::trim(name));
        if (key == "spinor") {
            key = "S";
        }
        for (const auto& e : entries_) {
            if (e.name == key) {
                return e;
            }
        }
        static const std::regex line(R"(O\((-?\d*)H\))");
        std::smatch m;
        if (std::regex_match(key, m, line)) {
            std::string k = m[1].str();
            Rational kr = k.empty() ? Rational(1) : k == "-" ? Rational(-1) : parse_rational(k);
            return SheafDescriptor{key, line_bundle(kr), false, "line bundle"};
        }
        return std::nullopt;
    }

    const ChernCharacter& ch(std::string_view name) const
    {
        for (const auto& e : entries_) {
            if (e.name == name) {
                return e.ch;
            }
        }
        throw std::out_of_range("no catalog entry '" + std::string(name) + "'");
    }

    void add(SheafDescriptor d) { entries_.push_back(std::move(d)); }

private:
    std::vector<SheafDescriptor> entries_;
};

/// Builds the table. Base classes may be overridden by name (for fault
/// injection); derived classes are recomputed from the possibly overridden base.
inline Catalog make_catalog(const std::map<std::string, ChernCharacter>& overrides = {})
{
    auto base = [&](const std::string& name, ChernCharacter ch) {
        auto it = overrides.find(name);
        return it == overrides.end() ? ch : it->second;
    };
    auto q = [](long long p, long long d = 1) { return make_rational(p, d); };

    Catalog c;
    ChernCharacter v{q(3), q(-1), q(-1, 2), q(1, 3)};
    c.add({"O(-2H)", base("O(-2H)", line_bundle(q(-2))), false, "line bundle"});
    c.add({"O(-H)", base("O(-H)", line_bundle(q(-1))), true, "line bundle, basis class l1"});
    c.add({"O", base("O", line_bundle(q(0))), false, "structure sheaf"});
    c.add({"O(H)", base("O(H)", line_bundle(q(1))), false, "line bundle"});
    c.add({"S", base("S", {q(2), q(-1), q(0), q(1, 12)}), true, "spinor bundle, basis class l2"});
    c.add({"S(H)", twist(c.ch("S"), q(1)), false, "twisted spinor bundle, dual of S"});
    c.add({"O_x", base("O_x", {q(0), q(0), q(0), q(1, 2)}), false, "skyscraper at a point; point class is H^3/2"});
    c.add({"I_x(H)", c.ch("O(H)") - c.ch("O_x"), false, "ideal of a point twisted by H"});
    c.add({"P_x", base("P_x", v), true, "projection of O_x, kernel of O^4 -> I_x(H)"});
    c.add({"O_l", base("O_l", {q(0), q(0), q(1, 2), q(-1, 4)}), false, "structure sheaf of a line"});
    c.add({"I_l", base("I_l", {q(1), q(0), q(-1, 2), q(1, 4)}), true, "ideal sheaf of a line"});
    c.add({"O_Y", base("O_Y", {q(0), q(1), q(-1, 2), q(1, 6)}), false, "structure sheaf of a hyperplane section"});
    c.add({"O_Y(D)", base("O_Y(D)", {q(0), q(1), q(1, 2), q(-1, 3)}), false, "O_Y twisted by a (2,0) divisor"});
    c.add({"O_D", q(2) * c.ch("O_l"), false, "divisor of type (2,0); class of two lines"});
    c.add({"omega_C", base("omega_C", {q(0), q(0), q(1), q(-5, 2)}), false, "dualizing sheaf of a degree-2 curve"});
    c.add({"E_D", base("E_D", v), true, "kernel of O^3 -> O_Y(D)"});
    c.add({"U", base("U", {q(4), q(-1), q(-1, 2), q(-1, 6)}), false, "kernel of H^0(O(H)) x O -> O(H)"});
    c.add({"U_Q", c.ch("U") - c.ch("O(-2H)"), true, "projection of U"});
    c.add({"F", base("F", {q(2), q(-1), q(-1, 2), q(1, 3)}), false, "rank-2 bundle with c1=-1, c2=2"});
    c.add({"E_F", base("E_F", v), true, "extension of O by F"});
    return c;
}

inline const Catalog& catalog()
{
    static const Catalog c = make_catalog();
    return c;
}

inline const std::vector<ExactSequenceRelation>& relations()
{
    static const std::vector<ExactSequenceRelation> rels{
        {"resol-sky-Q", {{"O(-H)", 1}, {"S", -2}, {"O", 4}, {"O(H)", -1}, {"O_x", 1}},
            "0 -> O(-H) -> S^2 -> O^4 -> O(H) -> O_x -> 0"},
        {"structure-exact-Q", {{"I_x(H)", 1}, {"O(H)", -1}, {"O_x", 1}}, "0 -> I_x(H) -> O(H) -> O_x -> 0"},
        {"structure-exact-cor-Q", {{"P_x", 1}, {"O", -4}, {"I_x(H)", 1}}, "0 -> P_x -> O^4 -> I_x(H) -> 0"},
        {"structure-exact-cor2-Q", {{"O(-H)", 1}, {"S", -2}, {"P_x", 1}}, "0 -> O(-H) -> S^2 -> P_x -> 0"},
        {"spinor-seq", {{"S", 1}, {"O", -4}, {"S(H)", 1}}, "0 -> S -> O^4 -> S(H) -> 0"},
        {"E_D-seq", {{"E_D", 1}, {"O", -3}, {"O_Y(D)", 1}}, "0 -> E_D -> O^3 -> O_Y(D) -> 0"},
        {"euler-restricted", {{"U", 1}, {"O", -5}, {"O(H)", 1}}, "0 -> U -> O^5 -> O(H) -> 0"},
        {"VB-construct-two", {{"F", 1}, {"E_F", -1}, {"O", 1}}, "0 -> F -> E_F -> O -> 0"},
        {"hartshorne-serre-line", {{"O(-H)", 1}, {"S", -1}, {"I_l", 1}}, "0 -> O(-H) -> S -> I_l -> 0"},
    };
    return rels;
}

inline RelationCheck verify_relation(const ExactSequenceRelation& rel, const Catalog& cat = catalog())
{
    ChernCharacter sum;
    for (const auto& t : rel.terms) {
        auto e = cat.lookup(t.name);
        if (!e) {
            throw std::out_of_range("relation " + rel.name + " names unknown entry " + t.name);
        }
        sum += Rational(t.sign) * e->ch;
    }
    return {rel.name, sum.is_zero(), sum};
}

inline std::vector<RelationCheck> verify_relations(const Catalog& cat = catalog())
{
    std::vector<RelationCheck> out;
    for (const auto& r : relations()) {
        out.push_back(verify_relation(r, cat));
    }
    return out;
}

/// Chern character of a catalog entry, if the name is known.
inline std::optional<ChernCharacter> catalog_class(std::string_view name)
{
    if (auto e = catalog().lookup(name)) {
        return e->ch;
    }
    return std::nullopt;
}

} // namespace tiltwall
