#pragma once

// Registry of reproducible computations. Each check compares an exact expected
// string with the string produced by the library.

#include <tiltwall/catalog.hpp>
#include <tiltwall/search.hpp>

#include <functional>
#include <sstream>

namespace tiltwall {

struct CheckResult {
    std::string check_id;
    std::string name;
    bool pass = false;
    std::string expected;
    std::string actual;
    std::string anchor;
};

struct ReproCheck {
    std::string id;
    std::string name;
    std::string anchor;
    std::string expected;
    std::function<std::string()> actual;
};

namespace repro_detail {

inline Rational q(long long p, long long d = 1) { return make_rational(p, d); }
inline ChernCharacter vclass() { return catalog().ch("P_x"); }

inline std::string candidate_set(const std::vector<DestabCandidate>& cands)
{
    std::string s = "{";
    for (const auto& c : cands) {
        if (s.size() > 1) s += "; ";
        s += format_class(c.sub) + " + " + format_class(c.quotient);
    }
    return s + "}";
}

/// Empty-search check over growing rank bounds.
inline std::string empty_over_bounds(const ChernCharacter& v, bool via_left_search)
{
    int start = std::max(1, static_cast<int>(mp::abs(mp::numerator(v.c0))));
    std::string out;
    for (int R = start; R <= 6; ++R) {
        SearchConfig cfg;
        cfg.rank_bound = R;
        if (!out.empty()) out += " ";
        auto cands = via_left_search ? search_left_of_vertical(v.truncated(), cfg) : search_on_line(v.truncated(), q(-1), cfg);
        out += "R=" + std::to_string(R) + ":" + candidate_set(cands);
    }
    return out;
}

inline std::string empty_expected(const ChernCharacter& v)
{
    int start = std::max(1, static_cast<int>(mp::abs(mp::numerator(v.c0))));
    std::string out;
    for (int R = start; R <= 6; ++R) {
        if (!out.empty()) out += " ";
        out += "R=" + std::to_string(R) + ":{}";
    }
    return out;
}

inline std::string survivors(const ChernCharacter& ku)
{
    std::string s = "{";
    for (const auto& c : limit_search_ku(ku, q(-2))) {
        if (s.size() > 1) s += ", ";
        s += "(" + c.a.str() + "," + c.b.str() + ")";
    }
    return s + "}";
}

/// 25 points whose 50 coordinates have pairwise distinct prime denominators.
inline std::vector<TiltPoint> determinant_points()
{
    std::vector<long long> primes;
    for (long long n = 2; primes.size() < 50; ++n) {
        bool prime = true;
        for (long long p : primes) {
            if (p * p > n) break;
            if (n % p == 0) {
                prime = false;
                break;
            }
        }
        if (prime) primes.push_back(n);
    }
    std::vector<TiltPoint> pts;
    for (std::size_t i = 0; i < 25; ++i) {
        long long pa = primes[2 * i], pb = primes[2 * i + 1];
        pts.emplace_back(q(static_cast<long long>(i) + 1, pa), q(-(pb - 1), pb));
    }
    return pts;
}

inline std::string affine_in(const std::function<Rational(const Rational&, const Rational&)>& f, const char* x, const char* y)
{
    // f is checked to be linear: f(0,0) = 0 and f(x,y) = f(1,0) x + f(0,1) y at a few points.
    Rational cx = f(q(1), q(0)), cy = f(q(0), q(1));
    bool linear = f(q(0), q(0)) == 0;
    for (auto [a, b] : {std::pair{q(3), q(-5, 12)}, {q(-7), q(11, 6)}, {q(2), q(1, 12)}}) {
        linear = linear && f(a, b) == cx * a + cy * b;
    }
    std::string s = to_string(cx) + x + (cy < 0 ? "-" : "+") + to_string(cy < 0 ? Rational(-cy) : cy) + y;
    return linear ? s : s + " (not linear)";
}

} // namespace repro_detail

inline const std::vector<ReproCheck>& repro_checks()
{
    using namespace repro_detail;
    static const std::vector<ReproCheck> checks{
        {"C1", "px-chern", "three derivations of ch(P_x)",
            "(3, -1, -1/2, 1/3) | (3, -1, -1/2, 1/3) | (3, -1, -1/2, 1/3)",
            [] {
                const Catalog& c = catalog();
                ChernCharacter a = q(4) * c.ch("O") - c.ch("I_x(H)");
                ChernCharacter b = q(2) * c.ch("S") - c.ch("O(-H)");
                ChernCharacter k = to_chern(KuClass{-1, 2});
                return format_class(a) + " | " + format_class(b) + " | " + format_class(k);
            }},
        {"C2", "no-wall-left-v", "no walls for P_x along beta=-1", empty_expected(vclass()),
            [] { return empty_over_bounds(vclass(), false); }},
        {"C3", "torsion-unique-wall", "unique wall W(1/2) for (0,1,1/2) at alpha=1/2",
            "{(-1, 0, 0, 0) + (1, 1, 1/2, 0)} alpha^2=1/4 wall=S center=1/2 r2=1/4",
            [] {
                auto cands = search_on_line(ChernCharacter{q(0), q(1), q(1, 2), q(0)}, q(1, 2));
                std::string s = "{";
                for (const auto& [a, b] : candidate_families(cands)) {
                    if (s.size() > 1) s += "; ";
                    s += format_class(a) + " + " + format_class(b);
                }
                s += "}";
                std::string alpha, wall;
                for (const auto& c : cands) {
                    std::string a2 = "alpha^2=" + to_string(*c.alpha_sq);
                    std::string w = "wall=" + to_string(c.wall);
                    alpha = alpha.empty() || alpha == a2 ? a2 : "alpha^2 differs";
                    wall = wall.empty() || wall == w ? w : "walls differ";
                }
                return s + " " + alpha + " " + wall;
            }},
        {"C4", "wall-5-2", "W(G, O(-2H)[1]) has radius 5/2", "S center=1/2 r2=25/4",
            [] { return to_string(wall_between({q(0), q(1), q(1, 2), q(0)}, -catalog().ch("O(-2H)"))); }},
        {"C5", "wall-7-5", "W(O(3H), -v) centred at 7/5, radius 8/5", "S center=7/5 r2=64/25",
            [] { return to_string(wall_between(line_bundle(q(3)), -vclass())); }},
        {"C6", "wall-7-2", "W(O_Y(D), O(-3H)[1]) has radius 7/2", "S center=1/2 r2=49/4",
            [] { return to_string(wall_between(catalog().ch("O_Y(D)"), -line_bundle(q(-3)))); }},
        {"C7", "apex-hyperbola-v", "(beta+1/3)^2 - alpha^2 = (2/3)^2", "center=-1/3 half_width_sq=4/9",
            [] {
                auto h = apex_hyperbola(vclass());
                return "center=" + to_string(h.center) + " half_width_sq=" + to_string(h.half_width_sq);
            }},
        {"C8", "chi-self-v", "chi(E,E) = -3", "-3", [] { return to_string(euler_pairing(vclass(), vclass())); }},
        {"C9", "chi-tilde-O", "chi(E~,O) = -3", "-3",
            [] { return to_string(euler_pairing(-vclass(), line_bundle(q(0)))); }},
        {"C10", "chi-point-px", "chi(O_x,P_x) = -3", "-3",
            [] { return to_string(euler_pairing(catalog().ch("O_x"), catalog().ch("P_x"))); }},
        {"C11", "ku-determinant", "det = ((beta+1)^2 + alpha^2)/2", "25/25",
            [] {
                int ok = 0;
                for (const auto& p : determinant_points()) {
                    Rational b1 = p.beta + 1;
                    ok += ku_determinant(p) == (b1 * b1 + p.alpha_sq) / 2;
                }
                return std::to_string(ok) + "/25";
            }},
        {"C12", "spinor-no-walls", "no walls for S along beta=-1", empty_expected(catalog().ch("S")),
            [] { return empty_over_bounds(catalog().ch("S"), true); }},
        {"C13", "line-no-walls", "no walls for I_l along beta=-1", empty_expected(catalog().ch("I_l")),
            [] { return empty_over_bounds(catalog().ch("I_l"), true); }},
        {"C14", "limit-search-v", "limit destabilizers of 2*l2 - l1", "{(-2,1)}",
            [] { return survivors(to_chern(KuClass{-1, 2})); }},
        {"C15", "limit-search-spinor", "limit destabilizers of l2", "{}",
            [] { return survivors(to_chern(KuClass{0, 1})); }},
        {"C16", "limit-search-line", "limit destabilizers of l2 - l1", "{(-2,1)}",
            [] { return survivors(to_chern(KuClass{-1, 1})); }},
        {"C17", "relations", "signed sums of the exact sequences vanish", "9/9",
            [] {
                int ok = 0;
                std::string bad;
                for (const auto& r : verify_relations()) {
                    ok += r.pass;
                    if (!r.pass) bad += " " + r.name + "=" + format_class(r.residual);
                }
                return std::to_string(ok) + "/9" + bad;
            }},
        {"C18", "omega-C", "ch(omega_C) and chi(omega_C) = -2", "(0, 0, 1, -5/2) chi=-2",
            [] {
                const auto& w = catalog().ch("omega_C");
                return format_class(w) + " chi=" + to_string(euler_char(w));
            }},
        {"C19", "chi-OYD", "chi(O_Y(D)) = 3", "3", [] { return to_string(euler_char(catalog().ch("O_Y(D)"))); }},
        {"C20", "bn-locus-chi", "chi(P_x,U_Q) = chi(E_D,U_Q) = -3", "-3 -3",
            [] {
                const Catalog& c = catalog();
                return to_string(euler_pairing(c.ch("P_x"), c.ch("U_Q"))) + " "
                    + to_string(euler_pairing(c.ch("E_D"), c.ch("U_Q")));
            }},
        {"C21", "maximal-ch3", "chi(E) = H^3 (ch3 - 1/3) for ch=(3,-1,-1/2,e)", "chi=2e-2/3 zero at e=1/3",
            [] {
                auto chi = [](const Rational& e) { return euler_char({q(3), q(-1), q(-1, 2), e}); };
                Rational c0 = chi(q(0));
                Rational c1 = chi(q(1)) - c0;
                bool affine = chi(q(7, 12)) == c0 + c1 * q(7, 12) && chi(q(-5)) == c0 - 5 * c1;
                std::string s = "chi=" + to_string(c1) + "e" + (c0 < 0 ? "-" : "+") + to_string(c0 < 0 ? Rational(-c0) : c0);
                s += " zero at e=" + to_string(-c0 / c1);
                return affine ? s : s + " (not affine)";
            }},
        {"C22", "sum-lines-chi", "chi(O,E) = r+2e, chi(E,O) = r-2e for ch=(r,0,0,e)",
            "chi(O,E)=1r+2e chi(E,O)=1r-2e",
            [] {
                auto left = [](const Rational& r, const Rational& e) {
                    return euler_pairing(line_bundle(q(0)), {r, q(0), q(0), e});
                };
                auto right = [](const Rational& r, const Rational& e) {
                    return euler_pairing({r, q(0), q(0), e}, line_bundle(q(0)));
                };
                return "chi(O,E)=" + affine_in(left, "r", "e") + " chi(E,O)=" + affine_in(right, "r", "e");
            }},
    };
    return checks;
}

inline CheckResult run_check(const ReproCheck& c)
{
    CheckResult r{c.id, c.name, false, c.expected, {}, c.anchor};
    try {
        r.actual = c.actual();
    } catch (const std::exception& e) {
        r.actual = std::string("error: ") + e.what();
    }
    r.pass = r.actual == r.expected;
    return r;
}

/// By id ("C8") or by name ("chi-self-v").
inline CheckResult run_check(std::string_view id)
{
    for (const auto& c : repro_checks()) {
        if (c.id == id || c.name == id) {
            return run_check(c);
        }
    }
    throw std::out_of_range("unknown check '" + std::string(id) + "'");
}

inline int check_number(const std::string& id) { return std::stoi(id.substr(1)); }

inline std::vector<CheckResult> run_all()
{
    std::vector<CheckResult> out;
    for (const auto& c : repro_checks()) {
        out.push_back(run_check(c));
    }
    std::sort(out.begin(), out.end(),
        [](const CheckResult& a, const CheckResult& b) { return check_number(a.check_id) < check_number(b.check_id); });
    return out;
}

} // namespace tiltwall
