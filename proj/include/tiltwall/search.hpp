#pragma once

// Enumeration of numerical destabilizing decompositions v = A + B.

#include <tiltwall/walls.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

namespace tiltwall {

struct SearchConfig {
    /// |ch0| bound for both pieces. Unset means the documented default of each search.
    std::optional<int> rank_bound;
    /// Extra ch2 lattice steps scanned on each side of the Delta-forced interval.
    int ch2_steps = 0;
    /// Record the chi-integrality condition on the (unknown) ch3 of the sub.
    bool include_ch3 = false;
    /// Also return candidates that failed some constraint.
    bool keep_rejected = false;
};

struct ConstraintCheck {
    std::string name;
    bool satisfied = false;
    std::string witness;
};

struct DestabCandidate {
    ChernCharacter sub;
    ChernCharacter quotient;
    WallLocus wall = Nowhere{};
    std::optional<Rational> alpha_sq; // solved point on the witness line
    std::vector<ConstraintCheck> record;

    bool accepted() const
    {
        return std::all_of(record.begin(), record.end(), [](const ConstraintCheck& c) { return c.satisfied; });
    }
};

/// A branch cut off before a full class was formed.
struct PrunedBranch {
    Integer rank;
    Integer c1;
    std::string reason;
};

struct SearchReport {
    Rational witness_beta;
    int rank_bound = 0;
    std::vector<DestabCandidate> candidates; // accepted, plus rejected when keep_rejected
    std::vector<PrunedBranch> pruned;

    std::size_t accepted_count() const
    {
        return static_cast<std::size_t>(
            std::count_if(candidates.begin(), candidates.end(), [](const DestabCandidate& c) { return c.accepted(); }));
    }
};

inline int default_rank_bound(const ChernCharacter& v)
{
    Integer r = mp::abs(mp::numerator(v.c0));
    int n = r > 1000000 ? 1000000 : static_cast<int>(r);
    return std::max(n + 2, 4);
}

namespace detail {

inline std::string interval_text(const Rational& lo, const Rational& hi)
{
    return "[" + to_string(lo) + ", " + to_string(hi) + "]";
}

/// ch3 residue making chi integral, or nullopt when no lattice ch3 does.
inline std::optional<Rational> ch3_residue(const ChernCharacter& sub, const ThreefoldGeometry& g)
{
    const auto& t = g.todd;
    Rational k = g.degree * (t[0] * sub.c2 + t[1] * sub.c1 + t[2] * sub.c0);
    // deg * c3 runs over (deg/den3) Z; together with Z that is (1/q) Z, q the reduced denominator.
    Rational step(Integer(g.degree), Integer(g.ch3_denominator));
    Integer q = mp::denominator(step);
    if (!is_integer(k * Rational(q))) {
        return std::nullopt;
    }
    Rational modulus = Rational(1) / g.degree;
    Rational r = -k / g.degree;
    r -= Rational(floor_of(r / modulus)) * modulus;
    return r;
}

inline void add(std::vector<ConstraintCheck>& rec, std::string name, bool ok, std::string witness)
{
    rec.push_back({std::move(name), ok, std::move(witness)});
}

} // namespace detail

/// All lattice splits of v into two pieces of equal tilt slope at some point of
/// the line beta = beta0, subject to the heart and Delta constraints.
inline SearchReport search_on_line_report(const ChernCharacter& v, const Rational& beta0, const SearchConfig& cfg = {},
    const ThreefoldGeometry& g = quadric())
{
    SearchReport rep;
    rep.witness_beta = beta0;
    rep.rank_bound = cfg.rank_bound.value_or(default_rank_bound(v));
    if (Rational(rep.rank_bound) < mp::abs(v.c0)) {
        throw std::invalid_argument("rank bound below |ch0(v)|");
    }
    const int R = rep.rank_bound;

    ChernCharacter tv = twisted_char(v, beta0);
    const Rational& r = tv.c0;
    const Rational& x = tv.c1;
    const Rational& y = tv.c2;
    if (x <= 0) {
        rep.pruned.push_back({Integer(0), Integer(0), x < 0 ? "v not in heart" : "v has infinite slope"});
        return rep;
    }
    const Rational dv = x * x - 2 * r * y; // Delta / deg^2, twist invariant
    const int den2 = g.ch2_denominator;
    const ChernCharacter vt = v.truncated();

    Integer rv = mp::numerator(r);
    Integer amin = std::max(Integer(-R), Integer(rv - R));
    Integer amax = std::min(Integer(R), Integer(rv + R));
    for (Integer a = amin; a <= amax; ++a) {
        Rational ra(a);
        Integer c1lo = ceil_of(beta0 * ra);
        Integer c1hi = floor_of(beta0 * ra + x);
        for (Integer c1 = c1lo; c1 <= c1hi; ++c1) {
            Rational xa = Rational(c1) - beta0 * ra;
            if (xa == 0 || xa == x) {
                rep.pruned.push_back({a, c1, "infinite slope on one side"});
                continue;
            }
            Rational denom = ra * x - r * xa;
            if (denom == 0) {
                rep.pruned.push_back({a, c1, "proportional charges, no wall"});
                continue;
            }
            // y_A window from 0 <= Delta <= Delta(v) on the piece of nonzero rank.
            Rational lo, hi;
            if (a != 0) {
                Rational e1 = xa * xa / (2 * ra);
                Rational e2 = (xa * xa - dv) / (2 * ra);
                lo = std::min(e1, e2);
                hi = std::max(e1, e2);
            } else {
                Rational xb = x - xa;
                Rational e1 = xb * xb / (2 * r);
                Rational e2 = (xb * xb - dv) / (2 * r);
                lo = y - std::max(e1, e2);
                hi = y - std::min(e1, e2);
            }
            // untwisted c2 = y_A + beta0 c1 - beta0^2 a / 2
            Rational shift = beta0 * Rational(c1) - beta0 * beta0 * ra / 2;
            Integer klo = ceil_of((lo + shift) * den2) - cfg.ch2_steps;
            Integer khi = floor_of((hi + shift) * den2) + cfg.ch2_steps;
            if (klo > khi) {
                rep.pruned.push_back({a, c1, "empty ch2 window " + detail::interval_text(lo + shift, hi + shift)});
                continue;
            }
            for (Integer k = klo; k <= khi; ++k) {
                Rational c2(k, Integer(den2));
                ChernCharacter A{ra, Rational(c1), c2, Rational(0)};
                ChernCharacter B = vt - A;
                Rational ya = c2 - shift;
                Rational xb = x - xa;
                Rational yb = y - ya;
                Rational rb = r - ra;

                DestabCandidate cand;
                cand.sub = A;
                cand.quotient = B;
                auto& rec = cand.record;
                detail::add(rec, "rank-bound", mp::abs(a) <= R && mp::abs(rb) <= R,
                    "|a|=" + to_string(mp::abs(ra)) + " |r-a|=" + to_string(mp::abs(rb)) + " R=" + std::to_string(R));
                detail::add(rec, "heart", xa > 0 && xa < x, "ch1^b(A)=" + to_string(xa) + " of " + to_string(x));
                Rational a2 = 2 * (ya * x - y * xa) / denom;
                detail::add(rec, "slope-equality", a2 > 0, "alpha^2=" + to_string(a2));
                Rational da = xa * xa - 2 * ra * ya;
                Rational db = xb * xb - 2 * rb * yb;
                Rational scale = Rational(g.degree) * g.degree;
                detail::add(rec, "delta-sub>=0", da >= 0, to_string(da * scale));
                detail::add(rec, "delta-quotient>=0", db >= 0, to_string(db * scale));
                detail::add(rec, "delta-sub<=delta-v", da <= dv, to_string(da * scale) + " vs " + to_string(dv * scale));
                detail::add(rec, "delta-quotient<=delta-v", db <= dv, to_string(db * scale) + " vs " + to_string(dv * scale));
                if (cfg.include_ch3) {
                    auto res = detail::ch3_residue(A, g);
                    detail::add(rec, "chi-integrality", res.has_value(),
                        res ? "ch3(A) = " + to_string(*res) + " mod 1/" + std::to_string(g.degree) : "no lattice ch3");
                }
                if (a2 > 0) {
                    cand.alpha_sq = a2;
                }
                cand.wall = wall_between(vt, A);
                if (cand.accepted() || cfg.keep_rejected) {
                    rep.candidates.push_back(std::move(cand));
                }
            }
        }
    }
    std::stable_sort(rep.candidates.begin(), rep.candidates.end(),
        [](const DestabCandidate& p, const DestabCandidate& q) { return p.sub < q.sub; });
    return rep;
}

inline std::vector<DestabCandidate> search_on_line(
    const ChernCharacter& v, const Rational& beta0, const SearchConfig& cfg = {}, const ThreefoldGeometry& g = quadric())
{
    return search_on_line_report(v, beta0, cfg, g).candidates;
}

/// Unordered {A, B} pairs among the accepted candidates.
inline std::vector<std::pair<ChernCharacter, ChernCharacter>> candidate_families(const std::vector<DestabCandidate>& cands)
{
    std::vector<std::pair<ChernCharacter, ChernCharacter>> out;
    for (const auto& c : cands) {
        if (!c.accepted()) {
            continue;
        }
        auto p = c.quotient < c.sub ? std::make_pair(c.quotient, c.sub) : std::make_pair(c.sub, c.quotient);
        if (std::find(out.begin(), out.end(), p) == out.end()) {
            out.push_back(p);
        }
    }
    return out;
}

/// A rational line crossed by every semicircular wall left of the vertical wall:
/// the vertex of the left branch of the apex hyperbola, when it is rational.
inline std::optional<Rational> left_witness_line(const ChernCharacter& v)
{
    ApexHyperbola h = apex_hyperbola(v);
    Rational root;
    if (h.half_width_sq <= 0 || !rational_sqrt(h.half_width_sq, root)) {
        return std::nullopt;
    }
    return h.center - root;
}

inline SearchReport search_left_of_vertical_report(const ChernCharacter& v, const SearchConfig& cfg = {},
    std::optional<Rational> witness = std::nullopt, const ThreefoldGeometry& g = quadric())
{
    if (v.c0 == 0) {
        throw std::domain_error("search_left_of_vertical needs nonzero rank");
    }
    if (!witness) {
        witness = left_witness_line(v);
        if (!witness) {
            throw std::invalid_argument("no rational witness line derivable; pass one explicitly");
        }
    }
    return search_on_line_report(v, *witness, cfg, g);
}

inline std::vector<DestabCandidate> search_left_of_vertical(const ChernCharacter& v, const SearchConfig& cfg = {},
    std::optional<Rational> witness = std::nullopt, const ThreefoldGeometry& g = quadric())
{
    return search_left_of_vertical_report(v, cfg, witness, g).candidates;
}

namespace detail {

/// p - q*beta >= 0 on the whole closed span [c - sqrt(r2), c + sqrt(r2)].
inline bool linear_nonneg_on_span(const Rational& p, const Rational& q, const Rational& c, const Rational& r2)
{
    Rational mid = p - q * c;
    return mid >= 0 && mid * mid >= q * q * r2;
}

} // namespace detail

/// Decompositions whose pieces have equal tilt slope identically along w and
/// stay in the heart over the whole wall.
inline std::vector<DestabCandidate> jh_factors_on_wall(
    const ChernCharacter& v, const WallLocus& locus, const SearchConfig& cfg = {}, const ThreefoldGeometry& g = quadric())
{
    const auto* w = std::get_if<NumericalWall>(&locus);
    if (!w) {
        throw std::domain_error("not a wall for v: " + to_string(locus));
    }
    bool is_wall = false;
    if (w->is_semicircle()) {
        if (v.c0 == 0) {
            is_wall = v.c1 != 0 && w->center == rank_zero_top_line(v);
        } else {
            ApexHyperbola h = apex_hyperbola(v);
            Rational d = w->center - h.center;
            is_wall = d * d - w->radius_sq == h.half_width_sq;
        }
    }
    if (!is_wall) {
        throw std::domain_error("not a wall for v: " + to_string(*w));
    }
    SearchConfig inner = cfg;
    inner.keep_rejected = false;
    std::vector<DestabCandidate> out;
    for (auto& cand : search_on_line(v, w->center, inner, g)) {
        if (!(cand.wall == locus)) {
            continue;
        }
        // Im Z / deg of A is c1 - beta a; of B it is (c1(v) - c1) - beta (c0(v) - a).
        bool heart = detail::linear_nonneg_on_span(cand.sub.c1, cand.sub.c0, w->center, w->radius_sq)
            && detail::linear_nonneg_on_span(cand.quotient.c1, cand.quotient.c0, w->center, w->radius_sq);
        detail::add(cand.record, "heart-along-wall", heart, to_string(*w));
        if (heart || cfg.keep_rejected) {
            out.push_back(std::move(cand));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Limit regime along beta = alpha - 1, alpha -> 0+.

/// Polynomial in alpha; coeffs[i] multiplies alpha^i.
struct AlphaPoly {
    std::vector<Rational> coeffs;

    AlphaPoly() = default;
    AlphaPoly(std::initializer_list<Rational> c) : coeffs(c) { trim(); }

    void trim()
    {
        while (!coeffs.empty() && coeffs.back() == 0) {
            coeffs.pop_back();
        }
    }
    bool is_zero() const { return coeffs.empty(); }

    /// Index and sign of the lowest nonzero coefficient; sign 0 for the zero polynomial.
    std::pair<int, int> lowest() const
    {
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            if (coeffs[i] != 0) {
                return {static_cast<int>(i), sign_of(coeffs[i])};
            }
        }
        return {-1, 0};
    }

    /// Sign for all sufficiently small alpha > 0.
    int germ_sign() const { return lowest().second; }

    Rational operator()(const Rational& a) const
    {
        Rational acc = 0;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
            acc = acc * a + *it;
        }
        return acc;
    }

    friend AlphaPoly operator+(const AlphaPoly& p, const AlphaPoly& q)
    {
        AlphaPoly out;
        out.coeffs.assign(std::max(p.coeffs.size(), q.coeffs.size()), Rational(0));
        for (std::size_t i = 0; i < p.coeffs.size(); ++i) out.coeffs[i] += p.coeffs[i];
        for (std::size_t i = 0; i < q.coeffs.size(); ++i) out.coeffs[i] += q.coeffs[i];
        out.trim();
        return out;
    }
    friend AlphaPoly operator*(const Rational& k, const AlphaPoly& p)
    {
        AlphaPoly out = p;
        for (auto& c : out.coeffs) c *= k;
        out.trim();
        return out;
    }
    friend AlphaPoly operator-(const AlphaPoly& p, const AlphaPoly& q) { return p + Rational(-1) * q; }
    friend AlphaPoly operator*(const AlphaPoly& p, const AlphaPoly& q)
    {
        AlphaPoly out;
        if (p.is_zero() || q.is_zero()) {
            return out;
        }
        out.coeffs.assign(p.coeffs.size() + q.coeffs.size() - 1, Rational(0));
        for (std::size_t i = 0; i < p.coeffs.size(); ++i)
            for (std::size_t j = 0; j < q.coeffs.size(); ++j) out.coeffs[i + j] += p.coeffs[i] * q.coeffs[j];
        out.trim();
        return out;
    }

    std::string str() const
    {
        if (is_zero()) {
            return "0";
        }
        std::string s;
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            if (coeffs[i] == 0) continue;
            if (!s.empty()) s += " + ";
            s += "(" + to_string(coeffs[i]) + ")";
            if (i >= 1) s += "a";
            if (i >= 2) s += "^" + std::to_string(i);
        }
        return s;
    }
};

/// Rotated charge -iZ of a truncated class along beta = alpha - 1, as polynomials in alpha.
struct PathCharge {
    AlphaPoly re;
    AlphaPoly im;
};

inline PathCharge rotated_charge_on_path(const ChernCharacter& u, const ThreefoldGeometry& g = quadric())
{
    Rational d = g.degree;
    // beta = alpha - 1
    // Im Z = deg (c1 + c0 - alpha c0)
    // ch2^beta = c2 - beta c1 + beta^2 c0 / 2
    //          = (c2 + c1 + c0/2) - alpha (c1 + c0) + alpha^2 c0 / 2
    AlphaPoly imz{d * (u.c1 + u.c0), -d * u.c0};
    AlphaPoly ch2b{u.c2 + u.c1 + u.c0 / 2, -(u.c1 + u.c0), u.c0 / 2};
    AlphaPoly rez = AlphaPoly{Rational(0), Rational(0), d * u.c0 / 2} - d * ch2b;
    return {imz, Rational(-1) * rez};
}

struct LimitCandidate {
    Integer a; // ch0 of the quotient B
    Integer b; // ch1 of the quotient B
    ChernCharacter quotient; // ch<=2(B)
    ChernCharacter sub;      // ch<=2(G) - ch<=2(B)
    std::vector<ConstraintCheck> record;

    bool survived() const
    {
        return std::all_of(record.begin(), record.end(), [](const ConstraintCheck& c) { return c.satisfied; });
    }
};

struct LimitReport {
    ChernCharacter normalized; // the sign-normalised class G
    int rank_bound = 2;
    Rational mu0_bound;
    std::vector<LimitCandidate> candidates;
};

/// Rank bound applied to the quotient when the caller supplies none.
inline constexpr int limit_default_rank_bound = 2;

/// Quotients B of G = +-v with ch<=2(B) = (a, b, -b - a/2), so that the rotated
/// charge of B tends to the same limit as that of G, checked against the
/// heart, slope and slope-bound inequalities for all small alpha > 0.
inline LimitReport limit_search_ku_report(const ChernCharacter& v, const Rational& mu0_lower_bound,
    const SearchConfig& cfg = {}, const ThreefoldGeometry& g = quadric())
{
    ChernCharacter G = v.truncated();
    PathCharge zg = rotated_charge_on_path(G, g);
    if (zg.im.is_zero()) {
        throw std::domain_error("imaginary part of the rotated charge vanishes identically on the path");
    }
    if (zg.im.coeffs.front() != 0) {
        throw std::domain_error("limit charge nonzero: Im Z0 does not vanish at (0,-1)");
    }
    if (zg.im.germ_sign() < 0) {
        G = -G;
        zg = rotated_charge_on_path(G, g);
    }

    LimitReport rep;
    rep.normalized = G;
    rep.rank_bound = cfg.rank_bound.value_or(limit_default_rank_bound);
    rep.mu0_bound = mu0_lower_bound;
    const int R = rep.rank_bound;
    const Rational d = g.degree;

    // Im Z0(B) = -deg (a+b) alpha, so 0 < Im Z0(B) <= Im Z0(G) bounds s = a + b.
    Rational g1 = zg.im.coeffs.size() > 1 ? zg.im.coeffs[1] : Rational(0);
    Integer smin = -floor_of(g1 / d) - 1;

    const std::vector<Rational> samples{make_rational(1, 8), make_rational(1, 16), make_rational(1, 32)};

    for (Integer s = smin; s <= 0; ++s) {
        for (Integer a = -R - 1; a <= R + 1; ++a) {
            Integer b = s - a;
            ChernCharacter B{Rational(a), Rational(b), Rational(-b) - Rational(a) / 2, Rational(0)};
            PathCharge zb = rotated_charge_on_path(B, g);

            LimitCandidate cand;
            cand.a = a;
            cand.b = b;
            cand.quotient = B;
            cand.sub = G - B;
            auto& rec = cand.record;

            struct Ineq {
                const char* name;
                AlphaPoly poly;
                bool strict;
            };
            std::vector<Ineq> ineqs{
                {"im-quotient>0", zb.im, true},
                {"im-quotient<=im", zg.im - zb.im, false},
                {"mu0-quotient<mu0", zb.re * zg.im - zg.re * zb.im, true},
                {"re-quotient>re", zb.re - zg.re, true},
                {"mu0-quotient>=bound", Rational(-1) * zb.re - mu0_lower_bound * zb.im, false},
            };
            bool all_germs = true;
            for (const auto& q : ineqs) {
                int sg = q.poly.germ_sign();
                bool ok = q.strict ? sg > 0 : sg >= 0;
                all_germs = all_germs && ok;
                detail::add(rec, q.name, ok, q.poly.str());
            }
            detail::add(rec, "rank-bound", mp::abs(a) <= R, "|a|=" + mp::abs(a).str() + " R=" + std::to_string(R));

            // Exact sampling at small alpha; a disagreement only means the samples are not yet small enough.
            if (all_germs) {
                std::string agree = "agree";
                for (const auto& al : samples) {
                    for (const auto& q : ineqs) {
                        Rational val = q.poly(al);
                        bool ok = q.strict ? val > 0 : val >= 0;
                        if (!ok) {
                            agree = std::string("differs at alpha=") + to_string(al) + " for " + q.name;
                        }
                    }
                }
                rec.push_back({"sampling", true, agree});
            }

            if (cand.survived() || cfg.keep_rejected) {
                rep.candidates.push_back(std::move(cand));
            }
        }
    }
    std::stable_sort(rep.candidates.begin(), rep.candidates.end(),
        [](const LimitCandidate& p, const LimitCandidate& q) { return p.a != q.a ? p.a < q.a : p.b < q.b; });
    return rep;
}

inline std::vector<LimitCandidate> limit_search_ku(const ChernCharacter& v, const Rational& mu0_lower_bound,
    const SearchConfig& cfg = {}, const ThreefoldGeometry& g = quadric())
{
    auto rep = limit_search_ku_report(v, mu0_lower_bound, cfg, g);
    std::vector<LimitCandidate> out;
    for (auto& c : rep.candidates) {
        if (c.survived()) {
            out.push_back(std::move(c));
        }
    }
    return out;
}

} // namespace tiltwall
