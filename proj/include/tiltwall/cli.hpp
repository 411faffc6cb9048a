#pragma once

// Command-line driver. Kept in a header so tests can run it in-process.

#include <tiltwall/repro.hpp>

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <regex>
#include <set>

namespace tiltwall::cli {

constexpr int exit_ok = 0;
constexpr int exit_check_failed = 1;
constexpr int exit_usage = 2;

struct Options {
    std::string geometry_file;
    bool off_lattice = false;
    ThreefoldGeometry geometry = quadric();
};

/// Class literal "(c0,c1,c2[,c3])", catalog name, or Ku literal "a*l1 + b*l2".
inline ChernCharacter resolve_class(const std::string& text, const Options& opt)
{
    ChernCharacter v;
    auto s = detail::trim(text);
    if (!s.empty() && s.front() == '(') {
        v = parse_class(s);
    } else if (auto e = catalog().lookup(s)) {
        v = e->ch;
    } else if (looks_like_ku(s)) {
        v = to_chern(parse_ku(s));
    } else {
        throw parse_error("not a class literal, catalog name or Ku literal: '" + text + "'");
    }
    if (!opt.off_lattice && !lattice_valid(v, opt.geometry)) {
        throw parse_error("class " + format_class(v) + " is off the lattice (use --off-lattice to allow)");
    }
    return v;
}

/// Splits on commas that are not inside parentheses.
inline std::vector<std::string> split_top_level(const std::string& s)
{
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char ch : s) {
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (ch == ',' && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!detail::trim(cur).empty()) out.push_back(cur);
    return out;
}

inline bool color_enabled()
{
    const char* c = std::getenv("TILTWALL_COLOR");
    return c && std::string(c) == "1";
}

inline std::string status_text(bool pass)
{
    std::string s = pass ? "PASS" : "FAIL";
    if (color_enabled()) {
        s = (pass ? "\x1b[32m" : "\x1b[31m") + s + "\x1b[0m";
    }
    return s;
}

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

inline void print_candidate(std::ostream& out, const DestabCandidate& c, bool verbose)
{
    out << "sub=" << format_class(c.sub) << " quotient=" << format_class(c.quotient) << " wall=" << to_string(c.wall);
    if (c.alpha_sq) {
        out << " alpha2=" << to_string(*c.alpha_sq);
    }
    out << " status=" << (c.accepted() ? "accepted" : "rejected") << "\n";
    if (verbose) {
        for (const auto& r : c.record) {
            out << "    " << (r.satisfied ? "ok  " : "FAIL") << " " << r.name << ": " << r.witness << "\n";
        }
    }
}

inline void print_report(std::ostream& out, const SearchReport& rep, bool verbose)
{
    for (const auto& c : rep.candidates) {
        print_candidate(out, c, verbose);
    }
    if (verbose) {
        for (const auto& p : rep.pruned) {
            out << "pruned a=" << p.rank.str() << " c1=" << p.c1.str() << ": " << p.reason << "\n";
        }
    }
    out << "summary count=" << rep.accepted_count() << " witness_beta=" << to_string(rep.witness_beta)
        << " rank_bound=" << rep.rank_bound << "\n";
}

// ---------------------------------------------------------------------------
// Plot sampling. The only floating-point code in the project.

struct SampledCurve {
    std::string id;
    std::string label;
    bool dashed = false;
    std::vector<std::pair<double, double>> points; // (beta, alpha)
};

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline SampledCurve sample_wall(const std::string& id, const NumericalWall& w, int samples, double alpha_max)
{
    SampledCurve c{id, to_string(w), w.is_vertical(), {}};
    if (w.is_vertical()) {
        double b = to_double(w.beta0);
        for (int i = 1; i <= samples; ++i) {
            c.points.emplace_back(b, alpha_max * i / samples);
        }
        return c;
    }
    double ctr = to_double(w.center);
    double rad = std::sqrt(to_double(w.radius_sq));
    const double pi = std::acos(-1.0);
    for (int i = 0; i < samples; ++i) {
        double t = pi * (i + 0.5) / samples;
        c.points.emplace_back(ctr + rad * std::cos(t), rad * std::sin(t));
    }
    return c;
}

/// Residual of (beta - c)^2 + alpha^2 - r^2, scaled by r^2; beta - beta0 for vertical walls.
inline double wall_residual(const NumericalWall& w, double beta, double alpha)
{
    if (w.is_vertical()) {
        return beta - to_double(w.beta0);
    }
    double r2 = to_double(w.radius_sq);
    double d = beta - to_double(w.center);
    return (d * d + alpha * alpha - r2) / std::max(1.0, r2);
}

inline std::vector<SampledCurve> sample_hyperbola(const ApexHyperbola& h, int samples, double beta_lo, double beta_hi)
{
    std::vector<SampledCurve> out;
    double c = to_double(h.center);
    double hw = to_double(h.half_width_sq);
    std::string label = "(b - " + to_string(h.center) + ")^2 - a^2 = " + to_string(h.half_width_sq);
    SampledCurve left{"hyperbola-left", label, true, {}}, right{"hyperbola-right", label, true, {}};
    for (int i = 0; i <= samples; ++i) {
        double b = beta_lo + (beta_hi - beta_lo) * i / samples;
        double d = b - c;
        double a2 = d * d - hw;
        if (a2 > 0) {
            (d < 0 ? left : right).points.emplace_back(b, std::sqrt(a2));
        }
    }
    if (!left.points.empty()) out.push_back(left);
    if (!right.points.empty()) out.push_back(right);
    return out;
}

inline std::string svg_document(const std::vector<SampledCurve>& curves, const std::string& title)
{
    double bmin = 1e300, bmax = -1e300, amax = 0;
    for (const auto& c : curves) {
        for (auto [b, a] : c.points) {
            bmin = std::min(bmin, b);
            bmax = std::max(bmax, b);
            amax = std::max(amax, a);
        }
    }
    if (bmin > bmax) {
        bmin = -1;
        bmax = 1;
    }
    if (amax <= 0) amax = 1;
    const double W = 800, H = 450, pad = 40;
    auto sx = [&](double b) { return pad + (b - bmin) / std::max(1e-9, bmax - bmin) * (W - 2 * pad); };
    auto sy = [&](double a) { return H - pad - a / amax * (H - 2 * pad); };
    std::ostringstream o;
    o << std::setprecision(10);
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\">\n";
    o << "<title>" << title << "</title>\n";
    o << "<line x1=\"" << pad << "\" y1=\"" << sy(0) << "\" x2=\"" << W - pad << "\" y2=\"" << sy(0)
      << "\" stroke=\"black\"/>\n";
    const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};
    std::size_t k = 0;
    for (const auto& c : curves) {
        if (c.points.empty()) continue;
        o << "<polyline fill=\"none\" stroke=\"" << palette[k++ % 6] << "\"" << (c.dashed ? " stroke-dasharray=\"6,4\"" : "")
          << " points=\"";
        for (auto [b, a] : c.points) o << sx(b) << "," << sy(a) << " ";
        o << "\"/>\n";
        auto top = *std::max_element(
            c.points.begin(), c.points.end(), [](const auto& p, const auto& q) { return p.second < q.second; });
        o << "<text x=\"" << sx(top.first) << "\" y=\"" << sy(top.second) - 4 << "\" font-size=\"11\">" << c.id << ": "
          << c.label << "</text>\n";
    }
    o << "</svg>\n";
    return o.str();
}

// ---------------------------------------------------------------------------

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact tilt-stability and wall calculator for Picard-rank-one threefolds", "tiltwall"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_option("--geometry", opt.geometry_file, "Geometry description file (default: quadric threefold)");
    app.add_flag("--off-lattice", opt.off_lattice, "Accept classes off the Chern-character lattice");

    std::string a1, a2, beta, alpha2, mu0 = "-2", out_path, walls_list, format = "tsv", check_id;
    int rank_bound = 0, samples = 256, ch2_steps = 0;
    bool verbose = false, all = false, machine = false, include_ch3 = false;

    auto* ch = app.add_subcommand("ch", "Chern character, slope, discriminant, lattice and Ku data");
    ch->add_option("class", a1, "Class, catalog name or Ku literal")->required();

    auto* chi = app.add_subcommand("chi", "Euler pairing chi(v, w)");
    chi->add_option("v", a1)->required();
    chi->add_option("w", a2)->required();

    auto* wall = app.add_subcommand("wall", "Numerical wall W(v, w)");
    wall->add_option("v", a1)->required();
    wall->add_option("w", a2)->required();

    auto* walls = app.add_subcommand("walls", "Candidate walls crossing a vertical line");
    walls->add_option("v", a1)->required();
    walls->add_option("--witness-beta", beta, "Vertical line beta = q (default: derived left witness)");
    walls->add_option("--rank-bound", rank_bound);

    auto* destab = app.add_subcommand("destab", "Destabilizer search along beta = q with full records");
    destab->add_option("v", a1)->required();
    destab->add_option("--beta", beta)->required();
    destab->add_option("--rank-bound", rank_bound);
    destab->add_option("--ch2-steps", ch2_steps);
    destab->add_flag("--include-ch3", include_ch3);
    destab->add_flag("--verbose", verbose);

    auto* limit = app.add_subcommand("limitsearch", "Limit destabilizers at (alpha, beta) -> (0, -1)");
    limit->add_option("ku", a1, "Ku literal such as \"2*l2 - l1\"")->required();
    limit->add_option("--mu0-bound", mu0);
    limit->add_option("--rank-bound", rank_bound);
    limit->add_flag("--verbose", verbose);

    auto* region = app.add_subcommand("region", "Region membership of a point");
    region->add_option("name", a1, "V, V_tilde, V_tilde_L, V_tilde_R, V_L, V_R")->required();
    region->add_option("--alpha2", alpha2)->required();
    region->add_option("--beta", beta)->required();

    auto* cat = app.add_subcommand("catalog", "Catalog entries");
    cat->add_option("name", a1);

    auto* repro = app.add_subcommand("repro", "Reproduction checks");
    repro->add_flag("--all", all);
    repro->add_option("--check", check_id);
    repro->add_flag("--machine", machine, "Also print key=value lines");

    auto* plot = app.add_subcommand("plot", "Sample wall curves to TSV or SVG");
    plot->add_option("v", a1)->required();
    plot->add_option("--walls", walls_list, "Comma-separated classes w; plots W(v, w)");
    plot->add_option("-o", out_path)->required();
    plot->add_option("--format", format)->check(CLI::IsMember({"tsv", "svg"}));
    plot->add_option("--samples", samples)->check(CLI::PositiveNumber);

    // A Ku literal with a leading minus would otherwise parse as a short option.
    static const std::regex negative_ku(R"(-\s*\d*\s*\*?\s*l[12].*)");
    for (auto& a : args) {
        if (std::regex_match(a, negative_ku)) a.insert(0, " ");
    }

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return exit_ok;
        }
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }

    try {
        if (!opt.geometry_file.empty()) {
            opt.geometry = load_geometry(opt.geometry_file);
        }
        const ThreefoldGeometry& g = opt.geometry;
        SearchConfig cfg;
        if (rank_bound > 0) cfg.rank_bound = rank_bound;
        cfg.ch2_steps = ch2_steps;
        cfg.include_ch3 = include_ch3;
        cfg.keep_rejected = verbose;

        if (*ch) {
            ChernCharacter v = resolve_class(a1, opt);
            out << "ch = " << format_class(v) << "\n";
            out << "mu_H = " << mu_H(v).str() << "\n";
            out << "Delta_H = " << to_string(discriminant(v, g)) << "\n";
            out << "chi = " << to_string(euler_char(v, g)) << "\n";
            out << "hilbert = " << hilbert_polynomial(v, g).str() << "\n";
            out << "lattice_valid = " << yes_no(lattice_valid(v, g)) << "\n";
            out << "ku_orthogonal = " << yes_no(numerically_orthogonal_to_exceptionals(v, g)) << "\n";
            auto k = from_chern(v);
            out << "ku_class = " << (std::holds_alternative<KuClass>(k) ? to_string(std::get<KuClass>(k)) : "not in lattice")
                << "\n";
        } else if (*chi) {
            out << to_string(euler_pairing(resolve_class(a1, opt), resolve_class(a2, opt), g)) << "\n";
        } else if (*wall) {
            out << to_string(wall_between(resolve_class(a1, opt), resolve_class(a2, opt))) << "\n";
        } else if (*walls) {
            ChernCharacter v = resolve_class(a1, opt);
            std::optional<Rational> w;
            if (!beta.empty()) w = parse_rational(beta);
            SearchReport rep = w ? search_on_line_report(v, *w, cfg, g) : search_left_of_vertical_report(v, cfg, w, g);
            print_report(out, rep, false);
        } else if (*destab) {
            ChernCharacter v = resolve_class(a1, opt);
            print_report(out, search_on_line_report(v, parse_rational(beta), cfg, g), verbose);
        } else if (*limit) {
            ChernCharacter v = resolve_class(a1, opt);
            LimitReport rep = limit_search_ku_report(v, parse_rational(mu0), cfg, g);
            for (const auto& c : rep.candidates) {
                out << "(a,b)=(" << c.a.str() << "," << c.b.str() << ") quotient=" << format_class(c.quotient)
                    << " sub=" << format_class(c.sub) << " status=" << (c.survived() ? "survives" : "rejected") << "\n";
                if (verbose) {
                    for (const auto& r : c.record) {
                        out << "    " << (r.satisfied ? "ok  " : "FAIL") << " " << r.name << ": " << r.witness << "\n";
                    }
                }
            }
            std::size_t n = std::count_if(rep.candidates.begin(), rep.candidates.end(), [](const auto& c) { return c.survived(); });
            out << "summary survivors=" << n << " class=" << format_class(rep.normalized) << " mu0_bound="
                << to_string(rep.mu0_bound) << " rank_bound=" << rep.rank_bound << "\n";
        } else if (*region) {
            Region r = parse_region(a1);
            TiltPoint p(parse_rational(alpha2), parse_rational(beta));
            out << to_string(r) << ": " << (in_region(r, p) ? "inside" : "outside") << "\n";
        } else if (*cat) {
            std::vector<SheafDescriptor> rows;
            if (a1.empty()) {
                rows = catalog().entries();
            } else if (auto e = catalog().lookup(a1)) {
                rows.push_back(*e);
            } else {
                throw parse_error("unknown catalog entry '" + a1 + "'");
            }
            for (const auto& e : rows) {
                out << std::left << std::setw(10) << e.name << std::setw(24) << format_class(e.ch) << std::setw(5)
                    << (e.ku_member ? "Ku" : "-") << e.notes << "\n";
            }
        } else if (*repro) {
            std::vector<CheckResult> res;
            if (!check_id.empty()) {
                try {
                    res.push_back(run_check(check_id));
                } catch (const std::out_of_range& e) {
                    throw parse_error(e.what());
                }
            } else {
                res = run_all();
            }
            std::size_t pass = 0;
            for (const auto& r : res) {
                pass += r.pass;
                out << std::left << std::setw(5) << r.check_id << std::setw(22) << r.name << status_text(r.pass) << "  "
                    << r.actual << "\n";
                if (!r.pass) {
                    out << "      expected: " << r.expected << "\n";
                }
            }
            if (machine) {
                for (const auto& r : res) {
                    out << "check=" << r.check_id << " status=" << (r.pass ? "pass" : "fail") << " expected=\"" << r.expected
                        << "\" actual=\"" << r.actual << "\"\n";
                }
            }
            out << pass << "/" << res.size() << " pass\n";
            return pass == res.size() ? exit_ok : exit_check_failed;
        } else if (*plot) {
            ChernCharacter v = resolve_class(a1, opt);
            std::vector<NumericalWall> ws;
            if (!walls_list.empty()) {
                for (const auto& t : split_top_level(walls_list)) {
                    WallLocus l = wall_between(v, resolve_class(std::string(detail::trim(t)), opt));
                    if (auto p = std::get_if<NumericalWall>(&l)) {
                        ws.push_back(*p);
                    } else {
                        err << "skipping " << t << ": " << to_string(l) << "\n";
                    }
                }
            } else {
                std::optional<Rational> line;
                if (v.c0 != 0) {
                    line = left_witness_line(v);
                } else if (v.c1 != 0) {
                    line = rank_zero_top_line(v);
                }
                if (line) {
                    for (const auto& c : search_on_line(v, *line, cfg, g)) {
                        const auto& w = std::get<NumericalWall>(c.wall);
                        if (std::find(ws.begin(), ws.end(), w) == ws.end()) ws.push_back(w);
                    }
                }
                if (v.c0 != 0) ws.push_back(vertical_wall(v));
            }
            double amax = 1;
            for (const auto& w : ws) {
                if (w.is_semicircle()) amax = std::max(amax, std::sqrt(to_double(w.radius_sq)) * 1.1);
            }
            std::vector<SampledCurve> curves;
            for (std::size_t i = 0; i < ws.size(); ++i) {
                curves.push_back(sample_wall("w" + std::to_string(i + 1), ws[i], samples, amax));
                out << "w" << i + 1 << " " << to_string(ws[i]) << "\n";
            }
            std::ofstream f(out_path);
            if (!f) {
                throw parse_error("cannot write '" + out_path + "'");
            }
            if (format == "tsv") {
                f << std::setprecision(17);
                f << "wall-id\tbeta\talpha\n";
                for (const auto& c : curves)
                    for (auto [b, a] : c.points) f << c.id << "\t" << b << "\t" << a << "\n";
            } else {
                auto drawn = curves;
                if (v.c0 != 0) {
                    double lo = 1e300, hi = -1e300;
                    for (const auto& c : curves)
                        for (auto [b, a] : c.points) {
                            lo = std::min(lo, b);
                            hi = std::max(hi, b);
                        }
                    if (lo > hi) {
                        lo = to_double(mu_H(v).value()) - 2;
                        hi = lo + 4;
                    }
                    for (auto& h : sample_hyperbola(apex_hyperbola(v), samples, lo, hi)) drawn.push_back(h);
                }
                f << svg_document(drawn, "walls for " + format_class(v));
            }
        }
    } catch (const std::exception& e) {
        // Malformed literals and domain errors (e.g. "not a wall") are both input errors.
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_ok;
}

} // namespace tiltwall::cli
