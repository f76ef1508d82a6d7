#pragma once

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "koebe/circle.hpp"
#include "koebe/cubic.hpp"
#include "koebe/polynomial.hpp"
#include "koebe/univalence.hpp"

namespace koebe::cli {

using nlohmann::json;

enum class OutputFormat { HumanText, Json, Csv };

inline std::string fmt(double v, int sig = 12) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", sig, v);
    return buf;
}

/// Parses a decimal number or an exact fraction "p/q".
inline double parse_real(const std::string& token) {
    std::string s = token;
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
    if (s.empty()) throw std::invalid_argument("empty number");
    auto parse_plain = [](const std::string& text) {
        size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(text, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed number: '" + text + "'");
        }
        if (used != text.size()) throw std::invalid_argument("malformed number: '" + text + "'");
        return v;
    };
    const size_t slash = s.find('/');
    if (slash == std::string::npos) return parse_plain(s);
    const double num = parse_plain(s.substr(0, slash));
    const double den = parse_plain(s.substr(slash + 1));
    if (den == 0.0) throw std::invalid_argument("zero denominator in '" + token + "'");
    return num / den;
}

inline std::vector<double> parse_real_list(const std::string& csv) {
    std::vector<double> out;
    size_t pos = 0;
    while (pos <= csv.size()) {
        const size_t comma = csv.find(',', pos);
        const std::string tok = csv.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        out.push_back(parse_real(tok));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (out.empty()) throw std::invalid_argument("empty list");
    return out;
}

inline OutputFormat parse_format(const std::string& s) {
    if (s == "text") return OutputFormat::HumanText;
    if (s == "json") return OutputFormat::Json;
    if (s == "csv") return OutputFormat::Csv;
    throw std::invalid_argument("unknown format '" + s + "'");
}

namespace cli_detail {

inline json complex_json(complexd z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

inline void emit_json(std::ostream& out, const std::string& command, json inputs, json results,
                      json warnings = json::array()) {
    json j;
    j["command"] = command;
    j["inputs"] = std::move(inputs);
    j["results"] = std::move(results);
    j["warnings"] = std::move(warnings);
    out << j.dump(2) << "\n";
}

inline void emit_kv_csv(std::ostream& out, const std::vector<std::pair<std::string, std::string>>& rows) {
    out << "field,value\n";
    for (const auto& [k, v] : rows) out << k << "," << v << "\n";
}

inline RealPolynomial poly_from_cli(const std::string& coeffs_arg) {
    const std::vector<double> c = parse_real_list(coeffs_arg);
    if (c.front() != 1.0) throw std::invalid_argument("leading coefficient a_1 must equal 1");
    return RealPolynomial(c);
}

inline const char* type_name(CubicType t) { return t == CubicType::TypeI ? "I" : "II"; }

// ---- family ---------------------------------------------------------------

inline int cmd_family(std::ostream& out, const std::string& kind_str, int degree, OutputFormat format) {
    if (degree < 1) throw std::invalid_argument("degree must be at least 1");
    FamilyKind kind;
    if (kind_str == "suffridge")
        kind = FamilyKind::Suffridge;
    else if (kind_str == "pn")
        kind = FamilyKind::PN;
    else
        throw std::invalid_argument("family kind must be 'suffridge' or 'pn'");

    const RealPolynomial p = make_family(kind, degree);
    const double at_minus1 = p(-1.0);
    const double rho = conjectured_radius(degree);

    std::optional<double> closed;
    if (kind == FamilyKind::Suffridge) closed = suffridge_at_minus_one(degree);

    switch (format) {
        case OutputFormat::Json: {
            json results;
            results["coefficients"] = p.coeffs();
            results["p_at_minus_one"] = at_minus1;
            results["conjectured_radius"] = rho;
            if (closed) {
                results["closed_form_at_minus_one"] = *closed;
                results["cross_check_delta"] = std::abs(*closed - at_minus1);
            }
            emit_json(out, "family", json{{"kind", kind_str}, {"degree", degree}}, results);
            break;
        }
        case OutputFormat::Csv: {
            out << "k,coefficient\n";
            for (int k = 1; k <= degree; ++k) out << k << "," << fmt(p.coeff(k), 17) << "\n";
            break;
        }
        case OutputFormat::HumanText: {
            out << "family " << kind_str << ", degree " << degree << "\n";
            out << "coefficients:";
            for (double c : p.coeffs()) out << " " << fmt(c);
            out << "\n";
            out << "p(-1) = " << fmt(at_minus1) << "\n";
            out << "conjectured Koebe radius = " << fmt(rho) << "\n";
            if (closed) {
                out << "closed-form q_N(-1) = " << fmt(*closed)
                    << "  (delta " << fmt(std::abs(*closed - at_minus1), 3) << ")\n";
            }
            break;
        }
    }
    return 0;
}

// ---- minmod ---------------------------------------------------------------

inline int cmd_minmod(std::ostream& out, const std::string& coeffs_arg, int grid, double tol,
                      OutputFormat format) {
    const RealPolynomial p = poly_from_cli(coeffs_arg);
    if (grid <= 0) grid = std::max(4096, 8 * p.degree());
    const MinModResult r = min_modulus(p, grid, tol);

    std::optional<CubicType> cubic_type;
    std::optional<double> closed;
    if (p.degree() == 3) {
        const CubicPoint q{p.coeff(2), p.coeff(3)};
        cubic_type = classify(q);
        closed = min_modulus_closed_form(q);
    }

    switch (format) {
        case OutputFormat::Json: {
            json results;
            results["value"] = r.value;
            results["refined"] = r.refined;
            results["whole_circle"] = r.whole_circle;
            json mins = json::array();
            for (complexd z : r.minimizers) mins.push_back(complex_json(z));
            results["minimizers"] = mins;
            if (cubic_type) {
                results["type"] = type_name(*cubic_type);
                results["closed_form"] = *closed;
                results["closed_form_delta"] = std::abs(*closed - r.value);
            }
            emit_json(out, "minmod", json{{"coeffs", p.coeffs()}, {"grid", grid}, {"tol", tol}}, results);
            break;
        }
        case OutputFormat::Csv: {
            std::vector<std::pair<std::string, std::string>> rows;
            rows.emplace_back("value", fmt(r.value, 17));
            rows.emplace_back("refined", r.refined ? "true" : "false");
            rows.emplace_back("whole_circle", r.whole_circle ? "true" : "false");
            for (size_t i = 0; i < r.minimizers.size(); ++i) {
                rows.emplace_back("minimizer_" + std::to_string(i + 1) + "_re", fmt(r.minimizers[i].real(), 17));
                rows.emplace_back("minimizer_" + std::to_string(i + 1) + "_im", fmt(r.minimizers[i].imag(), 17));
            }
            if (cubic_type) {
                rows.emplace_back("type", type_name(*cubic_type));
                rows.emplace_back("closed_form", fmt(*closed, 17));
            }
            emit_kv_csv(out, rows);
            break;
        }
        case OutputFormat::HumanText: {
            out << "min |p| on the unit circle = " << fmt(r.value) << "\n";
            if (r.whole_circle) {
                out << "|p| is constant on the circle; every boundary point attains it\n";
            } else {
                out << "minimizers:";
                for (complexd z : r.minimizers)
                    out << " (" << fmt(z.real()) << ", " << fmt(z.imag()) << ")";
                out << "\n";
            }
            if (cubic_type) {
                out << "cubic type " << type_name(*cubic_type) << ", closed form " << fmt(*closed)
                    << " (delta " << fmt(std::abs(*closed - r.value), 3) << ")\n";
            }
            break;
        }
    }
    return 0;
}

// ---- mu -------------------------------------------------------------------

inline int cmd_mu(std::ostream& out, const std::string& coeffs_arg, OutputFormat format) {
    const RealPolynomial p = poly_from_cli(coeffs_arg);
    const double mu = mu_functional(p);
    switch (format) {
        case OutputFormat::Json:
            emit_json(out, "mu", json{{"coeffs", p.coeffs()}}, json{{"mu", mu}});
            break;
        case OutputFormat::Csv:
            emit_kv_csv(out, {{"mu", fmt(mu, 17)}});
            break;
        case OutputFormat::HumanText:
            out << "mu(p) = min Re p over real crossings = " << fmt(mu) << "\n";
            break;
    }
    return 0;
}

// ---- cubic ----------------------------------------------------------------

inline int cmd_cubic_membership(std::ostream& out, const std::string& a2_str, const std::string& a3_str,
                                OutputFormat format) {
    const CubicPoint q{parse_real(a2_str), parse_real(a3_str)};
    const bool inside = in_univalence_region(q);
    const double dist = boundary_distance(q);
    const bool on_boundary = dist < 1e-6;
    switch (format) {
        case OutputFormat::Json:
            emit_json(out, "cubic membership", json{{"a2", q.a2}, {"a3", q.a3}},
                      json{{"univalent", inside}, {"boundary_distance", dist}, {"on_boundary", on_boundary}});
            break;
        case OutputFormat::Csv:
            emit_kv_csv(out, {{"univalent", inside ? "true" : "false"},
                              {"boundary_distance", fmt(dist, 17)},
                              {"on_boundary", on_boundary ? "true" : "false"}});
            break;
        case OutputFormat::HumanText:
            out << "(" << fmt(q.a2) << ", " << fmt(q.a3) << ") is "
                << (inside ? "inside" : "outside") << " the univalence region\n";
            out << "distance to the boundary curve = " << fmt(dist)
                << (on_boundary ? "  (on the boundary)" : "") << "\n";
            break;
    }
    return 0;
}

inline json scan_warnings_json(const ScanResult& scan) {
    json warnings = json::array();
    for (const RouteMismatch& w : scan.warnings) {
        warnings.push_back(json{{"segment", segment_name(w.segment)},
                                {"a2", w.point.a2},
                                {"a3", w.point.a3},
                                {"closed_form", w.closed_form},
                                {"numeric", w.numeric}});
    }
    return warnings;
}

inline int cmd_cubic_scan(std::ostream& out, int resolution, OutputFormat format) {
    const ScanResult scan = extremal_scan(resolution);
    switch (format) {
        case OutputFormat::Csv: {
            out << "a2,a3,m,segment,type\n";
            for (const ScanEntry& e : scan.entries)
                out << fmt(e.point.a2, 17) << "," << fmt(e.point.a3, 17) << "," << fmt(e.m, 17) << ","
                    << segment_name(e.segment) << "," << type_name(e.type) << "\n";
            break;
        }
        case OutputFormat::Json: {
            json entries = json::array();
            for (const ScanEntry& e : scan.entries)
                entries.push_back(json{{"a2", e.point.a2},
                                       {"a3", e.point.a3},
                                       {"m", e.m},
                                       {"segment", segment_name(e.segment)},
                                       {"type", type_name(e.type)}});
            emit_json(out, "cubic scan", json{{"resolution", resolution}},
                      json{{"entries", entries}, {"max_route_gap", scan.max_route_gap}},
                      scan_warnings_json(scan));
            break;
        }
        case OutputFormat::HumanText: {
            out << "boundary scan, " << resolution << " samples per segment, "
                << scan.entries.size() << " points; lowest ten by m:\n";
            out << "a2            a3            m             segment  type\n";
            for (size_t i = 0; i < std::min<size_t>(10, scan.entries.size()); ++i) {
                const ScanEntry& e = scan.entries[i];
                char line[160];
                std::snprintf(line, sizeof line, "%-13s %-13s %-13s %-8s %s\n", fmt(e.point.a2).c_str(),
                              fmt(e.point.a3).c_str(), fmt(e.m).c_str(), segment_name(e.segment),
                              type_name(e.type));
                out << line;
            }
            out << "route disagreements over 1e-8: " << scan.warnings.size()
                << " (worst gap " << fmt(scan.max_route_gap, 3) << ")\n";
            break;
        }
    }
    return 0;
}

inline int cmd_cubic_extremal(std::ostream& out, int resolution, OutputFormat format) {
    const ScanResult scan = extremal_scan(resolution);
    const SegmentInfimum i1 = gamma_infimum(SegmentId::G1);
    const SegmentInfimum i2 = gamma_infimum(SegmentId::G2);
    const SegmentInfimum i3 = gamma_infimum(SegmentId::G3);
    const bool ordering_ok = i2.value < i3.value && i3.value < i1.value;

    std::vector<ScanEntry> global(scan.entries.begin(),
                                  scan.entries.begin() + std::min<size_t>(2, scan.entries.size()));

    switch (format) {
        case OutputFormat::Json: {
            auto inf_json = [](const SegmentInfimum& si) {
                return json{{"value", si.value}, {"a2", si.minimizer.a2}, {"a3", si.minimizer.a3}};
            };
            json results;
            results["infimum_g1"] = inf_json(i1);
            results["infimum_g2"] = inf_json(i2);
            results["infimum_g3"] = inf_json(i3);
            results["ordering_ok"] = ordering_ok;
            json top = json::array();
            for (const ScanEntry& e : global)
                top.push_back(json{{"a2", e.point.a2}, {"a3", e.point.a3}, {"m", e.m}});
            results["global_minimizers"] = top;
            results["max_route_gap"] = scan.max_route_gap;
            emit_json(out, "cubic extremal", json{{"resolution", resolution}}, results,
                      scan_warnings_json(scan));
            break;
        }
        case OutputFormat::Csv: {
            out << "segment,infimum,a2,a3\n";
            out << "G1," << fmt(i1.value, 17) << "," << fmt(i1.minimizer.a2, 17) << ","
                << fmt(i1.minimizer.a3, 17) << "\n";
            out << "G2," << fmt(i2.value, 17) << "," << fmt(i2.minimizer.a2, 17) << ","
                << fmt(i2.minimizer.a3, 17) << "\n";
            out << "G3," << fmt(i3.value, 17) << "," << fmt(i3.minimizer.a2, 17) << ","
                << fmt(i3.minimizer.a3, 17) << "\n";
            break;
        }
        case OutputFormat::HumanText: {
            out << "segment infima of the circle minimum modulus:\n";
            out << "  G1: " << fmt(i1.value) << " at (" << fmt(i1.minimizer.a2) << ", "
                << fmt(i1.minimizer.a3) << ")\n";
            out << "  G2: " << fmt(i2.value) << " at (" << fmt(i2.minimizer.a2) << ", "
                << fmt(i2.minimizer.a3) << ")\n";
            out << "  G3: " << fmt(i3.value) << " at (" << fmt(i3.minimizer.a2) << ", "
                << fmt(i3.minimizer.a3) << ")\n";
            out << "ordering G2 < G3 < G1: " << (ordering_ok ? "ok" : "VIOLATED") << "\n";
            out << "global minimizers from the scan:\n";
            for (const ScanEntry& e : global)
                out << "  (" << fmt(e.point.a2) << ", " << fmt(e.point.a3) << ")  m = " << fmt(e.m)
                    << "\n";
            out << "route disagreements over 1e-8: " << scan.warnings.size() << "\n";
            break;
        }
    }
    return ordering_ok ? 0 : 1;
}

inline int cmd_cubic_sample(std::ostream& out, int count, std::uint64_t seed, OutputFormat format) {
    if (count < 1) throw std::invalid_argument("count must be positive");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ua2(-cubic_detail::kG3A2Max, cubic_detail::kG3A2Max);
    std::uniform_real_distribution<double> ua3(-1.0 / 3.0, 1.0 / 3.0);

    struct Row {
        CubicPoint q;
        double closed, numeric;
        CubicType type;
    };
    std::vector<Row> rows;
    double worst = 0.0;
    while (static_cast<int>(rows.size()) < count) {
        const CubicPoint q{ua2(rng), ua3(rng)};
        if (!in_univalence_region(q)) continue;
        const double closed = min_modulus_closed_form(q);
        const double numeric = min_modulus(cubic_polynomial(q), 64, 1e-10).value;
        worst = std::max(worst, std::abs(closed - numeric));
        rows.push_back({q, closed, numeric, classify(q)});
    }

    switch (format) {
        case OutputFormat::Csv: {
            out << "a2,a3,m_closed,m_numeric,type\n";
            for (const Row& r : rows)
                out << fmt(r.q.a2, 17) << "," << fmt(r.q.a3, 17) << "," << fmt(r.closed, 17) << ","
                    << fmt(r.numeric, 17) << "," << type_name(r.type) << "\n";
            break;
        }
        case OutputFormat::Json: {
            json entries = json::array();
            for (const Row& r : rows)
                entries.push_back(json{{"a2", r.q.a2},
                                       {"a3", r.q.a3},
                                       {"m_closed", r.closed},
                                       {"m_numeric", r.numeric},
                                       {"type", type_name(r.type)}});
            emit_json(out, "cubic sample", json{{"count", count}, {"seed", seed}},
                      json{{"entries", entries}, {"max_route_gap", worst}});
            break;
        }
        case OutputFormat::HumanText: {
            out << count << " random points of the univalence region, seed " << seed << "\n";
            out << "worst |closed-form - numeric| = " << fmt(worst, 3) << "\n";
            break;
        }
    }
    return 0;
}

// ---- univalence -----------------------------------------------------------

inline int verdict_exit_code(Verdict v) {
    switch (v) {
        case Verdict::UnivalentOpenDisk: return 0;
        case Verdict::NotUnivalent: return 3;
        case Verdict::Inconclusive: return 4;
    }
    return 4;
}

inline int cmd_univalence(std::ostream& out, const std::string& coeffs_arg, const std::string& radii_arg,
                          OutputFormat format) {
    const RealPolynomial p = poly_from_cli(coeffs_arg);
    const std::vector<double> radii = parse_real_list(radii_arg);
    const UnivalenceReport rep = check_univalent_escalating(p, radii);

    switch (format) {
        case OutputFormat::Json: {
            json results;
            results["verdict"] = verdict_name(rep.verdict);
            results["derivative_root_moduli"] = rep.derivative_root_moduli;
            results["boundary_radius"] = rep.boundary_radius;
            results["injectivity_margin"] = rep.injectivity_margin;
            if (rep.witness) {
                const complexd z1 = rep.witness->z1, z2 = rep.witness->z2;
                results["witness"] = json{{"z1", complex_json(z1)},
                                          {"z2", complex_json(z2)},
                                          {"image_gap", std::abs(p(z1) - p(z2))},
                                          {"separation", std::abs(z1 - z2)}};
            }
            emit_json(out, "univalence", json{{"coeffs", p.coeffs()}, {"radii", radii}}, results);
            break;
        }
        case OutputFormat::Csv: {
            std::vector<std::pair<std::string, std::string>> rows;
            rows.emplace_back("verdict", verdict_name(rep.verdict));
            rows.emplace_back("boundary_radius", fmt(rep.boundary_radius, 17));
            rows.emplace_back("injectivity_margin", fmt(rep.injectivity_margin, 17));
            for (size_t i = 0; i < rep.derivative_root_moduli.size(); ++i)
                rows.emplace_back("critical_modulus_" + std::to_string(i + 1),
                                  fmt(rep.derivative_root_moduli[i], 17));
            if (rep.witness) {
                rows.emplace_back("witness_z1_re", fmt(rep.witness->z1.real(), 17));
                rows.emplace_back("witness_z1_im", fmt(rep.witness->z1.imag(), 17));
                rows.emplace_back("witness_z2_re", fmt(rep.witness->z2.real(), 17));
                rows.emplace_back("witness_z2_im", fmt(rep.witness->z2.imag(), 17));
            }
            emit_kv_csv(out, rows);
            break;
        }
        case OutputFormat::HumanText: {
            out << "verdict: " << verdict_name(rep.verdict) << " (radius " << fmt(rep.boundary_radius)
                << ")\n";
            if (!rep.derivative_root_moduli.empty()) {
                out << "critical point moduli:";
                for (double m : rep.derivative_root_moduli) out << " " << fmt(m, 8);
                out << "\n";
            }
            if (rep.verdict == Verdict::UnivalentOpenDisk)
                out << "boundary curve is simple; self-approach " << fmt(rep.injectivity_margin, 3)
                    << "\n";
            if (rep.witness) {
                const complexd z1 = rep.witness->z1, z2 = rep.witness->z2;
                out << "witness pair: z1 = (" << fmt(z1.real()) << ", " << fmt(z1.imag()) << "), z2 = ("
                    << fmt(z2.real()) << ", " << fmt(z2.imag()) << ")\n";
                out << "  |p(z1) - p(z2)| = " << fmt(std::abs(p(z1) - p(z2)), 3)
                    << ", |z1 - z2| = " << fmt(std::abs(z1 - z2), 3) << "\n";
            }
            break;
        }
    }
    return verdict_exit_code(rep.verdict);
}

// ---- radius-table ---------------------------------------------------------

inline int cmd_radius_table(std::ostream& out, int max_degree, OutputFormat format) {
    if (max_degree < 1) throw std::invalid_argument("degree must be at least 1");
    struct Row {
        int n;
        double rho, abs_p_m1, m_numeric, mu, q_m1;
        bool min_at_minus_one;
    };
    std::vector<Row> rows;
    std::vector<std::string> warnings;
    for (int n = 1; n <= max_degree; ++n) {
        const RealPolynomial p = pn_family(n);
        Row r;
        r.n = n;
        r.rho = conjectured_radius(n);
        r.abs_p_m1 = std::abs(p(-1.0));
        r.m_numeric = min_modulus(p).value;
        r.mu = mu_functional(p);
        r.q_m1 = suffridge_at_minus_one(n);
        r.min_at_minus_one = std::abs(r.m_numeric - r.abs_p_m1) <= 1e-8;
        if (!r.min_at_minus_one)
            warnings.push_back("N=" + std::to_string(n) + ": min modulus is not attained at -1");
        rows.push_back(r);
    }

    switch (format) {
        case OutputFormat::Json: {
            json jrows = json::array();
            for (const Row& r : rows)
                jrows.push_back(json{{"N", r.n},
                                     {"rho", r.rho},
                                     {"abs_p_at_minus_one", r.abs_p_m1},
                                     {"min_modulus", r.m_numeric},
                                     {"mu", r.mu},
                                     {"q_at_minus_one", r.q_m1},
                                     {"min_at_minus_one", r.min_at_minus_one}});
            json w = json::array();
            for (const std::string& s : warnings) w.push_back(s);
            emit_json(out, "radius-table", json{{"max_degree", max_degree}}, json{{"rows", jrows}}, w);
            break;
        }
        case OutputFormat::Csv: {
            out << "N,rho,abs_p_at_minus_one,min_modulus,mu,q_at_minus_one,min_at_minus_one\n";
            for (const Row& r : rows)
                out << r.n << "," << fmt(r.rho, 17) << "," << fmt(r.abs_p_m1, 17) << ","
                    << fmt(r.m_numeric, 17) << "," << fmt(r.mu, 17) << "," << fmt(r.q_m1, 17) << ","
                    << (r.min_at_minus_one ? "true" : "false") << "\n";
            break;
        }
        case OutputFormat::HumanText: {
            out << "N     rho           |p_N(-1)|     m(p_N)        mu(p_N)       q_N(-1)\n";
            for (const Row& r : rows) {
                char line[200];
                std::snprintf(line, sizeof line, "%-5d %-13s %-13s %-13s %-13s %-13s%s\n", r.n,
                              fmt(r.rho).c_str(), fmt(r.abs_p_m1).c_str(), fmt(r.m_numeric).c_str(),
                              fmt(r.mu).c_str(), fmt(r.q_m1).c_str(),
                              r.min_at_minus_one ? "" : "  [min not at -1]");
                out << line;
            }
            break;
        }
    }
    return 0;
}

// ---- boundary -------------------------------------------------------------

inline int cmd_boundary(std::ostream& out, std::ostream& err, const std::string& coeffs_arg, int samples,
                        const std::string& out_path, OutputFormat format) {
    const RealPolynomial p = poly_from_cli(coeffs_arg);
    const std::vector<complexd> curve = boundary_curve(p, samples);

    std::ofstream file(out_path, std::ios::binary);  // binary keeps LF endings everywhere
    if (!file) {
        err << "error: cannot open '" << out_path << "' for writing\n";
        return 2;
    }
    file << "theta,re,im\n";
    for (int k = 0; k < samples; ++k) {
        const double theta = 2.0 * std::numbers::pi * k / samples;
        file << fmt(theta, 15) << "," << fmt(curve[static_cast<size_t>(k)].real(), 15) << ","
             << fmt(curve[static_cast<size_t>(k)].imag(), 15) << "\n";
    }
    file.flush();
    if (!file) {
        err << "error: failed writing '" << out_path << "'\n";
        return 2;
    }

    switch (format) {
        case OutputFormat::Json:
            emit_json(out, "boundary", json{{"coeffs", p.coeffs()}, {"samples", samples}},
                      json{{"path", out_path}, {"rows", samples}});
            break;
        case OutputFormat::Csv:
            emit_kv_csv(out, {{"path", out_path}, {"rows", std::to_string(samples)}});
            break;
        case OutputFormat::HumanText:
            out << "wrote " << samples << " samples of p(e^{i theta}) to " << out_path << "\n";
            break;
    }
    return 0;
}

}  // namespace cli_detail

/// Entry point shared by the binary and the tests. Returns the process exit
/// code: 0 success (or univalent evidence), 2 malformed input, 3 not
/// univalent, 4 inconclusive.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    using namespace cli_detail;
    CLI::App app{"polynomial families, circle minimum modulus, and univalence checks"};
    app.name("koebe");
    app.require_subcommand(1);
    app.fallthrough();

    std::string format_str = "text";
    app.add_option("--format", format_str, "output format: text, json, csv")->capture_default_str();

    // family
    auto* fam = app.add_subcommand("family", "coefficients and spot values of a polynomial family");
    std::string fam_kind;
    int fam_degree = 0;
    fam->add_option("kind", fam_kind, "suffridge or pn")->required();
    fam->add_option("--degree", fam_degree, "polynomial degree")->required();

    // minmod
    auto* minmod = app.add_subcommand("minmod", "minimum modulus of p on the unit circle");
    std::string mm_coeffs;
    int mm_grid = 0;
    double mm_tol = 1e-10;
    minmod->add_option("--coeffs", mm_coeffs, "a_1,a_2,...,a_N with a_1 = 1; fractions allowed")->required();
    minmod->add_option("--grid", mm_grid, "sample count (default max(4096, 8*degree))");
    minmod->add_option("--tol", mm_tol, "refinement tolerance")->capture_default_str();

    // mu
    auto* mu = app.add_subcommand("mu", "minimum of Re p over real crossings of the circle image");
    std::string mu_coeffs;
    mu->add_option("--coeffs", mu_coeffs, "a_1,a_2,...,a_N with a_1 = 1")->required();

    // cubic
    auto* cubic = app.add_subcommand("cubic", "degree-3 univalence region queries");
    cubic->require_subcommand(1);
    auto* membership = cubic->add_subcommand("membership", "is z + a2 z^2 + a3 z^3 univalent?");
    std::string a2_str, a3_str;
    membership->add_option("--a2", a2_str, "quadratic coefficient")->required();
    membership->add_option("--a3", a3_str, "cubic coefficient")->required();
    auto* scan = cubic->add_subcommand("scan", "ranked minimum-modulus scan of the region boundary");
    int scan_res = 10000;
    scan->add_option("--resolution", scan_res, "samples per boundary segment")->capture_default_str();
    auto* extremal = cubic->add_subcommand("extremal", "segment infima and global minimizers");
    int ext_res = 10000;
    extremal->add_option("--resolution", ext_res, "samples per boundary segment")->capture_default_str();
    auto* sample = cubic->add_subcommand("sample", "closed form vs numeric on random interior points");
    int sample_count = 1000;
    std::uint64_t sample_seed = 12345;
    sample->add_option("--count", sample_count, "number of points")->capture_default_str();
    sample->add_option("--seed", sample_seed, "RNG seed")->capture_default_str();

    // univalence
    auto* univ = app.add_subcommand("univalence", "numerical univalence evidence on the open disk");
    std::string uv_coeffs;
    std::string uv_radii = "0.99,0.999,0.9999";
    univ->add_option("--coeffs", uv_coeffs, "a_1,a_2,...,a_N with a_1 = 1")->required();
    univ->add_option("--radii", uv_radii, "ascending test radii in [0.9, 1)")->capture_default_str();

    // radius-table
    auto* table = app.add_subcommand("radius-table", "conjectured radius versus measured quantities");
    int table_degree = 0;
    table->add_option("--degree", table_degree, "maximum degree")->required();

    // boundary
    auto* boundary = app.add_subcommand("boundary", "sample p on the unit circle into a CSV file");
    std::string bd_coeffs, bd_out;
    int bd_samples = 1024;
    boundary->add_option("--coeffs", bd_coeffs, "a_1,a_2,...,a_N with a_1 = 1")->required();
    boundary->add_option("--samples", bd_samples, "number of circle samples")->capture_default_str();
    boundary->add_option("--out", bd_out, "output CSV path")->required();

    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; })) {
        sub->fallthrough();
        for (CLI::App* nested : sub->get_subcommands([](const CLI::App*) { return true; }))
            nested->fallthrough();
    }

    std::vector<const char*> argv;
    argv.push_back("koebe");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        const OutputFormat format = parse_format(format_str);
        if (fam->parsed()) return cmd_family(out, fam_kind, fam_degree, format);
        if (minmod->parsed()) return cmd_minmod(out, mm_coeffs, mm_grid, mm_tol, format);
        if (mu->parsed()) return cmd_mu(out, mu_coeffs, format);
        if (membership->parsed()) return cmd_cubic_membership(out, a2_str, a3_str, format);
        if (scan->parsed()) return cmd_cubic_scan(out, scan_res, format);
        if (extremal->parsed()) return cmd_cubic_extremal(out, ext_res, format);
        if (sample->parsed()) return cmd_cubic_sample(out, sample_count, sample_seed, format);
        if (univ->parsed()) return cmd_univalence(out, uv_coeffs, uv_radii, format);
        if (table->parsed()) return cmd_radius_table(out, table_degree, format);
        if (boundary->parsed()) return cmd_boundary(out, err, bd_coeffs, bd_samples, bd_out, format);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no command given\n";
    return 2;
}

}  // namespace koebe::cli
