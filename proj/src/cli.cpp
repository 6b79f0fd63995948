#include "mubound/cli.hpp"

#include "mubound/empirical.hpp"
#include "mubound/error.hpp"
#include "mubound/mu_bound.hpp"
#include "mubound/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <sstream>

namespace mubound {

namespace {

[[noreturn]] void bad_number(std::string_view text) {
    throw Error(ErrorCode::ParseError, "not an exact number: '" + std::string(text) + "'");
}

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

}  // namespace

Rational parse_exact(std::string_view text) {
    std::string_view t = text;
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.remove_prefix(1);
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.remove_suffix(1);
    bool neg = false;
    if (!t.empty() && (t.front() == '-' || t.front() == '+')) {
        neg = t.front() == '-';
        t.remove_prefix(1);
    }
    if (auto slash = t.find('/'); slash != std::string_view::npos) {
        std::string_view n = t.substr(0, slash), d = t.substr(slash + 1);
        if (!all_digits(n) || !all_digits(d)) bad_number(text);
        auto strip = [](std::string_view v) {
            v.remove_prefix(std::min(v.find_first_not_of('0'), v.size()));
            return v.empty() ? std::string("0") : std::string(v);
        };
        BigInt bd{strip(d)};
        if (bd == 0) bad_number(text);
        Rational r(BigInt{strip(n)}, bd);
        return neg ? -r : r;
    }
    std::string_view mant = t;
    long exp10 = 0;
    if (auto e = t.find_first_of("eE"); e != std::string_view::npos) {
        mant = t.substr(0, e);
        std::string_view ex = t.substr(e + 1);
        bool eneg = false;
        if (!ex.empty() && (ex.front() == '-' || ex.front() == '+')) {
            eneg = ex.front() == '-';
            ex.remove_prefix(1);
        }
        if (!all_digits(ex) || ex.size() > 4) bad_number(text);
        exp10 = std::stol(std::string(ex));
        if (eneg) exp10 = -exp10;
    }
    std::string digits;
    std::string_view ip = mant, fp;
    if (auto dot = mant.find('.'); dot != std::string_view::npos) {
        ip = mant.substr(0, dot);
        fp = mant.substr(dot + 1);
        if (!fp.empty() && !all_digits(fp)) bad_number(text);
    }
    if (!ip.empty() && !all_digits(ip)) bad_number(text);
    if (ip.empty() && fp.empty()) bad_number(text);
    digits = std::string(ip) + std::string(fp);
    // BigInt reads a leading zero as octal.
    digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size()));
    exp10 -= static_cast<long>(fp.size());
    BigInt num{digits.empty() ? std::string("0") : digits};
    BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(std::labs(exp10)));
    Rational r = exp10 >= 0 ? Rational(num * scale) : Rational(num, scale);
    return neg ? -r : r;
}

namespace {

using json = nlohmann::ordered_json;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

enum class Format { Human, Csv, Json };

std::string num(double v) {
    if (v == kNegInf) return "-inf";
    if (v == -kNegInf) return "inf";
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

json jnum(double v) {
    if (std::isinf(v)) return v < 0 ? "-inf" : "inf";
    return v;
}

json jopt(const std::optional<double>& v) { return v ? jnum(*v) : json(nullptr); }

struct Globals {
    std::string tol = "1/1000000000";
    int family_max = kDefaultFamilyMax;
    unsigned threads = 1;
    std::string format = "human";
};

Format format_of(const std::string& f) {
    if (f == "human") return Format::Human;
    if (f == "csv") return Format::Csv;
    if (f == "json") return Format::Json;
    throw Error(ErrorCode::ParseError, "unknown format '" + f + "'");
}

MuOptions mu_options(const Globals& g, bool l2_only) {
    MuOptions o;
    o.tol = parse_exact(g.tol);
    o.refined = !l2_only;
    o.family_max = g.family_max;
    return o;
}

json mu_record(const MuBoundResult& r) {
    double width = r.upper == kNegInf ? 0.0 : r.upper - r.lower;
    return {{"schema", "mubound.mu"},
            {"version", 1},
            {"theta", r.theta.str()},
            {"theta_decimal", r.theta.to_double()},
            {"mode", mode_name(r.mode)},
            {"refined", r.refined},
            {"upper", jnum(r.upper)},
            {"lower", jnum(r.lower)},
            {"enclosure_width", width},
            {"witness_sigma", jopt(r.witness_sigma)},
            {"witness_exact", r.witness_exact ? json(r.witness_exact->str()) : json(nullptr)},
            {"active", moment_name(r.active)},
            {"tol", r.tol.str()}};
}

ZeroSet zeros_for_cli(const std::string& path) {
    try {
        return load_zeros(path.empty() ? default_zeros_path() : path);
    } catch (const Error& e) {
        // A malformed dataset is an input problem, not a usage error.
        if (e.code() == ErrorCode::ParseError) throw Error(ErrorCode::Io, e.what());
        throw;
    }
}

// Emit a flat key/value record in the chosen format.
void emit_record(std::ostream& out, Format f, const json& rec) {
    if (f == Format::Json) {
        out << rec.dump(2) << "\n";
        return;
    }
    auto text = [](const json& v) {
        if (v.is_string()) return v.get<std::string>();
        if (v.is_number_float()) return num(v.get<double>());
        if (v.is_null()) return std::string();
        return v.dump();
    };
    if (f == Format::Csv) {
        std::string head, row;
        for (auto it = rec.begin(); it != rec.end(); ++it) {
            if (it.key() == "schema") continue;
            head += (head.empty() ? "" : ",") + it.key();
            row += (row.empty() ? "" : ",") + text(it.value());
        }
        out << head << "\n" << row << "\n";
        return;
    }
    for (auto it = rec.begin(); it != rec.end(); ++it) {
        if (it.key() == "schema" || it.key() == "version") continue;
        out << it.key() << ": " << text(it.value()) << "\n";
    }
}

// Value and the row supplying it (at a breakpoint, the larger side).
json table_value(const PiecewiseBound& pw, const BoundaryPoint& s, const char* which, HypothesisMode mode) {
    std::size_t i = pw.locate(s);
    ExtendedReal v = pw.pieces()[i].value_at(s);
    std::string ref = pw.pieces()[i].provenance;
    if (i > 0 && s == pw.pieces()[i].lo) {
        ExtendedReal left = pw.pieces()[i - 1].value_at(s);
        if (left > v) {
            v = left;
            ref = pw.pieces()[i - 1].provenance;
        }
    }
    return {{"schema", "mubound.eval"}, {"version", 1},   {"table", which},         {"mode", mode_name(mode)},
            {"sigma", s.str()},         {"value", v.str()}, {"value_decimal", jnum(v.to_double())},
            {"reference", ref}};
}

std::ostream& open_out(const std::string& path, std::ofstream& file, std::ostream& fallback) {
    if (path.empty()) return fallback;
    file.open(path);
    if (!file) throw Error(ErrorCode::Io, "cannot write " + path);
    return file;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Certified exceptional-set exponent bounds from zero density tables", "mubound"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--tol", g.tol, "optimizer tolerance (exact number)");
    app.add_option("--sigma-cap-n", g.family_max, "last instantiated family index (>= 6)");
    app.add_option("--threads", g.threads, "worker threads for curves")->check(CLI::Range(1u, 256u));
    app.add_option("--format", g.format, "human, csv or json")->check(CLI::IsMember({"human", "csv", "json"}));

    std::string sigma_text, mode_text = "unconditional", theta_text;
    auto* eval_a = app.add_subcommand("eval-a", "upper-regularized A(sigma)");
    auto* eval_astar = app.add_subcommand("eval-astar", "effective A*(sigma)");
    for (auto* sc : {eval_a, eval_astar}) {
        sc->add_option("--sigma", sigma_text, "sigma (exact)")->required();
        sc->add_option("--mode", mode_text, "unconditional, dh, lh or rh");
    }

    bool l2_only = false;
    auto* mu_cmd = app.add_subcommand("mu", "certified bound on mu(theta)");
    mu_cmd->add_option("--theta", theta_text, "theta (exact)")->required();
    mu_cmd->add_option("--mode", mode_text, "unconditional, dh, lh or rh");
    mu_cmd->add_flag("--l2-only", l2_only, "second moment only");

    std::string tmin, tmax, out_path;
    int steps = 0;
    auto* curve = app.add_subcommand("curve", "mu bound on a uniform theta grid");
    curve->add_option("--theta-min", tmin)->required();
    curve->add_option("--theta-max", tmax)->required();
    curve->add_option("--steps", steps)->required()->check(CLI::PositiveNumber);
    curve->add_option("--mode", mode_text);
    curve->add_option("--out", out_path, "write to a file instead of stdout");
    curve->add_flag("--l2-only", l2_only);

    std::string which = "a";
    int samples = 1000;
    auto* dump = app.add_subcommand("table-dump", "pieces and a sampled curve of a table");
    dump->add_option("--which", which)->check(CLI::IsMember({"a", "astar"}));
    dump->add_option("--mode", mode_text);
    dump->add_option("--samples", samples)->check(CLI::PositiveNumber);

    auto* exp = app.add_subcommand("table-export", "machine-readable transcription of the printed rows");
    exp->add_option("--out", out_path);

    std::string filter;
    auto* ver = app.add_subcommand("verify", "run the claims ledger");
    ver->add_option("--filter", filter, "claim id prefix");
    ver->add_option("--zeros", out_path, "zeros file");

    auto* emp = app.add_subcommand("empirical", "desk-scale measurements");
    emp->require_subcommand(1);
    std::string zeros_path, cache_load, cache_save;
    std::uint64_t limit = 0, X = 0, guard = kDefaultSieveGuard, seed = 0x6d75626f756e64ULL, n_samples = 1000;
    double x = 0, y = -1, T = 100, step = 1;
    std::string delta_text = "1/2";
    int k = 1;
    std::size_t cap = kDefaultEnergyCap;

    auto* e_sieve = emp->add_subcommand("sieve", "von Mangoldt sieve and psi");
    e_sieve->add_option("--limit", limit)->required();
    e_sieve->add_option("--guard", guard, "memory guard on the limit");
    e_sieve->add_option("--save", cache_save, "write a binary cache");
    e_sieve->add_option("--load", cache_load, "read a binary cache instead of sieving");
    e_sieve->add_option("--x", x);
    e_sieve->add_option("--y", y, "also report the sum over (x, x+y]");

    auto* e_exc = emp->add_subcommand("exceptional", "measure of the exceptional set");
    e_exc->add_option("--X", X)->required();
    e_exc->add_option("--theta", theta_text)->required();
    e_exc->add_option("--delta", delta_text);
    e_exc->add_option("--step", step);

    auto* e_zero = emp->add_subcommand("zeros-check", "count ordinates against the main term");
    e_zero->add_option("--zeros", zeros_path);
    e_zero->add_option("--T", T);

    auto* e_ef = emp->add_subcommand("explicit-formula", "truncated explicit formula for psi");
    e_ef->add_option("--zeros", zeros_path);
    e_ef->add_option("--x", x)->required();
    e_ef->add_option("--T", T);

    auto* e_en = emp->add_subcommand("energy", "additive energy of the ordinates");
    e_en->add_option("--zeros", zeros_path);
    e_en->add_option("--T", T);
    e_en->add_option("--cap", cap);

    auto* e_mom = emp->add_subcommand("moments", "Monte Carlo moments of S(x)");
    e_mom->add_option("--zeros", zeros_path);
    e_mom->add_option("--X", X)->required();
    e_mom->add_option("--theta", theta_text)->required();
    e_mom->add_option("--k", k)->check(CLI::IsMember({1, 2}));
    e_mom->add_option("--samples", n_samples);
    e_mom->add_option("--seed", seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        const Format fmt = format_of(g.format);
        const HypothesisMode mode = parse_mode(mode_text);

        if (*eval_a || *eval_astar) {
            const TableSet& t = TableSet::get(mode, g.family_max);
            BoundaryPoint s(parse_exact(sigma_text));
            emit_record(out, fmt, *eval_a ? table_value(t.a, s, "A", mode) : table_value(t.astar, s, "ASTAR", mode));
            return 0;
        }
        if (*mu_cmd) {
            emit_record(out, fmt, mu_record(mu_upper(parse_exact(theta_text), mode, mu_options(g, l2_only))));
            return 0;
        }
        if (*curve) {
            auto pts = mu_curve(parse_exact(tmin), parse_exact(tmax), steps, mode, mu_options(g, l2_only), g.threads);
            std::ofstream file;
            std::ostream& os = open_out(out_path, file, out);
            if (fmt == Format::Json) {
                json arr = json::array();
                for (const auto& p : pts)
                    arr.push_back({{"theta", p.theta.to_double()},
                                   {"theta_exact", p.theta.str()},
                                   {"mu_upper", jnum(p.bound.upper)},
                                   {"gap_exponent", jnum(p.gap_exponent)},
                                   {"active", moment_name(p.bound.active)}});
                json doc = {{"schema", "mubound.curve"}, {"version", 1},  {"mode", mode_name(mode)},
                            {"refined", !l2_only},       {"tol", g.tol}, {"points", arr}};
                os << doc.dump(2) << "\n";
            } else {
                os << "theta,mu_upper,gap_exponent\n";
                for (const auto& p : pts)
                    os << num(p.theta.to_double()) << "," << num(p.bound.upper) << "," << num(p.gap_exponent) << "\n";
            }
            return 0;
        }
        if (*dump) {
            const TableSet& t = TableSet::get(mode, g.family_max);
            const PiecewiseBound& pw = which == "a" ? t.a : t.astar;
            const Rational cap_value = sigma_cap(g.family_max);
            json pieces = json::array();
            for (const auto& p : pw.pieces())
                pieces.push_back({{"lo", p.lo.str()},
                                  {"hi", p.hi.str()},
                                  {"lo_decimal", p.lo.to_double()},
                                  {"hi_decimal", p.hi.to_double()},
                                  {"formula", p.formula ? json(p.formula->str()) : json("-inf")},
                                  {"reference", p.provenance}});
            json curve_pts = json::array();
            std::ostringstream csv;
            csv << "sigma,value\n";
            for (int i = 0; i < samples; ++i) {
                Rational s = cap_value * Rational(i, samples);
                double v = evaluate_upper(pw, BoundaryPoint(s)).to_double();
                curve_pts.push_back({{"sigma", s.to_double()}, {"value", jnum(v)}});
                csv << num(s.to_double()) << "," << num(v) << "\n";
            }
            if (fmt == Format::Csv) {
                out << csv.str();
            } else if (fmt == Format::Json) {
                json doc = {{"schema", "mubound.table"}, {"version", 1},        {"table", which},
                            {"mode", mode_name(mode)},   {"pieces", pieces}, {"samples", curve_pts}};
                out << doc.dump(2) << "\n";
            } else {
                for (const auto& p : pw.pieces())
                    out << "[" << p.lo.str() << ", " << p.hi.str() << ")  "
                        << (p.formula ? p.formula->str() : std::string("-inf")) << "  " << p.provenance << "\n";
            }
            return 0;
        }
        if (*exp) {
            std::ofstream file;
            open_out(out_path, file, out) << transcription();
            return 0;
        }
        if (*ver) {
            VerifyConfig cfg;
            cfg.zeros_path = out_path;
            cfg.threads = g.threads;
            auto results = run_claims(filter.empty() ? std::nullopt : std::optional<std::string>(filter), cfg);
            out << (fmt == Format::Json ? claims_json_report(results) : claims_text_report(results));
            return all_passed(results) ? 0 : 5;
        }
        if (*e_sieve) {
            auto t0 = std::chrono::steady_clock::now();
            LambdaSieve s = cache_load.empty() ? LambdaSieve::build(limit, guard) : LambdaSieve::load(cache_load);
            double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            if (!cache_save.empty()) s.save(cache_save);
            json rec = {{"schema", "mubound.sieve"}, {"version", 1}, {"limit", s.limit()}, {"psi", s.psi(s.limit())}};
            if (y >= 0) {
                rec["x"] = x;
                rec["y"] = y;
                rec["interval_sum"] = interval_sum(s, x, y);
            }
            if (fmt == Format::Human) rec["seconds"] = secs;
            emit_record(out, fmt, rec);
            return 0;
        }
        if (*e_exc) {
            Rational theta = parse_exact(theta_text);
            double top = 2.0 * static_cast<double>(X);
            auto need = static_cast<std::uint64_t>(std::ceil(top + std::pow(top, theta.to_double()))) + 2;
            LambdaSieve s = LambdaSieve::build(std::max<std::uint64_t>(need, 2), guard);
            ExceptionalScan e = exceptional_measure(s, X, theta, parse_exact(delta_text), step);
            emit_record(out, fmt,
                        {{"schema", "mubound.exceptional"},
                         {"version", 1},
                         {"X", e.X},
                         {"theta", e.theta.str()},
                         {"delta", e.delta.str()},
                         {"step", e.step},
                         {"measure_estimate", e.measure_estimate},
                         {"sample_count", e.sample_count},
                         {"exceptional_count", e.exceptional_count},
                         {"sampled", e.sampled}});
            return 0;
        }
        if (*e_zero) {
            ZeroSet z = zeros_for_cli(zeros_path);
            emit_record(out, fmt,
                        {{"schema", "mubound.zeros"},
                         {"version", 1},
                         {"source", z.source},
                         {"size", z.size()},
                         {"max_T", z.max_T},
                         {"T", T},
                         {"count", z.count_up_to(T)},
                         {"main_term", riemann_von_mangoldt(T)}});
            return 0;
        }
        if (*e_ef) {
            ZeroSet z = zeros_for_cli(zeros_path);
            json rec = {{"schema", "mubound.explicit_formula"},
                        {"version", 1},
                        {"x", x},
                        {"T", T},
                        {"psi_explicit", explicit_formula_psi(z, x, T)}};
            if (x >= 2 && x <= 1e8) {
                LambdaSieve s = LambdaSieve::build(static_cast<std::uint64_t>(x) + 1);
                rec["psi_sieve"] = s.psi(static_cast<std::uint64_t>(x));
            }
            emit_record(out, fmt, rec);
            return 0;
        }
        if (*e_en) {
            ZeroSet z = zeros_for_cli(zeros_path);
            emit_record(out, fmt,
                        {{"schema", "mubound.energy"},
                         {"version", 1},
                         {"T", T},
                         {"ordinates", z.count_up_to(T)},
                         {"energy", additive_energy(z, T, cap)}});
            return 0;
        }
        if (*e_mom) {
            ZeroSet z = zeros_for_cli(zeros_path);
            MomentEstimate m = moment_statistic(z, X, parse_exact(theta_text), k, n_samples, seed);
            emit_record(out, fmt,
                        {{"schema", "mubound.moments"},
                         {"version", 1},
                         {"X", X},
                         {"theta", theta_text},
                         {"k", k},
                         {"T", m.T},
                         {"samples", m.samples},
                         {"mean", m.mean},
                         {"standard_error", m.standard_error}});
            return 0;
        }
    } catch (const Error& e) {
        err << "mubound: " << error_name(e.code()) << ": " << e.what() << "\n";
        return exit_code(e.code());
    } catch (const std::exception& e) {
        err << "mubound: " << e.what() << "\n";
        return 4;
    }
    return 1;
}

}  // namespace mubound
