#include "kohn/cli.hpp"

#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "kohn/asymptotics.hpp"
#include "kohn/genfunc.hpp"
#include "kohn/invariant.hpp"
#include "kohn/isospectral.hpp"
#include "kohn/sphere.hpp"
#include "kohn/spectrum.hpp"

namespace kohn::cli {

namespace {

using nlohmann::json;

std::string format_real(double value) {
    std::ostringstream s;
    s << std::setprecision(12) << value;
    return s.str();
}

// Rounded to 12 significant digits so JSON output diffs reproducibly.
json real_json(double value) {
    return std::stod(format_real(value));
}

json big_json(const BigInt& value) {
    if (value >= std::numeric_limits<std::int64_t>::min() && value <= std::numeric_limits<std::int64_t>::max()) {
        return value.convert_to<std::int64_t>();
    }
    return value.str();
}

json matrix_json(const IntMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.size(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.size(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

json witness_json(const std::optional<IsometryWitness>& witness) {
    if (!witness) return nullptr;
    json sigma = json::array();
    for (int s : witness->sigma) sigma.push_back(s + 1);  // 1-based in output
    return {{"a", witness->a}, {"sigma", sigma}};
}

std::uint64_t default_budget() {
    if (const char* env = std::getenv("KOHN_LENS_BUDGET")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw Error(ErrorCode::ParseError, std::string("KOHN_LENS_BUDGET is not an integer: ") + env);
        }
    }
    return kDefaultEnumerationBudget;
}

void require_even_cutoff(std::int64_t lambda_max) {
    if (lambda_max < 0 || lambda_max % 2 != 0) {
        throw Error(ErrorCode::InvalidEigenvalue,
                    "--lambda-max must be a nonnegative even integer, got " + std::to_string(lambda_max));
    }
}

struct Options {
    std::vector<std::string> lens;
    std::int64_t lambda_max = 500;
    std::int64_t lambda = 0;
    std::int64_t stride = 2;
    std::string out = "csv";
    std::string method = "dp";
    bool contributors = false;
    int p = 0;
    int q = 0;
    int k = 0;
    int samples = 10;
    int points = 20;
    int cutoff = 60;
    double radius = 0.5;
    int n_min = 3;
    int n_max = 5;
    std::int64_t big_n_max = 30;
    std::int64_t md_max = 6;
    std::uint64_t seed = 1;
};

LensSpace single_lens(const Options& opt) {
    if (opt.lens.size() != 1) {
        throw Error(ErrorCode::ParseError, "expected exactly one --lens, got " + std::to_string(opt.lens.size()));
    }
    return parse_lens_space(opt.lens.front());
}

int cmd_dim(const Options& opt, std::uint64_t budget, std::ostream& out) {
    const LensSpace lens = single_lens(opt);
    const Bidegree b{opt.p, opt.q};
    BigInt dim;
    if (opt.method == "bruteforce") {
        dim = dim_invariant_bruteforce(lens, b, budget);
    } else if (opt.method == "recurrence") {
        dim = dim_invariant_recurrence(lens, b);
    } else {
        dim = dim_invariant_dp(lens, b);
    }
    out << dim << '\n';
    return kExitOk;
}

int cmd_spectrum(const Options& opt, std::uint64_t budget, std::ostream& out) {
    const LensSpace lens = single_lens(opt);
    require_even_cutoff(opt.lambda_max);
    const auto table = build_spectrum(lens, opt.lambda_max, budget);
    if (opt.out == "csv" && !opt.contributors) {
        out << "lambda,multiplicity\n";
        for (const auto& [lambda, entry] : table.entries) out << lambda << ',' << entry.multiplicity << '\n';
        return kExitOk;
    }
    json entries = json::array();
    for (const auto& [lambda, entry] : table.entries) {
        json item = {{"lambda", lambda}, {"multiplicity", big_json(entry.multiplicity)}};
        if (opt.contributors) {
            json list = json::array();
            for (const auto& c : entry.contributors) {
                list.push_back({{"p", c.bidegree.p}, {"q", c.bidegree.q}, {"dim", big_json(c.dim)}});
            }
            item["contributors"] = std::move(list);
        }
        entries.push_back(std::move(item));
    }
    json doc = {{"lens", format_lens_space(lens)}, {"lambda_max", opt.lambda_max}, {"entries", entries}};
    out << doc.dump() << '\n';
    return kExitOk;
}

int cmd_count(const Options& opt, std::uint64_t budget, std::ostream& out) {
    const LensSpace lens = single_lens(opt);
    if (opt.lambda_max < 0) throw Error(ErrorCode::InvalidEigenvalue, "--lambda-max must be >= 0");
    out << counting_series(lens, opt.lambda_max, budget).back() << '\n';
    return kExitOk;
}

int cmd_weyl(const Options& opt, std::uint64_t budget, std::ostream& out) {
    const LensSpace lens = single_lens(opt);
    require_even_cutoff(opt.lambda_max);
    const auto series = weyl_ratio_series(lens, opt.lambda_max, opt.stride, budget);
    if (opt.out == "json") {
        json rows = json::array();
        for (const auto& s : series) {
            rows.push_back({{"lambda", s.lambda},
                            {"n_lens", big_json(s.n_lens)},
                            {"n_sphere", big_json(s.n_sphere)},
                            {"ratio", real_json(s.ratio_value)}});
        }
        json doc = {{"lens", format_lens_space(lens)}, {"limit", real_json(1.0 / lens.k())}, {"samples", rows}};
        out << doc.dump() << '\n';
        return kExitOk;
    }
    out << "lambda,ratio\n";
    for (const auto& s : series) out << s.lambda << ',' << format_real(s.ratio_value) << '\n';
    return kExitOk;
}

int cmd_bounds(const Options& opt, std::ostream& out) {
    json violations = json::array();
    std::int64_t checked = 0;
    for (int n = opt.n_min; n <= opt.n_max; ++n) {
        for (std::int64_t N = 0; N <= opt.big_n_max; ++N) {
            for (std::int64_t m = 1; m <= opt.md_max; ++m) {
                for (std::int64_t d = 1; d <= opt.md_max; ++d) {
                    const BoundParams params{N, m, d, n};
                    const auto lower = check_lower_bound(params);
                    const auto upper = check_upper_bound(params);
                    checked += 2;
                    auto record = [&](const char* which, const BoundCheck& c) {
                        violations.push_back({{"bound", which}, {"N", N}, {"m", m}, {"d", d}, {"n", n},
                                              {"lhs", c.lhs.str()}, {"rhs", c.rhs.str()}});
                    };
                    if (!lower.holds) record("lower", lower);
                    if (!upper.holds) record("upper", upper);
                }
            }
        }
    }
    json doc = {{"checked", checked}, {"violations", violations}};
    out << doc.dump() << '\n';
    return violations.empty() ? kExitOk : kExitCheckFailed;
}

int cmd_isospec(const Options& opt, std::ostream& out) {
    if (opt.lens.size() != 2) {
        throw Error(ErrorCode::ParseError, "isospec needs exactly two --lens options");
    }
    require_even_cutoff(opt.lambda_max);
    const LensSpace a = parse_lens_space(opt.lens[0]);
    const LensSpace b = parse_lens_space(opt.lens[1]);
    json doc;
    const bool comparable = a.k() == b.k() && a.n() == b.n();
    doc["witness"] = comparable ? witness_json(condition4_witness(a, b)) : json(nullptr);
    const auto sa = build_spectrum(a, opt.lambda_max);
    const auto sb = build_spectrum(b, opt.lambda_max);
    const auto diff = first_spectral_difference(sa, sb);
    doc["spectra_equal"] = !diff.has_value();
    doc["first_difference"] = diff ? json(*diff) : json(nullptr);
    doc["d_equal"] = (comparable && a.n() == 2) ? json(d_invariant_check(a, b)) : json(nullptr);
    out << doc.dump() << '\n';
    return kExitOk;
}

int cmd_classify(const Options& opt, std::ostream& out) {
    const auto result = classify_all(opt.k);
    json classes = json::array();
    for (const auto& c : result.classes) {
        json members = json::array();
        for (const auto& [l1, l2] : c.members) members.push_back({l1, l2});
        classes.push_back({{"representative", {c.representative.first, c.representative.second}},
                           {"d", c.d},
                           {"members", members}});
    }
    json doc = {{"k", result.k},
                {"spectral_equivalence_guaranteed", result.spectral_equivalence_guaranteed},
                {"classes", classes}};
    out << doc.dump() << '\n';
    return kExitOk;
}

int cmd_cmatrix(const Options& opt, std::ostream& out) {
    out << matrix_json(c_matrix(opt.k, opt.lambda).entries).dump() << '\n';
    return kExitOk;
}

int cmd_span(const Options& opt, std::ostream& out) {
    std::vector<std::int64_t> lambdas;
    for (std::int64_t lambda = 2; lambda <= opt.lambda_max; lambda += 2) lambdas.push_back(lambda);
    const int rank = span_dimension(opt.k, lambdas);
    out << rank << '\n';
    if (is_prime(opt.k) && rank != opt.k * (opt.k + 1) / 2) return kExitCheckFailed;
    return kExitOk;
}

int cmd_genfunc(const Options& opt, std::ostream& out) {
    const LensSpace lens = single_lens(opt);
    if (opt.points < 1 || opt.cutoff < 0) throw Error(ErrorCode::DomainViolation, "--points >= 1 and --cutoff >= 0");
    double max_dev = 0.0;
    for (const auto& pt : seeded_points(opt.seed, opt.points, opt.radius)) {
        max_dev = std::max(max_dev, std::abs(genfunc_closed(lens, pt) - genfunc_series(lens, pt, opt.cutoff, opt.cutoff)));
    }
    json doc = {{"lens", format_lens_space(lens)}, {"points", opt.points}, {"cutoff", opt.cutoff},
                {"seed", opt.seed}, {"radius", real_json(opt.radius)}, {"max_deviation", real_json(max_dev)}};
    out << doc.dump() << '\n';
    return kExitOk;
}

int cmd_remainder(const Options& opt, std::uint64_t budget, std::ostream& out) {
    const LensSpace lens = single_lens(opt);
    const auto rows = remainder_experiment(lens, opt.lambda_max, opt.samples, {}, budget);
    if (opt.out == "json") {
        json list = json::array();
        for (const auto& r : rows) {
            list.push_back({{"lambda", r.lambda}, {"residual", real_json(r.residual)},
                            {"residual_over_power", real_json(r.per_power)},
                            {"residual_over_power_log", real_json(r.per_power_log)}});
        }
        out << json{{"lens", format_lens_space(lens)}, {"rows", list}}.dump() << '\n';
        return kExitOk;
    }
    out << "lambda,residual,residual_over_power,residual_over_power_log\n";
    for (const auto& r : rows) {
        out << r.lambda << ',' << format_real(r.residual) << ',' << format_real(r.per_power) << ','
            << format_real(r.per_power_log) << '\n';
    }
    return kExitOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Kohn Laplacian spectra on spheres and lens spaces", "kohn_lens"};
    app.require_subcommand(1);
    Options opt;
    std::uint64_t budget_flag = 0;
    app.add_option("--budget", budget_flag, "enumeration budget (overrides KOHN_LENS_BUDGET)");

    const std::vector<std::string> formats{"csv", "json"};
    auto add_lens = [&](CLI::App* sub, bool required, bool many = false) {
        auto* o = sub->add_option("--lens", opt.lens, "lens space as k:l1,...,ln");
        if (required) o->required();
        if (!many) o->expected(1);
    };
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--out", opt.out, "output format")->check(CLI::IsMember(formats));
    };

    auto* dim = app.add_subcommand("dim", "dim H^G_{p,q} of a lens space");
    add_lens(dim, true);
    dim->add_option("--p", opt.p)->required()->check(CLI::NonNegativeNumber);
    dim->add_option("--q", opt.q)->required()->check(CLI::NonNegativeNumber);
    dim->add_option("--method", opt.method)->check(CLI::IsMember({"dp", "bruteforce", "recurrence"}));

    auto* spectrum = app.add_subcommand("spectrum", "eigenvalue multiplicity table");
    add_lens(spectrum, true);
    spectrum->add_option("--lambda-max", opt.lambda_max)->required();
    spectrum->add_flag("--contributors", opt.contributors, "emit JSON with per-eigenvalue bidegrees");
    add_format(spectrum);

    auto* count = app.add_subcommand("count", "eigenvalue counting function N_L(lambda)");
    add_lens(count, true);
    count->add_option("--lambda-max", opt.lambda_max)->required();

    auto* weyl = app.add_subcommand("weyl", "ratio N_L(lambda) / N(lambda)");
    add_lens(weyl, true);
    weyl->add_option("--lambda-max", opt.lambda_max)->required();
    weyl->add_option("--stride", opt.stride);
    add_format(weyl);

    auto* bounds = app.add_subcommand("bounds-check", "sweep the floor/ceiling sum bounds");
    bounds->add_option("--n-min", opt.n_min);
    bounds->add_option("--n-max", opt.n_max);
    bounds->add_option("--N-max", opt.big_n_max);
    bounds->add_option("--md-max", opt.md_max);

    auto* isospec = app.add_subcommand("isospec", "compare two lens spaces");
    add_lens(isospec, true, true);
    isospec->add_option("--lambda-max", opt.lambda_max)->capture_default_str();

    auto* classify = app.add_subcommand("classify", "isometry classes of 3-dimensional lens spaces");
    classify->add_option("--k", opt.k)->required();

    auto* cmatrix = app.add_subcommand("cmatrix", "C^lambda residue-count matrix");
    cmatrix->add_option("--k", opt.k)->required();
    cmatrix->add_option("--lambda", opt.lambda)->required();

    auto* span = app.add_subcommand("span", "rank of {C^lambda : lambda <= lambda-max}");
    span->add_option("--k", opt.k)->required();
    span->add_option("--lambda-max", opt.lambda_max)->required();

    auto* genfunc = app.add_subcommand("genfunc-check", "closed form vs truncated series");
    add_lens(genfunc, true);
    genfunc->add_option("--points", opt.points);
    genfunc->add_option("--cutoff", opt.cutoff);
    genfunc->add_option("--radius", opt.radius)->check(CLI::Range(0.0, kGenFuncRadius));
    genfunc->add_option("--seed", opt.seed);

    auto* remainder = app.add_subcommand("remainder", "Weyl remainder experiment");
    add_lens(remainder, true);
    remainder->add_option("--lambda-max", opt.lambda_max)->required();
    remainder->add_option("--samples", opt.samples);
    add_format(remainder);

    std::vector<std::string> argv_storage;
    argv_storage.reserve(args.size() + 1);
    argv_storage.emplace_back("kohn_lens");
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_storage) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitValidation;
    }

    try {
        const std::uint64_t budget = app.get_option("--budget")->count() ? budget_flag : default_budget();
        if (dim->parsed()) return cmd_dim(opt, budget, out);
        if (spectrum->parsed()) return cmd_spectrum(opt, budget, out);
        if (count->parsed()) return cmd_count(opt, budget, out);
        if (weyl->parsed()) return cmd_weyl(opt, budget, out);
        if (bounds->parsed()) return cmd_bounds(opt, out);
        if (isospec->parsed()) return cmd_isospec(opt, out);
        if (classify->parsed()) return cmd_classify(opt, out);
        if (cmatrix->parsed()) return cmd_cmatrix(opt, out);
        if (span->parsed()) return cmd_span(opt, out);
        if (genfunc->parsed()) return cmd_genfunc(opt, out);
        if (remainder->parsed()) return cmd_remainder(opt, budget, out);
    } catch (const Error& e) {
        err << "error [" << to_string(e.code()) << "]: " << e.what() << '\n';
        return kExitValidation;
    }
    return kExitValidation;
}

} // namespace kohn::cli
