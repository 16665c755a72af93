#include "wps/cli.hpp"

#include <cstdlib>
#include <numeric>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "wps/census.hpp"
#include "wps/field.hpp"
#include "wps/io.hpp"

namespace wps {
namespace {

std::string fiber_text(const FiberReport& r) {
    const Field& f = *r.point.field();
    std::ostringstream os;
    os << "target weights " << format_weights(r.target_weights) << " over F_" << f.order()
       << ", i=" << r.i << ", point " << format_point(r.point.coords()) << "\n"
       << "delta_P=" << r.delta_P << " delta_iP=" << r.delta_iP
       << " hypothesis=" << (r.hypothesis_holds ? "true" : "false") << "\n"
       << "brute=" << r.brute_count << " formula=" << r.formula_count
       << " old=" << r.old_formula_count << "\n"
       << "match=" << (r.brute_count == r.formula_count ? "true" : "false")
       << " old_match=" << (r.brute_count == r.old_formula_count ? "true" : "false") << "\n";
    return os.str();
}

int run_count(const CliInvocation& inv, std::ostream& out) {
    auto field = make_field(inv.p, inv.k);
    const Weights weights = parse_weights(inv.weights);
    const std::uint64_t count = count_points(field, weights, inv.budget);
    if (inv.format == "json") {
        nlohmann::ordered_json j;
        j["q"] = field->order();
        j["p"] = field->characteristic();
        j["k"] = field->degree();
        j["weights"] = weights_json(weights);
        j["count"] = count;
        out << j.dump(2) << "\n";
    } else {
        out << count << "\n";
    }
    return 0;
}

int run_enumerate(const CliInvocation& inv, std::ostream& out) {
    auto field = make_field(inv.p, inv.k);
    const SpaceCensus census = enumerate_space(field, parse_weights(inv.weights), inv.budget);
    if (inv.format == "csv") {
        out << census_csv(census);
    } else if (inv.format == "text") {
        for (const WpsPoint& P : census.points()) out << format_point(P.coords()) << "\n";
    } else {
        out << census_json(census).dump(2) << "\n";
    }
    return 0;
}

int render_fiber(const FiberReport& report, const std::string& format, std::ostream& out) {
    if (format == "csv") {
        out << fiber_report_csv_header() << "\n" << fiber_report_csv_row(report) << "\n";
    } else if (format == "text") {
        out << fiber_text(report);
    } else {
        out << fiber_report_json(report).dump(2) << "\n";
    }
    return report.brute_count == report.formula_count ? 0 : 1;
}

int run_fiber(const CliInvocation& inv, std::ostream& out) {
    auto field = make_field(inv.p, inv.k);
    const Weights target = parse_weights(inv.weights);
    const WpsPoint P = normalize(field, target, parse_point(inv.point, *field));
    return render_fiber(build_fiber_report(target, inv.i, P, inv.budget), inv.format, out);
}

int run_verify_lemma(const CliInvocation& inv, std::ostream& out) {
    SweepConfig config;
    config.q_list = inv.q_list;
    config.n_min = inv.n_min;
    config.n_max = inv.n_max;
    config.weight_max = inv.weight_max;
    config.mode = inv.mode == "sampled" ? SweepConfig::Mode::sampled
                                        : SweepConfig::Mode::exhaustive;
    config.samples = inv.samples;
    config.seed = inv.seed;
    config.budget = inv.budget;
    config.jobs = inv.jobs;
    const SweepReport report = run_sweep(config);
    if (inv.format == "csv") {
        out << sweep_report_csv(report);
    } else if (inv.format == "text") {
        out << "cases=" << report.totals.cases << " matches=" << report.totals.matches
            << " mismatches=" << report.totals.mismatches
            << " old_formula_mismatches=" << report.totals.old_formula_mismatches << "\n";
    } else {
        out << sweep_report_json(report);
    }
    return report.totals.mismatches == 0 ? 0 : 1;
}

int run_counterexample(const CliInvocation& inv, std::ostream& out) {
    const FiberReport report = reproduce_counterexample(inv.a0, inv.a1, inv.budget);
    if (inv.format == "json") {
        out << fiber_report_json(report).dump(2) << "\n";
    } else {
        out << fiber_text(report);
    }
    return 0;
}

int run_gcd_identity(const CliInvocation& inv, std::ostream& out) {
    if (inv.max_given) {
        std::uint64_t coprime = 0;
        std::uint64_t violations = 0;
        nlohmann::ordered_json first = nlohmann::ordered_json::array();
        for (std::uint64_t a = 1; a <= inv.max; ++a) {
            for (std::uint64_t d = 1; d <= inv.max; ++d) {
                for (std::uint64_t m = 1; m <= inv.max; ++m) {
                    if (std::gcd(std::gcd(a, d), m) != 1) continue;
                    ++coprime;
                    if (std::gcd(a, m * d) / std::gcd(a, d) != std::gcd(a, m)) {
                        ++violations;
                        if (first.size() < 10) {
                            first.push_back({{"a", a}, {"d", d}, {"m", m}});
                        }
                    }
                }
            }
        }
        if (inv.format == "text") {
            out << "max=" << inv.max << " coprime_triples=" << coprime
                << " violations=" << violations
                << " all_hold=" << (violations == 0 ? "true" : "false") << "\n";
        } else {
            nlohmann::ordered_json j;
            j["max"] = inv.max;
            j["coprime_triples"] = coprime;
            j["violations"] = violations;
            j["first_violations"] = std::move(first);
            j["all_hold"] = violations == 0;
            out << j.dump(2) << "\n";
        }
        return violations == 0 ? 0 : 1;
    }

    const ValuationCheck check = check_valuation_identity(inv.a, inv.d, inv.m);
    const bool coprime = std::gcd(std::gcd(inv.a, inv.d), inv.m) == 1;
    if (inv.format == "text") {
        out << "gcd(a, m*d)/gcd(a, d)=" << std::gcd(inv.a, inv.m * inv.d) / std::gcd(inv.a, inv.d)
            << " gcd(a, m)=" << std::gcd(inv.a, inv.m)
            << " holds=" << (check.holds ? "true" : "false")
            << " coprime=" << (coprime ? "true" : "false") << "\n";
    } else {
        out << valuation_check_json(inv.a, inv.d, inv.m, check).dump(2) << "\n";
    }
    return coprime && !check.holds ? 1 : 0;
}

int run_galois_check(const CliInvocation& inv, std::ostream& out) {
    const Weights weights = parse_weights(inv.weights);
    const GaloisCheck check = galois_crosscheck(weights, inv.p, inv.k, inv.budget);
    if (inv.format == "text") {
        out << "base_count=" << check.base_count << " fixed_count=" << check.fixed_count
            << " equal=" << (check.equal ? "true" : "false") << "\n";
    } else {
        out << galois_check_json(weights, inv.p, inv.k, check).dump(2) << "\n";
    }
    return check.equal ? 0 : 1;
}

} // namespace

CliInvocation parse_args(const std::vector<std::string>& args) {
    CliInvocation inv;
    CLI::App app{"rational points of weighted projective spaces over small finite fields"};
    app.require_subcommand(1);

    std::vector<CLI::Option*> budget_opts;
    auto add_budget = [&](CLI::App* sub) {
        budget_opts.push_back(
            sub->add_option("--budget", inv.budget, "cap on raw tuples per enumeration"));
    };
    auto add_format = [&](CLI::App* sub, const std::vector<std::string>& allowed) {
        sub->add_option("--format", inv.format, "output format")->check(CLI::IsMember(allowed));
    };
    auto add_field = [&](CLI::App* sub) {
        sub->add_option("--p", inv.p, "field characteristic, a prime")->required();
        sub->add_option("--k", inv.k, "extension degree, default 1");
    };
    auto add_weights = [&](CLI::App* sub) {
        sub->add_option("--weights", inv.weights, "weights a0,a1,...,an")->required();
    };

    CLI::App* count = app.add_subcommand("count", "point count of one space");
    add_field(count);
    add_weights(count);
    add_budget(count);
    add_format(count, {"text", "json"});

    CLI::App* enumerate = app.add_subcommand("enumerate", "full point census of one space");
    add_field(enumerate);
    add_weights(enumerate);
    add_budget(enumerate);
    add_format(enumerate, {"json", "csv", "text"});

    CLI::App* fiber =
        app.add_subcommand("fiber", "fiber of the coordinate power map at one point");
    add_field(fiber);
    add_weights(fiber);
    fiber->add_option("--i", inv.i, "coordinate index of the power map")->required();
    fiber->add_option("--point", inv.point, "target point x0,x1,...,xn")->required();
    add_budget(fiber);
    add_format(fiber, {"json", "csv", "text"});

    CLI::App* verify = app.add_subcommand(
        "verify-lemma", "sweep comparing enumerated fiber sizes with the closed form");
    verify->add_option("--q-list", inv.q_list, "field orders to sweep")->delimiter(',');
    verify->add_option("--n-min", inv.n_min, "smallest projective dimension");
    verify->add_option("--n-max", inv.n_max, "largest projective dimension");
    verify->add_option("--weight-max", inv.weight_max, "largest weight value");
    verify->add_option("--mode", inv.mode, "exhaustive or sampled")
        ->check(CLI::IsMember({"exhaustive", "sampled"}));
    verify->add_option("--samples", inv.samples, "sampled mode: minimum case count");
    verify->add_option("--seed", inv.seed, "sampled mode: seed");
    verify->add_option("--jobs", inv.jobs, "worker threads");
    add_budget(verify);
    add_format(verify, {"json", "csv", "text"});

    CLI::App* cex = app.add_subcommand(
        "counterexample", "smallest instance separating the corrected and superseded counts");
    cex->add_option("--a0", inv.a0, "first free weight");
    cex->add_option("--a1", inv.a1, "second free weight");
    add_budget(cex);
    add_format(cex, {"text", "json"});

    CLI::App* gcd_id = app.add_subcommand(
        "gcd-identity", "check gcd(a, m*d)/gcd(a, d) = gcd(a, m) for coprime triples");
    CLI::Option* opt_a = gcd_id->add_option("--a", inv.a, "weight operand");
    CLI::Option* opt_d = gcd_id->add_option("--d", inv.d, "support gcd operand");
    CLI::Option* opt_m = gcd_id->add_option("--m", inv.m, "unit group order operand");
    CLI::Option* opt_max =
        gcd_id->add_option("--max", inv.max, "check every coprime triple up to this bound");
    add_format(gcd_id, {"json", "text"});

    CLI::App* galois = app.add_subcommand(
        "galois-check", "rationality cross-check through the quadratic extension");
    add_field(galois);
    add_weights(galois);
    add_budget(galois);
    add_format(galois, {"json", "text"});

    try {
        std::vector<const char*> argv;
        argv.reserve(args.size() + 1);
        argv.push_back("wps");
        for (const std::string& s : args) argv.push_back(s.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        inv.cmd = Subcommand::help;
        const std::vector<CLI::App*> active = app.get_subcommands();
        inv.help_text = active.empty() ? app.help() : active.front()->help();
        return inv;
    } catch (const CLI::ParseError& e) {
        throw CliUsageError(e.what());
    }

    if (app.got_subcommand(count)) inv.cmd = Subcommand::count;
    else if (app.got_subcommand(enumerate)) inv.cmd = Subcommand::enumerate_points;
    else if (app.got_subcommand(fiber)) inv.cmd = Subcommand::fiber;
    else if (app.got_subcommand(verify)) inv.cmd = Subcommand::verify_lemma;
    else if (app.got_subcommand(cex)) inv.cmd = Subcommand::counterexample;
    else if (app.got_subcommand(gcd_id)) inv.cmd = Subcommand::gcd_identity;
    else if (app.got_subcommand(galois)) inv.cmd = Subcommand::galois_check;

    if (inv.cmd == Subcommand::gcd_identity) {
        inv.max_given = opt_max->count() > 0;
        const bool any_triple = opt_a->count() || opt_d->count() || opt_m->count();
        inv.triple_given = opt_a->count() && opt_d->count() && opt_m->count();
        if (inv.max_given && any_triple) {
            throw CliUsageError("--max cannot be combined with --a/--d/--m");
        }
        if (!inv.max_given && !inv.triple_given) {
            throw CliUsageError("gcd-identity needs either --max or all of --a, --d, --m");
        }
        if (inv.max_given && (inv.max < 1 || inv.max > 500)) {
            throw CliUsageError("--max must be between 1 and 500");
        }
    }

    bool budget_flag = false;
    for (const CLI::Option* opt : budget_opts) budget_flag = budget_flag || opt->count() > 0;
    if (!budget_flag) {
        if (const char* env = std::getenv("WPS_BUDGET")) {
            const std::string text(env);
            if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
                throw CliUsageError("WPS_BUDGET must be a non-negative integer");
            }
            try {
                inv.budget = std::stoull(text);
            } catch (const std::out_of_range&) {
                throw CliUsageError("WPS_BUDGET is out of range");
            }
        }
    }

    if (inv.format.empty()) {
        inv.format = (inv.cmd == Subcommand::count || inv.cmd == Subcommand::counterexample)
                         ? "text"
                         : "json";
    }
    return inv;
}

int dispatch(const CliInvocation& inv, std::ostream& out, std::ostream& err) {
    try {
        switch (inv.cmd) {
        case Subcommand::help:
            out << inv.help_text;
            return 0;
        case Subcommand::count:
            return run_count(inv, out);
        case Subcommand::enumerate_points:
            return run_enumerate(inv, out);
        case Subcommand::fiber:
            return run_fiber(inv, out);
        case Subcommand::verify_lemma:
            return run_verify_lemma(inv, out);
        case Subcommand::counterexample:
            return run_counterexample(inv, out);
        case Subcommand::gcd_identity:
            return run_gcd_identity(inv, out);
        case Subcommand::galois_check:
            return run_galois_check(inv, out);
        }
    } catch (const CliUsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const VerificationFailure& e) {
        err << "verification failure: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return dispatch(parse_args(args), out, err);
    } catch (const CliUsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace wps
