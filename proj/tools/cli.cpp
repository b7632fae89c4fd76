#include "cli.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "splitspin/engines.hpp"

namespace splitspin::cli {

namespace {

/// Semantic argument problems found after flag parsing; exit code 2.
struct arg_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct common_config {
    std::string kind = "padovan";
    std::string s = "1", t = "1";
    std::vector<std::string> seeds;
    std::string format = "text";
    double tolerance = 1e-9;
};

void add_spec_options(CLI::App* cmd, common_config& cfg) {
    cmd->add_option("--kind", cfg.kind, "Sequence family")
        ->check(CLI::IsMember({"padovan", "perrin", "custom"}));
    cmd->add_option("--s", cfg.s, "Recurrence coefficient s (exact rational)");
    cmd->add_option("--t", cfg.t, "Recurrence coefficient t (exact rational)");
    cmd->add_option("--seeds", cfg.seeds, "Three seed values (custom kind only)")->expected(3);
}

void add_format_options(CLI::App* cmd, common_config& cfg) {
    cmd->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--tolerance", cfg.tolerance,
                    "Relative tolerance for floating comparisons");
}

bool wants_json(const common_config& cfg) { return cfg.format == "json"; }

/// Builds the spec over exact rationals, then hands the work a spec over the
/// integer ring whenever every parameter is integral.
template <class Fn>
int dispatch_spec(const common_config& cfg, Fn&& fn) {
    const big_rat s = parse_rational(cfg.s);
    const big_rat t = parse_rational(cfg.t);
    std::array<big_rat, 3> seeds{big_rat(1), big_rat(1), big_rat(1)};
    if (cfg.kind == "custom") {
        if (cfg.seeds.size() != 3) throw arg_error("--kind custom requires --seeds a b c");
        for (std::size_t i = 0; i < 3; ++i) seeds[i] = parse_rational(cfg.seeds[i]);
    } else if (!cfg.seeds.empty()) {
        throw arg_error("--seeds only applies to --kind custom");
    }

    bool integral = is_integral(s) && is_integral(t);
    if (cfg.kind == "custom")
        for (const auto& v : seeds) integral = integral && is_integral(v);

    if (integral) {
        seq_spec<big_int> spec;
        if (cfg.kind == "padovan") {
            spec = seq_spec<big_int>::padovan(big_int(s.get_num()), big_int(t.get_num()));
        } else if (cfg.kind == "perrin") {
            spec = seq_spec<big_int>::perrin(big_int(s.get_num()), big_int(t.get_num()));
        } else {
            spec = seq_spec<big_int>::custom(
                {big_int(seeds[0].get_num()), big_int(seeds[1].get_num()),
                 big_int(seeds[2].get_num())},
                big_int(s.get_num()), big_int(t.get_num()));
        }
        return fn(spec);
    }
    seq_spec<big_rat> spec;
    if (cfg.kind == "padovan") {
        spec = seq_spec<big_rat>::padovan(s, t);
    } else if (cfg.kind == "perrin") {
        spec = seq_spec<big_rat>::perrin(s, t);
    } else {
        spec = seq_spec<big_rat>::custom(seeds, s, t);
    }
    return fn(spec);
}

std::vector<backend_id> parse_backend_list(const std::vector<std::string>& raw) {
    std::vector<backend_id> out;
    for (const std::string& chunk : raw) {
        std::stringstream ss(chunk);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty()) continue;
            const auto b = parse_backend(item);
            if (!b) throw arg_error("unknown backend '" + item + "'");
            if (std::find(out.begin(), out.end(), *b) == out.end()) out.push_back(*b);
        }
    }
    if (out.empty()) throw arg_error("no backends given");
    return out;
}

void write_output(const std::string& path, const std::string& payload, std::ostream& out) {
    if (path.empty()) {
        out << payload;
        return;
    }
    std::ofstream file(path);
    if (!file) throw std::runtime_error("cannot open output file: " + path);
    file << payload;
}

// --- subcommand bodies -------------------------------------------------------

int run_term(const common_config& cfg, index_t n, const std::string& backend_name,
             std::ostream& out) {
    const auto backend = parse_backend(backend_name);
    if (!backend) throw arg_error("unknown backend '" + backend_name + "'");
    return dispatch_spec(cfg, [&](const auto& spec) {
        const auto value = spinor_term(spec, n, *backend);
        if (wants_json(cfg)) {
            out << to_json(value).dump() << '\n';
        } else {
            out << render(value) << (*backend == backend_id::binet ? " (approx)" : "") << '\n';
        }
        return 0;
    });
}

int run_table(const common_config& cfg, index_t from, index_t to, std::ostream& out) {
    if (to < from) throw arg_error("--to must be >= --from");
    return dispatch_spec(cfg, [&](const auto& spec) {
        using S = std::decay_t<decltype(spec.s)>;
        const auto table = seq_table(spec, to + 4);
        auto term = [&](index_t n) {
            auto at = [&](index_t k) -> const S& { return table[static_cast<std::size_t>(k)]; };
            return spinor<S>(hyper<S>(at(n), at(n + 3)), hyper<S>(S(-at(n + 1)), at(n + 2)));
        };
        if (wants_json(cfg)) {
            ordered_json rows = ordered_json::array();
            for (index_t n = from; n <= to; ++n)
                rows.push_back(ordered_json{{"n", n}, {"spinor", to_json(term(n))}});
            out << rows.dump() << '\n';
        } else {
            for (index_t n = from; n <= to; ++n) out << n << '\t' << render(term(n)) << '\n';
        }
        return 0;
    });
}

int run_sum(const common_config& cfg, index_t m, const std::string& stride_name,
            std::ostream& out) {
    sum_stride stride;
    if (stride_name == "all") {
        stride = sum_stride::all;
    } else if (stride_name == "even") {
        stride = sum_stride::even;
    } else if (stride_name == "odd") {
        stride = sum_stride::odd;
    } else {
        throw arg_error("--stride must be all|even|odd");
    }
    if (cfg.kind == "custom") throw arg_error("sum is defined for the named kinds");
    return dispatch_spec(cfg, [&](const auto& spec) {
        if (!spec.classic()) throw arg_error("sum closed forms need s = 1 and t = 1");
        const auto closed = spinor_partial_sum(spec, m, stride);
        const auto direct = spinor_partial_sum_direct(spec, m, stride);
        const bool equal = closed == direct;
        if (wants_json(cfg)) {
            out << ordered_json{{"closed", to_json(closed)},
                                {"direct", to_json(direct)},
                                {"equal", equal}}
                       .dump()
                << '\n';
        } else {
            out << "closed " << render(closed) << '\n';
            out << "direct " << render(direct) << '\n';
            out << (equal ? "EQUAL" : "UNEQUAL") << '\n';
        }
        return 0;
    });
}

int run_gf(const common_config& cfg, index_t count, std::ostream& out) {
    if (cfg.kind == "custom") throw arg_error("gf is defined for the named kinds");
    return dispatch_spec(cfg, [&](const auto& spec) {
        const auto coeffs = gf_coefficients(spec, count);
        if (wants_json(cfg)) {
            ordered_json arr = ordered_json::array();
            for (const auto& c : coeffs) arr.push_back(to_json(c));
            out << ordered_json{{"coefficients", std::move(arr)}}.dump() << '\n';
        } else {
            for (index_t n = 0; n < count; ++n)
                out << n << '\t' << render(coeffs[static_cast<std::size_t>(n)]) << '\n';
        }
        return 0;
    });
}

int run_egf(const common_config& cfg, double y, bool poisson, index_t terms, std::ostream& out) {
    if (cfg.kind == "custom") throw arg_error("egf is defined for the named kinds");
    return dispatch_spec(cfg, [&](const auto& spec) {
        using S = std::decay_t<decltype(spec.s)>;
        if constexpr (!std::is_same_v<S, big_int>) {
            throw arg_error("egf needs integer parameters (closed forms need s = t = 1)");
            return 2; // unreachable
        } else {
            if (!spec.classic()) throw arg_error("egf needs s = 1 and t = 1");
            const egf_result r = egf_eval(spec, y, poisson, terms, cfg.tolerance);
            if (wants_json(cfg)) {
                out << ordered_json{{"closed", to_json(r.closed)},
                                    {"series", to_json(r.series)},
                                    {"max_deviation", r.max_deviation},
                                    {"tail_bound", r.tail_bound}}
                           .dump()
                    << '\n';
            } else {
                out << "closed " << render(r.closed) << '\n';
                out << "series " << render(r.series) << '\n';
                out << "max_deviation " << scalar_text(r.max_deviation) << '\n';
                out << "tail_bound " << scalar_text(r.tail_bound) << '\n';
            }
            return 0;
        }
    });
}

int run_audit(index_t n_max, bool text_table, const std::string& out_path, std::ostream& out) {
    const audit_report report = identity_audit(n_max);
    if (!out_path.empty()) {
        write_output(out_path, to_json(report).dump(2) + "\n", out);
        out << "audit report written to " << out_path << '\n';
        return 0;
    }
    // the report json is the product; the table is an opt-in human view
    if (text_table) {
        out << render_table(report);
    } else {
        out << to_json(report).dump() << '\n';
    }
    return 0;
}

int run_check(const common_config& cfg, index_t n_max, const std::vector<std::string>& backends_raw,
              std::ostream& out) {
    const auto backends = parse_backend_list(backends_raw);
    return dispatch_spec(cfg, [&](const auto& spec) {
        const check_result r = cross_check(spec, n_max, backends, cfg.tolerance);
        if (wants_json(cfg)) {
            ordered_json j{{"ok", r.ok}, {"notes", r.notes}};
            if (r.failure) {
                j["disagreement"] = ordered_json{{"backend_a", r.failure->backend_a},
                                                 {"backend_b", r.failure->backend_b},
                                                 {"n", r.failure->n},
                                                 {"lhs", r.failure->lhs},
                                                 {"rhs", r.failure->rhs}};
            } else {
                j["disagreement"] = nullptr;
            }
            out << j.dump() << '\n';
        } else {
            for (const auto& note : r.notes) out << "note: " << note << '\n';
            if (r.ok) {
                out << "agreement over n = 0.." << n_max << '\n';
            } else {
                out << "DISAGREEMENT at n=" << r.failure->n << ": " << r.failure->backend_a
                    << " -> " << r.failure->lhs << ", " << r.failure->backend_b << " -> "
                    << r.failure->rhs << '\n';
            }
        }
        return r.ok ? 0 : 1;
    });
}

int run_bench(const common_config& cfg, const std::vector<index_t>& n_values,
              const std::vector<std::string>& backends_raw, int reps, const std::string& out_path,
              std::ostream& out, std::ostream& err) {
    const auto backends = parse_backend_list(backends_raw);
    if (n_values.empty()) throw arg_error("bench needs at least one --n value");
    return dispatch_spec(cfg, [&](const auto& spec) {
        const bench_run run = benchmark_run(spec, n_values, backends, reps);
        for (const auto& note : run.notes) err << "note: " << note << '\n';
        write_output(out_path, bench_csv(run), out);
        if (!out_path.empty()) out << "bench csv written to " << out_path << '\n';
        return 0;
    });
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Padovan/Perrin hyperbolic spinor sequences built from split quaternions"};
    app.name("splitspin");
    app.require_subcommand(1);

    common_config cfg;

    auto* term = app.add_subcommand("term", "Print one spinor term");
    index_t term_n = 0;
    std::string term_backend = "iter";
    term->add_option("--n", term_n, "Term index")->required()->check(CLI::NonNegativeNumber);
    term->add_option("--backend", term_backend, "iter|matpow|det_banded|det_cereceda|binet");
    add_spec_options(term, cfg);
    add_format_options(term, cfg);

    auto* table = app.add_subcommand("table", "Print a range of spinor terms");
    index_t table_from = 0, table_to = 0;
    table->add_option("--from", table_from, "First index")->required()->check(CLI::NonNegativeNumber);
    table->add_option("--to", table_to, "Last index")->required()->check(CLI::NonNegativeNumber);
    add_spec_options(table, cfg);
    add_format_options(table, cfg);

    auto* sum = app.add_subcommand("sum", "Partial sum: closed form vs direct summation");
    index_t sum_m = 0;
    std::string sum_stride_name = "all";
    sum->add_option("--m", sum_m, "Upper summation index")->required()->check(CLI::NonNegativeNumber);
    sum->add_option("--stride", sum_stride_name, "all|even|odd");
    add_spec_options(sum, cfg);
    add_format_options(sum, cfg);

    auto* gf = app.add_subcommand("gf", "Generating-function coefficients");
    index_t gf_count = 1;
    gf->add_option("--count", gf_count, "Number of coefficients")
        ->required()
        ->check(CLI::PositiveNumber);
    add_spec_options(gf, cfg);
    add_format_options(gf, cfg);

    auto* egf = app.add_subcommand("egf", "Exponential/Poisson generating function");
    double egf_y = 0.0;
    bool egf_poisson = false;
    index_t egf_terms = 60;
    egf->add_option("--y", egf_y, "Evaluation point, |y| <= 20")->required();
    egf->add_flag("--poisson", egf_poisson, "Damp by exp(-y)");
    egf->add_option("--terms", egf_terms, "Series truncation")->check(CLI::PositiveNumber);
    add_spec_options(egf, cfg);
    add_format_options(egf, cfg);

    auto* audit = app.add_subcommand("audit", "Audit the printed identity corpus");
    index_t audit_n_max = 64;
    std::string audit_out;
    audit->add_option("--n-max", audit_n_max, "Top index per identity (>= 5)");
    audit->add_option("--out", audit_out, "Write report JSON to a file");
    add_format_options(audit, cfg);
    auto* audit_format_opt = audit->get_option("--format");

    auto* check = app.add_subcommand("check", "Cross-check term backends");
    index_t check_n_max = 64;
    std::vector<std::string> check_backends{"iter,matpow,det_banded,det_cereceda,binet"};
    check->add_option("--n-max", check_n_max, "Top index")->check(CLI::NonNegativeNumber);
    check->add_option("--backends", check_backends, "Comma-separated backend list");
    add_spec_options(check, cfg);
    add_format_options(check, cfg);

    auto* bench = app.add_subcommand("bench", "Time backends and write CSV");
    std::vector<index_t> bench_n;
    std::vector<std::string> bench_backends{"iter,matpow"};
    int bench_reps = 5;
    std::string bench_out;
    bench->add_option("--n", bench_n, "Term indices to time")
        ->required()
        ->check(CLI::NonNegativeNumber);
    bench->add_option("--backends", bench_backends, "Comma-separated backend list");
    bench->add_option("--reps", bench_reps, "Repetitions per pair (>= 3)");
    bench->add_option("--out", bench_out, "Write CSV to a file");
    add_spec_options(bench, cfg);
    add_format_options(bench, cfg);

    const bool json_errors =
        std::find(args.begin(), args.end(), "--format=json") != args.end() ||
        [&] {
            for (std::size_t i = 0; i + 1 < args.size(); ++i)
                if (args[i] == "--format" && args[i + 1] == "json") return true;
            return false;
        }();

    auto emit_error = [&](const char* type, const std::string& message) {
        if (json_errors) {
            err << ordered_json{{"error", ordered_json{{"type", type}, {"message", message}}}}.dump()
                << '\n';
        } else {
            err << "error: " << message << '\n';
        }
    };

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        emit_error("argument", e.what());
        err << app.help();
        return 2;
    }

    try {
        if (term->parsed()) return run_term(cfg, term_n, term_backend, out);
        if (table->parsed()) return run_table(cfg, table_from, table_to, out);
        if (sum->parsed()) return run_sum(cfg, sum_m, sum_stride_name, out);
        if (gf->parsed()) return run_gf(cfg, gf_count, out);
        if (egf->parsed()) return run_egf(cfg, egf_y, egf_poisson, egf_terms, out);
        if (audit->parsed()) {
            const bool text_table = audit_format_opt->count() > 0 && cfg.format == "text";
            return run_audit(audit_n_max, text_table, audit_out, out);
        }
        if (check->parsed()) return run_check(cfg, check_n_max, check_backends, out);
        if (bench->parsed())
            return run_bench(cfg, bench_n, bench_backends, bench_reps, bench_out, out, err);
        emit_error("argument", "no subcommand given");
        return 2;
    } catch (const arg_error& e) {
        emit_error("argument", e.what());
        err << "run 'splitspin --help' for usage\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        emit_error("argument", e.what());
        err << "run 'splitspin --help' for usage\n";
        return 2;
    } catch (const index_out_of_range& e) {
        emit_error("argument", e.what());
        err << "run 'splitspin --help' for usage\n";
        return 2;
    } catch (const std::exception& e) {
        emit_error("internal", e.what());
        return 1;
    }
}

} // namespace splitspin::cli
