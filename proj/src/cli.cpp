#include "rees/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "rees/errors.hpp"
#include "rees/koszul.hpp"
#include "rees/matrix_spec.hpp"
#include "rees/theorems.hpp"
#include "rees/util.hpp"

namespace rees {

namespace {

struct CommonOpts {
    std::string input;
    std::string out;
    bool json = false;
    double timeout_seconds = 0.0;
    unsigned jobs = 1;
    bool has_timeout = false;
};

void add_output_flags(CLI::App* cmd, CommonOpts& o) {
    cmd->add_flag("--json", o.json, "print the JSON report instead of text");
    cmd->add_option("--out", o.out, "also write the JSON report to this file");
    cmd->add_option("--timeout", o.timeout_seconds,
                    "give up after this many seconds with exit code 3")
        ->check(CLI::NonNegativeNumber);
}

void add_input_option(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--input", o.input, "path to the matrix spec JSON file")->required();
}

void add_jobs_option(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--jobs", o.jobs, "threads for independent subcomputations")
        ->check(CLI::PositiveNumber);
}

// Install the time budget for the rest of the command, if one was requested.
// A zero budget is already exhausted, which makes `--timeout 0` a
// deterministic way to exercise the timeout path.
std::unique_ptr<DeadlineGuard> arm_timeout(const CommonOpts& o) {
    if (!o.has_timeout)
        return nullptr;
    auto guard = std::make_unique<DeadlineGuard>(
        std::chrono::duration_cast<std::chrono::steady_clock::duration>(
            std::chrono::duration<double>(o.timeout_seconds)));
    check_deadline();
    return guard;
}

void write_json_file(const std::string& path, const nlohmann::json& doc) {
    std::ofstream f(path);
    if (!f)
        throw InputError("cannot write output file: " + path);
    f << doc.dump(2) << "\n";
}

void emit(const CommonOpts& o, const nlohmann::json& doc, const std::string& human) {
    if (o.json)
        std::cout << doc.dump(2) << "\n";
    else
        std::cout << human;
    if (!o.out.empty())
        write_json_file(o.out, doc);
}

// Minimal aligned-column rendering for the human reports.
std::string render_table(const std::vector<std::vector<std::string>>& rows,
                         const std::string& indent) {
    std::vector<std::size_t> width;
    for (const auto& row : rows) {
        width.resize(std::max(width.size(), row.size()), 0);
        for (std::size_t c = 0; c < row.size(); ++c)
            width[c] = std::max(width[c], row[c].size());
    }
    std::string out;
    for (const auto& row : rows) {
        out += indent;
        for (std::size_t c = 0; c < row.size(); ++c) {
            out += row[c];
            if (c + 1 < row.size())
                out += std::string(width[c] - row[c].size() + 2, ' ');
        }
        out += "\n";
    }
    return out;
}

std::string describe(const MatrixSpec& spec, const PolyMatrix& m) {
    std::string name = spec.label.empty() ? "matrix" : spec.label;
    std::string field = spec.characteristic == 0
                            ? "Q"
                            : "GF(" + std::to_string(spec.characteristic) + ")";
    return name + " (" + std::to_string(m.rows()) + " x " + std::to_string(m.cols()) +
           " over " + field + ")";
}

int run_grade_profile(const CommonOpts& o) {
    const MatrixSpec spec = load_matrix_spec(o.input);
    auto [ring, m] = build_matrix(spec);
    const auto guard = arm_timeout(o);
    const GradeProfile profile = grade_profile(m, o.jobs);

    nlohmann::json doc;
    doc["command"] = "grade-profile";
    doc["label"] = spec.label;
    doc["rows"] = m.rows();
    doc["cols"] = m.cols();
    doc["characteristic"] = spec.characteristic;
    doc["profile"] = nlohmann::json::array();
    std::vector<std::vector<std::string>> table = {{"k", "grade I_k(M)"}};
    for (const auto& [k, g] : profile.entries) {
        doc["profile"].push_back({{"k", k}, {"grade", g.to_string()}});
        table.push_back({std::to_string(k), g.to_string()});
    }
    std::string human = "grade profile of " + describe(spec, m) + "\n" +
                        render_table(table, "  ");
    emit(o, doc, human);
    return 0;
}

int run_theorem_check(const CommonOpts& o, int which) {
    const MatrixSpec spec = load_matrix_spec(o.input);
    auto [ring, m] = build_matrix(spec);
    const auto guard = arm_timeout(o);
    const TheoremReport report =
        which == 1 ? check_theorem1(m, o.jobs) : check_theorem2(m, o.jobs);

    nlohmann::json doc;
    doc["command"] = which == 1 ? "check-thm1" : "check-thm2";
    doc["label"] = spec.label;
    doc["report"] = report.to_json();

    std::vector<std::vector<std::string>> table = {
        {"condition", "expected", "computed", "pass"}};
    for (const auto& c : report.conditions)
        table.push_back({c.label, c.expected, c.computed, c.pass ? "yes" : "no"});
    std::string human = "theorem " + report.theorem + " check for " + describe(spec, m) +
                        "\n" + render_table(table, "  ") +
                        "verdict: " + report.verdict + "\n";
    emit(o, doc, human);
    return report.verdict == "VIOLATION" ? 1 : 0;
}

int run_rees_ideal(const CommonOpts& o) {
    const MatrixSpec spec = load_matrix_spec(o.input);
    auto [ring, m] = build_matrix(spec);
    const auto guard = arm_timeout(o);
    const RingPtr S = forms_ring(m);
    const Ideal kernel = rees_ideal(m, S);
    const std::vector<Polynomial>& basis = kernel.basis();

    nlohmann::json doc;
    doc["command"] = "rees-ideal";
    doc["label"] = spec.label;
    doc["generators"] = nlohmann::json::array();
    std::string human = "Rees kernel of " + describe(spec, m) + ", reduced basis (" +
                        std::to_string(basis.size()) + " elements):\n";
    for (const auto& f : basis) {
        doc["generators"].push_back(to_string(f));
        human += "  " + to_string(f) + "\n";
    }
    emit(o, doc, human);
    return 0;
}

int run_koszul_strand(const CommonOpts& o, std::int64_t degree) {
    const MatrixSpec spec = load_matrix_spec(o.input);
    auto [ring, m] = build_matrix(spec);
    const auto guard = arm_timeout(o);
    nlohmann::json strand = strand_report(m, degree);

    nlohmann::json doc;
    doc["command"] = "koszul-strand";
    doc["label"] = spec.label;
    doc["strand"] = strand;

    std::string human = "degree-" + std::to_string(degree) + " strand for " +
                        describe(spec, m) + "\n  ranks (r = 0.." +
                        std::to_string(m.rows()) + "):";
    for (const auto& r : strand["ranks"])
        human += " " + r.dump();
    human += "\n";
    for (const auto& map : strand["maps"])
        human += "  map " + map["position"].dump() + ": " +
                 std::to_string(map["row_labels"].size()) + " x " +
                 std::to_string(map["col_labels"].size()) + "\n";
    emit(o, doc, human);
    return 0;
}

int run_resolve_power(const CommonOpts& o, std::int64_t power) {
    const MatrixSpec spec = load_matrix_spec(o.input);
    auto [ring, m] = build_matrix(spec);
    const auto guard = arm_timeout(o);
    const GradedComplex complex = power_resolution(m, power);
    const AcyclicityReport cert = certify_acyclic(complex, o.jobs);

    nlohmann::json doc;
    doc["command"] = "resolve-power";
    doc["label"] = spec.label;
    doc["power"] = power;
    doc["ranks"] = complex.ranks();
    doc["maps"] = nlohmann::json::array();
    for (std::size_t k = 1; k <= complex.length(); ++k) {
        const PolyMatrix& a = complex.map_at(k);
        nlohmann::json entries = nlohmann::json::array();
        for (std::size_t i = 0; i < a.rows(); ++i) {
            nlohmann::json row = nlohmann::json::array();
            for (std::size_t j = 0; j < a.cols(); ++j)
                row.push_back(to_string(a.at(i, j)));
            entries.push_back(std::move(row));
        }
        doc["maps"].push_back({{"position", k}, {"entries", std::move(entries)}});
    }
    doc["augmentation"] = nlohmann::json::array();
    for (std::size_t j = 0; j < complex.augmentation()->cols(); ++j)
        doc["augmentation"].push_back(to_string(complex.augmentation()->at(0, j)));
    const nlohmann::json cert_json = cert.to_json();
    doc["certificate"] = cert_json;

    std::string human = "free resolution certificate for power " + std::to_string(power) +
                        " of " + describe(spec, m) + "\n  module ranks:";
    for (const auto r : complex.ranks())
        human += " " + std::to_string(r);
    human += "\n";
    std::vector<std::vector<std::string>> table = {
        {"position", "rank expected", "rank computed", "grade method", "grade", "ok"}};
    for (const auto& p : cert.positions) {
        table.push_back({std::to_string(p.position), std::to_string(p.rank_expected),
                         std::to_string(p.rank_computed),
                         cert_json["positions"][p.position - 1]["grade_method"]
                             .get<std::string>(),
                         p.grade_computed ? p.grade_computed->to_string() : "-",
                         p.pass ? "yes" : "no"});
    }
    human += render_table(table, "  ");
    human += std::string("certificate: ") + (cert.pass ? "PASS" : "FAIL") + "\n";
    emit(o, doc, human);
    return cert.pass ? 0 : 1;
}

int run_gb(const CommonOpts& o, const std::vector<std::string>& gens,
           const std::string& order_name) {
    const MatrixSpec spec = load_matrix_spec(o.input);
    const RingPtr ring = spec_ring(spec);
    const auto guard = arm_timeout(o);
    std::vector<Polynomial> polys;
    for (const auto& text : gens)
        polys.push_back(parse_polynomial(ring, text));
    const MonomialOrder order = order_name == "lex" ? MonomialOrder{OrderKind::Lex, 0}
                                                    : ring->storage_order();
    const Ideal ideal(ring, std::move(polys));
    const std::vector<Polynomial>& basis = ideal.basis(order);

    nlohmann::json doc;
    doc["command"] = "gb";
    doc["label"] = spec.label;
    doc["order"] = order_name;
    doc["basis"] = nlohmann::json::array();
    std::string human = "reduced basis (" + order_name + ", " +
                        std::to_string(basis.size()) + " elements):\n";
    for (const auto& f : basis) {
        doc["basis"].push_back(to_string(f));
        human += "  " + to_string(f) + "\n";
    }
    emit(o, doc, human);
    return 0;
}

int run_selftest(const CommonOpts& o, int rounds) {
    std::uint64_t seed = 1918;
    if (const char* env = std::getenv("REES_CHECK_SEED")) {
        try {
            seed = std::stoull(env);
        } catch (const std::exception&) {
            throw InputError("REES_CHECK_SEED must be an unsigned integer");
        }
    }
    const auto guard = arm_timeout(o);
    std::mt19937_64 rng(seed);
    const RingPtr ring = Ring::make(Field(32003), {"x", "y", "z"});
    std::int64_t checks = 0;
    std::vector<std::string> failures;
    auto expect = [&](bool ok, const std::string& what, int round) {
        ++checks;
        if (!ok)
            failures.push_back("round " + std::to_string(round) + ": " + what);
    };

    for (int round = 0; round < rounds; ++round) {
        const std::size_t m = 1 + rng() % 2;
        const std::size_t n = m + rng() % (4 - m);
        const PolyMatrix a = random_matrix(ring, rng, m, n, round % 4 == 0 ? 2 : 1);

        // Signed minors are syzygies of the rows.
        if (n == m + 1) {
            const auto g = signed_maximal_minors(a);
            for (std::size_t i = 0; i < m; ++i) {
                Polynomial dot(ring);
                for (std::size_t j = 0; j < n; ++j)
                    dot = dot + a.at(i, j) * g[j];
                expect(dot.is_zero(), "row " + std::to_string(i) +
                                          " is not a syzygy of the signed minors",
                       round);
            }
        }

        // Boundary maps compose to zero (validated by the complex builder)
        // and agree with the minor identities at both ends.
        for (std::int64_t ell = 1; ell <= static_cast<std::int64_t>(m) + 1; ++ell) {
            bool built = true;
            try {
                strand_complex(a, ell);
            } catch (const InputError&) {
                built = false;
            }
            expect(built, "strand " + std::to_string(ell) + " is not a complex", round);
        }
        expect(check_top_strand_minors(a), "top strand minor identity failed", round);
        expect(check_bottom_strand_minors(a), "bottom strand minor identity failed",
               round);

        // The equivalence checks must never disagree with themselves.
        const TheoremReport rep1 = check_theorem1(a, o.jobs);
        expect(rep1.verdict != "VIOLATION", "theorem 1.1 reported VIOLATION", round);
        if (n == m + 1) {
            const TheoremReport rep2 = check_theorem2(a, o.jobs);
            expect(rep2.verdict != "VIOLATION", "theorem 1.2 reported VIOLATION", round);
            expect(!rep2.side1 || rep1.side1,
                   "stronger grade bounds without the weaker ones", round);
        }
    }

    nlohmann::json doc;
    doc["command"] = "selftest";
    doc["seed"] = seed;
    doc["rounds"] = rounds;
    doc["checks"] = checks;
    doc["failures"] = failures;
    doc["pass"] = failures.empty();
    std::string human = "selftest: seed " + std::to_string(seed) + ", " +
                        std::to_string(rounds) + " rounds, " + std::to_string(checks) +
                        " checks, " + std::to_string(failures.size()) + " failures\n";
    for (const auto& f : failures)
        human += "  FAIL " + f + "\n";
    emit(o, doc, human);
    return failures.empty() ? 0 : 1;
}

}  // namespace

int run_cli(std::vector<std::string> args) {
    CLI::App app{"exact verification of determinantal ideals, Koszul strands, and "
                 "Rees/symmetric algebra presentations"};
    app.name("rees-check");
    app.require_subcommand(1);

    CommonOpts opts;
    std::int64_t degree = 1;
    std::int64_t power = 1;
    int rounds = 40;
    std::vector<std::string> gens;
    std::string order_name = "grevlex";

    CLI::App* grade_cmd = app.add_subcommand("grade-profile", "grades of all minor ideals");
    CLI::App* thm1_cmd =
        app.add_subcommand("check-thm1", "equivalence of minor grades and form grade");
    CLI::App* thm2_cmd = app.add_subcommand(
        "check-thm2", "equivalence of minor grades and the linear-type presentation");
    CLI::App* rees_cmd =
        app.add_subcommand("rees-ideal", "defining ideal of the Rees algebra");
    CLI::App* strand_cmd =
        app.add_subcommand("koszul-strand", "boundary matrices of one graded strand");
    CLI::App* power_cmd = app.add_subcommand(
        "resolve-power", "certified free resolution of a power of the minor ideal");
    CLI::App* gb_cmd = app.add_subcommand("gb", "reduced Groebner basis of given polynomials");
    CLI::App* selftest_cmd =
        app.add_subcommand("selftest", "randomized internal consistency checks");

    for (CLI::App* cmd : {grade_cmd, thm1_cmd, thm2_cmd, rees_cmd, strand_cmd, power_cmd,
                          gb_cmd})
        add_input_option(cmd, opts);
    for (CLI::App* cmd : {grade_cmd, thm1_cmd, thm2_cmd, rees_cmd, strand_cmd, power_cmd,
                          gb_cmd, selftest_cmd})
        add_output_flags(cmd, opts);
    for (CLI::App* cmd : {grade_cmd, thm1_cmd, thm2_cmd, power_cmd, selftest_cmd})
        add_jobs_option(cmd, opts);

    strand_cmd->add_option("--degree", degree, "strand degree (>= 0)")->required();
    power_cmd->add_option("--r", power, "power of the ideal to resolve (>= 1)")
        ->required();
    gb_cmd->add_option("--gens", gens, "generator polynomials")->required();
    gb_cmd->add_option("--order", order_name, "monomial order")
        ->check(CLI::IsMember({"grevlex", "lex"}));
    selftest_cmd->add_option("--rounds", rounds, "number of randomized rounds")
        ->check(CLI::PositiveNumber);

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp&) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        std::cout << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    // CLI11 only records presence; remember whether a budget was requested.
    for (CLI::App* cmd : app.get_subcommands())
        opts.has_timeout = opts.has_timeout || cmd->count("--timeout") > 0;

    try {
        if (app.got_subcommand(grade_cmd))
            return run_grade_profile(opts);
        if (app.got_subcommand(thm1_cmd))
            return run_theorem_check(opts, 1);
        if (app.got_subcommand(thm2_cmd))
            return run_theorem_check(opts, 2);
        if (app.got_subcommand(rees_cmd))
            return run_rees_ideal(opts);
        if (app.got_subcommand(strand_cmd))
            return run_koszul_strand(opts, degree);
        if (app.got_subcommand(power_cmd))
            return run_resolve_power(opts, power);
        if (app.got_subcommand(gb_cmd))
            return run_gb(opts, gens, order_name);
        if (app.got_subcommand(selftest_cmd))
            return run_selftest(opts, rounds);
        std::cerr << "error: no command selected\n";
        return 2;
    } catch (const TimeoutError& e) {
        nlohmann::json doc;
        doc["error"] = "timeout";
        doc["seconds"] = opts.timeout_seconds;
        if (!opts.out.empty())
            write_json_file(opts.out, doc);
        if (opts.json)
            std::cout << doc.dump(2) << "\n";
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace rees
