// qhom: exact (N,q)-homology toolbox.
//
// Subcommands: homology (dimension tables of a simplicial model or pair),
// verify (seeded identity suites), point (the one-point pattern), table (the
// homotopy-operator coefficient table). Exit code 0 means every check ran
// clean, 1 means a verification found a counterexample, 2 means bad usage or
// malformed input.

#include <CLI11.hpp>
#include <json.hpp>

#include "qhom/json_io.hpp"
#include "qhom/pairs.hpp"
#include "qhom/verify.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using qhom::Json;

struct Options {
    std::string input;
    long order = 3;
    long max_degree = 6;
    std::string amplitude = "all";
    long trials = 100;
    std::uint64_t seed = 42;
    std::string format = "table";
    std::string suite = "all";
};

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    Json j;
    in >> j;
    return j;
}

void print_homology_table(const qhom::AmplitudeHomologyReport& rep, std::ostream& out) {
    out << "amplitude homology dimensions over Q(q), N = " << rep.order << "\n";
    out << "(entries marked * lie too close to the window top to count borders fully)\n";
    out << "  m\\n |";
    for (long n = rep.lo; n <= rep.hi; ++n) out << " " << n;
    out << "\n  ----+";
    for (long n = rep.lo; n <= rep.hi; ++n) out << "--" << std::string(std::to_string(n).size() - 1, '-');
    out << "\n";
    for (long m = 1; m <= rep.order - 1; ++m) {
        out << "  " << m << "   |";
        for (long n = rep.lo; n <= rep.hi; ++n) {
            const auto& cell = rep.cell(m, n);
            out << " " << cell.dim << (cell.reliable ? "" : "*");
        }
        out << "\n";
    }
}

int cmd_homology(const Options& opt) {
    Json j = load_json_file(opt.input);
    qhom::SemiSimplicialSet x = qhom::simplicial_from_json(j);
    auto v = qhom::validate_simplicial(x);
    if (!v) {
        std::cerr << "invalid simplicial data: " << v.detail << " (dim " << v.dim << ", cell " << v.cell
                  << ", i=" << v.i << ", j=" << v.j << ")\n";
        return 2;
    }
    auto sub = qhom::subcomplex_ids_from_json(j);
    qhom::GradedNComplex complex =
        sub ? qhom::relative_complex(qhom::make_pair(x, *sub), opt.order, opt.max_degree)
            : qhom::to_ncomplex(x, opt.order, opt.max_degree);

    qhom::AmplitudeHomologyReport rep;
    rep.order = complex.order;
    rep.lo = complex.lo;
    rep.hi = complex.hi;
    if (opt.amplitude == "all") {
        rep = qhom::full_homology(complex);
    } else {
        long m = std::stol(opt.amplitude);
        auto row = qhom::amplitude_homology(complex, m);
        rep.cells.insert(rep.cells.end(), row.begin(), row.end());
    }
    if (opt.format == "json") {
        std::cout << qhom::homology_report_to_json(rep).dump(2) << "\n";
    } else {
        if (sub) std::cout << "relative homology of the pair (model, subcomplex)\n";
        print_homology_table(rep, std::cout);
    }
    return 0;
}

int cmd_verify(const Options& opt) {
    auto results = qhom::run_suites(opt.suite, opt.order, opt.trials, opt.seed);
    bool all_pass = true;
    if (opt.format == "json") {
        Json out = Json::array();
        for (const auto& r : results) out.push_back(qhom::suite_result_to_json(r));
        std::cout << out.dump(2) << "\n";
    }
    for (const auto& r : results) {
        if (!r.pass()) all_pass = false;
        if (opt.format != "json") {
            std::cout << (r.pass() ? "[pass] " : "[FAIL] ") << r.suite << ": " << (r.total - r.failed) << "/"
                      << r.total << " checks";
            if (r.failed > 0) std::cout << " (" << r.failed << " counterexamples)";
            std::cout << "\n";
            for (const auto& f : r.failures) std::cout << "    " << f.id << ": " << f.detail << "\n";
            for (const auto& n : r.notes) std::cout << "    note: " << n << "\n";
            if (r.suite == "coeff-table") {
                qhom::CoefficientTable t = qhom::coefficient_table(opt.order);
                std::cout << qhom::coefficient_table_to_json(t).dump(2) << "\n";
            }
        }
    }
    return all_pass ? 0 : 1;
}

int cmd_point(const Options& opt) {
    qhom::GradedNComplex c = qhom::build_point_complex(opt.order, opt.max_degree);
    auto rep = qhom::full_homology(c);
    if (opt.format == "json") {
        std::cout << qhom::homology_report_to_json(rep).dump(2) << "\n";
    } else {
        std::cout << "one-point (N,q)-homology, free rank one exactly at n = m-1, 0 <= n <= N-2\n";
        print_homology_table(rep, std::cout);
    }
    return 0;
}

int cmd_table(const Options& opt) {
    qhom::CoefficientTable t = qhom::coefficient_table(opt.order);
    if (opt.format == "json") {
        std::cout << qhom::coefficient_table_to_json(t).dump(2) << "\n";
        return 0;
    }
    std::cout << "homotopy-operator coefficients alpha_{k,i} = q^{i(N-1-k+i)} [k choose i]_q, N = "
              << t.order << "\n";
    for (long k = 0; k < t.order; ++k) {
        std::cout << "  k=" << k << ":";
        for (long i = 0; i <= k; ++i)
            std::cout << "  " << t.alpha[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)].pretty();
        std::cout << "\n";
    }
    std::cout << "column sums alpha_l (l = k-i):";
    for (long l = 0; l < t.order; ++l)
        std::cout << "  l=" << l << ": " << t.column_sums[static_cast<std::size_t>(l)].pretty();
    std::cout << "\n";
    std::cout << "beta_s:";
    for (long s = 1; s < t.order; ++s)
        std::cout << "  s=" << s << ": " << t.beta[static_cast<std::size_t>(s)].pretty();
    std::cout << "\n";
    std::cout << "checks: sums vanish below the top column: " << (t.sums_vanish ? "yes" : "NO")
              << "; top column is 1: " << (t.top_is_one ? "yes" : "NO")
              << "; beta recursion (1 - q^s): " << (t.recursion_holds ? "yes" : "NO") << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact (N,q)-analog homology toolbox"};
    app.require_subcommand(1);

    Options opt;

    auto add_common = [&](CLI::App* cmd, bool with_input) {
        cmd->add_option("--N", opt.order, "prime order of the root of unity")->check(CLI::PositiveNumber);
        cmd->add_option("--max-degree", opt.max_degree, "top degree of the computation window");
        cmd->add_option("--format", opt.format, "table or json")
            ->check(CLI::IsMember({"table", "json"}));
        if (with_input) cmd->add_option("--input", opt.input, "path to a JSON model")->required();
    };

    CLI::App* homology = app.add_subcommand("homology", "amplitude homology of a simplicial model or pair");
    add_common(homology, true);
    homology->add_option("--amplitude", opt.amplitude, "single amplitude m, or 'all'");

    CLI::App* verify = app.add_subcommand("verify", "run a seeded verification suite");
    add_common(verify, false);
    verify->add_option("--suite", opt.suite,
                       "qnumbers|iteration|leibnitz|newton|tails|homotopy|augmentation|coeff-table|"
                       "exactness|all");
    verify->add_option("--trials", opt.trials, "randomized cases per suite")->check(CLI::PositiveNumber);
    verify->add_option("--seed", opt.seed, "seed for the deterministic generator");

    CLI::App* point = app.add_subcommand("point", "homology pattern of the one-point space");
    add_common(point, false);

    CLI::App* table = app.add_subcommand("table", "homotopy-operator coefficient table");
    add_common(table, false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (!qhom::is_prime(opt.order)) throw std::invalid_argument("--N must be prime");
        if (app.got_subcommand(homology)) return cmd_homology(opt);
        if (app.got_subcommand(verify)) return cmd_verify(opt);
        if (app.got_subcommand(point)) return cmd_point(opt);
        if (app.got_subcommand(table)) return cmd_table(opt);
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
