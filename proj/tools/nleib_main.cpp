// nleib: analyzer for finite-dimensional Leibniz n-algebras over Q, plus the
// Pascal-triangle identities behind the multiplier bound catalog.

#include <nleib/nleib.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") {
        return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

nleib::ReportFormat parse_format(const std::string& f) {
    if (f == "text") return nleib::ReportFormat::text;
    if (f == "json") return nleib::ReportFormat::json;
    throw std::runtime_error("unknown format '" + f + "' (expected text or json)");
}

std::string format_violation(const nleib::IdentityViolation& v) {
    std::ostringstream os;
    os << "x = (";
    for (std::size_t i = 0; i < v.x_tuple.size(); ++i) os << (i ? ", " : "") << v.x_tuple[i] + 1;
    os << "), y = (";
    for (std::size_t i = 0; i < v.y_tuple.size(); ++i) os << (i ? ", " : "") << v.y_tuple[i] + 1;
    os << "), defect = (";
    for (std::size_t i = 0; i < v.defect.dim(); ++i) os << (i ? ", " : "") << v.defect[i];
    os << ")";
    return os.str();
}

int run_verify(const std::string& file, std::optional<std::size_t> max_violations, bool force) {
    const auto sc = nleib::parse_algebra(read_input(file));
    const auto violations = nleib::check_fundamental_identity(sc, max_violations, force);
    if (violations.empty()) {
        std::cout << "identity: ok (arity " << sc.arity() << ", dim " << sc.dim() << ")\n";
        return 0;
    }
    std::cout << "identity: violated (" << violations.size() << " violation"
              << (violations.size() == 1 ? "" : "s") << (max_violations ? " found, stopped early" : "")
              << ")\n";
    std::cout << "first_violation: " << format_violation(violations.front()) << "\n";
    return 1;
}

int run_analyze(const std::string& file, const std::string& format, bool skip_identity) {
    const auto sc = nleib::parse_algebra(read_input(file));
    nleib::AnalyzeOptions opts;
    opts.skip_identity = skip_identity;
    const auto report = nleib::analyze(sc, opts);
    std::cout << nleib::render_report(report, parse_format(format));
    return report.identity_status == nleib::IdentityStatus::violated ? 1 : 0;
}

int run_identity(int max_n, int oracle_max_n) {
    bool all_ok = true;
    for (int n = 2; n <= max_n; ++n) {
        for (int r = 1; r <= n - 1; ++r) {
            const auto res = nleib::pascal_identity_check(n, r);
            const bool ok = res.equal;
            all_ok = all_ok && ok;
            std::cout << "closed-form n=" << n << " r=" << r << ": C(" << 2 * n << "," << n
                      << ") = " << res.lhs << ", sum = " << res.rhs << (ok ? " ok" : " MISMATCH") << "\n";
            if (n <= oracle_max_n) {
                bool classes_ok = true;
                nleib::BigInt total = 0;
                for (const auto& cls : nleib::pascal_identity_classes(n, r)) {
                    classes_ok = classes_ok && cls.predicted == cls.enumerated;
                    total += cls.enumerated;
                }
                classes_ok = classes_ok && total == res.lhs;
                all_ok = all_ok && classes_ok;
                std::cout << "oracle      n=" << n << " r=" << r << ": " << total
                          << " sequences partitioned" << (classes_ok ? " ok" : " MISMATCH") << "\n";
            }
        }
    }
    std::cout << (all_ok ? "identity sweep: ok" : "identity sweep: FAILED") << "\n";
    return all_ok ? 0 : 1;
}

int run_rhombus(int n) {
    const nleib::BigInt value = nleib::rhombus_sum(n);
    const nleib::BigInt expected = nleib::binom(2 * n, n) - 1;
    std::cout << value << "\n";
    const bool ok = value == expected;
    std::cout << "check: C(" << 2 * n << "," << n << ") - 1 = " << expected << (ok ? " ok" : " MISMATCH")
              << "\n";
    return ok ? 0 : 1;
}

int run_decompose(int n, int r) {
    const auto rows = nleib::decomposition_table(n, r);
    nleib::BigInt total = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::cout << "i=" << i << ": " << rows[i].coefficient << " * P_" << i + 1 << "^(" << r
                  << ")=" << rows[i].figurate_term << " -> " << rows[i].product << "\n";
        total += rows[i].product;
    }
    const nleib::BigInt expected = nleib::binom(2 * n, n);
    const bool ok = total == expected;
    std::cout << "total: " << total << " = C(" << 2 * n << "," << n << ")" << (ok ? " ok" : " MISMATCH")
              << "\n";
    return ok ? 0 : 1;
}

int run_sequence(const std::string& kind, int count) {
    const auto terms = nleib::sequences(nleib::sequence_kind_from_string(kind), count);
    for (std::size_t i = 0; i < terms.size(); ++i) std::cout << (i ? " " : "") << terms[i];
    std::cout << "\n";
    return 0;
}

int run_example(const std::string& name, const std::string& output) {
    const std::string text = nleib::builtin(name);
    if (output.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(output, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write '" + output + "'");
        out << text;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Leibniz n-algebra analyzer: fundamental-identity checking, Lie-central series,"
                 " Schur Lie-multiplier bounds and Pascal-triangle identities"};
    app.require_subcommand(1);

    std::string file;
    std::string format = "text";
    std::optional<std::size_t> max_violations;
    bool force = false;
    bool skip_identity = false;

    auto* verify = app.add_subcommand("verify", "check the fundamental identity of an algebra file");
    verify->add_option("file", file, "algebra file, or - for stdin")->required();
    verify->add_option("--max-violations", max_violations, "stop after this many violations");
    verify->add_flag("--force", force, "override the basis-tuple soft limit");

    auto* analyze = app.add_subcommand("analyze", "full analysis report for an algebra file");
    analyze->add_option("file", file, "algebra file, or - for stdin")->required();
    analyze->add_option("--format", format, "text or json")->capture_default_str();
    analyze->add_flag("--skip-identity", skip_identity,
                      "skip the identity check; series and bounds are meaningless if it fails");

    int pn = 0, pm = 0, pd = 0;
    std::optional<int> pclass;
    std::optional<int> pm_central;
    bool pfiliform = false, pmaximal = false, pabelian = false;
    auto* bounds = app.add_subcommand("bounds", "evaluate the bound catalog from parameters alone");
    bounds->add_option("--n", pn, "arity")->required();
    bounds->add_option("--m", pm, "algebra dimension")->required();
    bounds->add_option("--d", pd, "dim of the Lie-commutator")->required();
    bounds->add_option("--class", pclass, "Lie-nilpotency class, when known");
    bounds->add_flag("--lie-filiform", pfiliform, "the algebra is Lie-filiform");
    bounds->add_flag("--maximal-class", pmaximal, "the algebra is Lie-nilpotent of maximal class");
    bounds->add_flag("--abelian", pabelian, "the algebra is Lie-abelian");
    bounds->add_option("--m-central", pm_central, "dim (q/Z_Lie)/(q/Z_Lie)^2_Lie, when known");
    bounds->add_option("--format", format, "text or json")->capture_default_str();

    int max_n = 0, oracle_max_n = 8;
    auto* identity = app.add_subcommand("identity", "verify the Pascal-triangle identity sweep");
    identity->add_option("--max-n", max_n, "closed-form check up to this n")->required();
    identity->add_option("--oracle-max-n", oracle_max_n, "enumeration oracle up to this n")
        ->capture_default_str();

    int rn = 0;
    auto* rhombus = app.add_subcommand("rhombus", "rhombus sum over Pascal's triangle");
    rhombus->add_option("--n", rn, "rhombus parameter, n >= 2")->required();

    int dn = 0, dr = 0;
    auto* decompose = app.add_subcommand("decompose", "central-binomial decomposition table");
    decompose->add_option("--n", dn, "n >= 2")->required();
    decompose->add_option("--r", dr, "figurate order, 1 <= r <= n-1")->required();

    std::string kind;
    int count = 0;
    auto* sequence = app.add_subcommand("sequence", "emit a named integer sequence");
    sequence->add_option("kind", kind, "central_binomial or central_binomial_minus_one")->required();
    sequence->add_option("--count", count, "number of terms")->required();

    std::string example_name;
    std::string output_file;
    auto* example = app.add_subcommand("example", "emit a built-in algebra file");
    example->add_option("name", example_name, "ex3_18, ex3_20, ex3_3:<m>, zero:<n>:<m>, filippov:<n>")
        ->required();
    example->add_option("-o,--output", output_file, "write to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*verify) return run_verify(file, max_violations, force);
        if (*analyze) return run_analyze(file, format, skip_identity);
        if (*bounds) {
            nleib::AlgebraParams params;
            params.n = pn;
            params.m = pm;
            params.d = pd;
            params.m_bar = pm - pd;
            params.lie_class = pclass;
            params.lie_filiform = pfiliform;
            params.lie_maximal_class = pmaximal;
            params.lie_abelian = pabelian;
            params.m_central = pm_central;
            const auto report = nleib::best_bounds(params);
            std::cout << nleib::render_bound_report(report, params, parse_format(format));
            return 0;
        }
        if (*identity) return run_identity(max_n, oracle_max_n);
        if (*rhombus) return run_rhombus(rn);
        if (*decompose) return run_decompose(dn, dr);
        if (*sequence) return run_sequence(kind, count);
        if (*example) return run_example(example_name, output_file);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
