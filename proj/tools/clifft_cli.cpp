#include <CLI11.hpp>

#include <cmath>
#include <complex>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <variant>

#include "clifft/automorphisms.hpp"
#include "clifft/bench.hpp"
#include "clifft/fastmul.hpp"
#include "clifft/io.hpp"
#include "clifft/selfcheck.hpp"
#include "clifft/structure.hpp"
#include "clifft/transform.hpp"

namespace {

// Exit codes: 0 ok, 1 failed selfcheck, 2 malformed input, 3 dimension/basis
// mismatch, 4 structure size limit.
constexpr int kExitOk = 0;
constexpr int kExitSelfcheck = 1;
constexpr int kExitParse = 2;
constexpr int kExitMismatch = 3;
constexpr int kExitTooLarge = 4;

std::string slurp(const std::string& path) {
    if (path.empty() || path == "-") {
        return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    }
    std::ifstream in(path);
    if (!in) throw clifft::ParseError("cannot open input file '" + path + "'");
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void write_out(const std::string& out_path, const std::string& content) {
    if (out_path.empty() || out_path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw clifft::ParseError("cannot open output file '" + out_path + "'");
    out << content;
}

clifft::SpinorBasis basis_from_flag(const std::string& value) {
    if (value == "right") return clifft::SpinorBasis::right;
    if (value == "left") return clifft::SpinorBasis::left;
    throw clifft::ParseError("malformed basis '" + value + "'");
}

struct TransformArgs {
    std::string input;
    std::string out;
    std::string basis = "right";
    bool basis_given = false;
    bool complex_inverse = false;
};

int run_transform(const TransformArgs& args) {
    const std::string text = slurp(args.input);
    const clifft::SpinorBasis basis = basis_from_flag(args.basis);
    std::ostringstream os;

    if (clifft::peek_doc_kind(text) == clifft::DocKind::multivector) {
        auto value = clifft::parse_multivector(text);
        std::visit(
            [&](const auto& mv) {
                using S = typename std::decay_t<decltype(mv)>::scalar_type;
                if (mv.kind() == clifft::AlgebraKind::complex_full) {
                    if (basis == clifft::SpinorBasis::left)
                        throw clifft::MismatchError("basis left is not defined for algebra ccl(2n)");
                    if constexpr (clifft::scalar_traits<S>::is_complex) {
                        clifft::emit_matrix(os, clifft::clifft(mv));
                    }
                } else if (basis == clifft::SpinorBasis::right) {
                    clifft::emit_matrix(os, clifft::fft_right(mv));
                } else {
                    clifft::emit_matrix(os, clifft::fft_left(mv));
                }
            },
            value);
    } else {
        auto value = clifft::parse_matrix(text);
        std::visit(
            [&](const auto& m) {
                using S = typename std::decay_t<decltype(m)>::scalar_type;
                if (args.basis_given && basis != m.basis())
                    throw clifft::MismatchError("basis flag contradicts the basis field of the matrix file");
                if (args.complex_inverse) {
                    if constexpr (!clifft::scalar_traits<S>::is_complex) {
                        throw clifft::MismatchError("--complex inversion requires scalar complex");
                    } else {
                        if (m.basis() != clifft::SpinorBasis::right)
                            throw clifft::MismatchError("--complex inversion requires basis right");
                        clifft::emit_multivector(os, clifft::iclifft(m));
                    }
                } else if (m.basis() == clifft::SpinorBasis::right) {
                    clifft::emit_multivector(os, clifft::ifft_right(m));
                } else {
                    clifft::emit_multivector(os, clifft::ifft_left(m));
                }
            },
            value);
    }
    write_out(args.out, os.str());
    return kExitOk;
}

struct MulArgs {
    std::string input_a;
    std::string input_b;
    std::string out;
    std::string mode = "fast";
    bool compare = false;
};

template <clifft::Scalar S>
double max_abs_coeff(const clifft::Multivector<S>& mv) {
    double worst = 0.0;
    for (std::size_t m = 0; m < mv.size(); ++m) worst = std::max(worst, std::abs(mv[m]));
    return worst;
}

template <clifft::Scalar S>
int run_mul_typed(const clifft::Multivector<S>& a, const clifft::Multivector<S>& b, const MulArgs& args,
                  std::ostringstream& os) {
    if (args.mode != "naive" && args.mode != "fast")
        throw clifft::ParseError("malformed mode '" + args.mode + "'");
    std::optional<clifft::Multivector<S>> naive, fast;
    if (args.mode == "naive" || args.compare) naive = clifft::geometric_product_naive(a, b);
    if (args.mode == "fast" || args.compare) fast = clifft::fast_mul(a, b);
    if (args.compare) {
        double dev = 0.0;
        for (std::size_t m = 0; m < naive->size(); ++m)
            dev = std::max(dev, std::abs((*naive)[m] - (*fast)[m]));
        dev /= std::max(max_abs_coeff(*naive), 1.0);
        std::cerr << "compare max_relative_deviation=" << clifft::iodetail::format_number(dev) << "\n";
    }
    clifft::emit_multivector(os, args.mode == "naive" ? *naive : *fast);
    return kExitOk;
}

int run_mul(const MulArgs& args) {
    auto a = clifft::parse_multivector(slurp(args.input_a));
    auto b = clifft::parse_multivector(slurp(args.input_b));
    if (a.index() != b.index())
        throw clifft::MismatchError("scalar fields of the two operand files disagree");
    std::ostringstream os;
    int rc;
    if (a.index() == 0)
        rc = run_mul_typed(std::get<0>(a), std::get<0>(b), args, os);
    else
        rc = run_mul_typed(std::get<1>(a), std::get<1>(b), args, os);
    write_out(args.out, os.str());
    return rc;
}

struct AutoArgs {
    std::string which;
    std::string input;
    std::string out;
};

int run_auto(const AutoArgs& args) {
    if (args.which != "alpha" && args.which != "beta" && args.which != "reversal")
        throw clifft::ParseError("malformed automorphism name '" + args.which + "'");
    const std::string text = slurp(args.input);
    std::ostringstream os;

    if (clifft::peek_doc_kind(text) == clifft::DocKind::multivector) {
        auto value = clifft::parse_multivector(text);
        std::visit(
            [&](const auto& mv) {
                if (args.which == "alpha")
                    clifft::emit_multivector(os, clifft::alpha_coeffs(mv));
                else if (args.which == "beta")
                    clifft::emit_multivector(os, clifft::beta_coeffs(mv));
                else
                    clifft::emit_multivector(os, clifft::reverse_coeffs(mv));
            },
            value);
    } else {
        auto value = clifft::parse_matrix(text);
        std::visit(
            [&](const auto& m) {
                if (m.basis() != clifft::SpinorBasis::right)
                    throw clifft::MismatchError("matrix automorphisms require basis right");
                if (args.which == "alpha")
                    clifft::emit_matrix(os, clifft::parity_flip(m));
                else if (args.which == "beta")
                    clifft::emit_matrix(os, clifft::imaginary_flip(m));
                else
                    clifft::emit_matrix(os, clifft::rep_reversal(m));
            },
            value);
    }
    write_out(args.out, os.str());
    return kExitOk;
}

struct StructureArgs {
    int n = 0;
    std::string basis = "right";
    std::string out;
};

std::string sigma_label(std::size_t sigma, int n) {
    if (n == 0) return ".";
    std::string label;
    for (int k = n - 1; k >= 0; --k) label += ((sigma >> k) & 1) ? '-' : '+';
    return label;
}

std::string rho_label(std::size_t rho, int n) {
    if (n == 0) return ".";
    std::string label;
    for (int k = n - 1; k >= 0; --k) label += char('0' + ((rho >> k) & 1));
    return label;
}

int run_structure(const StructureArgs& args) {
    if (args.n < 0) throw clifft::ParseError("malformed n");
    if (args.n > 8) {
        std::cerr << "error: structure tables limited to n <= 8 (got n=" << args.n << ")\n";
        return kExitTooLarge;
    }
    const clifft::SpinorBasis basis = basis_from_flag(args.basis);
    const auto table = clifft::build_structure_table(args.n, basis);
    const std::size_t d = std::size_t{1} << args.n;

    std::ostringstream os;
    os << "structure n=" << args.n << " basis=" << args.basis << "\n";
    os << "dim " << d << "\n";
    os << "rho";
    for (std::size_t rho = 0; rho < d; ++rho) os << ' ' << rho_label(rho, args.n);
    os << "\n";
    for (std::size_t sigma = 0; sigma < d; ++sigma) {
        os << "sigma " << sigma_label(sigma, args.n);
        for (std::size_t rho = 0; rho < d; ++rho) {
            const auto loc = clifft::locate_entry(table, sigma, rho);
            os << ' ' << (loc.sign > 0 ? '+' : '-') << "E(" << loc.row << ',' << loc.col << ')';
        }
        os << "\n";
    }
    os << "parity\n";
    const auto mask = clifft::grade_parity_mask(args.n);
    for (std::size_t i = 0; i < d; ++i) {
        std::string row;
        for (std::size_t j = 0; j < d; ++j) row += mask.is_odd(i, j) ? '-' : '+';
        os << row << "\n";
    }
    os << "end\n";
    write_out(args.out, os.str());
    return kExitOk;
}

struct BenchArgs {
    clifft::BenchOptions options;
    std::string out;
};

int run_bench(const BenchArgs& args) {
    const auto report = clifft::run_benchmarks(args.options);
    std::ostringstream os;
    clifft::print_report(os, report);
    write_out(args.out, os.str());
    return kExitOk;
}

struct SelfcheckArgs {
    int n_max = 6;
};

int run_selfcheck(const SelfcheckArgs& args) {
    if (args.n_max < 0 || args.n_max > 15) throw clifft::ParseError("malformed n-max");
    const auto results = clifft::run_property_suite(args.n_max);
    bool all_pass = true;
    for (const auto& r : results) {
        std::cout << (r.pass ? "pass " : "FAIL ") << r.name << "\n";
        if (!r.pass) {
            all_pass = false;
            std::cout << r.detail << "\n";
        }
    }
    std::cout << (all_pass ? "selfcheck ok" : "selfcheck failed") << "\n";
    return all_pass ? kExitOk : kExitSelfcheck;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fast matrix representation of the Clifford algebras Cl(n,n) and complexified Cl(2n)"};
    app.require_subcommand(1);

    TransformArgs transform_args;
    auto* transform = app.add_subcommand(
        "transform", "Transform a multivector file to its matrix file, or invert a matrix file");
    transform->add_option("input", transform_args.input, "input file ('-' or omitted: stdin)");
    transform->add_option("--out", transform_args.out, "output file (default: stdout)");
    transform->add_option("--basis", transform_args.basis, "spinor basis: right|left (default right)")
        ->check(CLI::IsMember({"right", "left"}));
    transform->add_flag("--complex", transform_args.complex_inverse,
                        "invert a complex right-basis matrix into a ccl(2n) multivector");

    MulArgs mul_args;
    auto* mul = app.add_subcommand("mul", "Multiply two multivector files");
    mul->add_option("a", mul_args.input_a, "left operand file ('-' for stdin)")->required();
    mul->add_option("b", mul_args.input_b, "right operand file ('-' or omitted: stdin)");
    mul->add_option("--out", mul_args.out, "output file (default: stdout)");
    mul->add_option("--mode", mul_args.mode, "product algorithm: naive|fast (default fast)")
        ->check(CLI::IsMember({"naive", "fast"}));
    mul->add_flag("--compare", mul_args.compare,
                  "run both modes and report the max relative deviation on stderr");

    AutoArgs auto_args;
    auto* auto_cmd = app.add_subcommand(
        "auto", "Apply an algebra automorphism to a multivector file or a right-basis matrix file");
    auto_cmd->add_option("which", auto_args.which, "alpha|beta|reversal")
        ->required()
        ->check(CLI::IsMember({"alpha", "beta", "reversal"}));
    auto_cmd->add_option("input", auto_args.input, "input file ('-' or omitted: stdin)");
    auto_cmd->add_option("--out", auto_args.out, "output file (default: stdout)");

    StructureArgs structure_args;
    auto* structure = app.add_subcommand("structure", "Print the representation structure tables");
    structure->add_option("n", structure_args.n, "number of generator pairs (n <= 8)")->required();
    structure->add_option("--basis", structure_args.basis, "spinor basis: right|left (default right)")
        ->check(CLI::IsMember({"right", "left"}));
    structure->add_option("--out", structure_args.out, "output file (default: stdout)");

    BenchArgs bench_args;
    auto* bench = app.add_subcommand("bench", "Time the transform, products, and automorphisms");
    bench->add_option("--n-min", bench_args.options.n_min, "smallest n (default 5)");
    bench->add_option("--n-max", bench_args.options.n_max, "largest n (default 10)");
    bench->add_option("--reps", bench_args.options.reps, "repetitions per point, >= 3 (default 5)");
    bench->add_option("--budget-ms", bench_args.options.budget_ms,
                      "per-series time budget in milliseconds (default 20000)");
    bench->add_flag("--parallel", bench_args.options.parallel,
                    "also measure the parallel quarter-recursion transform");
    bench->add_option("--seed", bench_args.options.seed, "seed for the random operands");
    bench->add_option("--out", bench_args.out, "output file (default: stdout)");

    SelfcheckArgs selfcheck_args;
    auto* selfcheck = app.add_subcommand("selfcheck", "Run the full property suite");
    selfcheck->add_option("--n-max", selfcheck_args.n_max, "largest n exercised (default 6)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitParse;
    }

    try {
        transform_args.basis_given = transform->count("--basis") > 0;
        if (transform->parsed()) return run_transform(transform_args);
        if (mul->parsed()) return run_mul(mul_args);
        if (auto_cmd->parsed()) return run_auto(auto_args);
        if (structure->parsed()) return run_structure(structure_args);
        if (bench->parsed()) return run_bench(bench_args);
        if (selfcheck->parsed()) return run_selfcheck(selfcheck_args);
    } catch (const clifft::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const clifft::MismatchError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMismatch;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMismatch;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    return kExitOk;
}
