// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
// failure.  Tolerances and size ranges are pinned here on purpose; loosening
// them is a contract change, not a tuning knob.
#include <sys/wait.h>

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "clifft/bench.hpp"
#include "clifft/selfcheck.hpp"
#include "clifft/structure.hpp"

namespace {

int failures = 0;

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void report(int index, const std::string& label, bool pass, const std::string& detail = "") {
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << index << ": " << label << "\n";
    if (!pass) {
        ++failures;
        if (!detail.empty()) {
            std::istringstream is(detail);
            std::string line;
            while (std::getline(is, line)) std::cout << "    " << line << "\n";
        }
    }
    std::cout.flush();
}

std::string join_details(std::initializer_list<clifft::CheckResult> results) {
    std::string out;
    for (const auto& r : results)
        if (!r.pass) out += r.name + ": " + r.detail + "\n";
    return out;
}

}  // namespace

int main() {
    using namespace clifft;
    using checks::check_complex_hermitian;
    using checks::check_conjugacy;
    using checks::check_fast_mul;
    using checks::check_fast_mul_exact;
    using checks::check_generator_symmetry;
    using checks::check_homomorphism;
    using checks::check_homomorphism_exact;
    using checks::check_roundtrip;
    using checks::check_structure;

    // 1. Homomorphism: random pairs at 1e-10 in both bases, exhaustive blade
    //    pairs exactly, all inside a minute.
    {
        const auto t0 = std::chrono::steady_clock::now();
        const auto random_pairs = check_homomorphism(1, 5, 100, 1e-10);
        const auto exhaustive = check_homomorphism_exact(3);
        const double secs = seconds_since(t0);
        std::string detail = join_details({random_pairs, exhaustive});
        if (secs >= 60.0) detail += "runtime " + std::to_string(secs) + " s exceeds 60 s\n";
        report(1, "transform is a homomorphism (n<=5 random at 1e-10, n<=3 exhaustive exact, both bases)",
               random_pairs.pass && exhaustive.pass && secs < 60.0, detail);
    }

    // 2. Fast product agrees with the dense product on the same instance set.
    {
        const auto random_pairs = check_fast_mul(1, 5, 100, 1e-10);
        const auto exhaustive = check_fast_mul_exact(3);
        report(2, "fast_mul matches geometric_product_naive (n<=5 random at 1e-10, n<=3 exhaustive exact)",
               random_pairs.pass && exhaustive.pass, join_details({random_pairs, exhaustive}));
    }

    // 3. Roundtrips: inverse transforms undo forward transforms.
    {
        const auto r = check_roundtrip(5, 1e-12);
        report(3, "ifft_right/ifft_left/iclifft invert their transforms (n<=5 at 1e-12, integer exact)",
               r.pass, r.detail);
    }

    // 4. Generator images: symmetric (plus squares), antisymmetric (minus
    //    squares), Hermitian (complexified) — all exact.
    {
        const auto sym = check_generator_symmetry(6);
        const auto herm = check_complex_hermitian(5);
        report(4, "generator images symmetric/antisymmetric (n<=6) and Hermitian (n<=5), exact",
               sym.pass && herm.pass, join_details({sym, herm}));
    }

    // 5. Coefficient involutions act on matrices by parity_flip /
    //    imaginary_flip / rep_reversal, plus the transpose identities.
    {
        const auto r = check_conjugacy(5);
        report(5, "alpha/beta/reversal conjugacy and transpose identities (n<=5, integer exact)",
               r.pass, r.detail);
    }

    // 6. Structure tables: the frozen n=2 left-basis sign grid, the
    //    permutation rule, and the grade-parity mask.
    {
        bool ok = true;
        std::string detail;
        const auto left2 = build_structure_table(2, SpinorBasis::left);
        const auto right2 = build_structure_table(2, SpinorBasis::right);
        for (std::size_t sigma = 0; sigma < 4 && ok; ++sigma) {
            for (std::size_t rho = 0; rho < 4 && ok; ++rho) {
                const bool neg = (sigma == 0 && rho == 3) || (sigma == 1 && rho == 3) ||
                                 (sigma == 2 && rho == 1) || (sigma == 3 && rho == 1);
                if (left2.sign(sigma, rho) != (neg ? -1 : +1)) {
                    ok = false;
                    detail = "left sign grid mismatch at sigma=" + std::to_string(sigma) +
                             " rho=" + std::to_string(rho);
                }
                const auto ll = locate_entry(left2, sigma, rho);
                const auto lr = locate_entry(right2, sigma, rho);
                if (ll.row != (sigma ^ rho) || ll.col != sigma || lr.row != sigma ||
                    lr.col != (sigma ^ rho)) {
                    ok = false;
                    detail = "entry permutation mismatch at sigma=" + std::to_string(sigma) +
                             " rho=" + std::to_string(rho);
                }
            }
        }
        const auto scatter = check_structure(6);
        if (!scatter.pass) detail += (detail.empty() ? "" : "\n") + scatter.detail;
        report(6, "n=2 left structure table matches the frozen grid; parity mask exact to n<=6",
               ok && scatter.pass, detail);
    }

    // 7. Complexity: log-log slopes against N and the fast/dense crossover.
    //    The dense series stops when a point would blow the per-point budget;
    //    its fitted power law then stands in at n=10.
    BenchReport bench;
    {
        BenchOptions options;
        options.n_min = 5;
        options.n_max = 10;
        options.reps = 5;
        options.budget_ms = 20000;
        const auto t0 = std::chrono::steady_clock::now();
        bench = run_benchmarks(options);
        const double secs = seconds_since(t0);

        auto slope_in = [&](const char* name, double lo, double hi, std::string& why) {
            const BenchSeries* s = bench.find(name);
            if (!s || !s->slope_valid) {
                why += std::string(name) + " slope not fitted\n";
                return false;
            }
            if (s->slope < lo || s->slope > hi) {
                std::ostringstream os;
                os << name << " slope " << std::fixed << std::setprecision(3) << s->slope
                   << " outside [" << lo << ", " << hi << "]\n";
                why += os.str();
                return false;
            }
            return true;
        };

        std::string detail;
        const bool transform_ok = slope_in("transform", 1.0, 1.3, detail);
        const bool naive_ok = slope_in("naive_mul", 1.8, 2.2, detail);
        const bool parity_ok = slope_in("parity_flip", 0.9, 1.2, detail);
        bool extrapolated = false;
        const bool crossover = fast_beats_naive_at(bench, 10, &extrapolated);
        if (!crossover) detail += "fast_mul does not beat naive_mul at n=10\n";
        if (secs >= 600.0) detail += "runtime " + std::to_string(secs) + " s exceeds 600 s\n";

        std::ostringstream label;
        label << "complexity slopes in range and fast_mul beats naive_mul at n=10";
        if (crossover) label << (extrapolated ? " (dense extrapolated)" : " (both measured)");
        label << " [" << std::fixed << std::setprecision(0) << secs << " s]";
        report(7, label.str(), transform_ok && naive_ok && parity_ok && crossover && secs < 600.0,
               detail);
    }

    // 8. The command-line selfcheck runs the same properties and exits 0.
    {
        const std::string cmd = std::string("'") + CLIFFT_CLI_PATH + "' selfcheck > /dev/null 2>&1";
        const int status = std::system(cmd.c_str());
        const bool ok = status != -1 && WIFEXITED(status) && WEXITSTATUS(status) == 0;
        report(8, "cli selfcheck exits 0", ok,
               ok ? "" : "exit status " + std::to_string(status));
    }

    std::cout << "benchmark detail:\n";
    print_report(std::cout, bench);

    if (failures == 0) {
        std::cout << "acceptance: all 8 criteria passed\n";
        return 0;
    }
    std::cout << "acceptance: " << failures << " criterion(s) failed\n";
    return 1;
}
