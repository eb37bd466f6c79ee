#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "versal/closure.hpp"
#include "versal/codimension.hpp"
#include "versal/deformation.hpp"
#include "versal/io.hpp"
#include "versal/numerics.hpp"
#include "versal/polyrec.hpp"

namespace versal::cli {

namespace {

/// Numeric tolerance for the in-run eigenvalue comparison of `recover`.
constexpr double kSpectrumMatchTol = 1e-8;
/// Absolute tolerance of the char-poly identity check in `reduce-block`.
constexpr double kCharPolyTol = 1e-10;
/// Relative tolerance of the similarity check in `reduce-block`.
constexpr double kReductionSimilarityTol = 1e-12;

std::string format_real(double x) {
    std::ostringstream os;
    os << std::setprecision(12) << x;
    return os.str();
}

std::string format_complex(const Complex& z) {
    if (z.imag() == 0.0) return format_real(z.real());
    std::ostringstream os;
    os << std::setprecision(12) << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag())
       << "i";
    return os.str();
}

std::string format_sizes(const std::vector<std::size_t>& sizes) {
    std::string s = "[";
    for (std::size_t i = 0; i < sizes.size(); ++i) s += (i ? "," : "") + std::to_string(sizes[i]);
    return s + "]";
}

std::string format_structure(const SegreStructure& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.groups().size(); ++i) {
        const auto& g = s.groups()[i];
        out += (i ? ", " : "") + format_complex(g.eigenvalue) + ": " + format_sizes(g.sizes);
    }
    return out + "}";
}

std::string format_partitions(const SegreStructure& s) {
    std::string out;
    for (const auto& p : partition_multiset(s)) out += (out.empty() ? "" : " ") + format_sizes(p);
    return out;
}

Complex parse_complex(const std::string& text) {
    const auto comma = text.find(',');
    std::size_t used = 0;
    try {
        if (comma == std::string::npos) {
            const double re = std::stod(text, &used);
            if (used != text.size()) throw std::invalid_argument("trailing characters");
            return {re, 0.0};
        }
        const std::string re_s = text.substr(0, comma);
        const std::string im_s = text.substr(comma + 1);
        std::size_t used_im = 0;
        const double re = std::stod(re_s, &used);
        const double im = std::stod(im_s, &used_im);
        if (used != re_s.size() || used_im != im_s.size()) throw std::invalid_argument("trailing");
        return {re, im};
    } catch (const std::exception&) {
        throw Error("cannot parse complex number '" + text + "' (expected re or re,im)");
    }
}

void print_trace(std::ostream& out, const std::vector<double>& trace) {
    for (std::size_t i = 0; i < trace.size(); ++i) {
        out << "iter " << i << " unstructured_norm=" << std::scientific << std::setprecision(6)
            << trace[i] << std::defaultfloat << "\n";
    }
}

ComplexMatrix random_perturbation(std::size_t size, std::uint64_t seed, double norm) {
    std::mt19937_64 gen(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    ComplexMatrix e(size, size);
    for (auto& z : e.entries()) {
        const double re = normal(gen);
        const double im = normal(gen);
        z = Complex(re, im) / std::sqrt(2.0);
    }
    const double current = frobenius_norm(e);
    if (current > 0.0) e *= norm / current;
    return e;
}

// --- codim -----------------------------------------------------------------

struct CodimArgs {
    std::string structure_file;
    std::string mode = "orbit";
    bool oracle = false;
};

int cmd_codim(const CodimArgs& a, std::ostream& out, std::ostream& err) {
    const auto s = io::read_as<SegreStructure>(a.structure_file);
    const bool bundle = a.mode == "bundle";
    const std::size_t codim = bundle ? bundle_codim(s) : orbit_codim(s);
    const std::size_t dim = bundle ? bundle_dimension(s) : orbit_dimension(s);
    out << "structure=" << format_structure(s) << "\n";
    out << "mode=" << a.mode << "\n";
    out << "codim=" << codim << "\n";
    out << "dimension=" << dim << "\n";
    if (!a.oracle) return kExitOk;

    if (s.size() > kMaxOracleSize) {
        err << "error: --oracle supports n <= " << kMaxOracleSize << ", got n=" << s.size() << "\n";
        return kExitError;
    }
    const std::size_t orbit = orbit_codim(s);
    const std::size_t nullity = orbit_codim_oracle(s);
    out << "oracle_orbit_codim=" << nullity << "\n";
    const bool agree = nullity == orbit;
    out << "oracle_agreement=" << (agree ? "PASS" : "FAIL") << "\n";
    if (!agree) {
        err << "error: commutator nullity " << nullity << " differs from orbit codim " << orbit
            << "\n";
        return kExitCheckFailed;
    }
    return kExitOk;
}

// --- pattern ---------------------------------------------------------------

struct PatternArgs {
    std::string structure_file;
    std::string shape = "arnold";
    std::string out_file;
};

int cmd_pattern(const PatternArgs& a, std::ostream& out, std::ostream&) {
    const auto s = io::read_as<SegreStructure>(a.structure_file);
    const auto shape = a.shape == "alternate" ? DeformationShape::Alternate : DeformationShape::Arnold;
    const auto p = make_pattern(s, shape);
    out << "shape=" << io::to_string(shape) << "\n";
    out << "stars=" << p.stars.size() << "\n";
    out << "parameters=" << p.parameter_count << "\n";
    for (const auto& star : p.stars) {
        out << "(" << star.row + 1 << "," << star.col + 1 << ") delta" << star.param + 1 << "\n";
    }
    if (!a.out_file.empty()) io::write_file(a.out_file, p);
    return kExitOk;
}

// --- experiment ------------------------------------------------------------

struct ExperimentArgs {
    std::string structure_file;
    std::vector<std::string> sets;
    double cluster_tol = kDefaultClusterTol;
    double rank_tol = kDefaultStructureRankTol;
};

int cmd_experiment(const ExperimentArgs& a, std::ostream& out, std::ostream&) {
    const auto s = io::read_as<SegreStructure>(a.structure_file);
    const auto pattern = arnold_pattern(s);
    ParameterValues values;
    for (std::size_t i = 0; i < pattern.parameter_count; ++i) values[i] = 0.0;
    for (const auto& item : a.sets) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw Error("--set expects param=value, got '" + item + "'");
        std::size_t index = 0;
        try {
            index = std::stoul(item.substr(0, eq));
        } catch (const std::exception&) {
            throw Error("--set: bad parameter index in '" + item + "'");
        }
        if (index < 1 || index > pattern.parameter_count) {
            throw Error("--set: parameter " + std::to_string(index) + " outside 1.." +
                        std::to_string(pattern.parameter_count));
        }
        values[index - 1] = parse_complex(item.substr(eq + 1));
    }
    const auto recovered = perturbation_experiment(s, values, a.cluster_tol, a.rank_tol);
    const std::size_t before = orbit_codim(s);
    const std::size_t after = orbit_codim(recovered);
    out << "input=" << format_structure(s) << "\n";
    out << "recovered=" << format_structure(recovered) << "\n";
    out << "partitions=" << format_partitions(recovered) << "\n";
    out << "orbit_codim=" << before << " -> " << after << "\n";
    out << "codim_drop=" << static_cast<long long>(before) - static_cast<long long>(after) << "\n";
    return kExitOk;
}

// --- recover ---------------------------------------------------------------

struct RecoverArgs {
    std::string poly_file;
    std::string perturbation_file;
    std::optional<std::uint64_t> seed;
    double norm = 1e-4;
    double tol = 1e-12;
    std::size_t max_iter = 50;
    std::string out_poly;
    std::string out_transform;
};

int cmd_recover(const RecoverArgs& a, std::ostream& out, std::ostream& err) {
    const auto p = io::read_as<MonicPolynomial>(a.poly_file);
    const std::size_t size = p.degree() * p.coeff_size();
    ComplexMatrix e1 = ComplexMatrix::zeros(size, size);
    if (!a.perturbation_file.empty()) {
        e1 = io::read_as<ComplexMatrix>(a.perturbation_file);
    } else if (a.seed) {
        e1 = random_perturbation(size, *a.seed, a.norm);
    } else {
        err << "error: give a perturbation file or --random-seed\n";
        return kExitError;
    }

    RecoveryOptions options;
    options.tol = a.tol;
    options.max_iter = a.max_iter;
    RecoveryResult result = [&] {
        try {
            return recover(p, e1, options);
        } catch (const RecoveryError& e) {
            print_trace(out, e.trace());
            throw;
        }
    }();

    print_trace(out, result.residual_trace);
    const bool monotone =
        std::is_sorted(result.residual_trace.rbegin(), result.residual_trace.rend());
    const double spectrum_gap =
        matched_spectrum_distance(eigenvalues(companion(p) + e1), eigenvalues(companion(result.recovered)));
    const bool spectrum_ok = spectrum_gap <= kSpectrumMatchTol;

    out << "iterations=" << result.iterations << "\n";
    out << "perturbation_norm=" << format_real(frobenius_norm(e1)) << "\n";
    out << "trace_monotone=" << (monotone ? "yes" : "no") << "\n";
    out << "similarity_residual=" << format_real(result.similarity_residual) << "\n";
    out << "eigenvalue_match=" << format_real(spectrum_gap) << " " << (spectrum_ok ? "PASS" : "FAIL")
        << "\n";

    if (!a.out_poly.empty()) io::write_file(a.out_poly, result.recovered);
    if (!a.out_transform.empty()) io::write_file(a.out_transform, result.transform);
    if (!spectrum_ok) {
        err << "error: eigenvalues of the recovered linearization differ by " << spectrum_gap << "\n";
        return kExitCheckFailed;
    }
    return kExitOk;
}

// --- reduce-block ----------------------------------------------------------

struct ReduceArgs {
    std::string matrix_file;
    std::string lambda = "0";
    std::string out_deformed;
    std::string out_transform;
};

int cmd_reduce_block(const ReduceArgs& a, std::ostream& out, std::ostream& err) {
    const auto m = io::read_as<ComplexMatrix>(a.matrix_file);
    const Complex lambda = parse_complex(a.lambda);
    ReductionResult r = [&] {
        try {
            return reduce_single_block(m, lambda);
        } catch (const PivotBreakdown& e) {
            err << "error: pivot breakdown at step " << e.step() + 1 << " (|pivot|=" << e.pivot()
                << ")\n";
            throw;
        }
    }();
    const std::size_t k = m.rows();

    ComplexMatrix shifted = m;
    for (std::size_t i = 0; i < k; ++i) shifted(i, i) -= lambda;
    const auto coeffs = characteristic_coefficients(shifted);
    double charpoly_gap = 0.0;
    for (std::size_t j = 0; j < k; ++j) {
        const Complex delta = r.deformed(k - 1, j) - (j + 1 == k ? lambda : Complex{});
        out << "delta" << j + 1 << "=" << format_complex(delta) << "\n";
        charpoly_gap = std::max(charpoly_gap, std::abs(delta + coeffs[j]));
    }
    const double similarity =
        frobenius_norm(solve_linear(r.transform, m * r.transform) - r.deformed);
    const bool charpoly_ok = charpoly_gap <= kCharPolyTol;
    const bool similarity_ok = similarity <= kReductionSimilarityTol * std::max(1.0, frobenius_norm(m));
    out << "charpoly_identity=" << format_real(charpoly_gap) << " " << (charpoly_ok ? "PASS" : "FAIL")
        << "\n";
    out << "similarity_residual=" << format_real(similarity) << " "
        << (similarity_ok ? "PASS" : "FAIL") << "\n";

    if (!a.out_deformed.empty()) io::write_file(a.out_deformed, r.deformed);
    if (!a.out_transform.empty()) io::write_file(a.out_transform, r.transform);
    if (!charpoly_ok || !similarity_ok) {
        err << "error: reduction check failed\n";
        return kExitCheckFailed;
    }
    return kExitOk;
}

// --- jcf -------------------------------------------------------------------

struct JcfArgs {
    std::string structure_file;
    std::string out_file;
};

int cmd_jcf(const JcfArgs& a, std::ostream& out, std::ostream&) {
    const auto s = io::read_as<SegreStructure>(a.structure_file);
    const ComplexMatrix j = build_jcf(s);
    if (!a.out_file.empty()) {
        io::write_file(a.out_file, j);
    } else {
        out << io::dump(j);
    }
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Miniversal deformations of Jordan forms: codimensions, perturbation "
                 "experiments and structured perturbation recovery",
                 "versal"};
    app.require_subcommand(1);

    CodimArgs codim;
    auto* c = app.add_subcommand("codim", "Orbit or bundle codimension of a Jordan structure");
    c->add_option("structure", codim.structure_file, "Structure document")->required();
    c->add_option("--mode", codim.mode, "orbit or bundle")
        ->check(CLI::IsMember({"orbit", "bundle"}))
        ->capture_default_str();
    c->add_flag("--oracle", codim.oracle, "Cross-check with the commutator nullity (n <= 10)");

    PatternArgs pattern;
    auto* p = app.add_subcommand("pattern", "Star positions of a miniversal deformation");
    p->add_option("structure", pattern.structure_file, "Structure document")->required();
    p->add_option("--shape", pattern.shape, "arnold or alternate")
        ->check(CLI::IsMember({"arnold", "alternate"}))
        ->capture_default_str();
    p->add_option("--out", pattern.out_file, "Write the pattern document here");

    ExperimentArgs experiment;
    auto* e = app.add_subcommand("experiment", "Jordan structure of a deformed JCF");
    e->add_option("structure", experiment.structure_file, "Structure document")->required();
    e->add_option("--set", experiment.sets, "Parameter value, 1-based: param=re or param=re,im")
        ->allow_extra_args(false);
    e->add_option("--tol-cluster", experiment.cluster_tol, "Relative eigenvalue cluster radius")
        ->capture_default_str();
    e->add_option("--tol-rank", experiment.rank_tol, "Relative numerical rank tolerance")
        ->capture_default_str();

    RecoverArgs recover_args;
    std::uint64_t seed = 0;
    auto* r = app.add_subcommand("recover", "Structured perturbation of a monic polynomial");
    r->add_option("polynomial", recover_args.poly_file, "Polynomial document")->required();
    r->add_option("perturbation", recover_args.perturbation_file, "Matrix document E_1");
    auto* seed_opt = r->add_option("--random-seed", seed, "Generate E_1 from this seed");
    r->add_option("--norm", recover_args.norm, "Frobenius norm of the generated E_1")
        ->capture_default_str();
    r->add_option("--tol", recover_args.tol, "Stop when the unstructured norm is below this")
        ->capture_default_str();
    r->add_option("--max-iter", recover_args.max_iter, "Iteration cap")->capture_default_str();
    r->add_option("--out-poly", recover_args.out_poly, "Write the recovered polynomial here");
    r->add_option("--out-transform", recover_args.out_transform, "Write the transform S here");

    ReduceArgs reduce;
    auto* b = app.add_subcommand("reduce-block", "Reduce a perturbed Jordan block");
    b->add_option("matrix", reduce.matrix_file, "Matrix document J_k(lambda) + E")->required();
    b->add_option("--lambda", reduce.lambda, "Eigenvalue as re or re,im")->capture_default_str();
    b->add_option("--out-deformed", reduce.out_deformed, "Write the reduced matrix here");
    b->add_option("--out-transform", reduce.out_transform, "Write the transform S here");

    JcfArgs jcf;
    auto* j = app.add_subcommand("jcf", "Build the Jordan matrix of a structure");
    j->add_option("structure", jcf.structure_file, "Structure document")->required();
    j->add_option("--out", jcf.out_file, "Write the matrix document here");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& ex) {
        app.exit(ex, out, err);
        return kExitOk;
    } catch (const CLI::ParseError& ex) {
        err << "error: " << ex.what() << "\n";
        return kExitError;
    }

    try {
        if (c->parsed()) return cmd_codim(codim, out, err);
        if (p->parsed()) return cmd_pattern(pattern, out, err);
        if (e->parsed()) return cmd_experiment(experiment, out, err);
        if (r->parsed()) {
            if (*seed_opt) recover_args.seed = seed;
            return cmd_recover(recover_args, out, err);
        }
        if (b->parsed()) return cmd_reduce_block(reduce, out, err);
        if (j->parsed()) return cmd_jcf(jcf, out, err);
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << "\n";
        return kExitError;
    }
    return kExitError;
}

}  // namespace versal::cli
