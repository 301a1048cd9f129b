#include "hsq/cli.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "hsq/adhm.hpp"
#include "hsq/errors.hpp"
#include "hsq/json_io.hpp"
#include "hsq/laurent.hpp"
#include "hsq/oracle.hpp"
#include "hsq/quiver.hpp"
#include "hsq/toric.hpp"

namespace hsq {

namespace {

Json load_instance(const std::string& path, const std::string& inline_text) {
    bool have_path = !path.empty();
    bool have_inline = !inline_text.empty();
    if (have_path == have_inline)
        throw validation_error("provide exactly one of --input or --inline");
    return have_path ? load_json_file(path) : parse_json_text(inline_text);
}

void run_toric(const Json& doc, const std::string& format, std::ostream& out,
               std::ostream& err) {
    ToricInstance inst = toric_instance_from_json(doc);
    if (inst.xi && !xi_is_generic(inst))
        err << "warning: xi is not generic; results assume a generic parameter\n";

    FlatLattice lattice = build_flat_lattice(inst);
    LaurentPolynomial count = toric_count_polynomial(inst);
    LaurentPolynomial poincare = toric_poincare(inst);
    LaurentPolynomial h_dual = h_polynomial(gale_dual(inst));

    if (format == "json") {
        Json result;
        result["rows"] = inst.rows();
        result["cols"] = inst.cols();
        result["flats"] = lattice.flats().size();
        result["count"] = poly_to_json(count);
        result["poincare"] = poly_to_json(poincare);
        result["h_dual"] = poly_to_json(h_dual);
        out << result.dump(2) << "\n";
    } else {
        out << "count: " << count.to_string() << "\n"
            << "poincare: " << poincare.to_string() << "\n"
            << "h_dual: " << h_dual.to_string() << "\n"
            << "flats: " << lattice.flats().size() << "\n";
    }
}

void run_adhm(int k, int n_max, bool poincare_mode, const std::string& format,
              std::ostream& out) {
    if (k < 0) throw validation_error("--k must be nonnegative");
    if (n_max < 0) throw validation_error("--nmax must be nonnegative");

    // One value per gauge rank n = 0..n_max; rank 0 is a point.
    std::vector<LaurentPolynomial> values;
    if (poincare_mode) {
        values.push_back(LaurentPolynomial::one(Var::t));
        if (n_max >= 1 && k >= 1) {
            TruncatedMultiSeries series = adhm_poincare_series(k, n_max);
            for (int n = 1; n <= n_max; ++n)
                values.push_back(series.coeff({n}).as_laurent());
        } else {
            for (int n = 1; n <= n_max; ++n)
                values.push_back(LaurentPolynomial(Var::t));
        }
    } else {
        values.push_back(LaurentPolynomial::one(Var::q));
        for (int n = 1; n <= n_max; ++n) values.push_back(adhm_count(n, k));
    }

    if (format == "json") {
        Json result;
        result["k"] = k;
        result["nmax"] = n_max;
        result["mode"] = poincare_mode ? "poincare" : "counts";
        result["values"] = Json::array();
        for (int n = 0; n <= n_max; ++n) {
            Json entry;
            entry["n"] = n;
            entry["value"] = poly_to_json(values[static_cast<std::size_t>(n)]);
            result["values"].push_back(entry);
        }
        out << result.dump(2) << "\n";
    } else {
        for (int n = 0; n <= n_max; ++n)
            out << "T^" << n << ": "
                << values[static_cast<std::size_t>(n)].to_string() << "\n";
    }
}

void run_quiver(const Json& doc, const std::vector<int>& v_max_flag,
                const std::string& format, std::ostream& out) {
    Json spec_doc = doc;
    if (!v_max_flag.empty()) spec_doc["vmax"] = v_max_flag;
    QuiverJobSpec spec = quiver_instance_from_json(spec_doc);
    QuiverQuery query = spec.query;

    // A single dimension vector when the instance pins one and no --vmax
    // override is given; otherwise every v in the box, ascending lex.
    std::vector<std::vector<int>> dimensions;
    if (spec.v && v_max_flag.empty()) {
        dimensions.push_back(*spec.v);
    } else {
        std::vector<int> v(query.v_max.size(), 0);
        for (;;) {
            dimensions.push_back(v);
            int i = static_cast<int>(v.size()) - 1;
            while (i >= 0 && v[static_cast<std::size_t>(i)] ==
                                 query.v_max[static_cast<std::size_t>(i)]) {
                v[static_cast<std::size_t>(i)] = 0;
                --i;
            }
            if (i < 0) break;
            ++v[static_cast<std::size_t>(i)];
        }
    }

    Json results = Json::array();
    for (const auto& v : dimensions) {
        LaurentPolynomial count = quiver_count(query, v);
        LaurentPolynomial poincare = quiver_poincare(query, v);
        int dim = quiver_dimension(query.quiver, v, query.w);
        if (format == "json") {
            Json entry;
            entry["v"] = v;
            entry["dim"] = dim;
            entry["count"] = poly_to_json(count);
            entry["poincare"] = poly_to_json(poincare);
            results.push_back(entry);
        } else {
            out << "v: [";
            for (std::size_t i = 0; i < v.size(); ++i)
                out << (i ? ", " : "") << v[i];
            out << "]\n"
                << "  dim: " << dim << "\n"
                << "  count: " << count.to_string() << "\n"
                << "  poincare: " << poincare.to_string() << "\n";
        }
    }
    if (format == "json") out << results.dump(2) << "\n";
}

LaurentPolynomial closed_form_count(const RepresentationInstance& inst) {
    if (inst.is_toric()) return toric_count_polynomial(inst.toric_payload());
    const QuiverInstance& qi = inst.quiver_payload();
    QuiverQuery query(qi.quiver, qi.dims.w, qi.dims.v);
    return quiver_count(query, qi.dims.v);
}

int run_verify(const std::string& path, const std::vector<std::int64_t>& primes,
               int degree_flag, std::int64_t budget, int workers,
               const std::string& format, std::ostream& out) {
    if (primes.empty()) throw validation_error("--primes needs at least one prime");
    if (budget < 1) throw validation_error("--budget must be positive");

    RepresentationInstance inst = representation_from_json(load_json_file(path));
    OracleOptions opts;
    opts.budget = BigInt(budget);
    opts.workers = workers > 0
                       ? workers
                       : std::max(1u, std::thread::hardware_concurrency());

    int degree = degree_flag >= 0 ? degree_flag : inst.count_degree();

    struct PrimeReport {
        std::int64_t p;
        BigInt solutions;
        BigInt character;
        bool good;
    };
    std::vector<PrimeReport> reports;
    bool all_equal = true;
    int good_count = 0;
    for (std::int64_t p : primes) {
        PrimeReport r;
        r.p = p;
        r.solutions = brute_force_count(inst, p, opts);
        r.character = character_sum_count(inst, p, opts);
        r.good = is_good_prime(inst, p);
        if (r.solutions != r.character) all_equal = false;
        if (r.good) ++good_count;
        reports.push_back(std::move(r));
    }

    LaurentPolynomial closed = closed_form_count(inst);
    std::optional<LaurentPolynomial> interpolant;
    std::string interpolation_note;
    if (good_count >= degree + 1) {
        interpolant = interpolate_count(inst, primes, degree, opts);
    } else {
        std::ostringstream note;
        note << "skipped: needs " << degree + 1 << " good primes, have "
             << good_count;
        interpolation_note = note.str();
    }

    // "mismatch" is reserved for an actual disagreement; a prime list too
    // small to pin down the polynomial is merely inconclusive.
    const char* verdict = "match";
    int status = 0;
    if (!all_equal || (interpolant && *interpolant != closed)) {
        verdict = "mismatch";
        status = 2;
    } else if (!interpolant) {
        verdict = "inconclusive";
        status = 1;
    }

    if (format == "json") {
        Json result;
        result["primes"] = Json::array();
        for (const auto& r : reports) {
            Json entry;
            entry["p"] = r.p;
            entry["solutions"] = r.solutions.str();
            entry["character_sum"] = r.character.str();
            entry["equal"] = r.solutions == r.character;
            entry["good"] = r.good;
            result["primes"].push_back(entry);
        }
        result["degree_bound"] = degree;
        if (interpolant)
            result["interpolant"] = poly_to_json(*interpolant);
        else
            result["interpolant"] = interpolation_note;
        result["closed_form"] = poly_to_json(closed);
        result["verdict"] = verdict;
        out << result.dump(2) << "\n";
    } else {
        for (const auto& r : reports)
            out << "p=" << r.p << ": solutions=" << r.solutions.str()
                << " character_sum=" << r.character.str()
                << " equal=" << (r.solutions == r.character ? "yes" : "no")
                << " good=" << (r.good ? "yes" : "no") << "\n";
        out << "degree_bound: " << degree << "\n";
        if (interpolant)
            out << "interpolant: " << interpolant->to_string() << "\n";
        else
            out << "interpolant: " << interpolation_note << "\n";
        out << "closed_form: " << closed.to_string() << "\n"
            << "verdict: " << verdict << "\n";
    }
    return status;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
    CLI::App app{"Point counts and Poincare polynomials of holomorphic "
                 "symplectic quotients"};
    app.require_subcommand(1);

    std::string format = "text";
    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"text", "json"}))
            ->capture_default_str();
    };

    auto* toric = app.add_subcommand(
        "toric", "Count polynomial, Poincare polynomial and dual "
                 "h-polynomial of a hypertoric instance");
    std::string toric_input, toric_inline;
    toric->add_option("--input", toric_input, "JSON instance file");
    toric->add_option("--inline", toric_inline, "JSON instance text");
    add_format(toric);

    auto* adhm = app.add_subcommand(
        "adhm", "Count polynomials of twisted ADHM spaces for framing rank k, "
                "gauge ranks 0..nmax");
    int adhm_k = 0;
    int adhm_nmax = 0;
    bool adhm_counts = false;
    bool adhm_poincare = false;
    adhm->add_option("--k", adhm_k, "Framing rank")->required();
    adhm->add_option("--nmax", adhm_nmax, "Largest gauge rank")->required();
    adhm->add_flag("--counts", adhm_counts, "Emit count polynomials (default)");
    adhm->add_flag("--poincare", adhm_poincare, "Emit Poincare polynomials");
    add_format(adhm);

    auto* quiver = app.add_subcommand(
        "quiver", "Count and Poincare polynomials of Nakajima quiver "
                  "varieties over a box of dimension vectors");
    std::string quiver_input, quiver_inline;
    std::vector<int> quiver_vmax;
    quiver->add_option("--input", quiver_input, "JSON instance file");
    quiver->add_option("--inline", quiver_inline, "JSON instance text");
    quiver->add_option("--vmax", quiver_vmax,
                       "Dimension vector box, comma separated")
        ->delimiter(',');
    add_format(quiver);

    auto* verify = app.add_subcommand(
        "verify", "Cross-check an instance: brute-force solution counts, "
                  "character sums, interpolation, closed form");
    std::string verify_instance;
    std::vector<std::int64_t> verify_primes;
    int verify_degree = -1;
    std::int64_t verify_budget = 100000000;
    int verify_workers = 0;
    verify->add_option("--instance", verify_instance, "JSON instance file")
        ->required();
    verify->add_option("--primes", verify_primes, "Primes, comma separated")
        ->delimiter(',')
        ->required();
    verify->add_option("--degree-bound", verify_degree,
                       "Interpolation degree bound (default: the complex "
                       "dimension of the instance)");
    verify->add_option("--budget", verify_budget, "Enumeration cost cap")
        ->capture_default_str();
    verify->add_option("--workers", verify_workers,
                       "Enumeration threads (default: machine parallelism)");
    add_format(verify);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    if (toric->parsed()) {
        run_toric(load_instance(toric_input, toric_inline), format, out, err);
        return 0;
    }
    if (adhm->parsed()) {
        if (adhm_counts && adhm_poincare)
            throw validation_error("--counts and --poincare are mutually exclusive");
        run_adhm(adhm_k, adhm_nmax, adhm_poincare, format, out);
        return 0;
    }
    if (quiver->parsed()) {
        run_quiver(load_instance(quiver_input, quiver_inline), quiver_vmax,
                   format, out);
        return 0;
    }
    return run_verify(verify_instance, verify_primes, verify_degree,
                      verify_budget, verify_workers, format, out);
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    int status = 0;
    try {
        status = dispatch(args, out, err);
    } catch (const validation_error& e) {
        err << "error: " << e.what() << "\n";
        status = 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        status = 2;
    }
    return CliResult{status, out.str(), err.str()};
}

}  // namespace hsq
