// lagfib: command-line front end for the lagfib library.
//
// Exit status: 0 success, 1 internal error, 2 user or input error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "lagfib/lagfib.hpp"

namespace {

using namespace lagfib;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitUser = 2;

// Raised when the two independent routes to a number disagree.
struct RouteDisagreement : std::logic_error {
    using std::logic_error::logic_error;
};

struct Options {
    std::string format = "plain";
    std::string output;

    std::string genus;
    unsigned upto = 0;
    bool c_odd_zero = false;

    std::optional<unsigned> n;
    std::string polarization;
    std::string sqrt_ahat;
    std::string manifold;
    std::string theta_multiple = "1";

    bool require_integer_degree = true;
    unsigned threads = 1;

    std::string surface;
};

PolarizationType parse_polarization(const std::string& text) {
    std::vector<Integer> d;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const Rational r = parse_rational(item);
        if (!is_integer(r)) throw InvalidPolarization("'" + item + "' is not an integer");
        d.push_back(numerator_of(r));
    }
    if (text.empty() || text.back() == ',') throw ParseError("malformed polarization '" + text + "'");
    return PolarizationType(std::move(d));
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

std::string run_series(const Options& opt) {
    const CharacteristicSeries series = series_for(opt.genus == "ahat" ? Genus::ahat : Genus::sqrt_ahat, opt.upto);
    const GradedElement shown = opt.c_odd_zero ? with_odd_chern_zero(series.element) : series.element;
    if (opt.format == "json") return dump(series_to_json(series, shown));
    if (opt.format == "csv") {
        std::string out = "monomial,weight,coefficient\n";
        for (const auto& [m, c] : shown.terms())
            out += m.to_dotted(shown.ring()) + "," + std::to_string(m.weight()) + "," + to_string(c) + "\n";
        return out;
    }
    return shown.to_string() + "\n";
}

std::string run_degdelta(const Options& opt) {
    if (opt.sqrt_ahat.empty() == opt.manifold.empty())
        throw CLI::ValidationError("degdelta", "exactly one of --sqrt-ahat and --manifold is required");

    Rational sqrt_ahat;
    std::optional<unsigned> n = opt.n;
    if (!opt.manifold.empty()) {
        const ChernNumbers chern = load_chern_numbers(opt.manifold);
        if (chern.complex_dimension % 2 != 0)
            throw WeightMismatch("manifold record has odd complex dimension " + std::to_string(chern.complex_dimension));
        const unsigned half = chern.complex_dimension / 2;
        if (n && *n != half)
            throw WeightMismatch("--n " + std::to_string(*n) + " disagrees with the record's dimension " +
                                 std::to_string(chern.complex_dimension));
        n = half;
        sqrt_ahat = characteristic_number(sqrt_ahat_series(std::max(2u, chern.complex_dimension)), chern);
    } else {
        sqrt_ahat = parse_rational(opt.sqrt_ahat);
    }
    if (!n) throw CLI::ValidationError("degdelta", "--n is required with --sqrt-ahat");

    const PolarizationType pol = opt.polarization.empty() ? PolarizationType::principal(*n)
                                                          : parse_polarization(opt.polarization);
    const Rational m = parse_rational(opt.theta_multiple);
    if (!is_integer(m)) throw NonPositiveInput("--theta-multiple must be an integer");

    const Rational closed_form = deg_delta_polarized(*n, pol, sqrt_ahat);
    const DegreeResult result = master_equation_solve({*n, pol.product(), sqrt_ahat, numerator_of(m)});
    if (result.deg_delta != closed_form)
        throw RouteDisagreement("master equation gives " + to_string(result.deg_delta) + ", closed form gives " +
                                to_string(closed_form));

    if (opt.format == "json") return dump(to_json(result));
    if (opt.format == "csv")
        return "deg_delta,b_theta,c2YL\n" + to_string(result.deg_delta) + "," + to_string(result.b_theta) + "," +
               to_string(result.intermediate_c2YL) + "\n";
    return "deg_delta = " + to_string(result.deg_delta) + "\nb_theta = " + to_string(result.b_theta) +
           "\nc2YL = " + to_string(result.intermediate_c2YL) + "\n";
}

std::string summary_line(const CensusBounds& b) {
    return "summary: max_d = " + std::to_string(b.max_d) + ", max_deg_delta = " + std::to_string(b.max_deg) +
           ", max_rw = " + std::to_string(b.max_rw) + " (bounds: deg_delta <= 32, d <= 1036)\n";
}

std::string run_census(const Options& opt) {
    const auto rows = census(opt.require_integer_degree, opt.threads);
    const auto bounds = bounds_summary(rows);
    if (opt.format == "json") return dump(census_to_json(rows, opt.require_integer_degree));
    if (opt.format == "csv") {
        std::cerr << summary_line(bounds);
        return census_to_csv(rows);
    }
    std::ostringstream out;
    out << "  b2  b3   b4   c4  c2sq    rw     d  deg_delta\n";
    for (const auto& r : rows) {
        const auto& inv = r.invariants;
        char line[96];
        std::snprintf(line, sizeof line, "%4lld %3lld %4lld %4lld %5lld %5lld %5lld  ", (long long)inv.betti.b2,
                      (long long)inv.betti.b3, (long long)inv.b4, (long long)inv.c4, (long long)inv.c2_squared,
                      (long long)inv.rw, (long long)r.d);
        out << line << (r.deg_delta ? std::to_string(*r.deg_delta) : "sqrt(" + std::to_string(r.deg_delta_squared) + ")")
            << '\n';
    }
    out << summary_line(bounds);
    return out.str();
}

std::string run_pencil(const Options& opt) {
    const unsigned n = *opt.n;
    const bool k3 = opt.surface == "k3";
    const Integer degree = pencil_degree(k3 ? SurfaceData::k3(n) : SurfaceData::abelian(n));
    const KnownFamily family = k3 ? KnownFamily::hilbert_scheme : KnownFamily::generalized_kummer;
    const Rational formula = deg_delta_polarized(n, known_example_polarization(family, n),
                                                 known_example_sqrt_ahat(family, n));
    if (formula != Rational(degree))
        throw RouteDisagreement("pencil degree " + to_string(degree) + " but formula gives " + to_string(formula));

    if (opt.format == "json")
        return dump({{"schema_version", kSchemaVersion},
                     {"surface", opt.surface},
                     {"n", n},
                     {"pencil_degree", to_string(degree)},
                     {"formula_deg_delta", to_string(formula)}});
    if (opt.format == "csv")
        return "surface,n,pencil_degree,formula_deg_delta\n" + opt.surface + "," + std::to_string(n) + "," +
               to_string(degree) + "," + to_string(formula) + "\n";
    return "pencil_degree = " + to_string(degree) + "\nformula_deg_delta = " + to_string(formula) + "\n";
}

std::string run_models(const Options& opt) {
    const PolarizationType pol = parse_polarization(opt.polarization);
    const auto models = degeneration_models(pol);
    if (opt.format == "json") return dump(to_json(pol, models));
    std::string out = opt.format == "csv" ? "k,d_prime\n" : "";
    for (const auto& m : models) {
        std::string d;
        for (const auto& x : m.d_prime) d += (d.empty() ? "" : opt.format == "csv" ? ";" : ",") + to_string(x);
        out += opt.format == "csv" ? to_string(m.k) + "," + d + "\n" : "k=" + to_string(m.k) + " d'=(" + d + ")\n";
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Characteristic numbers and discriminant degrees of Lagrangian fibrations"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"plain", "json", "csv"}));
    app.add_option("--output", opt.output, "Write output to this file instead of stdout");

    auto* series = app.add_subcommand("series", "Print the A-hat or sqrt(A-hat) series");
    series->add_option("--genus", opt.genus)->required()->check(CLI::IsMember({"ahat", "sqrt-ahat"}));
    series->add_option("--upto", opt.upto, "Truncation weight (>= 2)")->required()->check(CLI::Range(2u, 64u));
    series->add_flag("--c-odd-zero", opt.c_odd_zero, "Set c1, c3, ... to zero");

    auto* degdelta = app.add_subcommand("degdelta", "Degree of the discriminant locus");
    degdelta->add_option("--n", opt.n, "Half the complex dimension")->check(CLI::PositiveNumber);
    degdelta->add_option("--polarization", opt.polarization, "Comma-separated d1,...,dn (default principal)");
    degdelta->add_option("--sqrt-ahat", opt.sqrt_ahat, "sqrt(A-hat)[X] as p/q");
    degdelta->add_option("--manifold", opt.manifold, "Chern-number record (JSON)")->check(CLI::ExistingFile);
    degdelta->add_option("--theta-multiple", opt.theta_multiple, "Y restricts to m*Theta (default 1)");

    auto* census_cmd = app.add_subcommand("census", "Admissible four-fold invariants (b2, b3, d, deg)");
    census_cmd->add_flag("--require-integer-degree,!--no-require-integer-degree", opt.require_integer_degree,
                         "Keep only rows with integral degree (default on)");
    census_cmd->add_option("--threads", opt.threads, "Worker threads")->check(CLI::Range(1u, 256u));

    auto* pencil = app.add_subcommand("pencil", "Degree via c3 on Surface x P^1, checked against the formula");
    pencil->add_option("--surface", opt.surface)->required()->check(CLI::IsMember({"k3", "abelian"}));
    pencil->add_option("--n", opt.n)->required()->check(CLI::PositiveNumber);

    auto* models = app.add_subcommand("models", "Degeneration models compatible with a polarization type");
    models->add_option("--polarization", opt.polarization)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUser;
    }

    try {
        std::string text;
        if (series->parsed()) text = run_series(opt);
        else if (degdelta->parsed()) text = run_degdelta(opt);
        else if (census_cmd->parsed()) text = run_census(opt);
        else if (pencil->parsed()) text = run_pencil(opt);
        else text = run_models(opt);

        if (opt.output.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(opt.output, std::ios::binary);
            if (!(out << text)) {
                std::cerr << "error: cannot write '" << opt.output << "'\n";
                return kExitUser;
            }
        }
        return kExitOk;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUser;
    } catch (const lagfib::error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUser;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
}
