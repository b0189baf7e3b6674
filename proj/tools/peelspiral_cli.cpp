// Command-line front end: generates peel and Euler spiral samples as CSV
// (optionally SVG), runs convergence studies, and evaluates the
// diffraction-intensity and clothoid applications.
//
// Exit codes: 0 success, 2 argument validation failure, 3 numerical
// non-convergence, 4 I/O error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "peelspiral/applications.hpp"
#include "peelspiral/convergence.hpp"
#include "peelspiral/fresnel.hpp"
#include "peelspiral/io.hpp"
#include "peelspiral/peel.hpp"
#include "peelspiral/quadrature.hpp"

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitNonConvergence = 3;
constexpr int kExitIo = 4;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw IoError("cannot open '" + path + "' for writing");
    os << contents;
    os.flush();
    if (!os) throw IoError("failed while writing '" + path + "'");
}

std::string curve_csv_string(const peelspiral::SampledCurve& curve,
                             const std::vector<std::string>& comments) {
    std::ostringstream os;
    peelspiral::write_curve_csv(os, curve, comments);
    return os.str();
}

void emit_curve(const peelspiral::SampledCurve& curve, const std::vector<std::string>& comments,
                const std::string& csv_path, const std::string& svg_path,
                const std::vector<peelspiral::PlanePoint>& markers) {
    // Everything is computed before the first byte is written, so a
    // validation or convergence failure leaves no partial files.
    const std::string csv = curve_csv_string(curve, comments);
    std::string svg;
    if (!svg_path.empty())
        svg = peelspiral::curve_svg(peelspiral::curve_points(curve), {}, markers);
    write_file(csv_path, csv);
    if (!svg_path.empty()) write_file(svg_path, svg);
}

int run(int argc, char** argv) {
    CLI::App app{"Orange-peel and Euler spiral curve generator"};
    app.require_subcommand(1);

    peelspiral::QuadratureSpec quad;

    // --- peel ---------------------------------------------------------
    auto* peel = app.add_subcommand("peel", "Sample the flattened orange-peel spiral");
    double peel_n = 0.0;
    int peel_samples = 10001;
    std::string peel_out, peel_svg;
    peel->add_option("--n", peel_n, "Number of windings N (strip width 1/N)")->required();
    peel->add_option("--samples", peel_samples, "Number of samples")->capture_default_str();
    peel->add_option("--out", peel_out, "CSV output path")->required();
    peel->add_option("--svg", peel_svg, "SVG output path (optional)");
    peel->add_option("--abs-tol", quad.abs_tol, "Quadrature absolute tolerance")->capture_default_str();
    peel->add_option("--rel-tol", quad.rel_tol, "Quadrature relative tolerance")->capture_default_str();

    // --- euler --------------------------------------------------------
    auto* euler = app.add_subcommand("euler", "Sample the Euler spiral (Fresnel integrals)");
    double t_min = 0.0, t_max = 0.0;
    int euler_samples = 10001;
    std::string euler_out, euler_svg;
    euler->add_option("--t-min", t_min, "Lower parameter bound")->required();
    euler->add_option("--t-max", t_max, "Upper parameter bound")->required();
    euler->add_option("--samples", euler_samples, "Number of samples")->capture_default_str();
    euler->add_option("--out", euler_out, "CSV output path")->required();
    euler->add_option("--svg", euler_svg, "SVG output path (optional; marks the limit points)");

    // --- converge -----------------------------------------------------
    auto* converge = app.add_subcommand("converge", "Peel vs Euler spiral convergence study");
    std::vector<int> n_list;
    double t_rescaled = 1.0;
    int conv_samples = 1001;
    std::string conv_out;
    converge->add_option("--n-list", n_list, "Comma-separated winding counts (integers)")
        ->required()
        ->delimiter(',');
    converge->add_option("--t-rescaled", t_rescaled, "Rescaled half-domain T")->capture_default_str();
    converge->add_option("--samples", conv_samples, "Samples per N")->capture_default_str();
    converge->add_option("--out", conv_out, "CSV output path")->required();
    converge->add_option("--abs-tol", quad.abs_tol, "Quadrature absolute tolerance")->capture_default_str();
    converge->add_option("--rel-tol", quad.rel_tol, "Quadrature relative tolerance")->capture_default_str();

    // --- diffract -----------------------------------------------------
    auto* diffract = app.add_subcommand("diffract", "Slit intensity from two spiral parameters");
    double t1 = 0.0, t2 = 0.0;
    bool normalize = false;
    diffract->add_option("--t1", t1, "First Fresnel parameter (-inf for the lower limit point)")
        ->required();
    diffract->add_option("--t2", t2, "Second Fresnel parameter (inf for the upper limit point)")
        ->required();
    diffract->add_flag("--normalize", normalize, "Divide by the open-aperture intensity pi");

    // --- clothoid -----------------------------------------------------
    auto* clothoid = app.add_subcommand("clothoid", "Track transition curve");
    double rate = 0.0, length = 0.0;
    int clothoid_samples = 1001;
    std::string clothoid_out;
    clothoid->add_option("--rate", rate, "Curvature growth rate (1/length^2)")->required();
    clothoid->add_option("--length", length, "Arclength of the transition")->required();
    clothoid->add_option("--samples", clothoid_samples, "Number of samples")->capture_default_str();
    clothoid->add_option("--out", clothoid_out, "CSV output path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitValidation;
    }

    if (peel->parsed()) {
        const peelspiral::PeelParams params(peel_n, quad);
        const auto curve = peelspiral::sample_peel(params, peel_samples);
        emit_curve(curve,
                   {"peel N=" + peelspiral::format_double(peel_n) +
                    " samples=" + std::to_string(peel_samples)},
                   peel_out, peel_svg, {});
    } else if (euler->parsed()) {
        const auto curve = peelspiral::sample_euler(t_min, t_max, euler_samples);
        emit_curve(curve,
                   {"euler t_min=" + peelspiral::format_double(t_min) +
                    " t_max=" + peelspiral::format_double(t_max) +
                    " samples=" + std::to_string(euler_samples)},
                   euler_out, euler_svg, {peelspiral::limit_point(+1), peelspiral::limit_point(-1)});
    } else if (converge->parsed()) {
        const auto report = peelspiral::convergence_study(n_list, t_rescaled, conv_samples, quad);
        std::ostringstream os;
        peelspiral::write_convergence_csv(os, report);
        write_file(conv_out, os.str());
        std::printf("%.12g\n", report.fitted_slope);
    } else if (diffract->parsed()) {
        const peelspiral::SlitChord chord(t1, t2);
        const double intensity = peelspiral::slit_intensity(chord);
        std::printf("%.12g\n", normalize ? intensity / std::numbers::pi : intensity);
    } else if (clothoid->parsed()) {
        const auto curve = peelspiral::railway_transition(rate, length, clothoid_samples);
        emit_curve(curve,
                   {"clothoid rate=" + peelspiral::format_double(rate) +
                    " length=" + peelspiral::format_double(length) +
                    " samples=" + std::to_string(clothoid_samples)},
                   clothoid_out, "", {});
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const peelspiral::QuadratureError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNonConvergence;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
