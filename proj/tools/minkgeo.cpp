// minkgeo: command-line front end for the Minkowski curve/surface toolkit.
// Subcommands: frame, evolute, bertrand, surface, verify. All outputs are
// deterministic: identical invocations produce identical bytes.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mink/mink.hpp"
#include "mink/suite.hpp"

namespace {

// numeric CLI values may be plain numbers or the literals e / pi
double parse_real(const std::string& text) {
    if (text == "e") return std::numbers::e;
    if (text == "pi") return std::numbers::pi;
    if (text == "-e") return -std::numbers::e;
    if (text == "-pi") return -std::numbers::pi;
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(text, &used);
    } catch (const std::exception&) {
        throw mink::BadParameter("not a number: '" + text + "'");
    }
    if (used != text.size())
        throw mink::BadParameter("not a number: '" + text + "'");
    return value;
}

mink::Interval parse_range(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw mink::BadParameter("range must look like lo:hi, got '" + text + "'");
    const mink::Interval r{parse_real(text.substr(0, colon)),
                           parse_real(text.substr(colon + 1))};
    if (!(r.lo < r.hi))
        throw mink::BadParameter("range must satisfy lo < hi, got '" + text + "'");
    return r;
}

struct CurveInput {
    std::string preset_name;
    std::vector<std::string> preset_params;
    std::string spec_path;

    void add_options(CLI::App* cmd) {
        cmd->add_option("--preset", preset_name,
                        "built-in curve: example_336, example_46, "
                        "pseudo_circle_s12, pseudo_circle_h2");
        cmd->add_option("--param", preset_params,
                        "numeric parameter(s) for the preset (e.g. the pseudo-circle c)");
        cmd->add_option("--spec", spec_path, "curve-spec file (see README for the format)");
    }

    mink::CurveSpec load() const {
        if (preset_name.empty() == spec_path.empty())
            throw mink::BadParameter("give exactly one of --preset and --spec");
        if (!preset_name.empty()) {
            std::vector<double> params;
            params.reserve(preset_params.size());
            for (const std::string& p : preset_params) params.push_back(parse_real(p));
            return mink::preset(preset_name, params);
        }
        std::ifstream in(spec_path);
        if (!in) throw mink::IoError("cannot open curve file '" + spec_path + "'");
        return mink::parse_curve_file(in);
    }
};

// spherical curves are reparametrized when they are not unit speed; every
// frame construction downstream assumes arc length
mink::Curve unit_speed_curve(const mink::CurveSpec& spec) {
    mink::Curve curve = spec.evaluator();
    if (curve.space() == mink::Space::Free) return curve;
    if (mink::validate_unit_speed(curve, 200) > 1e-9) {
        std::cerr << "note: input is not unit speed; reparametrizing by arc length\n";
        curve = mink::reparametrize_unit_speed(curve);
    }
    const double sphere = mink::validate_on_sphere(curve, 200);
    if (sphere > 1e-9)
        throw mink::NotOnSphere("curve is not on " + std::string(space_name(curve.space()))
                                + " (residual " + mink::format_double(sphere) + ")");
    return curve;
}

class OutputSink {
public:
    explicit OutputSink(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw mink::IoError("cannot open output file '" + path + "'");
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

std::vector<double> sample_grid(const mink::Interval& range, int n) {
    if (n < 2) throw mink::BadParameter("--samples must be at least 2");
    std::vector<double> grid(n);
    for (int i = 0; i < n; ++i) grid[i] = range.at(i, n);
    return grid;
}

int run_frame(const CurveInput& input, int samples, const std::string& v_range,
              const std::string& out_path) {
    const mink::CurveSpec spec = input.load();
    OutputSink sink(out_path);
    std::vector<mink::CsvRow> rows;

    if (spec.space == mink::Space::Free) {
        const mink::Curve curve = spec.evaluator();
        const mink::Interval range =
            v_range.empty() ? curve.domain() : parse_range(v_range);
        const std::vector<std::string> names{"T1", "T2", "T3", "N1", "N2", "N3",
                                             "B1", "B2", "B3", "kappa", "tau"};
        for (double v : sample_grid(range, samples)) {
            const mink::CurveSample s = curve.sample(v);
            const mink::FrenetApparatus app = mink::frenet_apparatus(s);
            rows.push_back({v, s.position,
                            {app.T.x1, app.T.x2, app.T.x3, app.N.x1, app.N.x2, app.N.x3,
                             app.B.x1, app.B.x2, app.B.x3, app.kappa, app.tau}});
        }
        mink::write_csv(rows, names, sink.stream());
        return 0;
    }

    const mink::Curve curve = unit_speed_curve(spec);
    const mink::Interval range = v_range.empty() ? curve.domain() : parse_range(v_range);
    const std::vector<std::string> names{"t1", "t2", "t3", "s1", "s2", "s3",
                                         "kappa_g", "kappa_g_prime"};
    for (double v : sample_grid(range, samples)) {
        const mink::SabbanFrame fr = mink::sabban_frame(curve, v);
        rows.push_back({v, fr.base,
                        {fr.t.x1, fr.t.x2, fr.t.x3, fr.s.x1, fr.s.x2, fr.s.x3,
                         fr.kappa_g, fr.kappa_g_prime}});
    }
    mink::write_csv(rows, names, sink.stream());
    return 0;
}

int run_evolute(const CurveInput& input, int samples, const std::string& v_range,
                const std::string& out_path) {
    const mink::Curve curve = unit_speed_curve(input.load());
    if (curve.space() == mink::Space::Free)
        throw mink::BadParameter("evolutes need an S12 or H2 curve");
    OutputSink sink(out_path);
    const mink::Interval range = v_range.empty() ? curve.domain() : parse_range(v_range);
    std::vector<mink::CsvRow> rows;
    for (double v : sample_grid(range, samples))
        rows.push_back({v, mink::evolute(curve, v), {}});
    mink::write_csv(rows, {}, sink.stream());
    return 0;
}

int run_bertrand(const CurveInput& input, const std::string& u_text,
                 const std::string& theta_text, const std::string& a_text,
                 const std::string& xi_text, int samples, const std::string& v_range,
                 double quad_tol, const std::string& out_path) {
    const mink::Curve curve = unit_speed_curve(input.load());
    if (curve.space() == mink::Space::Free)
        throw mink::BadParameter("the Bertrand construction needs an S12 or H2 curve");

    mink::BertrandConfig cfg;
    if (!u_text.empty() && !theta_text.empty()) {
        cfg = mink::bertrand_config_from_surface(curve.space(), parse_real(u_text),
                                                 parse_real(theta_text));
    } else if (!a_text.empty() && !xi_text.empty()) {
        cfg.a = parse_real(a_text);
        cfg.xi = parse_real(xi_text);
        cfg.space = curve.space();
    } else {
        throw mink::BadParameter("give either --u and --theta, or --a and --xi");
    }

    OutputSink sink(out_path);
    const mink::Interval range = v_range.empty() ? curve.domain() : parse_range(v_range);
    const std::vector<double> grid = sample_grid(range, samples);
    const std::vector<mink::MinkVec3> points =
        mink::bertrand_polyline(curve, cfg, grid, quad_tol);
    std::vector<mink::CsvRow> rows;
    for (std::size_t i = 0; i < grid.size(); ++i)
        rows.push_back({grid[i], points[i], {}});
    mink::write_csv(rows, {}, sink.stream());
    return 0;
}

int run_surface(const CurveInput& input, const std::string& theta_text,
                const std::string& u_range, const std::string& v_range, int nu, int nv,
                const std::string& out_path) {
    const mink::Curve curve = unit_speed_curve(input.load());
    if (curve.space() == mink::Space::Free)
        throw mink::BadParameter("constant slope surfaces need an S12 or H2 curve");
    mink::SurfaceConfig cfg;
    cfg.theta = parse_real(theta_text);
    cfg.cone = curve.space() == mink::Space::S12 ? mink::Cone::SpaceLike
                                                 : mink::Cone::TimeLike;
    cfg.u_range = parse_range(u_range);
    cfg.v_range = v_range.empty() ? curve.domain() : parse_range(v_range);
    cfg.nu = nu;
    cfg.nv = nv;
    OutputSink sink(out_path);
    mink::write_obj(mink::generate_mesh(curve, cfg), sink.stream());
    return 0;
}

int run_verify(const CurveInput& input, const std::string& suite,
               const std::string& u_text, const std::string& theta_text, int samples,
               double tol, const std::string& out_path) {
    mink::VerificationReport rep;
    if (!suite.empty()) {
        if (suite != "paper")
            throw mink::BadParameter("unknown suite '" + suite + "' (try: paper)");
        rep = mink::paper_suite();
    } else {
        mink::CurveVerifyOptions opts;
        opts.grid = samples;
        opts.tol = tol;
        if (!u_text.empty()) opts.u = parse_real(u_text);
        if (!theta_text.empty()) opts.theta = parse_real(theta_text);
        rep = mink::verify_curve_report(unit_speed_curve(input.load()), opts);
    }
    OutputSink sink(out_path);
    mink::write_report(rep, sink.stream());
    if (out_path.empty() == false) mink::write_report(rep, std::cout);
    return rep.all_passed() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Curves and constant slope surfaces in Minkowski 3-space"};
    app.require_subcommand(1);

    CurveInput frame_input, evolute_input, bertrand_input, surface_input, verify_input;
    std::string frame_v, evolute_v, bertrand_v, surface_u, surface_v, verify_suite;
    std::string bertrand_u, bertrand_theta, bertrand_a, bertrand_xi;
    std::string surface_theta, verify_u, verify_theta;
    std::string frame_out, evolute_out, bertrand_out, surface_out, verify_out;
    int frame_samples = 200, evolute_samples = 200, bertrand_samples = 200;
    int verify_samples = 200;
    int nu = 40, nv = 80;
    double quad_tol = 1e-10, verify_tol = 1e-7;

    CLI::App* frame = app.add_subcommand("frame", "CSV of moving-frame data along a curve");
    frame_input.add_options(frame);
    frame->add_option("--samples", frame_samples, "grid size (default 200)");
    frame->add_option("--v", frame_v, "parameter range lo:hi (default: curve domain)");
    frame->add_option("--out", frame_out, "output file (default stdout)");

    CLI::App* evolute = app.add_subcommand("evolute", "CSV of the spherical evolute");
    evolute_input.add_options(evolute);
    evolute->add_option("--samples", evolute_samples, "grid size (default 200)");
    evolute->add_option("--v", evolute_v, "parameter range lo:hi");
    evolute->add_option("--out", evolute_out, "output file");

    CLI::App* bertrand =
        app.add_subcommand("bertrand", "CSV of the Bertrand curve built by quadrature");
    bertrand_input.add_options(bertrand);
    bertrand->add_option("--u", bertrand_u, "surface parameter u (> 0; accepts e, pi)");
    bertrand->add_option("--theta", bertrand_theta, "slope constant theta (non-zero)");
    bertrand->add_option("--a", bertrand_a, "Bertrand scale a (alternative to --u/--theta)");
    bertrand->add_option("--xi", bertrand_xi, "Bertrand constant xi");
    bertrand->add_option("--samples", bertrand_samples, "grid size (default 200)");
    bertrand->add_option("--v", bertrand_v, "parameter range lo:hi");
    bertrand->add_option("--quad-tol", quad_tol, "quadrature tolerance (default 1e-10)");
    bertrand->add_option("--out", bertrand_out, "output file");

    CLI::App* surface = app.add_subcommand("surface", "OBJ mesh of a constant slope surface");
    surface_input.add_options(surface);
    surface->add_option("--theta", surface_theta, "slope constant theta (non-zero)")
        ->required();
    surface->add_option("--u", surface_u, "u range lo:hi, u > 0")->required();
    surface->add_option("--v", surface_v, "v range lo:hi (default: curve domain)");
    surface->add_option("--nu", nu, "grid rows in u (default 40)");
    surface->add_option("--nv", nv, "grid columns in v (default 80)");
    surface->add_option("--out", surface_out, "output file");

    CLI::App* verify = app.add_subcommand("verify", "run the verification checks");
    verify_input.add_options(verify);
    verify->add_option("--suite", verify_suite, "built-in suite name: paper");
    verify->add_option("--u", verify_u, "surface parameter for the surface checks");
    verify->add_option("--theta", verify_theta, "slope constant for the surface checks");
    verify->add_option("--samples", verify_samples, "grid size (default 200)");
    verify->add_option("--tol", verify_tol, "verification tolerance (default 1e-7)");
    verify->add_option("--out", verify_out, "also write the report to a file");

    try {
        app.parse(argc, argv);
        if (frame->parsed())
            return run_frame(frame_input, frame_samples, frame_v, frame_out);
        if (evolute->parsed())
            return run_evolute(evolute_input, evolute_samples, evolute_v, evolute_out);
        if (bertrand->parsed())
            return run_bertrand(bertrand_input, bertrand_u, bertrand_theta, bertrand_a,
                                bertrand_xi, bertrand_samples, bertrand_v, quad_tol,
                                bertrand_out);
        if (surface->parsed())
            return run_surface(surface_input, surface_theta, surface_u, surface_v, nu,
                               nv, surface_out);
        if (verify->parsed())
            return run_verify(verify_input, verify_suite, verify_u, verify_theta,
                              verify_samples, verify_tol, verify_out);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const mink::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
