// Command-line front end: field inspection, kernel verification, Wigner-grid
// computation and export, distinct-net enumeration, tomography round trips,
// and MUB construction.
//
// Exit codes: 0 success, 1 verification failure, 2 input/config error.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>

#include "gfw/io.hpp"
#include "gfw/random_states.hpp"
#include "gfw/tomography.hpp"

using namespace gfw;
namespace fs = std::filesystem;

namespace {

struct CommonOpts {
    std::string field_path;
    std::string ordering_spec;
    std::string rotations_spec = "canonical";
    std::string state_spec;
    std::string tomogram_path;
    std::string out_dir;
    long long shots = 0;
    std::uint64_t seed = 1;
    bool serial = false;
};

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Errc::ConfigParse, "cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        fail(Errc::ConfigParse, std::string("bad JSON in ") + path + ": " + e.what());
    }
    return j;
}

void write_file(const fs::path& path, const std::string& text) {
    fs::create_directories(path.parent_path().empty() ? "." : path.parent_path());
    std::ofstream out(path, std::ios::binary);
    out << text;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

// The built-in example states: (|0> + |1_field>)/sqrt(2).
bool named_state(const std::string& name, int* p, int* n) {
    if (name == "gf4-paper-state") {
        *p = 2;
        *n = 2;
        return true;
    }
    if (name == "gf8-paper-state") {
        *p = 2;
        *n = 3;
        return true;
    }
    return false;
}

FieldConfig resolve_field(const CommonOpts& opt) {
    FieldConfig cfg;
    if (!opt.field_path.empty()) {
        cfg = field_config_from_json(load_json(opt.field_path));
    } else {
        int p = 0, n = 0;
        if (!named_state(opt.state_spec, &p, &n))
            fail(Errc::ConfigParse, "--field is required unless --state names a built-in");
        cfg.field = make_field(p, n);
        cfg.ordering = make_ordering(*cfg.field, OrderingStrategy::PrimitivePower);
    }
    if (!opt.ordering_spec.empty()) {
        auto parts = split(opt.ordering_spec, ':');
        json j;
        j["strategy"] = parts[0];
        if (parts.size() > 1) {
            json basis = json::array();
            for (const auto& e : split(parts[1], ',')) basis.push_back(e);
            j["basis"] = basis;
        }
        cfg.ordering = ordering_from_json(*cfg.field, j);
    }
    return cfg;
}

RotationSet resolve_rotations(const FieldSpec& spec, const std::string& rspec) {
    json j;
    if (rspec == "canonical" || rspec.rfind("canonical:", 0) == 0) {
        j["kind"] = "canonical";
        if (rspec.size() > 10) {
            json basis = json::array();
            for (const auto& e : split(rspec.substr(10), ',')) basis.push_back(e);
            j["basis"] = basis;
        }
    } else if (rspec.rfind("h:", 0) == 0) {
        json body = load_json(rspec.substr(2));
        if (body.is_array())
            j = json{{"kind", "shifted"}, {"h", body}};
        else {
            j = body;
            j["kind"] = "shifted";
        }
    } else if (rspec.rfind("signs:", 0) == 0) {
        json body = load_json(rspec.substr(6));
        if (body.contains("signs"))
            j = body;
        else
            j["signs"] = body;
        j["kind"] = "shifted";
    } else {
        j = load_json(rspec);
    }
    return rotation_from_json(spec, j);
}

StateVector resolve_state(const FieldSpec& spec, const Ordering& ord, const std::string& sspec) {
    int p = 0, n = 0;
    if (named_state(sspec, &p, &n)) {
        if (p != spec.p || n != spec.n)
            fail(Errc::StateParse, sspec + " lives in GF(" + std::to_string(p) + "^" +
                                       std::to_string(n) + ")");
        Eigen::VectorXcd v = Eigen::VectorXcd::Zero(spec.d);
        v(ord.index_of[0]) = 1.0;
        v(ord.index_of[1]) = 1.0;
        return normalized(StateVector{v, ord});
    }
    if (sspec.empty()) fail(Errc::StateParse, "--state is required");
    return normalized(state_from_json(spec, ord, load_json(sspec)));
}

int cmd_field_info(const CommonOpts& opt) {
    FieldConfig cfg = resolve_field(opt);
    const FieldSpec& spec = *cfg.field;
    std::cout << "GF(" << spec.p << "^" << spec.n << "), d = " << spec.d << "\n";
    std::cout << "modulus coefficients (constant first):";
    for (int c : spec.poly) std::cout << " " << c;
    std::cout << "\nprimitive element: " << spec.to_string(spec.generator()) << "\n";
    std::cout << "trace table:\n";
    for (int id = 0; id < spec.d; ++id)
        std::cout << "  tr(" << spec.to_string(spec.element(id))
                  << ") = " << spec.trace_id(id) << "\n";
    std::cout << "ordering (" << strategy_name(cfg.ordering.strategy) << "):\n";
    for (int i = 0; i < spec.d; ++i)
        std::cout << "  " << i << " <- "
                  << spec.to_string(spec.element(cfg.ordering.element_at[i])) << "\n";
    if (!opt.out_dir.empty())
        write_file(fs::path(opt.out_dir) / "field_info.json",
                   field_config_to_json(spec, cfg.ordering).dump(2) + "\n");
    return 0;
}

int cmd_kernel_check(const CommonOpts& opt) {
    FieldConfig cfg = resolve_field(opt);
    const FieldSpec& spec = *cfg.field;
    RotationSet rot = resolve_rotations(spec, opt.rotations_spec);
    KernelSet ker = build_kernel(rot, cfg.ordering, !opt.serial);
    const int d = spec.d;

    double herm = 0.0, orth = 0.0;
    Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(d, d);
    for (int i = 0; i < d * d; ++i) {
        herm = std::max(herm, max_abs(ker.delta[i].mat - ker.delta[i].mat.adjoint()));
        sum += ker.delta[i].mat;
        for (int j = 0; j < d * d; ++j) {
            Cx tr = trace_product(ker.delta[i], adjoint(ker.delta[j]));
            orth = std::max(orth, std::abs(tr - Cx(i == j ? d : 0.0, 0.0)));
        }
    }
    double norm = max_abs(sum / d - Eigen::MatrixXcd::Identity(d, d));

    double cov = 0.0;
    auto check_tuple = [&](int k, int l, int a, int b) {
        OperatorMatrix dis =
            build_displacement(rot, spec.element(k), spec.element(l), cfg.ordering);
        Eigen::MatrixXcd moved =
            dis.mat * ker.at(cfg.ordering.index_of[a], cfg.ordering.index_of[b]).mat *
            dis.mat.adjoint();
        int a2 = spec.add_id(a, k), b2 = spec.add_id(b, l);
        cov = std::max(cov, max_abs(moved - ker.at(cfg.ordering.index_of[a2],
                                                   cfg.ordering.index_of[b2])
                                                .mat));
    };
    if (d <= 4) {
        for (int k = 0; k < d; ++k)
            for (int l = 0; l < d; ++l)
                for (int a = 0; a < d; ++a)
                    for (int b = 0; b < d; ++b) check_tuple(k, l, a, b);
    } else {
        std::mt19937_64 gen(opt.seed);
        for (int t = 0; t < 200; ++t)
            check_tuple(static_cast<int>(gen() % d), static_cast<int>(gen() % d),
                        static_cast<int>(gen() % d), static_cast<int>(gen() % d));
    }
    double overlap = verified_overlap_constant(ker, opt.seed);

    const double tol = 1e-9;
    bool pass = herm < tol && norm < tol && cov < tol && orth < tol;
    json rep{{"d", d},
             {"hermiticity", herm},
             {"normalization", norm},
             {"covariance", cov},
             {"orthogonality", orth},
             {"overlap_constant", overlap},
             {"tolerance", tol},
             {"pass", pass}};
    std::cout << rep.dump(2) << "\n";
    if (!opt.out_dir.empty())
        write_file(fs::path(opt.out_dir) / "kernel_report.json", rep.dump(2) + "\n");
    return pass ? 0 : 1;
}

int cmd_wigner(const CommonOpts& opt) {
    FieldConfig cfg = resolve_field(opt);
    const FieldSpec& spec = *cfg.field;
    RotationSet rot = resolve_rotations(spec, opt.rotations_spec);
    StateVector psi = resolve_state(spec, cfg.ordering, opt.state_spec);
    DensityMatrix rho = density_from_state(psi);
    KernelSet ker = build_kernel(rot, cfg.ordering, !opt.serial);
    WignerGrid w = wigner_map(rho, ker);

    fs::path out = opt.out_dir.empty() ? fs::path(".") : fs::path(opt.out_dir);
    write_file(out / "wigner.csv", grid_to_csv(w, spec));
    write_file(out / "wigner.json", grid_to_json(w, spec).dump(2) + "\n");

    // Marginals: raw sums and the /d probabilities.
    Eigen::VectorXd pa = marginal_alpha(w), pb = marginal_beta(w);
    std::string m = "axis,label,sum,prob\n";
    for (int i = 0; i < spec.d; ++i)
        m += "alpha," + spec.to_string(spec.element(cfg.ordering.element_at[i])) + "," +
             format_double(pa(i)) + "," + format_double(pa(i) / spec.d) + "\n";
    for (int i = 0; i < spec.d; ++i)
        m += "beta," + spec.to_string(spec.element(cfg.ordering.element_at[i])) + "," +
             format_double(pb(i)) + "," + format_double(pb(i) / spec.d) + "\n";
    write_file(out / "marginals.csv", m);

    std::string ls = "slope,intercept,line_sum\n";
    for (const auto& s : striation_table(spec))
        for (const auto& line : s.lines)
            ls += (s.vertical ? std::string("inf") : spec.to_string(s.slope)) + "," +
                  spec.to_string(line.intercept) + "," + format_double(line_sum(w, line)) + "\n";
    write_file(out / "line_sums.csv", ls);

    std::cout << "wrote wigner.csv, wigner.json, marginals.csv, line_sums.csv to " << out
              << " (max imaginary part " << w.max_imag << ")\n";
    return 0;
}

int cmd_enumerate(const CommonOpts& opt) {
    FieldConfig cfg = resolve_field(opt);
    const FieldSpec& spec = *cfg.field;
    RotationSet rot = resolve_rotations(spec, opt.rotations_spec);
    StateVector psi = resolve_state(spec, cfg.ordering, opt.state_spec);
    DistinctWignerReport rep = count_distinct_wigner(psi, rot, !opt.serial);

    long long covered = 0;
    for (long long s : rep.class_sizes) covered += s;
    json j = distinct_report_to_json(rep, spec);
    std::cout << j.dump(2) << "\n";
    if (!opt.out_dir.empty())
        write_file(fs::path(opt.out_dir) / "distinct_report.json", j.dump(2) + "\n");
    if (covered != rep.total) {
        std::cerr << "class sizes do not cover the enumeration\n";
        return 1;
    }
    if (rep.condition_count && *rep.condition_count != rep.distinct) {
        std::cerr << "condition-based count disagrees with the brute force\n";
        return 1;
    }
    return 0;
}

int cmd_tomography(const CommonOpts& opt) {
    FieldConfig cfg = resolve_field(opt);
    const FieldSpec& spec = *cfg.field;
    RotationSet rot = resolve_rotations(spec, opt.rotations_spec);
    MubFamily mubs = build_mubs(rot, cfg.ordering);

    if (!opt.tomogram_path.empty()) {
        Tomogram t = tomogram_from_json(spec, load_json(opt.tomogram_path));
        validate_tomogram(t, 1e-6);
        auto rec = reconstruct(t, rot, cfg.ordering);
        json rep{{"mode", "file"},
                 {"asymmetry", rec.asymmetry},
                 {"zero_coeff_spread", rec.zero_coeff_spread},
                 {"physical", is_physical(rec.rho, 1e-6)}};
        std::cout << rep.dump(2) << "\n";
        if (!opt.out_dir.empty())
            write_file(fs::path(opt.out_dir) / "tomography_report.json", rep.dump(2) + "\n");
        return 0;
    }

    StateVector psi = resolve_state(spec, cfg.ordering, opt.state_spec);
    DensityMatrix rho = density_from_state(psi);

    if (opt.shots <= 0) {
        Tomogram t = tomogram_of(rho, mubs);
        auto rec = reconstruct(t, rot, cfg.ordering);
        double err = max_abs(rec.rho.mat - rho.mat);
        json rep{{"mode", "exact"},
                 {"round_trip_error", err},
                 {"asymmetry", rec.asymmetry},
                 {"zero_coeff_spread", rec.zero_coeff_spread},
                 {"pass", err < 1e-9}};
        std::cout << rep.dump(2) << "\n";
        if (!opt.out_dir.empty()) {
            write_file(fs::path(opt.out_dir) / "tomogram.json",
                       tomogram_to_json(t).dump(2) + "\n");
            write_file(fs::path(opt.out_dir) / "tomography_report.json", rep.dump(2) + "\n");
        }
        return err < 1e-9 ? 0 : 1;
    }

    json table = json::array();
    for (long long s = 100; s <= opt.shots; s *= 10) {
        Tomogram t = simulate_counts(rho, mubs, s, opt.seed);
        auto rec = reconstruct(t, rot, cfg.ordering);
        DensityMatrix proj = nearest_psd(rec.rho);
        table.push_back(json{{"shots", s}, {"fidelity", fidelity(proj, rho)}});
    }
    json rep{{"mode", "shots"}, {"seed", opt.seed}, {"table", table}};
    std::cout << rep.dump(2) << "\n";
    if (!opt.out_dir.empty())
        write_file(fs::path(opt.out_dir) / "tomography_report.json", rep.dump(2) + "\n");
    return 0;
}

int cmd_mub(const CommonOpts& opt) {
    FieldConfig cfg = resolve_field(opt);
    const FieldSpec& spec = *cfg.field;
    RotationSet rot = resolve_rotations(spec, opt.rotations_spec);
    MubFamily mubs = build_mubs(rot, cfg.ordering);
    const int d = spec.d;

    auto collect = [&](int mu) {
        std::vector<const StateVector*> basis;
        if (mu < d)
            for (int nu = 0; nu < d; ++nu) basis.push_back(&mubs.sloped[mu][nu]);
        else
            for (int nu = 0; nu < d; ++nu) basis.push_back(&mubs.vertical[nu]);
        return basis;
    };
    double ortho = 0.0, unbias = 0.0;
    for (int m1 = 0; m1 <= d; ++m1)
        for (int m2 = m1; m2 <= d; ++m2) {
            auto b1 = collect(m1), b2 = collect(m2);
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) {
                    double ov = std::norm(Cx(b1[i]->amps.adjoint() * b2[j]->amps));
                    if (m1 == m2)
                        ortho = std::max(ortho, std::abs(ov - (i == j ? 1.0 : 0.0)));
                    else
                        unbias = std::max(unbias, std::abs(ov - 1.0 / d));
                }
        }
    bool pass = ortho < 1e-9 && unbias < 1e-9;
    json rep{{"bases", d + 1},
             {"orthonormality_deviation", ortho},
             {"unbiasedness_deviation", unbias},
             {"pass", pass}};
    std::cout << rep.dump(2) << "\n";
    if (!opt.out_dir.empty()) {
        json states = json::object();
        for (int mu = 0; mu < d; ++mu) {
            json arr = json::array();
            for (int nu = 0; nu < d; ++nu) arr.push_back(state_to_json(mubs.sloped[mu][nu], spec));
            states[spec.to_string(spec.element(mu))] = arr;
        }
        json arr = json::array();
        for (int nu = 0; nu < d; ++nu) arr.push_back(state_to_json(mubs.vertical[nu], spec));
        states["inf"] = arr;
        write_file(fs::path(opt.out_dir) / "mub_states.json", states.dump(2) + "\n");
        write_file(fs::path(opt.out_dir) / "mub_report.json", rep.dump(2) + "\n");
    }
    return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Discrete Wigner functions over GF(p^n)"};
    app.require_subcommand(1);
    CommonOpts opt;

    auto add_common = [&](CLI::App* sub, bool with_state) {
        sub->add_option("--field", opt.field_path, "field spec JSON");
        sub->add_option("--ordering", opt.ordering_spec, "strategy[:basis elems]");
        sub->add_option("--rotations", opt.rotations_spec,
                        "canonical[:basis] | signs:<path> | h:<path> | <path>");
        sub->add_option("--out", opt.out_dir, "output directory");
        sub->add_option("--seed", opt.seed, "seed for randomized checks/sampling");
        if (with_state) sub->add_option("--state", opt.state_spec, "state JSON path or name");
    };

    auto* info = app.add_subcommand("field-info", "print field data and the chosen ordering");
    add_common(info, false);
    auto* kc = app.add_subcommand("kernel-check", "verify the kernel postulates");
    add_common(kc, false);
    kc->add_flag("--serial", opt.serial, "use the serial reference path");
    auto* wg = app.add_subcommand("wigner", "compute and export a Wigner grid");
    add_common(wg, true);
    wg->add_flag("--serial", opt.serial, "use the serial reference path");
    auto* en = app.add_subcommand("enumerate", "count distinct Wigner grids over all nets");
    add_common(en, true);
    en->add_flag("--serial", opt.serial, "use the serial reference path");
    auto* tg = app.add_subcommand("tomography", "tomogram round trips and shot studies");
    add_common(tg, true);
    tg->add_option("--shots", opt.shots, "sample counts instead of exact probabilities");
    tg->add_option("--tomogram", opt.tomogram_path, "reconstruct from a tomogram JSON");
    auto* mb = app.add_subcommand("mub", "build and verify the MUB family");
    add_common(mb, false);

    CLI11_PARSE(app, argc, argv);
    try {
        if (info->parsed()) return cmd_field_info(opt);
        if (kc->parsed()) return cmd_kernel_check(opt);
        if (wg->parsed()) return cmd_wigner(opt);
        if (en->parsed()) return cmd_enumerate(opt);
        if (tg->parsed()) return cmd_tomography(opt);
        if (mb->parsed()) return cmd_mub(opt);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
