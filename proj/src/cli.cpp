#include "ellgas/cli.hpp"

#include <fmt/format.h>

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <json.hpp>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "ellgas/asymptotics.hpp"
#include "ellgas/csv.hpp"
#include "ellgas/dpp_sampler.hpp"
#include "ellgas/errors.hpp"
#include "ellgas/quadrature.hpp"
#include "ellgas/radial_sym.hpp"
#include "ellgas/weights_kernels.hpp"

namespace ellgas {

namespace {

using json = nlohmann::json;
constexpr double kPi = std::numbers::pi;

struct NonFinite : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Globals {
    std::string out = "-";
    double tol = 1e-8;
    std::uint64_t seed = 0;
    int threads = 1;
};

struct OrthoArgs {
    std::string model = "I";
    int nmax = 8;
    double R = 1.5;
    double v = 2.5;
    double threshold = -1.0;
};

struct Figure1Args {
    std::vector<double> v{1.1, 1.2, 1.5, 2.0};
    int grid = 721;
};

struct Figure2Args {
    double tau = 1.0;
    double phi_max = 200.0;
    int phi_count = 4001;
};

struct ConvergenceArgs {
    std::string regime = "edge";
    std::string model = "I";
    std::vector<int> N{100, 200, 400};
    double v = 2.0;
    double u = 1.0;
    double psi = 0.7;
    std::string side = "right";
    double T = -1.0;
    double t1 = -1.0;
    double t2 = -1.0;
    double phi1 = std::nan("");
    double phi2 = std::nan("");
    bool require_decreasing = false;
};

struct KernelArgs {
    std::string model = "I";
    int N = 8;
    double R = 1.5;
    double v = 2.5;
    std::vector<double> z1{1.0, 1.0};
    std::vector<double> z2{1.0, 1.0};
};

struct SampleArgs {
    std::string model = "I";
    int N = 8;
    double R = 1.5;
    double v = 2.5;
    int count = 1;
    int envelope_grid = 128;
    double safety = 1.5;
    long max_rejects = 1000000;
};

struct BesselArgs {
    std::vector<double> a{-0.5, 0.5};
    int grid = 20;
    double phi_min = 0.1;
    double phi_max = 20.0;
};

struct TraceArgs {
    std::vector<std::string> models{"I", "II", "III", "IV"};
    std::vector<int> N{1, 4, 16};
    double R = 1.5;
    double v = 2.5;
};

double finite(double x, const char* what) {
    if (!std::isfinite(x)) throw NonFinite(fmt::format("non-finite value in {}", what));
    return x;
}

std::string joined_args(const std::vector<std::string>& args) {
    std::string s;
    for (const auto& a : args) {
        if (!s.empty()) s += ' ';
        s += a;
    }
    return s;
}

CsvDocument new_csv(const std::string& command, const std::vector<std::string>& args) {
    CsvDocument doc;
    doc.add_meta("command", command);
    doc.add_meta("version", kVersion);
    doc.add_meta("params", joined_args(args));
    return doc;
}

void emit(const Globals& g, const std::string& content, std::ostream& out) {
    if (g.out == "-") {
        out << content << std::flush;
    } else {
        write_file_atomic(g.out, content);
    }
}

int verify_orthogonality(const OrthoArgs& a, const Globals& g, std::ostream& out) {
    const ModelKind model = parse_model(a.model);
    const AnnulusSpec spec(a.R, a.v);
    const double threshold = a.threshold > 0.0 ? a.threshold : g.tol;
    const OrthoReport rep = orthogonality_matrix(model, a.nmax, spec, default_quadrature(a.nmax));

    const double offdiag_rel = rep.max_offdiag / rep.max_reference;
    const bool passed = offdiag_rel <= threshold && rep.max_diag_relerr <= threshold;
    json j;
    j["command"] = "verify-orthogonality";
    j["version"] = kVersion;
    j["model"] = std::string(to_string(model));
    j["nmax"] = a.nmax;
    j["R"] = a.R;
    j["v"] = a.v;
    j["max_offdiag"] = finite(rep.max_offdiag, "max_offdiag");
    j["max_offdiag_relative"] = finite(offdiag_rel, "max_offdiag_relative");
    j["max_diag_relerr"] = finite(rep.max_diag_relerr, "max_diag_relerr");
    j["threshold"] = threshold;
    j["passed"] = passed;
    json table = json::array();
    for (int n = 0; n <= a.nmax; ++n) {
        const auto i = static_cast<std::size_t>(n);
        const double h = rep.gram[i][i];
        table.push_back({{"n", n},
                         {"h_quadrature", finite(h, "gram")},
                         {"h_closed_form", finite(rep.reference[i], "h_n")},
                         {"relerr", finite(std::abs(h - rep.reference[i]) / rep.reference[i], "relerr")}});
    }
    j["table"] = table;
    json gram = json::array();
    for (const auto& row : rep.gram) {
        json r = json::array();
        for (double x : row) r.push_back(finite(x, "gram"));
        gram.push_back(r);
    }
    j["gram"] = gram;
    emit(g, j.dump(2) + "\n", out);
    return passed ? kExitOk : kExitThreshold;
}

int figure1(const Figure1Args& a, const Globals& g, const std::vector<std::string>& args, std::ostream& out) {
    if (a.grid < 3) throw DomainError("figure1: grid must be >= 3");
    for (double v : a.v) {
        if (!(v > 1.0)) throw DomainError("figure1: every v must exceed 1");
    }
    CsvDocument doc = new_csv("figure1", args);
    doc.header.push_back("psi");
    for (double v : a.v) doc.header.push_back("sigma_v" + format_real(v));
    std::vector<double> norm(a.v.size(), 0.0);
    const double step = 2.0 * kPi / (a.grid - 1);
    for (int k = 0; k < a.grid; ++k) {
        const double psi = k == a.grid - 1 ? 2.0 * kPi : step * k;
        std::vector<std::string> row{format_real(psi)};
        const double w = (k == 0 || k == a.grid - 1) ? 0.5 * step : step;
        for (std::size_t i = 0; i < a.v.size(); ++i) {
            const double s = finite(sigma_density(a.v[i], psi), "sigma");
            norm[i] += w * s;
            row.push_back(format_real(s));
        }
        doc.add_row(std::move(row));
    }
    std::vector<std::string> last{"norm"};
    for (double n : norm) last.push_back(format_real(n));
    doc.add_row(std::move(last));
    emit(g, write_csv(doc), out);
    return kExitOk;
}

int figure2(const Figure2Args& a, const Globals& g, const std::vector<std::string>& args, std::ostream& out) {
    if (!(a.tau > 0.0)) throw DomainError("figure2: tau must be positive");
    if (!(a.phi_max > 0.0)) throw DomainError("figure2: phi-max must be positive");
    if (a.phi_count < 3 || a.phi_count % 2 == 0) throw DomainError("figure2: phi-count must be odd and >= 3");
    CsvDocument doc = new_csv("figure2", args);
    doc.header = {"varphi", "lambda"};
    const int m = a.phi_count - 1;
    for (int k = 0; k < a.phi_count; ++k) {
        const double phi = a.phi_max * (2 * k - m) / m;
        doc.add_row({format_real(phi), format_real(finite(lambda_corr(a.tau, phi), "lambda"))});
    }
    emit(g, write_csv(doc), out);
    return kExitOk;
}

int convergence(ConvergenceArgs a, const Globals& g, const std::vector<std::string>& args, std::ostream& out) {
    const ModelKind model = parse_model(a.model);
    if (a.N.empty()) throw DomainError("convergence: empty N list");
    for (std::size_t i = 0; i < a.N.size(); ++i) {
        if (a.N[i] < 1 || (i > 0 && a.N[i] <= a.N[i - 1])) throw DomainError("convergence: N list must ascend");
    }
    const bool edge = a.regime == "edge";
    if (!edge && a.regime != "bulk" && a.regime != "interval-edge") {
        throw DomainError("convergence: regime must be edge, bulk or interval-edge");
    }
    auto fill = [](double& x, double value) {
        if (x < 0.0 || std::isnan(x)) x = value;
    };
    fill(a.T, edge ? 3.0 : 0.2);
    fill(a.t1, edge ? 1.0 : 0.5);
    fill(a.t2, edge ? 1.4 : 0.7);
    fill(a.phi1, edge ? 0.3 : 0.4);
    fill(a.phi2, edge ? -0.2 : -0.3);

    EdgeScaling es{a.v, a.psi, a.T, a.t1, a.t2, a.phi1, a.phi2};
    IntervalScaling is{a.u, a.T, 0.0, {a.t1, a.phi1}, {a.t2, a.phi2}};
    if (edge) {
        es.validate();
    } else {
        if (a.regime == "bulk") {
            is.psi = 0.5 * kPi;
        } else if (a.side == "right" || a.side == "left") {
            is.psi = a.side == "left" ? kPi : 0.0;
        } else {
            throw DomainError("convergence: side must be right or left");
        }
        is.validate();
    }

    CsvDocument doc = new_csv("convergence", args);
    doc.add_meta("regime", a.regime);
    doc.add_meta("model", to_string(model));
    if (a.regime == "interval-edge") {
        doc.add_meta("parity", interval_edge_parity(model, is.psi) == Parity::Plus ? "plus" : "minus");
    }
    doc.header = {"N", "finite_value_re", "finite_value_im", "limit_value_re", "limit_value_im", "rel_error"};
    std::vector<double> errors;
    for (int N : a.N) {
        cplx finite_value;
        cplx limit;
        try {
            const ScaledPair p = edge ? edge_scaled_points(es, N) : interval_scaled_points(is, N);
            finite_value = kernel_elliptic(model, N, p.w1, p.w2, p.spec);
        } catch (const DomainError& e) {
            throw ToleranceNotMet(fmt::format("convergence: N={} {}", N, e.what()));
        }
        limit = edge ? edge_kernel_universal(es, N) : interval_limit(model, is, N);
        const double rel = finite(std::abs(finite_value - limit) / std::abs(limit), "rel_error");
        errors.push_back(rel);
        doc.add_row({std::to_string(N), format_real(finite(finite_value.real(), "finite")),
                     format_real(finite(finite_value.imag(), "finite")), format_real(finite(limit.real(), "limit")),
                     format_real(finite(limit.imag(), "limit")), format_real(rel)});
    }
    emit(g, write_csv(doc), out);
    if (a.require_decreasing) {
        for (std::size_t i = 1; i < errors.size(); ++i) {
            if (!(errors[i] < errors[i - 1])) return kExitThreshold;
        }
    }
    return kExitOk;
}

int kernel_eval(const KernelArgs& a, const Globals& g, std::ostream& out) {
    const ModelKind model = parse_model(a.model);
    const AnnulusSpec spec(a.R, a.v);
    if (a.z1.size() != 2 || a.z2.size() != 2) throw DomainError("kernel-eval: points take two coordinates");
    const ComplexPoint z1{a.z1[0], a.z1[1]};
    const ComplexPoint z2{a.z2[0], a.z2[1]};
    if (!contains(spec, z1) || !contains(spec, z2)) throw DomainError("kernel-eval: point outside the annulus");
    const cplx k = kernel_elliptic(model, a.N, z1, z2, spec);
    json j;
    j["command"] = "kernel-eval";
    j["version"] = kVersion;
    j["model"] = std::string(to_string(model));
    j["N"] = a.N;
    j["R"] = a.R;
    j["v"] = a.v;
    j["z1"] = {z1.x, z1.y};
    j["z2"] = {z2.x, z2.y};
    j["re"] = finite(k.real(), "kernel");
    j["im"] = finite(k.imag(), "kernel");
    emit(g, j.dump(2) + "\n", out);
    return kExitOk;
}

int run_sample(const SampleArgs& a, const Globals& g, const std::vector<std::string>& args, std::ostream& out) {
    if (a.count < 1) throw DomainError("sample: count must be >= 1");
    SampleConfig cfg;
    cfg.model = parse_model(a.model);
    cfg.N = a.N;
    cfg.spec = AnnulusSpec(a.R, a.v);
    cfg.seed = g.seed;
    cfg.envelope_grid = a.envelope_grid;
    cfg.envelope_safety = a.safety;
    cfg.max_rejects = a.max_rejects;
    cfg.validate();
    const auto samples = sample_many(cfg, a.count);
    CsvDocument doc = new_csv("sample", args);
    doc.header = {"sample_index", "point_index", "x", "y"};
    for (std::size_t s = 0; s < samples.size(); ++s) {
        for (std::size_t p = 0; p < samples[s].size(); ++p) {
            doc.add_row({std::to_string(s), std::to_string(p), format_real(samples[s][p].x),
                         format_real(samples[s][p].y)});
        }
    }
    emit(g, write_csv(doc), out);
    return kExitOk;
}

int bessel_check(const BesselArgs& a, const Globals& g, const std::vector<std::string>& args, std::ostream& out) {
    if (a.grid < 2) throw DomainError("bessel-check: grid must be >= 2");
    if (!(a.phi_min > 0.0) || !(a.phi_max > a.phi_min)) throw DomainError("bessel-check: need 0 < phi-min < phi-max");
    CsvDocument doc = new_csv("bessel-check", args);
    doc.header = {"a", "phi1", "phi2", "bessel", "closed_form", "rel_error"};
    double worst = 0.0;
    for (double order : a.a) {
        Parity parity;
        if (order == -0.5) {
            parity = Parity::Plus;
        } else if (order == 0.5) {
            parity = Parity::Minus;
        } else {
            throw DomainError("bessel-check: closed forms exist for a = -0.5 and a = 0.5 only");
        }
        for (int i = 0; i < a.grid; ++i) {
            const double p1 = a.phi_min + (a.phi_max - a.phi_min) * i / (a.grid - 1);
            for (int k = 0; k < a.grid; ++k) {
                const double p2 = a.phi_min + (a.phi_max - a.phi_min) * k / (a.grid - 1);
                const double b = bessel_kernel(order, p1, p2, 1);
                const double c = kernel_r(parity, p1, p2, 1);
                const double rel = finite(std::abs(b - c) / std::abs(c), "rel_error");
                worst = std::max(worst, rel);
                doc.add_row({format_real(order), format_real(p1), format_real(p2), format_real(finite(b, "bessel")),
                             format_real(c), format_real(rel)});
            }
        }
    }
    doc.add_meta("max_rel_error", format_real(worst));
    emit(g, write_csv(doc), out);
    return worst <= g.tol ? kExitOk : kExitThreshold;
}

int trace_check(const TraceArgs& a, const Globals& g, const std::vector<std::string>& args, std::ostream& out) {
    const AnnulusSpec spec(a.R, a.v);
    CsvDocument doc = new_csv("trace-check", args);
    doc.header = {"model", "N", "trace", "rel_error"};
    bool ok = true;
    for (const auto& name : a.models) {
        const ModelKind model = parse_model(name);
        for (int N : a.N) {
            const double t = finite(kernel_trace(model, N, spec, default_quadrature(N)), "trace");
            const double rel = std::abs(t - N) / N;
            ok = ok && rel <= g.tol;
            doc.add_row({std::string(to_string(model)), std::to_string(N), format_real(t), format_real(rel)});
        }
    }
    emit(g, write_csv(doc), out);
    return ok ? kExitOk : kExitThreshold;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Coulomb gases on an elliptic annulus: kernels, quadrature, asymptotics, sampling", "ellgas"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    Globals g;
    app.add_option("--out", g.out, "output path, - for stdout");
    app.add_option("--tol", g.tol, "acceptance threshold")->check(CLI::PositiveNumber);
    app.add_option("--seed", g.seed, "random seed");
    app.add_option("--threads", g.threads, "worker threads")->check(CLI::PositiveNumber);

    OrthoArgs ortho;
    auto* c_ortho = app.add_subcommand("verify-orthogonality", "Gram matrix of the monic polynomials vs closed-form h_n");
    c_ortho->fallthrough();
    c_ortho->add_option("--model", ortho.model);
    c_ortho->add_option("--nmax", ortho.nmax)->check(CLI::NonNegativeNumber);
    c_ortho->add_option("--R", ortho.R);
    c_ortho->add_option("--v", ortho.v);
    c_ortho->add_option("--threshold", ortho.threshold, "defaults to --tol");

    Figure1Args f1;
    auto* c_f1 = app.add_subcommand("figure1", "normalized edge density sigma(psi)");
    c_f1->fallthrough();
    c_f1->add_option("--v", f1.v)->delimiter(',');
    c_f1->add_option("--grid", f1.grid);

    Figure2Args f2;
    auto* c_f2 = app.add_subcommand("figure2", "two-point correlation lambda(varphi)");
    c_f2->fallthrough();
    c_f2->add_option("--tau", f2.tau);
    c_f2->add_option("--phi-max", f2.phi_max);
    c_f2->add_option("--phi-count", f2.phi_count);

    ConvergenceArgs conv;
    auto* c_conv = app.add_subcommand("convergence", "finite-N scaled kernel against its N -> infinity limit");
    c_conv->fallthrough();
    c_conv->add_option("--regime", conv.regime)->check(CLI::IsMember({"edge", "bulk", "interval-edge"}));
    c_conv->add_option("--model", conv.model);
    c_conv->add_option("--N", conv.N)->delimiter(',');
    c_conv->add_option("--v", conv.v, "edge regime outer radius");
    c_conv->add_option("--u", conv.u, "interval regime width");
    c_conv->add_option("--psi", conv.psi, "edge regime reference angle");
    c_conv->add_option("--side", conv.side, "interval-edge: right (psi = 0) or left (psi = pi)");
    c_conv->add_option("--T", conv.T);
    c_conv->add_option("--t1", conv.t1);
    c_conv->add_option("--t2", conv.t2);
    c_conv->add_option("--phi1", conv.phi1);
    c_conv->add_option("--phi2", conv.phi2);
    c_conv->add_flag("--require-decreasing", conv.require_decreasing);

    KernelArgs ker;
    auto* c_ker = app.add_subcommand("kernel-eval", "single kernel value K_N(z1, z2)");
    c_ker->fallthrough();
    c_ker->add_option("--model", ker.model);
    c_ker->add_option("--N", ker.N);
    c_ker->add_option("--R", ker.R);
    c_ker->add_option("--v", ker.v);
    c_ker->add_option("--z1", ker.z1, "x y")->expected(2);
    c_ker->add_option("--z2", ker.z2, "x y")->expected(2);

    SampleArgs smp;
    auto* c_smp = app.add_subcommand("sample", "exact samples of the N-point process");
    c_smp->fallthrough();
    c_smp->add_option("--model", smp.model);
    c_smp->add_option("--N", smp.N);
    c_smp->add_option("--R", smp.R);
    c_smp->add_option("--v", smp.v);
    c_smp->add_option("--count", smp.count);
    c_smp->add_option("--envelope-grid", smp.envelope_grid);
    c_smp->add_option("--safety", smp.safety);
    c_smp->add_option("--max-rejects", smp.max_rejects);

    BesselArgs bes;
    auto* c_bes = app.add_subcommand("bessel-check", "Bessel kernel against its closed forms at a = -1/2, 1/2");
    c_bes->fallthrough();
    c_bes->add_option("--a", bes.a)->delimiter(',');
    c_bes->add_option("--grid", bes.grid);
    c_bes->add_option("--phi-min", bes.phi_min);
    c_bes->add_option("--phi-max", bes.phi_max);

    TraceArgs tr;
    auto* c_tr = app.add_subcommand("trace-check", "integral of K_N(z, z) over the annulus");
    c_tr->fallthrough();
    c_tr->add_option("--model", tr.models)->delimiter(',');
    c_tr->add_option("--N", tr.N)->delimiter(',');
    c_tr->add_option("--R", tr.R);
    c_tr->add_option("--v", tr.v);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (c_ortho->parsed()) return verify_orthogonality(ortho, g, out);
        if (c_f1->parsed()) return figure1(f1, g, args, out);
        if (c_f2->parsed()) return figure2(f2, g, args, out);
        if (c_conv->parsed()) return convergence(conv, g, args, out);
        if (c_ker->parsed()) return kernel_eval(ker, g, out);
        if (c_smp->parsed()) return run_sample(smp, g, args, out);
        if (c_bes->parsed()) return bessel_check(bes, g, args, out);
        if (c_tr->parsed()) return trace_check(tr, g, args, out);
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ToleranceNotMet& e) {
        err << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const NonFinite& e) {
        err << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const EnvelopeExceeded& e) {
        err << "sampler failure: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const RejectBudgetExhausted& e) {
        err << "sampler failure: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace ellgas
