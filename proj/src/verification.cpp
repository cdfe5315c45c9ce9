#include "ncps/verification.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <future>
#include <limits>
#include <random>
#include <sstream>
#include <thread>

#include "ncps/closed_form.hpp"
#include "ncps/dirac.hpp"
#include "ncps/errors.hpp"
#include "ncps/gamma.hpp"
#include "ncps/sector_norm.hpp"
#include "ncps/sup_solver.hpp"
#include "ncps/zeta.hpp"

namespace ncps {

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(8);
    os << v;
    return os.str();
}

std::string fmt_sci(double v) {
    std::ostringstream os;
    os.setf(std::ios::scientific);
    os.precision(2);
    os << v;
    return os.str();
}

void fail_case(CheckResult& r, const std::string& line) {
    ++r.violations;
    if (r.details.size() < 12) {
        r.details.push_back(line);
    } else if (r.details.size() == 12) {
        r.details.push_back("...");
    }
}

// Guards a check body so configuration errors (tiny cutoffs etc.) surface as
// named failures instead of aborting the whole suite.
template <typename Fn>
CheckResult guarded(const std::string& name, double threshold, Fn&& body) {
    CheckResult r;
    r.name = name;
    r.threshold = threshold;
    try {
        body(r);
    } catch (const Error& err) {
        r.measured = std::numeric_limits<double>::infinity();
        fail_case(r, std::string("aborted: ") + err.what());
    }
    r.passed = r.violations == 0 && r.measured <= threshold;
    return r;
}

CheckResult check_closed_forms(const VerifyConfig& cfg) {
    return guarded("closed-form reproduction (theta=0)", 1e-12, [&](CheckResult& r) {
        const PhaseSpaceParams p = make_params(cfg.hbar, 0.0);
        const double inv_sqrt2 = 1.0 / std::sqrt(2.0 * cfg.hbar);
        double worst = std::abs(distance(p, {1, 0}, {0, 0}).closed_form - inv_sqrt2);
        for (int m = 0; m <= cfg.label_max; ++m) {
            for (int k = 0; k <= cfg.label_max; ++k) {
                for (int n : {0, cfg.label_max}) {
                    double expected = 0.0;
                    for (int i = 1; i <= k; ++i) {
                        expected += 1.0 / std::sqrt(static_cast<double>(m + i));
                    }
                    expected *= inv_sqrt2;
                    const double got = distance(p, {m + k, n}, {m, n}).closed_form;
                    const double dev = std::abs(got - expected);
                    worst = std::max(worst, dev);
                    if (dev > r.threshold) {
                        fail_case(r, "m=" + std::to_string(m) + " k=" + std::to_string(k) +
                                         " n=" + std::to_string(n) + ": dev " + fmt_sci(dev));
                    }
                }
            }
        }
        r.measured = worst;
    });
}

CheckResult check_shortening(const VerifyConfig& cfg) {
    return guarded("shortening factor sqrt(1 - theta^2/hbar^2)", 1e-12, [&](CheckResult& r) {
        const PhaseSpaceParams p0 = make_params(cfg.hbar, 0.0);
        double worst = 0.0;
        for (double theta : cfg.grid_thetas) {
            if (theta == 0.0) continue;
            const PhaseSpaceParams p = make_params(cfg.hbar, theta);
            const double factor = std::sqrt(1.0 - theta * theta / (cfg.hbar * cfg.hbar));
            for (int m = 0; m <= cfg.label_max; ++m) {
                for (int n = 0; n <= cfg.label_max; ++n) {
                    const double d0 = distance(p0, {0, 0}, {m, n}).closed_form;
                    const double dt = distance(p, {0, 0}, {m, n}).closed_form;
                    const double dev = std::abs(dt - factor * d0);
                    worst = std::max(worst, dev);
                    if (dev > r.threshold) {
                        fail_case(r, "theta=" + fmt(theta) + " (0,0)->(" + std::to_string(m) +
                                         "," + std::to_string(n) + "): dev " + fmt_sci(dev));
                    }
                }
            }
        }
        r.measured = worst;
    });
}

CheckResult check_sandwich(const VerifyConfig& cfg) {
    return guarded("oracle sandwich |numeric sup - closed form|", 1e-4, [&](CheckResult& r) {
        struct Job {
            double theta;
            FockLabel b;
        };
        std::vector<Job> jobs;
        for (double theta : cfg.sandwich_thetas) {
            for (int m = 0; m <= cfg.label_max; ++m) {
                for (int n = 0; n <= cfg.label_max; ++n) {
                    jobs.push_back({theta, {m, n}});
                }
            }
        }
        auto solve_one = [&](const Job& job) {
            const PhaseSpaceParams p = make_params(cfg.hbar, job.theta);
            SupSolverConfig scfg;
            scfg.cutoff = cfg.cutoff;
            scfg.buffer = cfg.buffer;
            scfg.seed = cfg.seed;
            scfg.tol_obj = cfg.tol_obj;
            const double closed = distance(p, {0, 0}, job.b).closed_form;
            const double sup = sup_distance(p, {0, 0}, job.b, scfg).value;
            return std::pair<double, double>(sup, closed);
        };
        std::vector<std::pair<double, double>> outs(jobs.size());
        if (cfg.parallel) {
            const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
            std::atomic<size_t> next{0};
            std::vector<std::future<void>> pool;
            for (unsigned w = 0; w < workers; ++w) {
                pool.push_back(std::async(std::launch::async, [&]() {
                    for (size_t k = next.fetch_add(1); k < jobs.size(); k = next.fetch_add(1)) {
                        outs[k] = solve_one(jobs[k]);
                    }
                }));
            }
            for (auto& f : pool) f.get();
        } else {
            for (size_t k = 0; k < jobs.size(); ++k) outs[k] = solve_one(jobs[k]);
        }
        double worst = 0.0;
        for (size_t k = 0; k < jobs.size(); ++k) {
            const double dev = std::abs(outs[k].first - outs[k].second);
            worst = std::max(worst, dev);
            if (dev > r.threshold) {
                fail_case(r, "theta=" + fmt(jobs[k].theta) + " (0,0)->(" +
                                 std::to_string(jobs[k].b.m) + "," + std::to_string(jobs[k].b.n) +
                                 "): sup=" + fmt(outs[k].first) + " closed=" +
                                 fmt(outs[k].second) + " |diff|=" + fmt_sci(dev));
            }
        }
        r.measured = worst;
    });
}

CheckResult check_saturation(const VerifyConfig& cfg) {
    return guarded("ball saturation of constructed elements", 1e-6, [&](CheckResult& r) {
        double worst = 0.0;
        for (double theta : cfg.grid_thetas) {
            const PhaseSpaceParams p = make_params(cfg.hbar, theta);
            DiagonalCommutatorNorm fast(p, cfg.cutoff);
            std::vector<std::pair<std::string, DiagonalElement>> elements;
            for (int m = 0; m + 1 <= cfg.label_max; ++m) {
                for (int k = 1; m + k <= cfg.label_max; ++k) {
                    elements.emplace_back(
                        "axis m=" + std::to_string(m) + " k=" + std::to_string(k),
                        optimal_element_axis(p, m, k, 0, cfg.cutoff, cfg.buffer));
                }
            }
            for (int m = 0; m <= cfg.label_max; ++m) {
                for (int n = 1; n <= cfg.label_max; ++n) {
                    elements.emplace_back(
                        "general (0,0)->(" + std::to_string(m) + "," + std::to_string(n) + ")",
                        optimal_element_general(p, {0, 0}, {m, n}, cfg.cutoff, cfg.buffer));
                }
            }
            elements.emplace_back(
                "general (1,1)->(2,2)",
                optimal_element_general(p, {1, 1}, {2, 2}, cfg.cutoff, cfg.buffer));
            for (const auto& [name, e] : elements) {
                const double norm = fast.norm(e);
                const double norm_dev = std::abs(norm - 1.0);
                const ConstraintReport rel = constraint_relations(e, p, cfg.tol_ball);
                const double rel_dev = std::abs(rel.max_residual);
                worst = std::max(worst, norm_dev);
                if (norm_dev > r.threshold || rel_dev > cfg.tol_ball) {
                    fail_case(r, "theta=" + fmt(theta) + " " + name + ": norm=" + fmt(norm) +
                                     " max_residual=" + fmt_sci(rel.max_residual));
                }
            }
        }
        r.measured = worst;
    });
}

CheckResult check_identities(const VerifyConfig& cfg) {
    return guarded("additivity and Pythagoras identities", 1e-12, [&](CheckResult& r) {
        double worst = 0.0;
        for (double theta : cfg.grid_thetas) {
            const PhaseSpaceParams p = make_params(cfg.hbar, theta);
            for (int m = 0; m <= 6; ++m) {
                for (int n = 0; n <= 6; ++n) {
                    for (int k = 0; k <= 6; ++k) {
                        for (int l = 0; l <= 6; ++l) {
                            const double add = check_additivity(p, m, n, k, l);
                            const double pyt = check_pythagoras(p, m, n, k, l);
                            const double dev = std::max(add, pyt);
                            worst = std::max(worst, dev);
                            if (dev > r.threshold) {
                                fail_case(r, "theta=" + fmt(theta) + " (m,n,k,l)=(" +
                                                 std::to_string(m) + "," + std::to_string(n) +
                                                 "," + std::to_string(k) + "," +
                                                 std::to_string(l) + "): dev " + fmt_sci(dev));
                            }
                        }
                    }
                }
            }
        }
        r.measured = worst;
    });
}

CheckResult check_algebra(const VerifyConfig& cfg) {
    return guarded("gamma/Dirac/ladder/GH algebra", 1e-10, [&](CheckResult& r) {
        double worst = 0.0;
        // gamma anticommutation and hermiticity are exact in {0,+-1,+-i}
        const GammaSet gs = gamma_matrices();
        for (int k = 0; k < 4; ++k) {
            for (int l = 0; l < 4; ++l) {
                const Eigen::Matrix4cd anti = gs.g[k] * gs.g[l] + gs.g[l] * gs.g[k];
                const Eigen::Matrix4cd expect =
                    (k == l) ? Eigen::Matrix4cd(2.0 * Eigen::Matrix4cd::Identity())
                             : Eigen::Matrix4cd(Eigen::Matrix4cd::Zero());
                const double dev = (anti - expect).cwiseAbs().maxCoeff();
                if (dev > 0.0) {
                    worst = std::max(worst, dev);
                    fail_case(r, "gamma anticommutator (" + std::to_string(k + 1) + "," +
                                     std::to_string(l + 1) + ") dev " + fmt_sci(dev));
                }
            }
            const double h = hermiticity_defect(gs.g[k]);
            if (h > 0.0) {
                worst = std::max(worst, h);
                fail_case(r, "gamma " + std::to_string(k + 1) + " not Hermitian");
            }
        }

        const int n = cfg.cutoff;
        for (double theta : cfg.grid_thetas) {
            const PhaseSpaceParams p = make_params(cfg.hbar, theta);
            const DiracOperator d = dirac_operator(p, n);
            const double herm = hermiticity_defect(d.matrix);
            worst = std::max(worst, herm);
            if (herm > 1e-12) {
                fail_case(r, "theta=" + fmt(theta) + ": Dirac hermiticity defect " +
                                 fmt_sci(herm));
            }
        }

        // ladder algebra on the interior
        {
            const auto a1 = annihilation_mode(1, n), a2 = annihilation_mode(2, n);
            const auto c1 = creation_mode(1, n), c2 = creation_mode(2, n);
            const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(n * n, n * n);
            const Eigen::MatrixXcd k11 = a1.entries * c1.entries - c1.entries * a1.entries - id;
            const Eigen::MatrixXcd k22 = a2.entries * c2.entries - c2.entries * a2.entries - id;
            const Eigen::MatrixXcd k12 = a1.entries * c2.entries - c2.entries * a1.entries;
            const Eigen::MatrixXcd kaa = a1.entries * a2.entries - a2.entries * a1.entries;
            const Eigen::MatrixXcd kcc = c1.entries * c2.entries - c2.entries * c1.entries;
            double ladder = std::max(kaa.cwiseAbs().maxCoeff(), kcc.cwiseAbs().maxCoeff());
            for (int m = 0; m + 1 < n; ++m) {
                for (int l = 0; l + 1 < n; ++l) {
                    const int col = m * n + l;
                    ladder = std::max({ladder, k11.col(col).cwiseAbs().maxCoeff(),
                                       k22.col(col).cwiseAbs().maxCoeff(),
                                       k12.col(col).cwiseAbs().maxCoeff()});
                }
            }
            worst = std::max(worst, ladder);
            if (ladder > 1e-12) {
                fail_case(r, "interior ladder commutator defect " + fmt_sci(ladder));
            }
        }

        // diagonal-commutator products vs the G/H combinations
        std::mt19937 rng(cfg.seed);
        std::normal_distribution<double> gauss(0.0, 1.0);
        const int support = std::max(2, n - cfg.buffer);
        for (double theta : {cfg.grid_thetas.front(), cfg.grid_thetas.back()}) {
            const PhaseSpaceParams p = make_params(cfg.hbar, theta);
            DiagonalElement e = DiagonalElement::zero(n);
            for (int i = 0; i < support; ++i) {
                for (int j = 0; j < support; ++j) {
                    e.coeffs(i, j) = gauss(rng);
                }
            }
            const GHGrid g = gh_grid(e);
            const double t2 = p.t * p.t;
            const Eigen::MatrixXcd ed = e.to_operator().entries;
            const Eigen::MatrixXcd A1 = deformed_ladder(1, p, n).entries;
            const Eigen::MatrixXcd A2 = deformed_ladder(2, p, n).entries;
            const Eigen::MatrixXcd cm1 = A1 * ed - ed * A1;
            const Eigen::MatrixXcd cm2 = A2 * ed - ed * A2;
            const Eigen::MatrixXcd prods[4] = {cm1 * cm1.adjoint(), cm1.adjoint() * cm1,
                                               cm2 * cm2.adjoint(), cm2.adjoint() * cm2};
            double gh_dev = 0.0;
            for (int i = 0; i + 1 < n; ++i) {
                for (int j = 0; j + 1 < n; ++j) {
                    const int flat = i * n + j;
                    const double expect[4] = {g.G(i + 1, j) + t2 * g.H(i, j + 1),
                                              g.G(i, j) + t2 * g.H(i, j),
                                              g.H(i, j + 1) + t2 * g.G(i + 1, j),
                                              g.H(i, j) + t2 * g.G(i, j)};
                    for (int q = 0; q < 4; ++q) {
                        gh_dev = std::max(gh_dev,
                                          std::abs(std::real(prods[q](flat, flat)) - expect[q]));
                    }
                }
            }
            worst = std::max(worst, gh_dev);
            if (gh_dev > 1e-10) {
                fail_case(r, "theta=" + fmt(theta) + ": G/H diagonal formulas deviate " +
                                 fmt_sci(gh_dev) + " (support " + std::to_string(support) + ")");
            }
        }
        r.measured = worst;
    });
}

CheckResult check_degenerate_and_errors(const VerifyConfig& cfg) {
    return guarded("degeneracy and error paths", 0.0, [&](CheckResult& r) {
        try {
            make_params(cfg.hbar, cfg.hbar);
            fail_case(r, "theta = hbar was not rejected");
        } catch (const SingularRegime&) {
        }
        try {
            make_params(cfg.hbar, 2.0 * cfg.hbar);
            fail_case(r, "theta > hbar was not rejected");
        } catch (const SingularRegime&) {
        }

        const PhaseSpaceParams p = make_params(cfg.hbar, cfg.grid_thetas.back());
        const double dself = distance(p, {2, 3}, {2, 3}).closed_form;
        if (dself != 0.0) {
            fail_case(r, "d(a,a) = " + fmt_sci(dself) + " != 0");
            r.measured = std::max(r.measured, std::abs(dself));
        }

        DiagonalElement constant = DiagonalElement::zero(std::max(4, std::min(cfg.cutoff, 8)));
        constant.coeffs.setConstant(7.5);
        const double cnorm = DiagonalCommutatorNorm(p, constant.cutoff).norm(constant);
        if (cnorm != 0.0) {
            fail_case(r, "constant element commutator norm " + fmt_sci(cnorm) + " != 0");
            r.measured = std::max(r.measured, cnorm);
        }
        try {
            scale_to_ball(constant, p, constant.cutoff);
            fail_case(r, "scale_to_ball accepted a constant element");
        } catch (const ZeroElement&) {
        }
    });
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyConfig& cfg) {
    std::vector<CheckResult> results;
    results.push_back(check_closed_forms(cfg));
    results.push_back(check_shortening(cfg));
    results.push_back(check_sandwich(cfg));
    results.push_back(check_saturation(cfg));
    results.push_back(check_identities(cfg));
    results.push_back(check_algebra(cfg));
    results.push_back(check_degenerate_and_errors(cfg));
    return results;
}

}  // namespace ncps
