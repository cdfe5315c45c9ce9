#include "ncps/sup_solver.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Cholesky>

#include "ncps/closed_form.hpp"
#include "ncps/errors.hpp"
#include "ncps/sector_norm.hpp"

namespace ncps {

namespace {

using Cplx = std::complex<double>;
using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXd;

// Repeats the last window row/column out to the cutoff grid. All coefficient
// differences of the result sit at indices <= window size, far from the
// truncation edge, so ball norms of extended elements carry no edge error.
MatrixXd extend_window(const MatrixXd& w, int cutoff) {
    const int s = static_cast<int>(w.rows());
    MatrixXd c(cutoff, cutoff);
    c.topLeftCorner(s, s) = w;
    for (int i = s; i < cutoff; ++i) c.row(i).head(s) = w.row(s - 1);
    for (int j = s; j < cutoff; ++j) c.col(j).head(s) = w.col(s - 1);
    c.bottomRightCorner(cutoff - s, cutoff - s).setConstant(w(s - 1, s - 1));
    return c;
}

struct BarrierProblem {
    virtual ~BarrierProblem() = default;
    virtual int nvars() const = 0;
    virtual double nu() const = 0;
    // false when c is outside the barrier domain
    virtual bool value(const VectorXd& c, double* phi) const = 0;
    virtual bool value_grad_hess(const VectorXd& c, double* phi, VectorXd& grad,
                                 MatrixXd& hess) const = 0;
};

// Barrier over the exact commutator ball. Per grading sector s the block
// M_s(c) is linear in the window coefficients; the constraint is
// ||M_s|| <= 1/beta, carried by -logdet((1/beta^2) I - M_s^H M_s).
class OperatorBallBarrier final : public BarrierProblem {
  public:
    OperatorBallBarrier(const PhaseSpaceParams& params, int cutoff, int window)
        : window_(window), tau2_(1.0 / (params.beta * params.beta)) {
        const auto blocks = build_sector_blocks(cutoff, params.t);
        const int s = window;
        for (const auto& blk : blocks) {
            Sector sec;
            sec.rows = blk.rows;
            sec.cols = blk.cols;
            std::vector<std::vector<Term>> per_var(s * s);
            for (const auto& en : blk.entries) {
                // difference through the constant extension: E(i,j) maps to
                // window vars (min(i,s-1), jc) - (min(i-1,s-1), jc); entries
                // whose two vars clamp together contribute nothing.
                int vp, vm;
                if (en.is_E) {
                    if (en.i > s - 1) continue;
                    const int jc = std::min(en.j, s - 1);
                    vp = en.i * s + jc;
                    vm = (en.i - 1) * s + jc;
                } else {
                    if (en.j > s - 1) continue;
                    const int ic = std::min(en.i, s - 1);
                    vp = ic * s + en.j;
                    vm = ic * s + en.j - 1;
                }
                per_var[vp].push_back({en.row, en.col, en.coef});
                per_var[vm].push_back({en.row, en.col, -en.coef});
            }
            for (int v = 0; v < s * s; ++v) {
                if (!per_var[v].empty()) {
                    sec.vars.push_back(v);
                    sec.terms.push_back(std::move(per_var[v]));
                }
            }
            if (!sec.vars.empty()) {
                nu_ += sec.cols;
                sectors_.push_back(std::move(sec));
            }
        }
    }

    int nvars() const override { return window_ * window_; }
    double nu() const override { return nu_; }

    bool value(const VectorXd& c, double* phi) const override {
        double acc = 0.0;
        MatrixXcd m, z;
        for (const auto& sec : sectors_) {
            assemble(sec, c, m);
            z = tau2_ * MatrixXcd::Identity(sec.cols, sec.cols) - m.adjoint() * m;
            Eigen::LLT<MatrixXcd> llt(z);
            if (llt.info() != Eigen::Success) return false;
            double logdet = 0.0;
            for (int i = 0; i < sec.cols; ++i) {
                logdet += std::log(std::real(llt.matrixL()(i, i)));
            }
            acc -= 2.0 * logdet;
        }
        *phi = acc;
        return true;
    }

    bool value_grad_hess(const VectorXd& c, double* phi, VectorXd& grad,
                         MatrixXd& hess) const override {
        double acc = 0.0;
        grad.setZero(nvars());
        hess.setZero(nvars(), nvars());
        MatrixXcd m, z, q, pm, w;
        for (const auto& sec : sectors_) {
            assemble(sec, c, m);
            z = tau2_ * MatrixXcd::Identity(sec.cols, sec.cols) - m.adjoint() * m;
            Eigen::LLT<MatrixXcd> llt(z);
            if (llt.info() != Eigen::Success) return false;
            double logdet = 0.0;
            for (int i = 0; i < sec.cols; ++i) {
                logdet += std::log(std::real(llt.matrixL()(i, i)));
            }
            acc -= 2.0 * logdet;

            q = llt.solve(MatrixXcd::Identity(sec.cols, sec.cols));  // Z^-1
            pm = m * q;                                              // M Z^-1
            w = pm * m.adjoint();                                    // M Z^-1 M^H

            const int nv = static_cast<int>(sec.vars.size());
            for (int a = 0; a < nv; ++a) {
                Cplx gsum = 0.0;
                for (const auto& ta : sec.terms[a]) {
                    gsum += std::conj(ta.coef) * pm(ta.row, ta.col);
                }
                grad[sec.vars[a]] += 2.0 * std::real(gsum);

                for (int b = a; b < nv; ++b) {
                    Cplx t1 = 0.0, t2 = 0.0, ta2 = 0.0;
                    for (const auto& ea : sec.terms[a]) {
                        for (const auto& eb : sec.terms[b]) {
                            const Cplx cc = std::conj(ea.coef);
                            t1 += cc * std::conj(eb.coef) * pm(ea.row, eb.col) *
                                  pm(eb.row, ea.col);
                            t2 += cc * eb.coef * w(ea.row, eb.row) * q(eb.col, ea.col);
                            if (ea.row == eb.row) {
                                ta2 += cc * eb.coef * q(eb.col, ea.col);
                            }
                        }
                    }
                    const double h = 2.0 * std::real(t1) + 2.0 * std::real(t2) +
                                     2.0 * std::real(ta2);
                    hess(sec.vars[a], sec.vars[b]) += h;
                    if (a != b) hess(sec.vars[b], sec.vars[a]) += h;
                }
            }
        }
        *phi = acc;
        return true;
    }

  private:
    struct Term {
        int row;
        int col;
        Cplx coef;
    };
    struct Sector {
        int rows = 0;
        int cols = 0;
        std::vector<int> vars;
        std::vector<std::vector<Term>> terms;
    };

    void assemble(const Sector& sec, const VectorXd& c, MatrixXcd& m) const {
        m.setZero(sec.rows, sec.cols);
        for (size_t a = 0; a < sec.vars.size(); ++a) {
            const double cv = c[sec.vars[a]];
            if (cv == 0.0) continue;
            for (const auto& t : sec.terms[a]) {
                m(t.row, t.col) += t.coef * cv;
            }
        }
    }

    int window_;
    double tau2_;
    double nu_ = 0.0;
    std::vector<Sector> sectors_;
};

// Barrier over the four per-cell quadratic relations of the diagonal
// calculus. Each constraint is sum_k w_k (L_k . c)^2 <= 1/beta^2 with tiny
// difference stencils L_k.
class RelationBarrier final : public BarrierProblem {
  public:
    RelationBarrier(const PhaseSpaceParams& params, int window)
        : window_(window), bound_(1.0 / (params.beta * params.beta)) {
        const double t2 = params.t * params.t;
        const int s = window;
        // linear form of E(i,j)/F(i,j) over window vars (empty if identically 0)
        auto e_form = [&](int i, int j) -> std::vector<std::pair<int, double>> {
            if (i < 1 || i > s - 1) return {};
            const int jc = std::min(j, s - 1);
            return {{i * s + jc, 1.0}, {(i - 1) * s + jc, -1.0}};
        };
        auto f_form = [&](int i, int j) -> std::vector<std::pair<int, double>> {
            if (j < 1 || j > s - 1) return {};
            const int ic = std::min(i, s - 1);
            return {{ic * s + j, 1.0}, {ic * s + j - 1, -1.0}};
        };
        for (int i = 0; i + 1 < s + 1; ++i) {
            for (int j = 0; j + 1 < s + 1; ++j) {
                const auto eij = e_form(i, j), ei1 = e_form(i + 1, j);
                const auto fij = f_form(i, j), fj1 = f_form(i, j + 1);
                const double gi = i, gi1 = i + 1, hj = j, hj1 = j + 1;
                const std::array<std::vector<Quad>, 4> defs = {{
                    {{gi1, ei1}, {hj, fij}, {t2 * gi, eij}, {t2 * hj1, fj1}},
                    {{(1 + t2) * gi1, ei1}, {(1 + t2) * hj1, fj1}},
                    {{gi, eij}, {hj1, fj1}, {t2 * gi1, ei1}, {t2 * hj, fij}},
                    {{(1 + t2) * gi, eij}, {(1 + t2) * hj, fij}},
                }};
                for (const auto& quads : defs) {
                    Constraint con;
                    for (const auto& qd : quads) {
                        if (qd.weight > 0.0 && !qd.form.empty()) con.quads.push_back(qd);
                    }
                    if (!con.quads.empty()) constraints_.push_back(std::move(con));
                }
            }
        }
    }

    int nvars() const override { return window_ * window_; }
    double nu() const override { return static_cast<double>(constraints_.size()); }

    bool value(const VectorXd& c, double* phi) const override {
        double acc = 0.0;
        for (const auto& con : constraints_) {
            const double gap = bound_ - qvalue(con, c);
            if (gap <= 0.0) return false;
            acc -= std::log(gap);
        }
        *phi = acc;
        return true;
    }

    bool value_grad_hess(const VectorXd& c, double* phi, VectorXd& grad,
                         MatrixXd& hess) const override {
        double acc = 0.0;
        grad.setZero(nvars());
        hess.setZero(nvars(), nvars());
        std::vector<std::pair<int, double>> qprime;
        for (const auto& con : constraints_) {
            const double gap = bound_ - qvalue(con, c);
            if (gap <= 0.0) return false;
            acc -= std::log(gap);
            qprime.clear();
            for (const auto& qd : con.quads) {
                double dot = 0.0;
                for (const auto& [v, w] : qd.form) dot += w * c[v];
                const double scale = 2.0 * qd.weight * dot;
                for (const auto& [v, w] : qd.form) {
                    qprime.emplace_back(v, scale * w);
                }
                // q'' / gap contribution: 2 w_k L L^T
                for (const auto& [v1, w1] : qd.form) {
                    for (const auto& [v2, w2] : qd.form) {
                        hess(v1, v2) += 2.0 * qd.weight * w1 * w2 / gap;
                    }
                }
            }
            for (const auto& [v, gv] : qprime) grad[v] += gv / gap;
            for (const auto& [v1, g1] : qprime) {
                for (const auto& [v2, g2] : qprime) {
                    hess(v1, v2) += g1 * g2 / (gap * gap);
                }
            }
        }
        *phi = acc;
        return true;
    }

  private:
    struct Quad {
        double weight;
        std::vector<std::pair<int, double>> form;
    };
    struct Constraint {
        std::vector<Quad> quads;
    };

    double qvalue(const Constraint& con, const VectorXd& c) const {
        double q = 0.0;
        for (const auto& qd : con.quads) {
            double dot = 0.0;
            for (const auto& [v, w] : qd.form) dot += w * c[v];
            q += qd.weight * dot * dot;
        }
        return q;
    }

    int window_;
    double bound_;
    std::vector<Constraint> constraints_;
};

// Damped-Newton path following for max <obj, c> over the barrier domain.
// Gauge direction (global constant) is pinned by a quadratic term.
struct PathOutcome {
    VectorXd c;
    int newton_steps = 0;
};

PathOutcome follow_path(const BarrierProblem& prob, const VectorXd& obj,
                        const SupSolverConfig& cfg) {
    const int n = prob.nvars();
    VectorXd c = VectorXd::Zero(n);
    const VectorXd ones = VectorXd::Ones(n);
    int steps = 0;

    double weight = cfg.step_initial;
    VectorXd grad(n);
    MatrixXd hess(n, n);
    for (int stage = 0; stage < 80; ++stage) {
        for (;;) {
            if (steps >= cfg.max_iters) {
                throw NotConverged("sup_distance: Newton budget of " +
                                   std::to_string(cfg.max_iters) + " steps exhausted");
            }
            double phi;
            if (!prob.value_grad_hess(c, &phi, grad, hess)) {
                throw NumericalFailure("sup_distance: iterate left the barrier domain");
            }
            ++steps;
            const double pin = ones.dot(c);
            VectorXd full_grad = -weight * obj + grad + pin * ones;
            MatrixXd full_hess = hess;
            full_hess += ones * ones.transpose();
            full_hess.diagonal().array() += 1e-11;
            const VectorXd d = full_hess.ldlt().solve(-full_grad);
            const double decrement = -full_grad.dot(d);
            if (!(decrement > 1e-11 * (1.0 + std::abs(phi)))) break;

            const double f0 = -weight * obj.dot(c) + phi + 0.5 * pin * pin;
            double alpha = 1.0;
            bool moved = false;
            for (int bt = 0; bt < 60; ++bt) {
                const VectorXd cand = c + alpha * d;
                double pc;
                if (prob.value(cand, &pc)) {
                    const double pc_pin = ones.dot(cand);
                    const double fc = -weight * obj.dot(cand) + pc + 0.5 * pc_pin * pc_pin;
                    if (fc <= f0 - 0.25 * alpha * decrement) {
                        c = cand;
                        moved = true;
                        break;
                    }
                }
                alpha *= 0.5;
            }
            if (!moved) break;
        }
        const double gap = prob.nu() / weight;
        if (gap <= cfg.tol_obj * std::max(1.0, obj.dot(c))) break;
        weight *= cfg.step_decay;
    }
    return {std::move(c), steps};
}

}  // namespace

DiagonalElement scale_to_ball(const DiagonalElement& e, const PhaseSpaceParams& params,
                              int cutoff) {
    if (e.cutoff != cutoff) {
        throw DimensionMismatch("scale_to_ball: cutoff mismatch");
    }
    DiagonalCommutatorNorm fast(params, cutoff);
    const double n = fast.norm(e);
    const double scale = e.coeffs.cwiseAbs().maxCoeff();
    if (n <= 1e-14 * (1.0 + scale)) {
        throw ZeroElement("scale_to_ball: commutator vanishes (constant element)");
    }
    DiagonalElement out = e;
    out.coeffs /= n;
    return out;
}

SupResult sup_distance(const PhaseSpaceParams& params, FockLabel a, FockLabel b,
                       const SupSolverConfig& cfg) {
    const int window = cfg.cutoff - cfg.buffer;
    if (window < 2 || cfg.buffer < 0) {
        throw InvalidCutoff("sup_distance: cutoff/buffer leave no usable window");
    }
    for (FockLabel l : {a, b}) {
        if (l.m < 0 || l.n < 0 || l.m >= window || l.n >= window) {
            throw LabelOutOfRange("sup_distance: labels must sit inside the window of size " +
                                  std::to_string(window));
        }
    }

    SupResult result;
    if (a == b) {
        result.element = DiagonalElement::zero(cfg.cutoff);
        result.converged = true;
        return result;
    }

    VectorXd obj = VectorXd::Zero(window * window);
    obj[b.m * window + b.n] = 1.0;
    obj[a.m * window + a.n] = -1.0;

    const bool relations_only = cfg.constraint_mode == ConstraintMode::constraint_relations;
    PathOutcome out;
    if (relations_only) {
        RelationBarrier barrier(params, window);
        out = follow_path(barrier, obj, cfg);
    } else {
        OperatorBallBarrier barrier(params, cfg.cutoff, window);
        out = follow_path(barrier, obj, cfg);
    }

    MatrixXd w = Eigen::Map<const MatrixXd>(out.c.data(), window, window).transpose();
    DiagonalElement element;
    element.cutoff = cfg.cutoff;
    element.coeffs = extend_window(w, cfg.cutoff);

    DiagonalCommutatorNorm fast(params, cfg.cutoff);
    if (relations_only) {
        // screen mode: the element certifies the relation set, not the ball
        result.element = element;
        result.norm_at_solution = fast.norm(element);
    } else {
        result.element = scale_to_ball(element, params, cfg.cutoff);
        result.norm_at_solution = fast.norm(result.element);
        if (cfg.constraint_mode == ConstraintMode::both &&
            !feasible_diagonal(result.element, params, 1e-9)) {
            throw NumericalFailure(
                "sup_distance: ball-feasible element fails the relation screen");
        }
    }
    result.value = result.element.coeffs(b.m, b.n) - result.element.coeffs(a.m, a.n);
    result.iterations = out.newton_steps;
    result.converged = true;
    return result;
}

double brute_force_oracle(const PhaseSpaceParams& params, FockLabel a, FockLabel b, int cutoff,
                          int samples, unsigned seed) {
    const int window = cutoff - kDefaultBuffer;
    for (FockLabel l : {a, b}) {
        if (l.m < 0 || l.n < 0 || l.m >= window || l.n >= window) {
            throw LabelOutOfRange("brute_force_oracle: labels outside the window");
        }
    }
    if (a == b) return 0.0;

    std::vector<DiagonalElement> candidates;
    candidates.push_back(optimal_element_general(params, a, b, cutoff));

    auto single_site = [&](FockLabel l, double v) {
        DiagonalElement e = DiagonalElement::zero(cutoff);
        e.coeffs(l.m, l.n) = v;
        return e;
    };
    candidates.push_back(single_site(b, 1.0));
    candidates.push_back(single_site(a, -1.0));
    {
        DiagonalElement e = DiagonalElement::zero(cutoff);
        e.coeffs(b.m, b.n) = 1.0;
        e.coeffs(a.m, a.n) = -1.0;
        candidates.push_back(e);
    }

    std::mt19937 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int k = 0; k < samples; ++k) {
        DiagonalElement e = DiagonalElement::zero(cutoff);
        for (int i = 0; i < window; ++i) {
            for (int j = 0; j < window; ++j) {
                e.coeffs(i, j) = gauss(rng);
            }
        }
        candidates.push_back(std::move(e));
    }

    double best = 0.0;
    for (const auto& e : candidates) {
        try {
            const DiagonalElement scaled = scale_to_ball(e, params, cutoff);
            best = std::max(best,
                            std::abs(scaled.coeffs(b.m, b.n) - scaled.coeffs(a.m, a.n)));
        } catch (const ZeroElement&) {
            // constant direction: objective 0 along it
        }
    }
    return best;
}

}  // namespace ncps
