#include "coflow/linsys.hpp"

#include <vector>

namespace coflow {

namespace {

Real true_residual(const SpMat& A, const Vec& x, const Vec& b) {
    const Real bn = b.norm();
    if (bn == 0) return x.norm() == 0 ? 0.0 : (A * x).norm();
    return (A * x - b).norm() / bn;
}

struct IterResult {
    int iters = 0;
    Real relres = 0;
    bool converged = false;
};

template <class Precond>
IterResult pcg(const SpMat& A, const Vec& b, Vec& x, const Precond& M, Real rtol, int maxit) {
    const Real bn = b.norm();
    if (bn == 0) {
        x.setZero();
        return {0, 0.0, true};
    }
    Vec r = b - A * x;
    Vec z = M(r);
    Vec p = z;
    Real rz = r.dot(z);
    IterResult res;
    for (int k = 0; k < maxit; ++k) {
        const Vec Ap = A * p;
        const Real alpha = rz / p.dot(Ap);
        x += alpha * p;
        r -= alpha * Ap;
        res.iters = k + 1;
        if (r.norm() <= rtol * bn) {
            res.converged = true;
            break;
        }
        z = M(r);
        const Real rz_new = r.dot(z);
        p = z + (rz_new / rz) * p;
        rz = rz_new;
    }
    res.relres = r.norm() / bn;
    return res;
}

template <class Precond>
IterResult bicgstab(const SpMat& A, const Vec& b, Vec& x, const Precond& M, Real rtol,
                    int maxit) {
    const Real bn = b.norm();
    if (bn == 0) {
        x.setZero();
        return {0, 0.0, true};
    }
    Vec r = b - A * x;
    const Vec r0 = r;
    Real rho = 1, alpha = 1, omega = 1;
    Vec v = Vec::Zero(b.size()), p = Vec::Zero(b.size());
    IterResult res;
    for (int k = 0; k < maxit; ++k) {
        const Real rho1 = r0.dot(r);
        if (rho1 == 0) break;
        if (k == 0) {
            p = r;
        } else {
            const Real beta = (rho1 / rho) * (alpha / omega);
            p = r + beta * (p - omega * v);
        }
        rho = rho1;
        const Vec ph = M(p);
        v = A * ph;
        alpha = rho / r0.dot(v);
        Vec s = r - alpha * v;
        if (s.norm() <= rtol * bn) {
            x += alpha * ph;
            res.iters = k + 1;
            res.converged = true;
            break;
        }
        const Vec sh = M(s);
        const Vec t = A * sh;
        omega = t.dot(s) / t.dot(t);
        x += alpha * ph + omega * sh;
        r = s - omega * t;
        res.iters = k + 1;
        if (r.norm() <= rtol * bn) {
            res.converged = true;
            break;
        }
        if (omega == 0) break;
    }
    res.relres = (b - A * x).norm() / bn;
    return res;
}

}  // namespace

void SparseSystem::prepare(const SolverConfig& cfg, int cells, bool reuse_symbolic) {
    cfg_ = cfg;
    direct_ = cfg.use_direct(cells);
    if (direct_) {
        Acol_ = A;
        if (symmetric) {
            if (!ldlt_) ldlt_ = std::make_unique<Eigen::SimplicialLDLT<SpMatCol>>();
            if (!analyzed_ || !reuse_symbolic) {
                ldlt_->analyzePattern(Acol_);
                analyzed_ = true;
            }
            ldlt_->factorize(Acol_);
            if (ldlt_->info() != Eigen::Success)
                throw SolveError("LDLT factorisation failed (singular assembly?)", -1);
        } else {
            if (!lu_) lu_ = std::make_unique<Eigen::SparseLU<SpMatCol>>();
            if (!analyzed_ || !reuse_symbolic) {
                lu_->analyzePattern(Acol_);
                analyzed_ = true;
            }
            lu_->factorize(Acol_);
            if (lu_->info() != Eigen::Success)
                throw SolveError("LU factorisation failed (singular assembly?)", -1);
        }
    } else {
        inv_diag_ = A.diagonal().cwiseInverse();
        if (!inv_diag_.allFinite()) throw SolveError("zero diagonal in iterative solve", -1);
        if (!symmetric && !ilut_) {
            ilut_ = std::make_unique<Eigen::IncompleteLUT<Real>>();
            ilut_->setDroptol(1e-6);
            ilut_->setFillfactor(12);
            Acol_ = A;
            ilut_->compute(Acol_);
            if (ilut_->info() != Eigen::Success)
                throw SolveError("ILUT preconditioner failed", -1);
        }
    }
}

void SparseSystem::refresh() { prepare(cfg_, 0x7fffffff, true); }

Vec SparseSystem::solve_once(const Vec& b) const {
    if (direct_) return symmetric ? ldlt_->solve(b) : lu_->solve(b);
    Vec x = Vec::Zero(b.size());
    IterResult r;
    if (symmetric) {
        const Vec& d = inv_diag_;
        r = pcg(A, b, x, [&](const Vec& v) -> Vec { return d.asDiagonal() * v; }, cfg_.rtol,
                cfg_.max_iter);
    } else {
        r = bicgstab(A, b, x, [&](const Vec& v) -> Vec { return ilut_->solve(v); }, cfg_.rtol,
                     cfg_.max_iter);
    }
    if (!r.converged && !x.allFinite())
        throw SolveError("iterative solve diverged (non-finite iterate)", r.relres);
    return x;
}

Vec SparseSystem::solve(const Vec& b) const {
    if (!b.allFinite()) throw SolveError("non-finite right-hand side", -1);
    Vec x = solve_once(b);
    if (!x.allFinite()) throw SolveError("non-finite solution", -1);
    Real rel = true_residual(A, x, b);
    for (int pass = 0; pass < 3 && rel > cfg_.rtol; ++pass) {  // iterative refinement
        const Vec dx = solve_once(b - A * x);
        if (!dx.allFinite()) break;
        x += dx;
        rel = true_residual(A, x, b);
    }
    if (rel > cfg_.rtol)
        throw SolveError("solve missed residual contract (relres " + std::to_string(rel) + ")",
                         rel);
    return x;
}

Real SparseSystem::checksum() const {
    Real acc = 0;
    for (int k = 0; k < A.outerSize(); ++k)
        for (SpMat::InnerIterator it(A, k); it; ++it)
            acc += it.value() * std::sin(0.1 * it.row() + 0.2 * it.col() + 1.0);
    return acc;
}

// ----------------------------------------------------------------- ChBlock

ChBlock::ChBlock(const Grid& g, const Params& p, const FieldBc& phi_kinds,
                 const FieldBc& mu_kinds, const SolverConfig& cfg)
    : grid_(g), dt_(p.dt), diffusion_(p.diffusion), eps_(p.cahn), s_(p.stabilizer_s) {
    const int n = g.cells();
    std::vector<Eigen::Triplet<Real>> trip;
    trip.reserve(static_cast<size_t>(n) * 14);
    for (int i = 0; i < g.nz; ++i)
        for (int j = 0; j < g.nr; ++j) {
            const int c = g.index(i, j);
            const Real r = g.rc(j);
            trip.emplace_back(2 * c, 2 * c, r / dt_);
            trip.emplace_back(2 * c + 1, 2 * c + 1, r);
            trip.emplace_back(2 * c + 1, 2 * c, -r * s_ / eps_);
        }
    lap_r_stencil(grid_, mu_kinds,
                  [&](int c, int o, Real w) { trip.emplace_back(2 * c, 2 * o + 1, -diffusion_ * w); });
    lap_r_stencil(grid_, phi_kinds,
                  [&](int c, int o, Real w) { trip.emplace_back(2 * c + 1, 2 * o, eps_ * w); });
    sys_.A.resize(2 * n, 2 * n);
    sys_.A.setFromTriplets(trip.begin(), trip.end());
    sys_.A.makeCompressed();
    sys_.symmetric = false;
    sys_.prepare(cfg, g.cells());
}

std::pair<Field, Field> ChBlock::solve(const Field& rhs1, const Field& rhs2,
                                       const FieldBc& phi_data, const FieldBc& mu_data) const {
    const int n = grid_.cells();
    const Field mu_bc = lap_r_data(grid_, mu_data);
    const Field phi_bc = lap_r_data(grid_, phi_data);
    Vec b(2 * n);
    for (int c = 0; c < n; ++c) {
        b[2 * c] = rhs1[c] + diffusion_ * mu_bc[c];
        b[2 * c + 1] = rhs2[c] - eps_ * phi_bc[c];
    }
    const Vec x = sys_.solve(b);
    Field phi(n), mu(n);
    for (int c = 0; c < n; ++c) {
        phi[c] = x[2 * c];
        mu[c] = x[2 * c + 1];
    }
    return {std::move(phi), std::move(mu)};
}

// ------------------------------------------------------------ VelocityBlock

VelocityBlock::VelocityBlock(const Grid& g, const FieldBc& vz_kinds, const FieldBc& vr_kinds,
                             const SolverConfig& cfg)
    : grid_(g), vz_kinds_(vz_kinds), vr_kinds_(vr_kinds), cfg_(cfg) {
    if (g.nz < 3 || g.nr < 3)
        throw ConfigError("velocity system needs at least a 3x3 grid");
    sys_.symmetric = true;
}

void VelocityBlock::assemble(const Field& mass_coef, const EtaFaces& eta,
                             const Field& eta_cells) {
    const int n = grid_.cells();
    auto diag_terms = [&](auto&& add) {
        for (int i = 0; i < grid_.nz; ++i)
            for (int j = 0; j < grid_.nr; ++j) {
                const int c = grid_.index(i, j);
                add(2 * c, 2 * c, mass_coef[c]);
                add(2 * c + 1, 2 * c + 1,
                    mass_coef[c] + 2.0 * eta_cells[c] / grid_.rc(j));
            }
    };
    auto strain_terms = [&](auto&& add) {
        for_each_strain_sample(grid_, eta, vz_kinds_, vr_kinds_, [&](const StrainSample& s) {
            for (int a = 0; a < s.n; ++a)
                for (int b = 0; b < s.n; ++b)
                    add(2 * s.terms[a].cell + s.terms[a].comp,
                        2 * s.terms[b].cell + s.terms[b].comp,
                        s.weight * s.terms[a].coef * s.terms[b].coef);
        });
    };
    if (!pattern_built_) {
        std::vector<Eigen::Triplet<Real>> trip;
        trip.reserve(static_cast<size_t>(n) * 80);
        auto add = [&](int r, int c, Real v) { trip.emplace_back(r, c, v); };
        diag_terms(add);
        strain_terms(add);
        sys_.A.resize(2 * n, 2 * n);
        sys_.A.setFromTriplets(trip.begin(), trip.end());
        sys_.A.makeCompressed();
        pattern_built_ = true;
        sys_.prepare(cfg_, grid_.cells());
    } else {
        Eigen::Map<Eigen::ArrayXd>(sys_.A.valuePtr(), sys_.A.nonZeros()).setZero();
        auto add = [&](int r, int c, Real v) { sys_.A.coeffRef(r, c) += v; };
        diag_terms(add);
        strain_terms(add);
        sys_.refresh();
    }
}

VecField VelocityBlock::data_rhs(const EtaFaces& eta, const FieldBc& vz_data,
                                 const FieldBc& vr_data) const {
    VecField d = viscous_data(grid_, eta, vz_data, vr_data);
    d.z = -d.z;
    d.r = -d.r;
    return d;
}

VecField VelocityBlock::solve(const VecField& rhs) const {
    const int n = grid_.cells();
    Vec b(2 * n);
    for (int c = 0; c < n; ++c) {
        b[2 * c] = rhs.z[c];
        b[2 * c + 1] = rhs.r[c];
    }
    const Vec x = sys_.solve(b);
    VecField u(n);
    for (int c = 0; c < n; ++c) {
        u.z[c] = x[2 * c];
        u.r[c] = x[2 * c + 1];
    }
    return u;
}

// ------------------------------------------------------------ PressureBlock

PressureBlock::PressureBlock(const Grid& g, const FieldBc& p_kinds, const SolverConfig& cfg)
    : grid_(g) {
    const int n = g.cells();
    std::vector<Eigen::Triplet<Real>> trip;
    trip.reserve(static_cast<size_t>(n) * 5);
    // assemble -lap_r so the system is positive definite
    lap_r_stencil(g, p_kinds, [&](int c, int o, Real w) { trip.emplace_back(c, o, -w); });
    sys_.A.resize(n, n);
    sys_.A.setFromTriplets(trip.begin(), trip.end());
    sys_.A.makeCompressed();
    sys_.symmetric = true;
    sys_.prepare(cfg, g.cells());
}

Field PressureBlock::solve(const Field& rhs) const {
    const Vec x = sys_.solve(-rhs.matrix());
    return x.array();
}

}  // namespace coflow
