#pragma once

#include <Eigen/IterativeLinearSolvers>
#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>
#include <Eigen/SparseLU>
#include <memory>
#include <optional>
#include <string>

#include "coflow/ops.hpp"
#include "coflow/params.hpp"
#include "coflow/state.hpp"

namespace coflow {

using SpMat = Eigen::SparseMatrix<Real, Eigen::RowMajor>;
using SpMatCol = Eigen::SparseMatrix<Real>;
using Vec = Eigen::VectorXd;

struct SolverConfig {
    std::string mode = "auto";  // auto | direct | iterative
    Real rtol = 1e-10;
    int max_iter = 20000;
    int direct_cell_limit = 65536;

    bool use_direct(int cells) const {
        if (mode == "direct") return true;
        if (mode == "iterative") return false;
        return cells <= direct_cell_limit;
    }
};

/// Sparse system with a cached solution strategy.  Constant-coefficient
/// systems are factorised once; the velocity system re-uses its symbolic
/// factorisation/pattern and only refreshes numeric values.
class SparseSystem {
  public:
    SpMat A;
    bool symmetric = false;

    void prepare(const SolverConfig& cfg, int cells, bool reuse_symbolic = false);
    /// Re-factor / refresh preconditioner after A's values changed in place.
    void refresh();
    /// Solves to the residual contract ||Ax-b||/||b|| <= rtol; throws
    /// SolveError past the iteration cap and on non-finite values.
    Vec solve(const Vec& b) const;

    Real checksum() const;

  private:
    SolverConfig cfg_;
    bool direct_ = false;
    bool analyzed_ = false;
    mutable SpMatCol Acol_;
    std::unique_ptr<Eigen::SparseLU<SpMatCol>> lu_;
    std::unique_ptr<Eigen::SimplicialLDLT<SpMatCol>> ldlt_;
    std::unique_ptr<Eigen::IncompleteLUT<Real>> ilut_;
    Vec inv_diag_;  // Jacobi preconditioner

    Vec solve_once(const Vec& b) const;
};

// ------------------------------------------------------------- CH block

/// The shared two-field system of the four STEP-1 sub-solves, unknowns
/// interleaved (phi_c, mu_c):
///   (r/dt) phi - L_d lap_r mu            = rhs1
///   r mu + eps lap_r phi - (r s/eps) phi = rhs2
/// Dirichlet rows differ only in data, so one matrix (and factorisation)
/// serves all sub-systems.
class ChBlock {
  public:
    ChBlock(const Grid& g, const Params& p, const FieldBc& phi_kinds, const FieldBc& mu_kinds,
            const SolverConfig& cfg);

    /// Solve with given volume right-hand sides and Dirichlet data.
    std::pair<Field, Field> solve(const Field& rhs1, const Field& rhs2, const FieldBc& phi_data,
                                  const FieldBc& mu_data) const;

    const SparseSystem& system() const { return sys_; }

  private:
    Grid grid_;
    Real dt_, diffusion_, eps_, s_;
    SparseSystem sys_;
};

// ------------------------------------------------------- velocity block

/// STEP-2 operator, unknowns interleaved (vz_c, vr_c):
///   mass_coef u - div(r eta D(u)) + (0, 2 eta vr / r) = rhs
/// with mass_coef = Re (r/2)(rho^{n+1}+rho^n)/dt.  The pattern and the
/// symbolic factorisation are built once; values refresh every step.
class VelocityBlock {
  public:
    VelocityBlock(const Grid& g, const FieldBc& vz_kinds, const FieldBc& vr_kinds,
                  const SolverConfig& cfg);

    void assemble(const Field& mass_coef, const EtaFaces& eta, const Field& eta_cells);

    /// -L_D applied to the zero field with the given Dirichlet data; add to
    /// the right-hand side of a solve that should honour that data.
    VecField data_rhs(const EtaFaces& eta, const FieldBc& vz_data, const FieldBc& vr_data) const;

    VecField solve(const VecField& rhs) const;

    const SparseSystem& system() const { return sys_; }

  private:
    Grid grid_;
    FieldBc vz_kinds_, mu_unused_{}, vr_kinds_;
    SparseSystem sys_;
    bool pattern_built_ = false;
    SolverConfig cfg_;
};

// ------------------------------------------------------- pressure block

/// STEP-3 Poisson operator  lap_r p = rhs  with natural conditions on the
/// wall, inlet and axis and p = 0 at the outlet (pins the constant).
class PressureBlock {
  public:
    PressureBlock(const Grid& g, const FieldBc& p_kinds, const SolverConfig& cfg);
    Field solve(const Field& rhs) const;
    const SparseSystem& system() const { return sys_; }

  private:
    Grid grid_;
    SparseSystem sys_;
};

}  // namespace coflow
