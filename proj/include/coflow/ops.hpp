#pragma once

#include <array>

#include "coflow/bc.hpp"
#include "coflow/grid.hpp"
#include "coflow/types.hpp"

namespace coflow {

// ---------------------------------------------------------------- integrals

/// Midpoint-rule cell sums with a fixed reduction order.
Real integrate(const Grid& g, const Field& f);
Real integrate_r(const Grid& g, const Field& f);
/// \int_Omega r dr dz = a^2 L / 2 (midpoint rule reproduces it exactly).
inline Real domain_r_integral(const Grid& g) { return 0.5 * g.radius * g.radius * g.length; }

// ---------------------------------------------- explicit difference operators

/// Centred gradient; boundary cells use second-order one-sided stencils that
/// include the Dirichlet face value, or the mirror closure on Neumann sides.
VecField grad(const Grid& g, const Field& f, const FieldBc& bc);

/// div(r grad f), conservative flux form, pointwise values (not divided by r).
Field lap_r(const Grid& g, const Field& f, const FieldBc& bc);

/// d_z(r vz) + d_r(r vr) from face fluxes; boundary faces take the Dirichlet
/// data (or the cell value on Neumann sides).
Field div_ru(const Grid& g, const VecField& u, const FieldBc& bcz, const FieldBc& bcr);

/// (1/r) [d_z(r vz) + d_r(r vr)].
Field div_r(const Grid& g, const VecField& u, const FieldBc& bcz, const FieldBc& bcr);

/// d_z(r q vz) + d_r(r q vr) for a cell coefficient q (density flux);
/// face values of q by adjacent-cell mean, boundary faces by the cell value.
Field div_r_qu(const Grid& g, const Field& q, const VecField& u, const FieldBc& bcz,
               const FieldBc& bcr);

/// (u . grad) f.
Field advect(const Grid& g, const VecField& u, const Field& f, const FieldBc& bc);

/// Component-wise (a . grad) v.
VecField advect_vector(const Grid& g, const VecField& a, const VecField& v, const FieldBc& bcz,
                       const FieldBc& bcr);

/// J(mu) = L_d Re (1 - lambda_rho)/2 * grad(mu).
VecField j_flux(const Grid& g, const Field& mu, const FieldBc& mu_bc, Real diffusion,
                Real reynolds, Real density_ratio);

// ------------------------------------------------ lap_r assembly enumeration

/// Matrix stencil of lap_r (data-independent; Dirichlet ghosts fold into the
/// diagonal).  sink(cell, other_cell, weight).
template <class Sink>
void lap_r_stencil(const Grid& g, const FieldBc& bc, Sink&& sink);

/// Contribution of the Dirichlet data to lap_r applied to the zero field;
/// the assembled system moves -lap_r_data to its right-hand side.
Field lap_r_data(const Grid& g, const FieldBc& bc);

/// Discrete Dirichlet energy matching lap_r's stencil:
///   sum_{interior faces} r_f (df/h)^2 dV + sum_{Dirichlet faces} 2 r_f ((f_c-g)/h)^2 dV
/// so that  -<lap_r f, f> dV = grad_sq_form(f) when the data is zero.
Real grad_sq_form(const Grid& g, const Field& f, const FieldBc& bc);

// ----------------------------------------------------- viscous strain machinery

/// Viscosity sampled on faces: z-faces (nz+1) x nr, r-faces nz x (nr+1).
struct EtaFaces {
    Field z, r;
};
EtaFaces face_values(const Grid& g, const Field& eta);
EtaFaces face_geometric_mean(const EtaFaces& a, const EtaFaces& b);

struct StrainTerm {
    int cell;
    int comp;  // 0 = vz, 1 = vr
    Real coef;
};

/// One face strain sample S = sum coef * u + constant with quadratic-form
/// weight W; the viscous operator is the gradient of
///   Phi(u) = sum_samples W S^2 dV,
/// which keeps assembly, explicit application and the energy evaluation on
/// one stencil and makes the assembled block symmetric positive semidefinite.
struct StrainSample {
    Real weight = 0;
    int n = 0;
    std::array<StrainTerm, 12> terms{};
    Real constant = 0;

    void add(int cell, int comp, Real coef) { terms[n++] = {cell, comp, coef}; }
};

/// Enumerates every strain sample of the axisymmetric rate-of-strain tensor:
/// 2*ezz and (dz vr + dr vz) on z-faces, 2*err and (dr vz + dz vr) on
/// r-faces, mixed samples carrying weight 1/2 per family.  Axis faces have
/// zero radius and are skipped.  Tangential derivatives at edge faces use
/// one-sided second-order stencils; at Dirichlet boundary faces they reduce
/// to derivatives of the boundary data.
template <class F>
void for_each_strain_sample(const Grid& g, const EtaFaces& eta, const FieldBc& bcz,
                            const FieldBc& bcr, F&& f);

/// L_D u = -div(r eta D(u)) in the symmetrised form above (axis term excluded).
VecField viscous_apply(const Grid& g, const EtaFaces& eta, const VecField& u, const FieldBc& bcz,
                       const FieldBc& bcr);

/// Discrete \int r eta |D(u)|^2 dr dz (= 2 Phi).
Real viscous_energy(const Grid& g, const EtaFaces& eta, const VecField& u, const FieldBc& bcz,
                    const FieldBc& bcr);

/// Data (inhomogeneous Dirichlet) part of L_D applied to the zero field.
VecField viscous_data(const Grid& g, const EtaFaces& eta, const FieldBc& bcz, const FieldBc& bcr);

// --------------------------------------------------------------- cap traces

/// Field value and d/dz extrapolated to the inlet (west) and outlet (east)
/// caps, one entry per radial cell row.  Quadratic extrapolation through the
/// three nearest cells; u=0 states therefore trace to zero regardless of the
/// inflow data.
struct CapTrace {
    Field west, east;      // face values
    Field dz_west, dz_east;  // one-sided d/dz at the face
};
CapTrace cap_trace(const Grid& g, const Field& f);

/// Midpoint quadrature along a cap: sum_j w(j) dr.
Real cap_integral(const Grid& g, const Field& w);

// ------------------------------------------------------------ implementation

template <class Sink>
void lap_r_stencil(const Grid& g, const FieldBc& bc, Sink&& sink) {
    const Real wz = 1.0 / (g.dz * g.dz), wr = 1.0 / (g.dr * g.dr);
    for (int i = 0; i < g.nz; ++i) {
        for (int j = 0; j < g.nr; ++j) {
            const int c = g.index(i, j);
            const Real r = g.rc(j);
            // west / east faces carry coefficient r_c
            if (i > 0) {
                sink(c, g.index(i - 1, j), r * wz);
                sink(c, c, -r * wz);
            } else if (bc.west.kind == BcKind::dirichlet) {
                sink(c, c, -2.0 * r * wz);
            }
            if (i < g.nz - 1) {
                sink(c, g.index(i + 1, j), r * wz);
                sink(c, c, -r * wz);
            } else if (bc.east.kind == BcKind::dirichlet) {
                sink(c, c, -2.0 * r * wz);
            }
            // south / north faces carry the face radius (zero on the axis)
            const Real rs = g.rface(j), rn = g.rface(j + 1);
            if (j > 0) {
                sink(c, g.index(i, j - 1), rs * wr);
                sink(c, c, -rs * wr);
            } else if (bc.south.kind == BcKind::dirichlet && rs > 0) {
                sink(c, c, -2.0 * rs * wr);
            }
            if (j < g.nr - 1) {
                sink(c, g.index(i, j + 1), rn * wr);
                sink(c, c, -rn * wr);
            } else if (bc.north.kind == BcKind::dirichlet) {
                sink(c, c, -2.0 * rn * wr);
            }
        }
    }
}

template <class F>
void for_each_strain_sample(const Grid& g, const EtaFaces& eta, const FieldBc& bcz,
                            const FieldBc& bcr, F&& f) {
    const int nz = g.nz, nr = g.nr;
    const Real dz = g.dz, dr = g.dr;
    auto idx = [&](int i, int j) { return g.index(i, j); };

    // ---- z-faces (fi, j), fi in [0, nz]
    for (int fi = 0; fi <= nz; ++fi) {
        const bool west = fi == 0, east = fi == nz;
        for (int j = 0; j < nr; ++j) {
            const Real rf = g.rc(j);
            const Real ef = eta.z[fi * nr + j];

            // 2*ezz sample
            if (!east || bcz.east.kind == BcKind::dirichlet) {
                StrainSample s;
                s.weight = 2.0 * ef * rf;
                if (west) {
                    if (bcz.west.kind == BcKind::dirichlet) {
                        s.add(idx(0, j), 0, 2.0 / dz);
                        s.constant = -2.0 * bcz.west.data(rf) / dz;
                    } else {
                        s.weight = 0;  // mirror: zero strain
                    }
                } else if (east) {
                    s.add(idx(nz - 1, j), 0, -2.0 / dz);
                    s.constant = 2.0 * bcz.east.data(rf) / dz;
                } else {
                    s.add(idx(fi, j), 0, 1.0 / dz);
                    s.add(idx(fi - 1, j), 0, -1.0 / dz);
                }
                if (s.weight != 0) f(s);
            }

            // mixed sample: dz vr + dr vz, family weight 1/2
            {
                StrainSample s;
                s.weight = 0.5 * ef * rf;
                // normal part dz vr
                if (west) {
                    if (bcr.west.kind == BcKind::dirichlet) {
                        s.add(idx(0, j), 1, 2.0 / dz);
                        s.constant += -2.0 * bcr.west.data(rf) / dz;
                    }
                } else if (east) {
                    if (bcr.east.kind == BcKind::dirichlet) {
                        s.add(idx(nz - 1, j), 1, -2.0 / dz);
                        s.constant += 2.0 * bcr.east.data(rf) / dz;
                    }
                } else {
                    s.add(idx(fi, j), 1, 1.0 / dz);
                    s.add(idx(fi - 1, j), 1, -1.0 / dz);
                }
                // tangential part dr vz: face values of vz at rows j-1..j+1
                // face value = mean of adjacent cells (interior), boundary
                // data (Dirichlet face) or the single cell (Neumann face)
                auto add_face_vz = [&](int row, Real coef) {
                    if (west && bcz.west.kind == BcKind::dirichlet) {
                        s.constant += coef * bcz.west.data(g.rc(row));
                    } else if (west) {  // Neumann west (unused here)
                        s.add(idx(0, row), 0, coef);
                    } else if (east && bcz.east.kind == BcKind::neumann) {
                        s.add(idx(nz - 1, row), 0, coef);
                    } else if (east) {
                        s.constant += coef * bcz.east.data(g.rc(row));
                    } else {
                        s.add(idx(fi - 1, row), 0, 0.5 * coef);
                        s.add(idx(fi, row), 0, 0.5 * coef);
                    }
                };
                if (j > 0 && j < nr - 1) {
                    add_face_vz(j + 1, 0.5 / dr);
                    add_face_vz(j - 1, -0.5 / dr);
                } else if (j == 0) {
                    add_face_vz(0, -1.5 / dr);
                    add_face_vz(1, 2.0 / dr);
                    add_face_vz(2, -0.5 / dr);
                } else {
                    add_face_vz(nr - 1, 1.5 / dr);
                    add_face_vz(nr - 2, -2.0 / dr);
                    add_face_vz(nr - 3, 0.5 / dr);
                }
                f(s);
            }
        }
    }

    // ---- r-faces (i, fj), fj in [0, nr]; fj = 0 sits on the axis (r = 0)
    for (int i = 0; i < nz; ++i) {
        for (int fj = 1; fj <= nr; ++fj) {
            const bool north = fj == nr;
            const Real rf = g.rface(fj);
            const Real ef = eta.r[i * (nr + 1) + fj];

            // 2*err sample
            {
                StrainSample s;
                s.weight = 2.0 * ef * rf;
                if (north) {
                    if (bcr.north.kind == BcKind::dirichlet) {
                        s.add(idx(i, nr - 1), 1, -2.0 / dr);
                        s.constant = 2.0 * bcr.north.data(g.zc(i)) / dr;
                    } else {
                        s.weight = 0;
                    }
                } else {
                    s.add(idx(i, fj), 1, 1.0 / dr);
                    s.add(idx(i, fj - 1), 1, -1.0 / dr);
                }
                if (s.weight != 0) f(s);
            }

            // mixed sample: dr vz + dz vr, family weight 1/2
            {
                StrainSample s;
                s.weight = 0.5 * ef * rf;
                if (north) {
                    if (bcz.north.kind == BcKind::dirichlet) {
                        s.add(idx(i, nr - 1), 0, -2.0 / dr);
                        s.constant += 2.0 * bcz.north.data(g.zc(i)) / dr;
                    }
                    // tangential dz vr along the wall: data is constant zero
                } else {
                    s.add(idx(i, fj), 0, 1.0 / dr);
                    s.add(idx(i, fj - 1), 0, -1.0 / dr);
                    auto add_face_vr = [&](int col, Real coef) {
                        s.add(idx(col, fj - 1), 1, 0.5 * coef);
                        s.add(idx(col, fj), 1, 0.5 * coef);
                    };
                    if (i > 0 && i < nz - 1) {
                        add_face_vr(i + 1, 0.5 / dz);
                        add_face_vr(i - 1, -0.5 / dz);
                    } else if (i == 0) {
                        add_face_vr(0, -1.5 / dz);
                        add_face_vr(1, 2.0 / dz);
                        add_face_vr(2, -0.5 / dz);
                    } else {
                        add_face_vr(nz - 1, 1.5 / dz);
                        add_face_vr(nz - 2, -2.0 / dz);
                        add_face_vr(nz - 3, 0.5 / dz);
                    }
                }
                f(s);
            }
        }
    }
}

}  // namespace coflow
