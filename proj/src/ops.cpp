#include "coflow/ops.hpp"

namespace coflow {

Real integrate(const Grid& g, const Field& f) {
    Real s = 0;
    for (Eigen::Index k = 0; k < f.size(); ++k) s += f[k];
    return s * g.cell_area();
}

Real integrate_r(const Grid& g, const Field& f) {
    Real s = 0;
    for (int i = 0; i < g.nz; ++i)
        for (int j = 0; j < g.nr; ++j) s += g.rc(j) * f[g.index(i, j)];
    return s * g.cell_area();
}

// one-dimensional derivative at a cell with boundary-aware closure
namespace {

struct Line {
    // f values along one grid line, accessed by index with ghost closure
    const Field& f;
    int stride, base, n;
    Real h;
    const SideSpec *lo, *hi;
    Real lo_coord, hi_coord;  // tangential coordinate of the lo/hi face centre

    Real at(int k) const { return f[base + k * stride]; }

    Real deriv(int k) const {
        if (k > 0 && k < n - 1) return (at(k + 1) - at(k - 1)) / (2 * h);
        if (k == 0) {
            if (lo->kind == BcKind::dirichlet) {
                const Real gd = lo->data(lo_coord);
                return (-(4.0 / 3.0) * gd + at(0) + (1.0 / 3.0) * at(1)) / h;
            }
            return (at(1) - at(0)) / (2 * h);
        }
        if (hi->kind == BcKind::dirichlet) {
            const Real gd = hi->data(hi_coord);
            return ((4.0 / 3.0) * gd - at(n - 1) - (1.0 / 3.0) * at(n - 2)) / h;
        }
        return (at(n - 1) - at(n - 2)) / (2 * h);
    }
};

}  // namespace

VecField grad(const Grid& g, const Field& f, const FieldBc& bc) {
    VecField out(g.cells());
    if (g.nz < 2 || g.nr < 2) throw std::invalid_argument("grad: grid too small");
    for (int j = 0; j < g.nr; ++j) {
        Line lz{f, g.nr, j, g.nz, g.dz, &bc.west, &bc.east, g.rc(j), g.rc(j)};
        for (int i = 0; i < g.nz; ++i) out.z[g.index(i, j)] = lz.deriv(i);
    }
    for (int i = 0; i < g.nz; ++i) {
        Line lr{f, 1, i * g.nr, g.nr, g.dr, &bc.south, &bc.north, g.zc(i), g.zc(i)};
        for (int j = 0; j < g.nr; ++j) out.r[g.index(i, j)] = lr.deriv(j);
    }
    return out;
}

Field lap_r(const Grid& g, const Field& f, const FieldBc& bc) {
    Field out = lap_r_data(g, bc);
    lap_r_stencil(g, bc, [&](int c, int o, Real w) { out[c] += w * f[o]; });
    return out;
}

Field lap_r_data(const Grid& g, const FieldBc& bc) {
    Field out = Field::Zero(g.cells());
    const Real wz = 1.0 / (g.dz * g.dz), wr = 1.0 / (g.dr * g.dr);
    for (int j = 0; j < g.nr; ++j) {
        const Real r = g.rc(j);
        if (bc.west.kind == BcKind::dirichlet)
            out[g.index(0, j)] += 2.0 * r * wz * bc.west.data(r);
        if (bc.east.kind == BcKind::dirichlet)
            out[g.index(g.nz - 1, j)] += 2.0 * r * wz * bc.east.data(r);
    }
    for (int i = 0; i < g.nz; ++i) {
        const Real z = g.zc(i);
        // the south face carries zero radius, so only the north face has data
        if (bc.north.kind == BcKind::dirichlet)
            out[g.index(i, g.nr - 1)] += 2.0 * g.radius * wr * bc.north.data(z);
    }
    return out;
}

Real grad_sq_form(const Grid& g, const Field& f, const FieldBc& bc) {
    Real acc = 0;
    const Real wz = 1.0 / (g.dz * g.dz), wr = 1.0 / (g.dr * g.dr);
    for (int j = 0; j < g.nr; ++j) {
        const Real r = g.rc(j);
        for (int i = 0; i + 1 < g.nz; ++i) {
            const Real d = f[g.index(i + 1, j)] - f[g.index(i, j)];
            acc += r * d * d * wz;
        }
        if (bc.west.kind == BcKind::dirichlet) {
            const Real d = f[g.index(0, j)] - bc.west.data(r);
            acc += 2.0 * r * d * d * wz;
        }
        if (bc.east.kind == BcKind::dirichlet) {
            const Real d = f[g.index(g.nz - 1, j)] - bc.east.data(r);
            acc += 2.0 * r * d * d * wz;
        }
    }
    for (int i = 0; i < g.nz; ++i) {
        for (int j = 0; j + 1 < g.nr; ++j) {
            const Real d = f[g.index(i, j + 1)] - f[g.index(i, j)];
            acc += g.rface(j + 1) * d * d * wr;
        }
        if (bc.north.kind == BcKind::dirichlet) {
            const Real d = f[g.index(i, g.nr - 1)] - bc.north.data(g.zc(i));
            acc += 2.0 * g.radius * d * d * wr;
        }
    }
    return acc * g.cell_area();
}

namespace {

// face value of a velocity component on its normal faces
inline Real face_value_z(const Grid& g, const Field& v, const FieldBc& bc, int fi, int j) {
    if (fi == 0)
        return bc.west.kind == BcKind::dirichlet ? bc.west.data(g.rc(j)) : v[g.index(0, j)];
    if (fi == g.nz)
        return bc.east.kind == BcKind::dirichlet ? bc.east.data(g.rc(j))
                                                 : v[g.index(g.nz - 1, j)];
    return 0.5 * (v[g.index(fi - 1, j)] + v[g.index(fi, j)]);
}

inline Real face_value_r(const Grid& g, const Field& v, const FieldBc& bc, int i, int fj) {
    if (fj == 0)
        return bc.south.kind == BcKind::dirichlet ? bc.south.data(g.zc(i)) : v[g.index(i, 0)];
    if (fj == g.nr)
        return bc.north.kind == BcKind::dirichlet ? bc.north.data(g.zc(i))
                                                  : v[g.index(i, g.nr - 1)];
    return 0.5 * (v[g.index(i, fj - 1)] + v[g.index(i, fj)]);
}

}  // namespace

Field div_ru(const Grid& g, const VecField& u, const FieldBc& bcz, const FieldBc& bcr) {
    Field out(g.cells());
    for (int i = 0; i < g.nz; ++i)
        for (int j = 0; j < g.nr; ++j) {
            const Real r = g.rc(j);
            const Real fw = r * face_value_z(g, u.z, bcz, i, j);
            const Real fe = r * face_value_z(g, u.z, bcz, i + 1, j);
            const Real fs = g.rface(j) * face_value_r(g, u.r, bcr, i, j);
            const Real fn = g.rface(j + 1) * face_value_r(g, u.r, bcr, i, j + 1);
            out[g.index(i, j)] = (fe - fw) / g.dz + (fn - fs) / g.dr;
        }
    return out;
}

Field div_r(const Grid& g, const VecField& u, const FieldBc& bcz, const FieldBc& bcr) {
    Field out = div_ru(g, u, bcz, bcr);
    for (int i = 0; i < g.nz; ++i)
        for (int j = 0; j < g.nr; ++j) out[g.index(i, j)] /= g.rc(j);
    return out;
}

Field div_r_qu(const Grid& g, const Field& q, const VecField& u, const FieldBc& bcz,
               const FieldBc& bcr) {
    Field out(g.cells());
    auto qz = [&](int fi, int j) {
        if (fi == 0) return q[g.index(0, j)];
        if (fi == g.nz) return q[g.index(g.nz - 1, j)];
        return 0.5 * (q[g.index(fi - 1, j)] + q[g.index(fi, j)]);
    };
    auto qr = [&](int i, int fj) {
        if (fj == 0) return q[g.index(i, 0)];
        if (fj == g.nr) return q[g.index(i, g.nr - 1)];
        return 0.5 * (q[g.index(i, fj - 1)] + q[g.index(i, fj)]);
    };
    for (int i = 0; i < g.nz; ++i)
        for (int j = 0; j < g.nr; ++j) {
            const Real r = g.rc(j);
            const Real fw = r * qz(i, j) * face_value_z(g, u.z, bcz, i, j);
            const Real fe = r * qz(i + 1, j) * face_value_z(g, u.z, bcz, i + 1, j);
            const Real fs = g.rface(j) * qr(i, j) * face_value_r(g, u.r, bcr, i, j);
            const Real fn = g.rface(j + 1) * qr(i, j + 1) * face_value_r(g, u.r, bcr, i, j + 1);
            out[g.index(i, j)] = (fe - fw) / g.dz + (fn - fs) / g.dr;
        }
    return out;
}

Field advect(const Grid& g, const VecField& u, const Field& f, const FieldBc& bc) {
    const VecField gf = grad(g, f, bc);
    return u.z * gf.z + u.r * gf.r;
}

VecField advect_vector(const Grid& g, const VecField& a, const VecField& v, const FieldBc& bcz,
                       const FieldBc& bcr) {
    VecField out(g.cells());
    out.z = advect(g, a, v.z, bcz);
    out.r = advect(g, a, v.r, bcr);
    return out;
}

VecField j_flux(const Grid& g, const Field& mu, const FieldBc& mu_bc, Real diffusion,
                Real reynolds, Real density_ratio) {
    VecField out = grad(g, mu, mu_bc);
    const Real c = diffusion * reynolds * 0.5 * (1.0 - density_ratio);
    out.z *= c;
    out.r *= c;
    return out;
}

EtaFaces face_values(const Grid& g, const Field& eta) {
    EtaFaces out;
    out.z.resize((g.nz + 1) * g.nr);
    out.r.resize(g.nz * (g.nr + 1));
    for (int fi = 0; fi <= g.nz; ++fi)
        for (int j = 0; j < g.nr; ++j) {
            Real v;
            if (fi == 0)
                v = eta[g.index(0, j)];
            else if (fi == g.nz)
                v = eta[g.index(g.nz - 1, j)];
            else
                v = 0.5 * (eta[g.index(fi - 1, j)] + eta[g.index(fi, j)]);
            out.z[fi * g.nr + j] = v;
        }
    for (int i = 0; i < g.nz; ++i)
        for (int fj = 0; fj <= g.nr; ++fj) {
            Real v;
            if (fj == 0)
                v = eta[g.index(i, 0)];
            else if (fj == g.nr)
                v = eta[g.index(i, g.nr - 1)];
            else
                v = 0.5 * (eta[g.index(i, fj - 1)] + eta[g.index(i, fj)]);
            out.r[i * (g.nr + 1) + fj] = v;
        }
    return out;
}

EtaFaces face_geometric_mean(const EtaFaces& a, const EtaFaces& b) {
    EtaFaces out;
    out.z = (a.z * b.z).sqrt();
    out.r = (a.r * b.r).sqrt();
    return out;
}

VecField viscous_apply(const Grid& g, const EtaFaces& eta, const VecField& u, const FieldBc& bcz,
                       const FieldBc& bcr) {
    VecField out(g.cells());
    for_each_strain_sample(g, eta, bcz, bcr, [&](const StrainSample& s) {
        Real val = s.constant;
        for (int k = 0; k < s.n; ++k) {
            const auto& t = s.terms[k];
            val += t.coef * (t.comp == 0 ? u.z[t.cell] : u.r[t.cell]);
        }
        const Real ws = s.weight * val;
        for (int k = 0; k < s.n; ++k) {
            const auto& t = s.terms[k];
            (t.comp == 0 ? out.z : out.r)[t.cell] += ws * t.coef;
        }
    });
    return out;
}

Real viscous_energy(const Grid& g, const EtaFaces& eta, const VecField& u, const FieldBc& bcz,
                    const FieldBc& bcr) {
    Real acc = 0;
    for_each_strain_sample(g, eta, bcz, bcr, [&](const StrainSample& s) {
        Real val = s.constant;
        for (int k = 0; k < s.n; ++k) {
            const auto& t = s.terms[k];
            val += t.coef * (t.comp == 0 ? u.z[t.cell] : u.r[t.cell]);
        }
        acc += s.weight * val * val;
    });
    return 2.0 * acc * g.cell_area();
}

VecField viscous_data(const Grid& g, const EtaFaces& eta, const FieldBc& bcz,
                      const FieldBc& bcr) {
    VecField out(g.cells());
    for_each_strain_sample(g, eta, bcz, bcr, [&](const StrainSample& s) {
        if (s.constant == 0) return;
        const Real ws = s.weight * s.constant;
        for (int k = 0; k < s.n; ++k) {
            const auto& t = s.terms[k];
            (t.comp == 0 ? out.z : out.r)[t.cell] += ws * t.coef;
        }
    });
    return out;
}

CapTrace cap_trace(const Grid& g, const Field& f) {
    if (g.nz < 3) throw std::invalid_argument("cap_trace: needs nz >= 3");
    CapTrace t;
    t.west.resize(g.nr);
    t.east.resize(g.nr);
    t.dz_west.resize(g.nr);
    t.dz_east.resize(g.nr);
    const int n = g.nz;
    for (int j = 0; j < g.nr; ++j) {
        const Real f0 = f[g.index(0, j)], f1 = f[g.index(1, j)], f2 = f[g.index(2, j)];
        t.west[j] = 1.5 * f0 - 0.5 * f1;
        t.dz_west[j] = (-2.0 * f0 + 3.0 * f1 - f2) / g.dz;
        const Real e0 = f[g.index(n - 1, j)], e1 = f[g.index(n - 2, j)], e2 = f[g.index(n - 3, j)];
        t.east[j] = 1.5 * e0 - 0.5 * e1;
        t.dz_east[j] = (2.0 * e0 - 3.0 * e1 + e2) / g.dz;
    }
    return t;
}

Real cap_integral(const Grid& g, const Field& w) {
    Real s = 0;
    for (int j = 0; j < g.nr; ++j) s += w[j];
    return s * g.dr;
}

}  // namespace coflow
