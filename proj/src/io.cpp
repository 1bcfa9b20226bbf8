#include "coflow/io.hpp"

#include <cstdio>
#include <cstring>
#include <fstream>
#include <ostream>

namespace coflow {

namespace {

std::string fmt(Real v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

void write_diag_header(std::ostream& os) {
    os << "step,time,E_O,E_M,Q,R,T,U,K,S,divnorm,Rd,pinch\n";
}

void write_diag_row(std::ostream& os, const DiagnosticsRecord& r) {
    os << r.step << ',' << fmt(r.time) << ',' << fmt(r.E_O) << ',' << fmt(r.E_M) << ','
       << fmt(r.Q) << ',' << fmt(r.R) << ',' << fmt(r.T) << ',' << fmt(r.U) << ',' << fmt(r.K)
       << ',' << fmt(r.S) << ',' << fmt(r.div_norm) << ',' << fmt(r.droplet_radius) << ','
       << (r.pinch_off ? 1 : 0) << '\n';
}

void write_vtk(const std::string& path, const Grid& g, const State& st) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open " + path);
    os << "# vtk DataFile Version 3.0\n";
    os << "coflow snapshot step " << st.step << " time " << fmt(st.time) << "\n";
    os << "ASCII\nDATASET STRUCTURED_GRID\n";
    os << "DIMENSIONS " << g.nz << ' ' << g.nr << " 1\n";
    os << "POINTS " << g.cells() << " double\n";
    for (int j = 0; j < g.nr; ++j)
        for (int i = 0; i < g.nz; ++i) os << fmt(g.zc(i)) << ' ' << fmt(g.rc(j)) << " 0\n";
    os << "POINT_DATA " << g.cells() << "\n";
    auto scalars = [&](const char* name, const Field& f) {
        os << "SCALARS " << name << " double 1\nLOOKUP_TABLE default\n";
        for (int j = 0; j < g.nr; ++j)
            for (int i = 0; i < g.nz; ++i) os << fmt(f[g.index(i, j)]) << "\n";
    };
    scalars("phi", st.phi);
    scalars("mu", st.mu);
    scalars("p", st.p);
    scalars("v_z", st.u.z);
    scalars("v_r", st.u.r);
}

// --------------------------------------------------------------- checkpoint
// Layout (little-endian): magic "CFLWCKP1", then int32/float64 fields in the
// order written below, then the five cell arrays.

namespace {

constexpr char kMagic[8] = {'C', 'F', 'L', 'W', 'C', 'K', 'P', '1'};

void put_i32(std::ostream& os, int32_t v) { os.write(reinterpret_cast<const char*>(&v), 4); }
void put_i64(std::ostream& os, int64_t v) { os.write(reinterpret_cast<const char*>(&v), 8); }
void put_f64(std::ostream& os, Real v) { os.write(reinterpret_cast<const char*>(&v), 8); }
void put_field(std::ostream& os, const Field& f) {
    put_i64(os, f.size());
    os.write(reinterpret_cast<const char*>(f.data()), static_cast<std::streamsize>(8 * f.size()));
}

int32_t get_i32(std::istream& is) {
    int32_t v;
    is.read(reinterpret_cast<char*>(&v), 4);
    return v;
}
int64_t get_i64(std::istream& is) {
    int64_t v;
    is.read(reinterpret_cast<char*>(&v), 8);
    return v;
}
Real get_f64(std::istream& is) {
    Real v;
    is.read(reinterpret_cast<char*>(&v), 8);
    return v;
}
Field get_field(std::istream& is) {
    const int64_t n = get_i64(is);
    Field f(n);
    is.read(reinterpret_cast<char*>(f.data()), static_cast<std::streamsize>(8 * n));
    return f;
}

}  // namespace

void save_checkpoint(const std::string& path, const Checkpoint& c) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open " + path);
    os.write(kMagic, 8);
    put_i32(os, c.nz);
    put_i32(os, c.nr);
    put_f64(os, c.length);
    put_f64(os, c.radius);
    const Params& p = c.params;
    for (Real v : {p.reynolds, p.capillary, p.sigma_coef, p.cahn, p.diffusion, p.density_ratio,
                   p.viscosity_ratio, p.flow_ratio, p.stabilizer_s, p.radicand_offset_B,
                   p.radicand_offset_G, p.ode_damping, p.dt, p.bond, p.end_time, p.gravity_accel})
        put_f64(os, v);
    put_i32(os, static_cast<int32_t>(p.gravity_mode));
    put_i64(os, c.state.step);
    put_f64(os, c.state.time);
    for (Real v : {c.state.U, c.state.Q, c.state.R, c.state.T, c.state.K, c.state.S_accum})
        put_f64(os, v);
    put_f64(os, c.work.work);
    put_f64(os, c.work.last_rate);
    put_i32(os, c.work.primed ? 1 : 0);
    put_i32(os, c.pinch_events);
    put_f64(os, c.first_pinch_time);
    put_f64(os, c.rd_max);
    put_field(os, c.state.phi);
    put_field(os, c.state.mu);
    put_field(os, c.state.p);
    put_field(os, c.state.p_prev);
    put_field(os, c.state.u.z);
    put_field(os, c.state.u.r);
}

Checkpoint load_checkpoint(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open " + path);
    char magic[8];
    is.read(magic, 8);
    if (std::memcmp(magic, kMagic, 8) != 0)
        throw std::runtime_error(path + ": not a coflow checkpoint (or wrong version)");
    Checkpoint c;
    c.nz = get_i32(is);
    c.nr = get_i32(is);
    c.length = get_f64(is);
    c.radius = get_f64(is);
    Params& p = c.params;
    for (Real* v : {&p.reynolds, &p.capillary, &p.sigma_coef, &p.cahn, &p.diffusion,
                    &p.density_ratio, &p.viscosity_ratio, &p.flow_ratio, &p.stabilizer_s,
                    &p.radicand_offset_B, &p.radicand_offset_G, &p.ode_damping, &p.dt, &p.bond,
                    &p.end_time, &p.gravity_accel})
        *v = get_f64(is);
    p.gravity_mode = static_cast<GravityMode>(get_i32(is));
    c.state.step = get_i64(is);
    c.state.time = get_f64(is);
    for (Real* v :
         {&c.state.U, &c.state.Q, &c.state.R, &c.state.T, &c.state.K, &c.state.S_accum})
        *v = get_f64(is);
    c.work.work = get_f64(is);
    c.work.last_rate = get_f64(is);
    c.work.primed = get_i32(is) != 0;
    c.pinch_events = get_i32(is);
    c.first_pinch_time = get_f64(is);
    c.rd_max = get_f64(is);
    c.state.phi = get_field(is);
    c.state.mu = get_field(is);
    c.state.p = get_field(is);
    c.state.p_prev = get_field(is);
    c.state.u.z = get_field(is);
    c.state.u.r = get_field(is);
    if (!is) throw std::runtime_error(path + ": truncated checkpoint");
    return c;
}

Checkpoint make_checkpoint(const Simulation& sim) {
    Checkpoint c;
    c.nz = sim.grid().nz;
    c.nr = sim.grid().nr;
    c.length = sim.grid().length;
    c.radius = sim.grid().radius;
    c.params = sim.params();
    c.state = sim.state();
    c.work = sim.work_audit();
    c.pinch_events = sim.pinch_events();
    c.first_pinch_time = sim.first_pinch_time();
    c.rd_max = sim.droplet_radius_max();
    return c;
}

void restore_into(Simulation& sim, const Checkpoint& c) {
    if (c.nz != sim.grid().nz || c.nr != sim.grid().nr ||
        c.length != sim.grid().length || c.radius != sim.grid().radius)
        throw ConfigError("checkpoint grid does not match the configured scenario");
    sim.restore(c.state, c.work, c.pinch_events, c.first_pinch_time, c.rd_max);
}

}  // namespace coflow
