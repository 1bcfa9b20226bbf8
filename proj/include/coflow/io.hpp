#pragma once

#include <iosfwd>
#include <string>

#include "coflow/diagnostics.hpp"
#include "coflow/driver.hpp"

namespace coflow {

void write_diag_header(std::ostream& os);
void write_diag_row(std::ostream& os, const DiagnosticsRecord& r);

/// Legacy ASCII structured-grid VTK snapshot with point data phi, mu, p,
/// v_z, v_r at the cell centres.
void write_vtk(const std::string& path, const Grid& g, const State& st);

/// Versioned little-endian binary checkpoint of the complete run state.
struct Checkpoint {
    int nz = 0, nr = 0;
    Real length = 0, radius = 0;
    Params params;
    State state;
    BoundaryWorkAudit work;
    int pinch_events = 0;
    Real first_pinch_time = -1;
    Real rd_max = 0;
};

void save_checkpoint(const std::string& path, const Checkpoint& c);
Checkpoint load_checkpoint(const std::string& path);

Checkpoint make_checkpoint(const Simulation& sim);
void restore_into(Simulation& sim, const Checkpoint& c);

}  // namespace coflow
