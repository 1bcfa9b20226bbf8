#pragma once

#include <Eigen/Core>
#include <cmath>
#include <stdexcept>
#include <string>

namespace coflow {

using Real = double;

/// Cell-centred scalar field, one value per grid cell.
using Field = Eigen::ArrayXd;

/// Velocity field, (axial, radial) components on cell centres.
struct VecField {
    Field z, r;

    VecField() = default;
    explicit VecField(Eigen::Index n) : z(Field::Zero(n)), r(Field::Zero(n)) {}

    Eigen::Index size() const { return z.size(); }
    void setZero() { z.setZero(); r.setZero(); }
};

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

struct SolveError : std::runtime_error {
    SolveError(const std::string& what, Real residual)
        : std::runtime_error(what), final_residual(residual) {}
    Real final_residual;
};

/// Positivity audit failure: a denominator or accumulator the scheme proves
/// positive came out non-positive.
struct AuditError : std::runtime_error {
    explicit AuditError(const std::string& what) : std::runtime_error(what) {}
};

inline bool all_finite(const Field& f) { return f.isFinite().all(); }
inline bool all_finite(const VecField& u) { return all_finite(u.z) && all_finite(u.r); }

inline void require_finite(const Field& f, const char* name) {
    if (!all_finite(f)) throw std::runtime_error(std::string("non-finite values in field ") + name);
}

}  // namespace coflow
