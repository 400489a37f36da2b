#pragma once

#include <optional>
#include <string>

#include <Eigen/Dense>

namespace orbitopes {

enum class Status { Inside, Boundary, Outside };

/// Uniform return type of all membership oracles.  The margin is the worst
/// slack of the defining constraints (or the minimal eigenvalue of an LMI
/// slack block); equality constraints contribute only when violated beyond
/// the tolerance, so points of the carrying affine slice are not forced onto
/// the boundary.
struct MembershipVerdict {
    Status status = Status::Outside;
    double margin = 0.0;
    std::string note;                             // which constraint binds/fails
    std::optional<Eigen::VectorXd> witness;       // e.g. binding eigenvector

    bool inside() const { return status == Status::Inside; }
    bool outside() const { return status == Status::Outside; }
    bool boundary() const { return status == Status::Boundary; }
};

inline Status classify_margin(double margin, double tol) {
    if (margin > tol) return Status::Inside;
    if (margin < -tol) return Status::Outside;
    return Status::Boundary;
}

inline const char* to_string(Status s) {
    switch (s) {
        case Status::Inside: return "Inside";
        case Status::Boundary: return "Boundary";
        default: return "Outside";
    }
}

}  // namespace orbitopes
