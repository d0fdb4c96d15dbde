#pragma once

#include <stdexcept>
#include <string>

namespace geolab {

// Base class for every failure reported by the lab modules.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Immersion differential lost rank (EG - F^2 below floor).
class DegenerateImmersion : public Error {
public:
    using Error::Error;
};

// A triangle fell below the configured area floor.
class DegenerateTriangle : public Error {
public:
    using Error::Error;
};

// Non-manifold, inconsistently wound or otherwise malformed mesh.
class InvalidMesh : public Error {
public:
    using Error::Error;
};

class StepRejected : public Error {
public:
    using Error::Error;
};

// Ricci tensor leaves the tangent space of a metric family.
class ProjectionResidual : public Error {
public:
    using Error::Error;
};

// Geodesic left the chart domain before reaching the requested radius.
class PartialBall : public Error {
public:
    using Error::Error;
};

class NotPositiveDefinite : public Error {
public:
    using Error::Error;
};

class BianchiFailure : public Error {
public:
    using Error::Error;
};

class SolverNonConvergence : public Error {
public:
    using Error::Error;
};

class AssemblyError : public Error {
public:
    using Error::Error;
};

// Surface/ball intersection could not be resolved by the region quadrature.
class RefinementError : public Error {
public:
    using Error::Error;
};

// Input failed a validation precondition (mixed eigenvalues, non-minimal patch, ...).
class Rejected : public Error {
public:
    using Error::Error;
};

class IllConditioned : public Error {
public:
    using Error::Error;
};

} // namespace geolab
