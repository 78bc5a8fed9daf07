#pragma once

#include <stdexcept>
#include <string>

namespace braidalg {

// Error taxonomy shared across the library. Each condition that callers may
// want to distinguish gets its own type; everything derives from Error so a
// CLI can catch one base class.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class RingMismatch : public Error {
public:
    using Error::Error;
};

class NotInvertible : public Error {
public:
    using Error::Error;
};

class GroupMismatch : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class InhomogeneousRelation : public Error {
public:
    using Error::Error;
};

class GradingMismatch : public Error {
public:
    using Error::Error;
};

class NonMonomialLeadingCoefficient : public Error {
public:
    using Error::Error;
};

class DivergenceGuard : public Error {
public:
    using Error::Error;
};

class InconsistentPresentation : public Error {
public:
    using Error::Error;
};

class AdDegreeOutsideSubgroup : public Error {
public:
    using Error::Error;
};

class GammaInconsistent : public Error {
public:
    using Error::Error;
};

class PreconditionFailed : public Error {
public:
    using Error::Error;
};

class SingularMatrix : public Error {
public:
    using Error::Error;
};

class NotUnitary : public Error {
public:
    using Error::Error;
};

class HypothesisViolated : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

} // namespace braidalg
