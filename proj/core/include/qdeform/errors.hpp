#pragma once

#include <stdexcept>
#include <string>

namespace qdeform {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A basis-change matrix failed inversion at the working tolerance.
class SingularTransform : public Error {
public:
    using Error::Error;
};

/// Two representations built over different quivers were combined.
class QuiverMismatch : public Error {
public:
    using Error::Error;
};

/// An (arrow, row, col) index points outside its arrow's matrix.
class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

/// A coordinate vector does not have the expected length.
class LengthMismatch : public Error {
public:
    using Error::Error;
};

/// A parameter value was supplied for a slot outside the template's set.
class UnknownParameter : public Error {
public:
    using Error::Error;
};

/// Pairwise deformation data does not assemble into a consistent whole.
class InconsistentBlocks : public Error {
public:
    using Error::Error;
};

/// Identity-arrow contraction requested on a non-identity matrix.
class NotIdentity : public Error {
public:
    using Error::Error;
};

/// Identity-arrow contraction requested on a loop.
class LoopArrow : public Error {
public:
    using Error::Error;
};

/// An interval does not fit the chain it was declared on.
class BadInterval : public Error {
public:
    using Error::Error;
};

/// An interval pair was not given in lexicographic order.
class OrderViolation : public Error {
public:
    using Error::Error;
};

/// The supplied parameter set does not give a miniversal deformation.
class NotMiniversal : public Error {
public:
    using Error::Error;
};

/// A reduction step produced a non-invertible transform.
class SingularStep : public Error {
public:
    using Error::Error;
};

/// Certified-mode input lies outside the certificate's radius.
class PreconditionViolated : public Error {
public:
    using Error::Error;
};

/// Problem-file syntax or validation failure; carries a 1-based line number.
class ParseError : public Error {
public:
    ParseError(int line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

} // namespace qdeform
