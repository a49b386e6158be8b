#pragma once

#include <stdexcept>
#include <string>

namespace umbraq {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid parameter (q outside (0, q_max], negative order, bad config).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Argument sits on a pole of a Gamma-type function.
class PoleError : public Error {
public:
    using Error::Error;
};

/// An infinite product hit its factor cap before the tail bound was met.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

/// A series failed the ratio test or ran out of terms.
class SeriesDivergence : public Error {
public:
    using Error::Error;
};

class SearchFailure : public Error {
public:
    using Error::Error;
};

}  // namespace umbraq
