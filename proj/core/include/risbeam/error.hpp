// SPDX-License-Identifier: Apache-2.0

#ifndef RISBEAM_ERROR_HPP
#define RISBEAM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace risbeam {

/// Bad arguments, broken invariants, malformed input documents.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Filesystem problems (missing file, unwritable output).
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

/// Numerically degenerate requests (e.g. metrics of an all-zero field).
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace risbeam

#endif
