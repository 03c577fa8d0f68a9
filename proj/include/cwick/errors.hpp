#pragma once

#include <stdexcept>
#include <string>

namespace cwick {

// Base class for everything this library throws on purpose.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Division by an exact zero (scalar inversion, rational construction).
class division_by_zero : public error {
public:
    using error::error;
};

// Evaluating a scalar at a point where its denominator vanishes.
class evaluation_pole : public error {
public:
    using error::error;
};

// Text that does not match a grammar. Positions are 1-based; line may be 0
// for single-line inputs supplied on the command line.
class parse_error : public error {
public:
    parse_error(const std::string& what, int line, int column)
        : error(format(what, line, column)), raw_(what), line_(line), column_(column) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

    // The message without the position prefix, for re-anchoring.
    const std::string& raw() const noexcept { return raw_; }

private:
    static std::string format(const std::string& what, int line, int column) {
        std::string where = line > 0 ? "line " + std::to_string(line) + ", column "
                                     : "column ";
        return where + std::to_string(column) + ": " + what;
    }

    std::string raw_;
    int line_;
    int column_;
};

// Two-slot application at a position whose variances do not match.
class slot_error : public error {
public:
    using error::error;
};

// Mixing tensors with different signatures where equal ones are required.
class signature_error : public error {
public:
    using error::error;
};

// Semantically bad input: index out of range, duplicate tensor entry,
// unknown preset name, symbolic q where none was declared, and so on.
class input_error : public error {
public:
    using error::error;
};

// A configured resource limit (word length, ambient dimension) was exceeded.
class resource_error : public error {
public:
    using error::error;
};

// Quotient annihilation requested on a system recorded as not preserving
// its ideal, so the induced operator is not well defined.
class ill_defined_error : public error {
public:
    using error::error;
};

}  // namespace cwick
