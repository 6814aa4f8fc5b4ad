#pragma once

#include <stdexcept>
#include <string>

namespace mdlie {

struct SizeMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct SingularMatrix : std::domain_error {
    using std::domain_error::domain_error;
};

struct NotSkew : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// structure-constant table fails the Jacobi identity at basis triple (i, j, k), 1-based
struct JacobiViolation : std::invalid_argument {
    int i, j, k;
    JacobiViolation(int i_, int j_, int k_)
        : std::invalid_argument("Jacobi identity fails at triple (" + std::to_string(i_) + "," +
                                std::to_string(j_) + "," + std::to_string(k_) + ")"),
          i(i_), j(j_), k(k_) {}
};

struct IndexOutOfRange : std::out_of_range {
    using std::out_of_range::out_of_range;
};

struct DuplicateBracket : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct SyntaxError : std::invalid_argument {
    long line;
    SyntaxError(const std::string& what, long line_)
        : std::invalid_argument(what + " (line " + std::to_string(line_) + ")"), line(line_) {}
};

// a subspace handed to an operation is not invariant under it
struct NotInvariant : std::domain_error {
    using std::domain_error::domain_error;
};

struct ParamOutOfRange : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct UnknownName : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace mdlie
