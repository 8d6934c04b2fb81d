#ifndef DUALRANK_ERRORS_HPP
#define DUALRANK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dualrank {

class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class construction_error : public error {
public:
    using error::error;
};

class dimension_error : public error {
public:
    using error::error;
};

// Real part of a factor is not column/row full rank, or rank is 0 where r >= 1 is required.
class rank_error : public error {
public:
    using error::error;
};

class degenerate_rank_error : public rank_error {
public:
    using rank_error::rank_error;
};

class not_invertible_error : public error {
public:
    using error::error;
};

// A solvability condition failed (Sylvester consistency, dual r-rank decomposition, DMPGI).
// The residual is rendered into the message by the thrower; callers that need the matrix
// should use the corresponding *_exists / *_consistent check first.
class existence_error : public error {
public:
    using error::error;
};

class precondition_error : public error {
public:
    using error::error;
};

// Two routes to the same quantity disagreed. Never expected; surfaces formula defects.
class consistency_error : public error {
public:
    using error::error;
};

class parse_error : public error {
public:
    using error::error;
};

}  // namespace dualrank

#endif  // DUALRANK_ERRORS_HPP
