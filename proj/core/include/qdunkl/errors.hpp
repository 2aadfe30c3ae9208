#ifndef QDUNKL_ERRORS_HPP
#define QDUNKL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qdunkl
{

// Argument outside the mathematical domain of an operation (negative q-bracket
// argument, series evaluated beyond its radius of convergence, ...).
class domain_error : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

// A value left the double range.
class overflow_error : public std::overflow_error
{
public:
    using std::overflow_error::overflow_error;
};

// A series or sum did not reach its stopping criterion within the term budget.
class convergence_error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

} // namespace qdunkl

#endif
