#ifndef IWACALC_ERRORS_HPP
#define IWACALC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace iwacalc
{

class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Bad arguments: mismatched primes, wrong shapes, out-of-range parameters.
class UsageError : public Error
{
public:
    using Error::Error;
};

// Input is well formed but violates a mathematical precondition
// (non-unit determinant, unit a_p, ...).
class ValidationError : public Error
{
public:
    using Error::Error;
};

// Operation undefined on the given value, e.g. inverting zero.
class DomainError : public Error
{
public:
    using Error::Error;
};

// Malformed JSON input.
class SchemaError : public Error
{
public:
    using Error::Error;
};

class PrecisionError : public Error
{
public:
    explicit PrecisionError(const std::string &what, long deficit = 0) : Error(what), m_deficit(deficit) {}

    // Number of additional p-adic digits that would have been required, 0 when unknown.
    long deficit() const noexcept
    {
        return m_deficit;
    }

private:
    long m_deficit;
};

} // namespace iwacalc

#endif
