#ifndef TRIMIX_ERRORS_HPP
#define TRIMIX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace trimix
{

class error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class zero_leading_coefficient : public error
{
public:
    using error::error;
};

class insufficient_precision : public error
{
public:
    using error::error;
};

class parity_violation : public error
{
public:
    using error::error;
};

class invalid_pair : public error
{
public:
    using error::error;
};

class unknown_name : public error
{
public:
    using error::error;
};

class unknown_space : public error
{
public:
    using error::error;
};

class parse_error : public error
{
public:
    using error::error;
};

class underdetermined_system : public error
{
public:
    using error::error;
};

// Target is not in the span of the basis. index is the first q-exponent
// where the best fit on the pivot rows disagrees with the target.
class inconsistent_system : public error
{
public:
    inconsistent_system(long index, std::string residual)
        : error("inconsistent system: first residual at q^" + std::to_string(index) + " (" + residual + ")"),
          m_index(index), m_residual(std::move(residual))
    {
    }
    long index() const
    {
        return m_index;
    }
    const std::string &residual() const
    {
        return m_residual;
    }

private:
    long m_index;
    std::string m_residual;
};

} // namespace trimix

#endif
