#pragma once

#include <stdexcept>
#include <string>

namespace splitspin {

/// Inversion requested for a hyperbolic number on the null cone (zero norm).
class non_invertible : public std::domain_error {
public:
    explicit non_invertible(const std::string& value)
        : std::domain_error("non-invertible hyperbolic number (zero norm): " + value) {}
};

/// A floating-point evaluation could not meet the requested tolerance.
class precision_exceeded : public std::runtime_error {
public:
    explicit precision_exceeded(const std::string& what)
        : std::runtime_error("precision exceeded: " + what) {}
};

class index_out_of_range : public std::out_of_range {
public:
    explicit index_out_of_range(const std::string& what)
        : std::out_of_range("index out of range: " + what) {}
};

/// An exact division that a sequence relation guarantees failed.  Seeing this
/// means the implementation, not the input, is wrong.
class divisibility_violation : public std::logic_error {
public:
    explicit divisibility_violation(const std::string& what)
        : std::logic_error("divisibility violation: " + what) {}
};

/// The requested construction is undefined for this instance (for example a
/// determinant needing 1/psi_0 when a seed component sits on the null cone).
class unsupported_instance : public std::runtime_error {
public:
    explicit unsupported_instance(const std::string& what)
        : std::runtime_error("unsupported instance: " + what) {}
};

/// Two term-computation backends produced different exact values.
class backend_disagreement : public std::runtime_error {
public:
    backend_disagreement(const std::string& backend_a, const std::string& backend_b,
                         long long n, const std::string& lhs, const std::string& rhs)
        : std::runtime_error("backends disagree at n=" + std::to_string(n) + ": " +
                             backend_a + " -> " + lhs + ", " + backend_b + " -> " + rhs),
          first(backend_a), second(backend_b), index(n), lhs_text(lhs), rhs_text(rhs) {}

    std::string first, second;
    long long index;
    std::string lhs_text, rhs_text;
};

} // namespace splitspin
