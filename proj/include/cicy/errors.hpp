#pragma once

#include <stdexcept>
#include <string>

namespace cicy {

// Truncated series of different orders were combined.
class order_mismatch_error : public std::invalid_argument {
public:
    explicit order_mismatch_error(const std::string& what) : std::invalid_argument(what) {}
};

// A series with zero constant term was inverted.
class non_unit_error : public std::domain_error {
public:
    explicit non_unit_error(const std::string& what) : std::domain_error(what) {}
};

// Input violates n >= ell + 2.
class hypothesis_violation : public std::invalid_argument {
public:
    explicit hypothesis_violation(const std::string& what) : std::invalid_argument(what) {}
};

class invalid_embedding : public std::invalid_argument {
public:
    explicit invalid_embedding(const std::string& what) : std::invalid_argument(what) {}
};

class unsupported_polarization : public std::invalid_argument {
public:
    explicit unsupported_polarization(const std::string& what) : std::invalid_argument(what) {}
};

// (d, g) lies outside g >= 0, d >= 2g - 3.
class out_of_theorem_range : public std::out_of_range {
public:
    explicit out_of_theorem_range(const std::string& what) : std::out_of_range(what) {}
};

// Odd self-intersection on an even lattice; only reachable through a bug.
class lattice_corruption : public std::logic_error {
public:
    explicit lattice_corruption(const std::string& what) : std::logic_error(what) {}
};

class bound_guard_error : public std::out_of_range {
public:
    explicit bound_guard_error(const std::string& what) : std::out_of_range(what) {}
};

class invalid_cicy_type : public std::invalid_argument {
public:
    explicit invalid_cicy_type(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace cicy
