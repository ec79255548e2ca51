#pragma once

#include <stdexcept>
#include <string>

namespace qcarrival {

// Base class for everything thrown by this library.
class error : public std::runtime_error {
public:
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid physical or numerical input (non-positive mass, detector inside the
// barrier, sub-barrier classical energy, ...).
class domain_error : public error {
public:
    explicit domain_error(const std::string& msg) : error(msg) {}
};

// Malformed or inconsistent run configuration (unknown key, missing section,
// mutually exclusive settings, unparsable value).
class config_error : public error {
public:
    explicit config_error(const std::string& msg) : error(msg) {}
};

// A numerical procedure could not reach its accuracy target.
class accuracy_error : public error {
public:
    explicit accuracy_error(const std::string& msg) : error(msg) {}
};

// Grid too coarse to track a rapidly varying quantity (e.g. a transmission
// phase that jumps by ~pi between neighbouring nodes).
class resolution_error : public accuracy_error {
public:
    explicit resolution_error(const std::string& msg) : accuracy_error(msg) {}
};

// A sampled series does not contain the feature it is supposed to cover
// (current still large at the window edge, significant trailing mass, ...).
class truncation_error : public accuracy_error {
public:
    explicit truncation_error(const std::string& msg) : accuracy_error(msg) {}
};

// Antisymmetrisation of two identical single-particle states.
class degenerate_state_error : public domain_error {
public:
    explicit degenerate_state_error(const std::string& msg) : domain_error(msg) {}
};

// Evaluation requested at or too close to a node of the wave function where
// a modulus-derived quantity is undefined.
class nodal_region_error : public domain_error {
public:
    explicit nodal_region_error(const std::string& msg) : domain_error(msg) {}
};

} // namespace qcarrival
