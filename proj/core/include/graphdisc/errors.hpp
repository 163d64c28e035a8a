#pragma once

#include <stdexcept>
#include <string>

namespace graphdisc {

/// The requested subgraph family has no member in the given graph
/// (e.g. spanning trees of a disconnected graph, Hamilton cycles of a
/// non-Hamiltonian graph). Distinct from a member of value 0.
class empty_family_error : public std::runtime_error {
public:
    explicit empty_family_error(const std::string& what) : std::runtime_error(what) {}
};

/// An exact oracle was asked to run beyond its configured instance cap.
class oracle_limit_error : public std::runtime_error {
public:
    explicit oracle_limit_error(const std::string& what) : std::runtime_error(what) {}
};

/// A rejection sampler ran out of attempts.
class sampling_error : public std::runtime_error {
public:
    sampling_error(const std::string& what, std::uint64_t attempts)
        : std::runtime_error(what), attempts_(attempts) {}
    std::uint64_t attempts() const { return attempts_; }

private:
    std::uint64_t attempts_;
};

} // namespace graphdisc
