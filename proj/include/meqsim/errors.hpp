#pragma once

#include <stdexcept>
#include <string>

namespace meqsim {

// A forced measurement branch whose probability is numerically null; in
// exact-path mode this means the expected outcome is (almost) impossible on
// the current state.
class NullBranchError : public std::runtime_error {
public:
    explicit NullBranchError(const std::string& what) : std::runtime_error(what) {}
};

// A factor would exceed the configured hard qubit cap.
class QubitCapacityError : public std::runtime_error {
public:
    QubitCapacityError(const std::string& what, int required_qubits, int cap)
        : std::runtime_error(what), required(required_qubits), cap(cap) {}
    int required;
    int cap;
};

} // namespace meqsim
