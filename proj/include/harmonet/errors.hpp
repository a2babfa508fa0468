#pragma once

#include <stdexcept>
#include <string>

namespace harmonet {

// Base for everything that can go wrong after the inputs have passed
// validation. Plain bad inputs throw std::invalid_argument instead.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// The two requested modes do not sit on equivalent sites, so the reduced
// two-mode state is not of the symmetric form the concurrence formula needs.
struct AsymmetricPairError : Error {
    explicit AsymmetricPairError(const std::string& what) : Error(what) {}
};

// (n_x - m_x)(n_p + m_p) came out negative; no physical state does this,
// so the covariance data fed in was not a valid symmetric two-mode state.
struct NegativeDiscriminantError : Error {
    explicit NegativeDiscriminantError(const std::string& what) : Error(what) {}
};

// delta = 0 corresponds to a maximally entangled (unnormalizable) state;
// the entanglement of formation diverges there.
struct InfiniteEntanglementError : Error {
    explicit InfiniteEntanglementError(const std::string& what) : Error(what) {}
};

// Threshold temperature was requested for a pair that is already separable
// in the ground state, so there is no finite crossing to find.
struct NotEntangledAtZeroError : Error {
    explicit NotEntangledAtZeroError(const std::string& what) : Error(what) {}
};

// An adaptive quadrature hit its recursion depth cap before meeting the
// requested absolute tolerance.
struct ToleranceNotReachedError : Error {
    explicit ToleranceNotReachedError(const std::string& what) : Error(what) {}
};

}  // namespace harmonet
