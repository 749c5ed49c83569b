#ifndef PTOSC_ERRORS_HPP
#define PTOSC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ptosc {

/// A confluent-hypergeometric parameter sits on a pole (b a nonpositive
/// integer). Callers hitting this at integer alpha on the upper branch
/// should evaluate through the Laguerre recurrence instead.
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Series failed to meet its tolerance within the hard term cap.
class NonConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Wave function requested exactly at the branch point x = ic with a
/// non-polynomial prefactor exponent.
class BranchPointError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Potential evaluated on its singularity (c = 0, x = 0 with nonzero
/// coupling).
class SingularPotentialError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Quadrature interval too short: the integrand has not decayed below
/// 1e-16 of its peak at the endpoints.
class QuadratureTruncationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Self-product too close to zero to normalize against. Occurs at the
/// unavoided level crossings (integer alpha), where the merged state is
/// self-orthogonal under the unconjugated product.
class NormDegeneracyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Fewer eigenpairs passed the residual / boundary-weight filters than
/// were requested.
class InsufficientResolutionError : public std::runtime_error {
 public:
  InsufficientResolutionError(const std::string& what, int requested,
                              int accepted, int scanned)
      : std::runtime_error(what),
        requested(requested),
        accepted(accepted),
        scanned(scanned) {}

  int requested;
  int accepted;
  int scanned;
};

}  // namespace ptosc

#endif  // PTOSC_ERRORS_HPP
