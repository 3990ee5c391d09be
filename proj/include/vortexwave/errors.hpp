#ifndef VORTEXWAVE_ERRORS_HPP
#define VORTEXWAVE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace vortexwave {

// Thrown when an adaptive engine exhausts its budget before reaching the
// requested tolerance. Carries the best estimate so callers can decide
// whether the partial result is still usable.
class accuracy_error : public std::runtime_error {
 public:
  accuracy_error(const std::string& what, double best_estimate,
                 double error_estimate)
      : std::runtime_error(what),
        best_estimate_(best_estimate),
        error_estimate_(error_estimate) {}

  double best_estimate() const noexcept { return best_estimate_; }
  double error_estimate() const noexcept { return error_estimate_; }

 private:
  double best_estimate_;
  double error_estimate_;
};

}  // namespace vortexwave

#endif  // VORTEXWAVE_ERRORS_HPP
