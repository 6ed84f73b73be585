#ifndef PLATESIM_ERRORS_HPP
#define PLATESIM_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace platesim {

/// Grid cannot resolve the requested modes (N > M or a dealias rule broken).
struct AliasingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A pointwise evaluation produced a non-finite value.
struct OverflowError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A declared standing hypothesis failed at a concrete witness.
struct HypothesisViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// f(s)s - nu*s^2 keeps growing at the probe boundary.
struct DissipativityViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// No admissible constant selection exists for the given data.
struct InfeasibleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The state norm crossed the blowup threshold; with dissipative data this
/// signals a misconfiguration, not genuine blowup.
class BlowupError : public std::runtime_error {
public:
  BlowupError(double time, double norm)
      : std::runtime_error("state norm " + std::to_string(norm) +
                           " exceeded blowup threshold at t = " + std::to_string(time)),
        time_(time), norm_(norm) {}
  double time() const noexcept { return time_; }
  double norm() const noexcept { return norm_; }

private:
  double time_;
  double norm_;
};

/// Configuration parsing collects every violation before failing.
class ConfigError : public std::runtime_error {
public:
  explicit ConfigError(std::vector<std::string> violations)
      : std::runtime_error(join(violations)), violations_(std::move(violations)) {}
  const std::vector<std::string>& violations() const noexcept { return violations_; }

private:
  static std::string join(const std::vector<std::string>& v) {
    std::string s = "configuration invalid:";
    for (const auto& e : v) s += "\n  - " + e;
    return s;
  }
  std::vector<std::string> violations_;
};

} // namespace platesim

#endif
