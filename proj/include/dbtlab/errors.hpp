#ifndef DBTLAB_ERRORS_HPP
#define DBTLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dbtlab {

// Invalid or inconsistent configuration (bad probabilities, schedule/text-form
// mismatch, malformed JSON, ...). CLI exit code 2.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string &msg) : std::runtime_error(msg) {}
};

// Training aborted (non-finite loss or gradient). Carries the step index.
// CLI exit code 3.
class TrainingError : public std::runtime_error {
 public:
  TrainingError(const std::string &msg, long step)
      : std::runtime_error(msg + " (step " + std::to_string(step) + ")"),
        step_(step) {}
  long step() const { return step_; }

 private:
  long step_;
};

// A pipeline stage needs an artifact that has not been trained/generated.
// CLI exit code 4.
class MissingComponentError : public std::runtime_error {
 public:
  explicit MissingComponentError(const std::string &component)
      : std::runtime_error("missing component: " + component),
        component_(component) {}
  const std::string &component() const { return component_; }

 private:
  std::string component_;
};

}  // namespace dbtlab

#endif  // DBTLAB_ERRORS_HPP
