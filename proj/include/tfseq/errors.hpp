#ifndef TFSEQ_ERRORS_HPP
#define TFSEQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tfseq {

// Exit-code mapping used by the CLI: validation 2, non-convergence 3, resource 4.

class validation_error : public std::runtime_error {
public:
  explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

// Argument outside the mathematical domain of an operation (negative t, s below omega(0), ...).
class domain_error : public validation_error {
public:
  explicit domain_error(const std::string& what) : validation_error(what) {}
};

// Requested shift or lattice constant is not an integer multiple of the grid step.
class alignment_error : public validation_error {
public:
  explicit alignment_error(const std::string& what) : validation_error(what) {}
};

// Requested accuracy cannot be guaranteed (e.g. spectral derivative order too high).
class accuracy_error : public validation_error {
public:
  explicit accuracy_error(const std::string& what) : validation_error(what) {}
};

// Iterative solver failed to reach its tolerance; carries a diagnostic summary.
class non_convergence_error : public std::runtime_error {
public:
  explicit non_convergence_error(const std::string& what) : std::runtime_error(what) {}
};

// A lazy computation hit its hard materialization cap.
class resource_error : public std::runtime_error {
public:
  explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tfseq

#endif
