#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace midring {

// Root of the library's error hierarchy. kind() is the stable machine
// readable name; the CLI maps kinds to exit codes and JSON "error" fields.
class Error : public std::runtime_error {
  public:
    Error(std::string kind, const std::string &message)
        : std::runtime_error(message), kind_(std::move(kind)) {}

    const std::string &kind() const noexcept { return kind_; }

  private:
    std::string kind_;
};

// A ring constructor was asked for the zero ring (order < 2).
class NonzeroRingRequired : public Error {
  public:
    explicit NonzeroRingRequired(const std::string &message)
        : Error("NonzeroRingRequired", message) {}
};

// A construction would produce a ring larger than the configured order cap.
class OrderCapExceeded : public Error {
  public:
    explicit OrderCapExceeded(const std::string &message)
        : Error("OrderCapExceeded", message) {}
};

// Polynomial quotient modulus is not monic of degree >= 1 after reduction.
class MonicModulusRequired : public Error {
  public:
    explicit MonicModulusRequired(const std::string &message)
        : Error("MonicModulusRequired", message) {}
};

// Polynomial quotient base is not a canonical modular ring Zn(m).
class UnsupportedBaseRing : public Error {
  public:
    explicit UnsupportedBaseRing(const std::string &message)
        : Error("UnsupportedBaseRing", message) {}
};

// The ideal-lattice search visited more ideals than its node budget allows.
class LatticeBudgetExceeded : public Error {
  public:
    explicit LatticeBudgetExceeded(const std::string &message)
        : Error("LatticeBudgetExceeded", message) {}
};

// Quotient by an improper ideal would be the zero ring.
class ImproperIdealQuotient : public Error {
  public:
    explicit ImproperIdealQuotient(const std::string &message)
        : Error("ImproperIdealQuotient", message) {}
};

// A library invariant failed at runtime. Reaching this is a bug, not an
// input problem; the CLI reports it with its own exit code.
class InvariantViolation : public Error {
  public:
    explicit InvariantViolation(const std::string &message)
        : Error("InvariantViolation", message) {}
};

} // namespace midring
