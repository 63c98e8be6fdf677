#pragma once

#include <stdexcept>
#include <string>

namespace cocyclelab {

// Base class for structured errors surfaced through the CLI (exit code 2 for
// input problems, 1 for failed checks).
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class ChartMismatch : public Error { public: using Error::Error; };
class UnknownVariable : public Error { public: using Error::Error; };
class DimensionMismatch : public Error { public: using Error::Error; };
class DivisionByZero : public Error { public: using Error::Error; };
class SingularMatrix : public Error { public: using Error::Error; };
class DegreeTooLow : public Error { public: using Error::Error; };
class SingularForm : public Error { public: using Error::Error; };
class NotClosed : public Error { public: using Error::Error; };
class UnsupportedDegree : public Error { public: using Error::Error; };
class BadStructureConstants : public Error { public: using Error::Error; };
class NotHomomorphism : public Error { public: using Error::Error; };
class NotInvariant : public Error { public: using Error::Error; };
class NotClosedOneForm : public Error { public: using Error::Error; };
class DegenerateLagrangian : public Error { public: using Error::Error; };
class NotSymplectic : public Error { public: using Error::Error; };
class NonPolynomialResult : public Error { public: using Error::Error; };
class HypothesisFails : public Error { public: using Error::Error; };
class IdentityFails : public Error { public: using Error::Error; };

// Syntax error with a 1-based source position.
class ParseError : public Error {
  public:
    ParseError(const std::string& what, int line, int column)
      : Error(what + " at " + std::to_string(line) + ":" + std::to_string(column)),
        line_(line), column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

  private:
    int line_;
    int column_;
};

} // namespace cocyclelab
