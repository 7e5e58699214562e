#ifndef NCALG_ERROR_HPP_
#define NCALG_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ncalg {

  /// Base class of every error raised by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  /// Malformed or inconsistent input (alphabet mismatch, bad rule, ...).
  class InputError : public Error {
   public:
    using Error::Error;
  };

  /// Syntax error in a textual polynomial, word or file. `line` is 0 when
  /// the text did not come from a file.
  class ParseError : public InputError {
   public:
    ParseError(std::string const& what, std::size_t line, std::size_t column)
        : InputError(format(what, line, column)), _line(line), _column(column) {}

    std::size_t line() const noexcept { return _line; }
    std::size_t column() const noexcept { return _column; }

   private:
    static std::string format(std::string const& what,
                              std::size_t line,
                              std::size_t column) {
      std::string where = line == 0 ? "" : "line " + std::to_string(line) + ", ";
      return where + "column " + std::to_string(column) + ": " + what;
    }
    std::size_t _line;
    std::size_t _column;
  };

  /// A rewriting loop ran out of its reduction budget.
  class FuelExhausted : public Error {
   public:
    explicit FuelExhausted(std::size_t fuel)
        : Error("fuel exhausted after " + std::to_string(fuel) + " reductions"),
          _fuel(fuel) {}
    std::size_t fuel() const noexcept { return _fuel; }

   private:
    std::size_t _fuel;
  };

  /// A bounded computation would exceed its configured size limit.
  class ResourceLimit : public Error {
   public:
    using Error::Error;
  };

}  // namespace ncalg

#endif  // NCALG_ERROR_HPP_
