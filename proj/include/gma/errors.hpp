#ifndef GMA_ERRORS_HPP
#define GMA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gma {

// Error taxonomy shared by the library and the command line tool.
// The CLI maps each type to a distinct exit code, so throw the most
// specific one that applies.

// A required input file does not exist or cannot be opened.
class missing_input_error : public std::runtime_error {
 public:
  explicit missing_input_error(const std::string& what) : std::runtime_error(what) {}
};

// A file exists but its contents violate the expected format.
class format_error : public std::runtime_error {
 public:
  explicit format_error(const std::string& what) : std::runtime_error(what) {}
};

// A size constraint is violated (non power-of-two grid, filter longer
// than the signal, window past the Nyquist ring, ...).
class sizing_error : public std::invalid_argument {
 public:
  explicit sizing_error(const std::string& what) : std::invalid_argument(what) {}
};

// Command line or config text that cannot be parsed.
class parse_error : public std::invalid_argument {
 public:
  explicit parse_error(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace gma

#endif
