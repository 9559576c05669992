#ifndef THETA_CLI_OBJECTS_HPP
#define THETA_CLI_OBJECTS_HPP

#include <filesystem>
#include <optional>
#include <string>

#include "theta/simple_complex.hpp"
#include "theta/wreath.hpp"

namespace theta::cli {

struct LoadedObject {
  std::string name;
  ComplexPtr complex;
  std::optional<SimpleADC> simple;  // set when the complex is simple under the convention
};

std::string read_file(const std::filesystem::path& path);

/// Digits, signs, commas and blanks only: an inline sequence such as `0,1,0`.
bool is_inline_sequence(const std::string& arg);

/// An inline sequence, a `dims:` file or an `adc` file. Relative paths are
/// resolved against `base`.
LoadedObject load_object(const std::string& arg, Convention convention, const std::filesystem::path& base = {});

/// Throws Error{NotSimple}.
const SimpleADC& require_simple(const LoadedObject& object);

/// `m: <count>` followed by one component per line, a `dims:` line or a path
/// relative to the .wr file.
WreathObject load_wreath(const std::filesystem::path& path, Convention convention, bool simple_only);

}  // namespace theta::cli

#endif  // THETA_CLI_OBJECTS_HPP
