#include "objects.hpp"

#include <fstream>
#include <sstream>

#include "theta/errors.hpp"
#include "theta/text_format.hpp"

namespace theta::cli {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

bool is_inline_sequence(const std::string& arg) {
  if (arg.find_first_of("0123456789") == std::string::npos) return false;
  return arg.find_first_not_of("0123456789-+, \t") == std::string::npos;
}

LoadedObject load_object(const std::string& arg, Convention convention, const std::filesystem::path& base) {
  LoadedObject obj;
  obj.name = arg;
  if (is_inline_sequence(arg)) {
    std::string text = arg;
    for (char& c : text)
      if (c == ',') c = ' ';
    obj.simple.emplace(parse_dims(text), convention);
    obj.complex = obj.simple->complex();
    return obj;
  }
  const std::filesystem::path path = base.empty() ? std::filesystem::path(arg) : base / arg;
  const std::string text = read_file(path);
  if (looks_like_complex(text)) {
    obj.complex = make_complex(parse_complex_data(text));
    obj.simple = SimpleADC::recognize(obj.complex, convention);
  } else {
    obj.simple.emplace(parse_dims(text), convention);
    obj.complex = obj.simple->complex();
  }
  return obj;
}

const SimpleADC& require_simple(const LoadedObject& object) {
  if (!object.simple)
    throw Error(ErrorCode::NotSimple, object.name + " is not a simple complex under the chosen convention");
  return *object.simple;
}

WreathObject load_wreath(const std::filesystem::path& path, Convention convention, bool simple_only) {
  std::istringstream in(read_file(path));
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    line = line.substr(first, line.find_last_not_of(" \t\r") - first + 1);
    lines.push_back(line);
  }
  if (lines.empty() || lines.front().rfind("m:", 0) != 0) throw Error(ErrorCode::ParseError, "expected 'm: <count>'");
  const auto counts = parse_integers(lines.front().substr(2));
  if (counts.size() != 1 || counts.front() < 0) throw Error(ErrorCode::ParseError, "expected 'm: <count>'");
  const auto m = static_cast<std::size_t>(counts.front());
  if (lines.size() - 1 != m)
    throw Error(ErrorCode::ParseError, "m = " + std::to_string(m) + " but " + std::to_string(lines.size() - 1) +
                                           " components are listed");
  std::vector<ComplexPtr> components;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    LoadedObject obj;
    if (lines[i].rfind("dims:", 0) == 0) {
      obj.name = lines[i];
      obj.simple.emplace(parse_dims(lines[i]), convention);
      obj.complex = obj.simple->complex();
    } else {
      obj = load_object(lines[i], convention, path.parent_path());
    }
    if (simple_only) require_simple(obj);
    components.push_back(obj.complex);
  }
  return WreathObject(m, std::move(components));
}

}  // namespace theta::cli
