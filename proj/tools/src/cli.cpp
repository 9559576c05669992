#include "theta_cli/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <ostream>

#include "objects.hpp"
#include "theta/cells.hpp"
#include "theta/duality.hpp"
#include "theta/errors.hpp"
#include "theta/text_format.hpp"
#include "theta/verify/properties.hpp"

namespace theta::cli {

namespace {

struct Options {
  std::string convention = "std";
  // convert
  std::string from = "seq", to = "updown", input;
  // objects
  std::string a, b, morphism_file;
  bool count = false, list = false;
  int cap = 1;
};

Convention convention_of(const Options& o) { return o.convention == "swapped" ? Convention::swapped : Convention::standard; }

const char* verdict(bool ok) { return ok ? "pass" : "fail"; }

int cmd_convert(const Options& o, std::ostream& out) {
  UpDownVector u({0});
  if (o.from == "seq") {
    u = seq_to_updown(parse_dims(o.input));
  } else if (o.from == "updown") {
    u = parse_updown(o.input);
  } else {
    u = tree_to_updown(parse_tree(o.input));
  }
  if (o.to == "seq") {
    out << format_dims(updown_to_seq(u)) << '\n';
  } else if (o.to == "updown") {
    out << format_updown(u) << '\n';
  } else {
    out << serialize(updown_to_tree(u)) << '\n';
  }
  return ok;
}

int cmd_check(const Options& o, std::ostream& out) {
  const Convention conv = convention_of(o);
  LoadedObject obj;
  try {
    obj = load_object(o.a, conv);
  } catch (const Error& e) {
    switch (e.code()) {
      case ErrorCode::MalformedComplex:
      case ErrorCode::NotChainComplex:
      case ErrorCode::NotAugmentedComplex:
        out << "structure: fail (" << e.what() << ")\n";
        return property_failure;
      default:
        throw;
    }
  }
  const auto& k = *obj.complex;
  const bool unital = check_unital(k), loop_free = check_loop_free(k), strong = check_strongly_loop_free(k);
  out << "structure: pass\n";
  out << "unital: " << verdict(unital) << '\n';
  out << "loop-free: " << verdict(loop_free) << '\n';
  out << "strongly-loop-free: " << verdict(strong) << '\n';
  out << "simple: " << verdict(obj.simple.has_value());
  if (obj.simple) out << " (" << format_dims(obj.simple->dims()) << ')';
  out << '\n';
  return unital && loop_free && strong && obj.simple ? ok : property_failure;
}

int cmd_hom(const Options& o, std::ostream& out) {
  const Convention conv = convention_of(o);
  const LoadedObject a = load_object(o.a, conv), b = load_object(o.b, conv);
  const auto homs = enumerate_hom(require_simple(a), require_simple(b));
  if (!o.list) {
    out << homs.size() << '\n';
    return ok;
  }
  for (std::size_t i = 0; i < homs.size(); ++i) {
    if (i) out << '\n';
    out << format_morphism(homs[i], a.name, b.name);
  }
  return ok;
}

int cmd_validate_morphism(const Options& o, std::ostream& out) {
  const Convention conv = convention_of(o);
  const std::filesystem::path path(o.morphism_file);
  const MorphismText text = parse_morphism_text(read_file(path));
  const auto base = path.parent_path();
  const LoadedObject src = load_object(text.source_name, conv, base), dst = load_object(text.target_name, conv, base);
  auto blocks = assemble_blocks(text, *src.complex, *dst.complex);
  try {
    const ChainMorphism f = validate_morphism_general(src.complex, dst.complex, std::move(blocks));
    if (src.simple && dst.simple) validate_simple_morphism(*src.simple, *dst.simple, assignment_of(f));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ShapeMismatch) throw;
    out << "invalid: " << e.what() << '\n';
    return property_failure;
  }
  out << "valid\n";
  return ok;
}

int cmd_cells(const Options& o, std::ostream& out) {
  const LoadedObject a = load_object(o.a, convention_of(o));
  for (const Cell& x : enumerate_cells(a.complex, o.cap)) out << format_cell(x) << '\n';
  return ok;
}

int cmd_dual(const Options& o, std::ostream& out) {
  const LoadedObject a = load_object(o.a, convention_of(o));
  out << format_cochain(*dualize_object(require_simple(a)));
  return ok;
}

int cmd_wreath_v(const Options& o, std::ostream& out) {
  const Convention conv = convention_of(o);
  out << format_complex(*v_object(load_wreath(o.a, conv, false), conv));
  return ok;
}

int cmd_wreath_check(const Options& o, std::ostream& out) {
  const Convention conv = convention_of(o);
  const WreathObject w1 = load_wreath(o.a, conv, true), w2 = load_wreath(o.b, conv, true);
  const FullFaithfulness ff = check_fully_faithful(w1, w2, conv);
  out << "wreath morphisms: " << ff.wreath_count << '\n';
  out << "complex morphisms: " << ff.target_count << '\n';
  out << "injective: " << verdict(ff.injective) << '\n';
  out << "surjective: " << verdict(ff.image_is_target) << '\n';
  out << "fully faithful: " << verdict(ff.holds()) << '\n';
  return ff.holds() ? ok : property_failure;
}

int cmd_suite(const Options& o, std::ostream& out) {
  const auto results = verify::run_suite({convention_of(o), o.cap});
  bool all = true;
  for (const auto& r : results) {
    out << (r.passed ? "PASS " : "FAIL ") << r.module << ": " << r.name << ": " << r.detail << '\n';
    all = all && r.passed;
  }
  return all ? ok : property_failure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Simple omega-categories as augmented directed complexes", "theta"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--convention", o.convention, "Orientation of the boundary")
      ->check(CLI::IsMember({"std", "swapped"}))
      ->capture_default_str();

  const auto formats = CLI::IsMember({"seq", "updown", "tree"});
  auto* convert = app.add_subcommand("convert", "Convert between sequence, up-and-down vector and tree");
  convert->add_option("--from", o.from)->check(formats)->capture_default_str();
  convert->add_option("--to", o.to)->check(formats)->capture_default_str();
  convert->add_option("input", o.input)->required();

  auto* check = app.add_subcommand("check", "Structural and basis checks of an object file");
  check->add_option("object", o.a)->required();

  auto* hom = app.add_subcommand("hom", "Enumerate morphisms between simple objects");
  hom->add_option("source", o.a)->required();
  hom->add_option("target", o.b)->required();
  auto* count = hom->add_flag("--count", o.count, "Print the number of morphisms (default)");
  hom->add_flag("--list", o.list, "Print every morphism")->excludes(count);

  auto* validate = app.add_subcommand("validate-morphism", "Validate a morphism file");
  validate->add_option("file", o.morphism_file)->required();

  auto* cells = app.add_subcommand("cells", "List the cells of nu K");
  cells->add_option("object", o.a)->required();
  cells->add_option("--cap", o.cap, "Largest coefficient")->check(CLI::Range(1, 4))->capture_default_str();

  auto* dual = app.add_subcommand("dual", "Print the dual cochain complex");
  dual->add_option("object", o.a)->required();

  auto* wv = app.add_subcommand("wreath-v", "Print V of a wreath object");
  wv->add_option("object", o.a)->required();

  auto* wc = app.add_subcommand("wreath-check", "Compare wreath and complex hom-sets");
  wc->add_option("source", o.a)->required();
  wc->add_option("target", o.b)->required();

  auto* suite = app.add_subcommand("suite", "Run every property check");
  suite->add_option("--cell-cap", o.cap, "Coefficient cap for cell enumeration")
      ->check(CLI::Range(1, 3))
      ->capture_default_str();

  std::vector<const char*> argv{"theta"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : invalid_input;
  }

  try {
    if (*convert) return cmd_convert(o, out);
    if (*check) return cmd_check(o, out);
    if (*hom) return cmd_hom(o, out);
    if (*validate) return cmd_validate_morphism(o, out);
    if (*cells) return cmd_cells(o, out);
    if (*dual) return cmd_dual(o, out);
    if (*wv) return cmd_wreath_v(o, out);
    if (*wc) return cmd_wreath_check(o, out);
    if (*suite) return cmd_suite(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return invalid_input;
  }
  return invalid_input;
}

}  // namespace theta::cli
