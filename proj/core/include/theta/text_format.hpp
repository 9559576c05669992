#ifndef THETA_TEXT_FORMAT_HPP
#define THETA_TEXT_FORMAT_HPP

// Line-oriented plain-text forms for every value the CLI reads or writes.
// Parsers throw Error{ParseError} on malformed text; structural validation is
// left to the constructors of the parsed types.

#include <string>
#include <string_view>
#include <vector>

#include "theta/cells.hpp"
#include "theta/complex.hpp"
#include "theta/duality.hpp"
#include "theta/morphism.hpp"
#include "theta/representations.hpp"

namespace theta {

/// Blank- or comma-separated.
std::vector<int> parse_integers(std::string_view text);

/// `dims: d0 d1 ... dp`. The keyword is optional on input.
std::string format_dims(const DimensionSequence& seq);
DimensionSequence parse_dims(std::string_view text);

/// `updown: u0 v1 u1 ...`. The keyword is optional on input.
std::string format_updown(const UpDownVector& vec);
UpDownVector parse_updown(std::string_view text);

/// `2*3 -1*5`, or `0` for the zero chain.
std::string format_chain(const Chain& c);

/// Header `adc`, then `i deg=q boundary= c*j ...` per basis element, with
/// ` aug= e` appended for degree-0 elements. A zero boundary is an empty
/// list; a bare `j` means `1*j`.
std::string format_complex(const AugmentedDirectedComplex& k);
ComplexData parse_complex_data(std::string_view text);

/// True when the text starts with the `adc` header.
bool looks_like_complex(std::string_view text);

/// Header `morphism <src> -> <dst>`, then per degree `deg q:` and the matrix
/// rows of that block.
std::string format_morphism(const ChainMorphism& f, std::string_view source_name, std::string_view target_name);

struct MorphismText {
  std::string source_name;
  std::string target_name;
  /// rows[q] lists the nonblank rows under `deg q:`.
  std::vector<std::vector<std::vector<Integer>>> rows;
};

MorphismText parse_morphism_text(std::string_view text);

/// Shapes the parsed rows against the complexes. Throws ShapeMismatch.
std::vector<Matrix> assemble_blocks(const MorphismText& m, const AugmentedDirectedComplex& source,
                                    const AugmentedDirectedComplex& target);

/// `q: (neg | pos); ...` for every level of the cell.
std::string format_cell(const Cell& x);

/// Header `cochain`, then `i deg=q coboundary= ...` lines and a final
/// `eta= ...` line.
std::string format_cochain(const CochainComplex& c);

}  // namespace theta

#endif  // THETA_TEXT_FORMAT_HPP
