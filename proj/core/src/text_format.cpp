#include "theta/text_format.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "theta/errors.hpp"

namespace theta {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = text.find('\n', start);
    std::string_view line = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (!line.empty()) lines.emplace_back(line);
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return lines;
}

std::vector<std::string> split_words(std::string_view line) {
  std::vector<std::string> words;
  std::istringstream in{std::string(line)};
  for (std::string w; in >> w;) words.push_back(w);
  return words;
}

int to_int(std::string_view token) {
  int value = 0;
  const char* begin = token.data();
  const char* end = token.data() + token.size();
  if (!token.empty() && token.front() == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || begin == end)
    throw Error(ErrorCode::ParseError, "not an integer: '" + std::string(token) + "'");
  return value;
}

Integer to_integer(std::string_view token) {
  if (token.empty()) throw Error(ErrorCode::ParseError, "empty integer");
  std::size_t i = (token.front() == '-' || token.front() == '+') ? 1 : 0;
  if (i == token.size()) throw Error(ErrorCode::ParseError, "not an integer: '" + std::string(token) + "'");
  for (std::size_t j = i; j < token.size(); ++j)
    if (token[j] < '0' || token[j] > '9') throw Error(ErrorCode::ParseError, "not an integer: '" + std::string(token) + "'");
  Integer v(std::string(token.substr(i)));
  return token.front() == '-' ? Integer(-v) : v;
}

std::string_view strip_keyword(std::string_view text, std::string_view keyword) {
  text = trim(text);
  if (text.substr(0, keyword.size()) == keyword) text.remove_prefix(keyword.size());
  return text;
}

// `c*j` or `j` (coefficient 1).
void add_term(Chain& chain, std::string_view token) {
  const auto star = token.find('*');
  if (star == std::string_view::npos) {
    chain.add(static_cast<BasisIndex>(to_int(token)), 1);
    return;
  }
  const int index = to_int(token.substr(star + 1));
  if (index < 0) throw Error(ErrorCode::ParseError, "negative basis index in '" + std::string(token) + "'");
  chain.add(static_cast<BasisIndex>(index), to_integer(token.substr(0, star)));
}

}  // namespace

std::vector<int> parse_integers(std::string_view text) {
  std::string spaced(text);
  std::replace(spaced.begin(), spaced.end(), ',', ' ');
  std::vector<int> out;
  for (const auto& w : split_words(spaced)) out.push_back(to_int(w));
  return out;
}

std::string format_dims(const DimensionSequence& seq) {
  std::string out = "dims:";
  for (int d : seq.dims()) out += " " + std::to_string(d);
  return out;
}

DimensionSequence parse_dims(std::string_view text) {
  return DimensionSequence(parse_integers(strip_keyword(text, "dims:")));
}

std::string format_updown(const UpDownVector& vec) {
  std::string out = "updown:";
  for (int e : vec.entries()) out += " " + std::to_string(e);
  return out;
}

UpDownVector parse_updown(std::string_view text) {
  return UpDownVector(parse_integers(strip_keyword(text, "updown:")));
}

std::string format_chain(const Chain& c) {
  if (c.is_zero()) return "0";
  std::string out;
  for (const auto& [b, coeff] : c.terms()) {
    if (!out.empty()) out += ' ';
    out += coeff.str() + "*" + std::to_string(b);
  }
  return out;
}

std::string format_complex(const AugmentedDirectedComplex& k) {
  std::string out = "adc\n";
  for (BasisIndex b = 0; b < k.size(); ++b) {
    out += std::to_string(b) + " deg=" + std::to_string(k.degree(b)) + " boundary=";
    for (const auto& [t, c] : k.boundary(b).terms()) out += " " + c.str() + "*" + std::to_string(t);
    if (k.degree(b) == 0) out += " aug= " + k.augmentation(b).str();
    out += '\n';
  }
  return out;
}

bool looks_like_complex(std::string_view text) {
  const auto lines = split_lines(text);
  return !lines.empty() && lines.front() == "adc";
}

ComplexData parse_complex_data(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty() || lines.front() != "adc") throw Error(ErrorCode::ParseError, "expected header 'adc'");
  ComplexData data;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const auto words = split_words(lines[li]);
    const BasisIndex expected = li - 1;
    if (words.size() < 2 || to_int(words[0]) != static_cast<int>(expected))
      throw Error(ErrorCode::ParseError, "line " + std::to_string(li + 1) + ": expected basis element " +
                                             std::to_string(expected));
    if (words[1].rfind("deg=", 0) != 0) throw Error(ErrorCode::ParseError, "line " + std::to_string(li + 1) + ": expected deg=");
    const int q = to_int(std::string_view(words[1]).substr(4));
    Chain boundary(q - 1);
    Integer aug = 0;
    enum class Field { none, boundary, aug } field = Field::none;
    bool saw_aug_value = false;
    for (std::size_t w = 2; w < words.size(); ++w) {
      const std::string& tok = words[w];
      if (tok == "boundary=") {
        field = Field::boundary;
      } else if (tok == "aug=") {
        field = Field::aug;
      } else if (field == Field::boundary) {
        add_term(boundary, tok);
      } else if (field == Field::aug && !saw_aug_value) {
        aug = to_integer(tok);
        saw_aug_value = true;
      } else {
        throw Error(ErrorCode::ParseError, "line " + std::to_string(li + 1) + ": unexpected '" + tok + "'");
      }
    }
    data.degrees.push_back(q);
    data.boundaries.push_back(std::move(boundary));
    data.augmentation.push_back(aug);
  }
  return data;
}

std::string format_morphism(const ChainMorphism& f, std::string_view source_name, std::string_view target_name) {
  std::string out = "morphism " + std::string(source_name) + " -> " + std::string(target_name) + "\n";
  for (std::size_t q = 0; q < f.blocks().size(); ++q) {
    out += "deg " + std::to_string(q) + ":\n";
    const Matrix& m = f.blocks()[q];
    if (m.cols() == 0) continue;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) out += (c ? " " : "") + m.at(r, c).str();
      out += '\n';
    }
  }
  return out;
}

MorphismText parse_morphism_text(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw Error(ErrorCode::ParseError, "empty morphism file");
  const auto head = split_words(lines.front());
  if (head.size() != 4 || head[0] != "morphism" || head[2] != "->")
    throw Error(ErrorCode::ParseError, "expected 'morphism <source> -> <target>'");
  MorphismText m{head[1], head[3], {}};
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const std::string& line = lines[li];
    if (line.rfind("deg ", 0) == 0) {
      if (line.back() != ':') throw Error(ErrorCode::ParseError, "expected 'deg q:'");
      const int q = to_int(trim(std::string_view(line).substr(4, line.size() - 5)));
      if (q != static_cast<int>(m.rows.size()))
        throw Error(ErrorCode::ParseError, "degree blocks must be listed as deg 0, deg 1, ...");
      m.rows.emplace_back();
      continue;
    }
    if (m.rows.empty()) throw Error(ErrorCode::ParseError, "matrix row before any 'deg q:' header");
    std::vector<Integer> row;
    for (const auto& w : split_words(line)) row.push_back(to_integer(w));
    m.rows.back().push_back(std::move(row));
  }
  return m;
}

std::vector<Matrix> assemble_blocks(const MorphismText& m, const AugmentedDirectedComplex& source,
                                    const AugmentedDirectedComplex& target) {
  const auto expected = static_cast<std::size_t>(source.top_degree() + 1);
  if (m.rows.size() != expected)
    throw Error(ErrorCode::ShapeMismatch, "expected " + std::to_string(expected) + " degree blocks, got " +
                                              std::to_string(m.rows.size()));
  std::vector<Matrix> blocks;
  for (std::size_t q = 0; q < expected; ++q) {
    const int deg = static_cast<int>(q);
    Matrix block(target.rank(deg), source.rank(deg));
    const auto& rows = m.rows[q];
    if (block.cols() == 0 || block.rows() == 0) {
      if (!rows.empty()) throw Error(ErrorCode::ShapeMismatch, "degree " + std::to_string(q) + " block must be empty");
    } else {
      if (rows.size() != block.rows())
        throw Error(ErrorCode::ShapeMismatch, "degree " + std::to_string(q) + " block needs " +
                                                  std::to_string(block.rows()) + " rows");
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != block.cols())
          throw Error(ErrorCode::ShapeMismatch, "degree " + std::to_string(q) + " row " + std::to_string(r) +
                                                    " needs " + std::to_string(block.cols()) + " entries");
        for (std::size_t c = 0; c < rows[r].size(); ++c) block.at(r, c) = rows[r][c];
      }
    }
    blocks.push_back(std::move(block));
  }
  return blocks;
}

std::string format_cell(const Cell& x) {
  std::string out;
  for (std::size_t q = 0; q < x.levels().size(); ++q) {
    if (q) out += "; ";
    out += std::to_string(q) + ": (" + format_chain(x.levels()[q].minus) + " | " + format_chain(x.levels()[q].plus) + ")";
  }
  return out;
}

std::string format_cochain(const CochainComplex& c) {
  std::string out = "cochain\n";
  for (BasisIndex b = 0; b < c.size(); ++b) {
    out += std::to_string(b) + " deg=" + std::to_string(c.degree(b)) + " coboundary=";
    for (const auto& [t, coeff] : c.coboundary(b).terms()) out += " " + coeff.str() + "*" + std::to_string(t);
    out += '\n';
  }
  out += "eta=";
  for (const auto& [t, coeff] : c.coaugmentation().terms()) out += " " + coeff.str() + "*" + std::to_string(t);
  out += '\n';
  return out;
}

}  // namespace theta
