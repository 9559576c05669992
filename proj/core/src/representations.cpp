#include "theta/representations.hpp"

#include <algorithm>
#include <limits>

#include "theta/errors.hpp"

namespace theta {

namespace {

std::string describe(std::span<const int> values) {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(values[i]);
  }
  return out + ")";
}

void check_sequence(const std::vector<int>& dims) {
  if (dims.empty()) throw Error(ErrorCode::EmptySequence, "dimension sequence is empty");
  if (dims.front() != 0 || dims.back() != 0)
    throw Error(ErrorCode::EndpointNotZero, describe(dims));
  for (std::size_t i = 1; i < dims.size(); ++i) {
    const int step = dims[i] - dims[i - 1];
    if (step != 1 && step != -1)
      throw Error(ErrorCode::StepNotOne,
                  describe(dims) + " at position " + std::to_string(i));
    if (dims[i] < 0)
      throw Error(ErrorCode::StepNotOne, describe(dims) + " steps below 0 at position " + std::to_string(i));
  }
}

}  // namespace

DimensionSequence::DimensionSequence(std::vector<int> dims) : dims_(std::move(dims)) {
  check_sequence(dims_);
}

int DimensionSequence::max_dimension() const noexcept {
  return *std::max_element(dims_.begin(), dims_.end());
}

DimensionSequence validate_sequence(std::span<const int> dims) {
  return DimensionSequence(std::vector<int>(dims.begin(), dims.end()));
}

UpDownVector::UpDownVector(std::vector<int> entries) : entries_(std::move(entries)) {
  if (entries_.empty() || entries_.size() % 2 == 0)
    throw Error(ErrorCode::InvalidUpDown, "length must be odd: " + describe(entries_));
  for (int e : entries_)
    if (e < 0) throw Error(ErrorCode::InvalidUpDown, "negative entry: " + describe(entries_));
  for (std::size_t i = 1; i < entries_.size(); i += 2) {
    if (!(entries_[i - 1] > entries_[i] && entries_[i] < entries_[i + 1]))
      throw Error(ErrorCode::InvalidUpDown, "not up-and-down: " + describe(entries_));
  }
}

std::size_t LevelTree::vertex_count() const {
  std::size_t n = 1;
  for (const auto& c : children) n += c.vertex_count();
  return n;
}

std::size_t LevelTree::height() const {
  std::size_t h = 0;
  for (const auto& c : children) h = std::max(h, c.height() + 1);
  return h;
}

std::string serialize(const LevelTree& tree) {
  std::string out = "(";
  for (const auto& c : tree.children) out += serialize(c);
  return out + ")";
}

namespace {

LevelTree parse_node(std::string_view text, std::size_t& pos) {
  if (pos >= text.size() || text[pos] != '(')
    throw Error(ErrorCode::InvalidTree, "expected '(' at offset " + std::to_string(pos));
  ++pos;
  LevelTree node;
  while (pos < text.size() && text[pos] == '(') node.children.push_back(parse_node(text, pos));
  if (pos >= text.size() || text[pos] != ')')
    throw Error(ErrorCode::InvalidTree, "expected ')' at offset " + std::to_string(pos));
  ++pos;
  return node;
}

}  // namespace

LevelTree parse_tree(std::string_view text) {
  std::string compact;
  for (char c : text)
    if (c != ' ' && c != '\t' && c != '\n' && c != '\r') compact += c;
  std::size_t pos = 0;
  LevelTree tree = parse_node(compact, pos);
  if (pos != compact.size())
    throw Error(ErrorCode::InvalidTree, "trailing characters after tree");
  return tree;
}

UpDownVector seq_to_updown(const DimensionSequence& seq) {
  const auto& d = seq.dims();
  if (d.size() == 1) return UpDownVector({0});
  std::vector<int> out;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const int n = d[i];
    const bool up_before = i > 0 && d[i - 1] == n + 1;
    const bool up_after = i + 1 < d.size() && d[i + 1] == n + 1;
    if (!up_before && !up_after) {
      out.push_back(n);  // maximum
    } else if (up_before && up_after) {
      out.push_back(n);  // internal minimum
    }
  }
  return UpDownVector(std::move(out));
}

DimensionSequence updown_to_seq(const UpDownVector& vec) {
  const auto& e = vec.entries();
  std::vector<int> out{0};
  auto walk_to = [&out](int value) {
    while (out.back() < value) out.push_back(out.back() + 1);
    while (out.back() > value) out.push_back(out.back() - 1);
  };
  for (int v : e) walk_to(v);
  walk_to(0);
  return DimensionSequence(std::move(out));
}

LevelTree updown_to_tree(const UpDownVector& vec) {
  LevelTree root;
  // path[d] is the vertex at depth d on the most recent maximal path.
  std::vector<LevelTree*> path{&root};
  auto extend_to = [&path](int depth) {
    while (static_cast<int>(path.size()) <= depth) {
      LevelTree* parent = path.back();
      parent->children.emplace_back();
      path.push_back(&parent->children.back());
    }
  };
  extend_to(vec.peak(0));
  for (std::size_t i = 1; i < vec.peak_count(); ++i) {
    const int branch = vec.valley(i);
    path.resize(static_cast<std::size_t>(branch) + 1);
    LevelTree* parent = path.back();
    parent->children.emplace_back();
    path.push_back(&parent->children.back());
    extend_to(vec.peak(i));
  }
  return root;
}

namespace {

struct LeafWalk {
  std::vector<int> entries;
  int pending_valley = std::numeric_limits<int>::max();

  void visit(const LevelTree& node, int depth) {
    if (node.children.empty()) {
      if (!entries.empty()) entries.push_back(pending_valley);
      entries.push_back(depth);
      pending_valley = std::numeric_limits<int>::max();
      return;
    }
    for (std::size_t i = 0; i < node.children.size(); ++i) {
      if (i > 0) pending_valley = std::min(pending_valley, depth);
      visit(node.children[i], depth + 1);
    }
  }
};

}  // namespace

UpDownVector tree_to_updown(const LevelTree& tree) {
  LeafWalk walk;
  walk.visit(tree, 0);
  return UpDownVector(std::move(walk.entries));
}

Boundaries boundaries(const GradedOrderedSet& g, Element x) {
  const int n = g.dimension(x);
  if (n == 0)
    throw Error(ErrorCode::ZeroDimensional, "element " + std::to_string(x) + " has dimension 0");
  Boundaries result{x, x};
  for (Element y = x; y-- > 0;) {
    if (g.dimension(y) == n - 1) {
      result.source = y;
      break;
    }
  }
  for (Element y = x + 1; y < g.size(); ++y) {
    if (g.dimension(y) == n - 1) {
      result.target = y;
      break;
    }
  }
  return result;
}

namespace {

void extend_sequences(std::vector<int>& prefix, std::size_t max_length,
                      std::vector<std::vector<int>>& out) {
  if (prefix.back() == 0) out.push_back(prefix);
  // Need room to walk back down to zero.
  const std::size_t remaining = max_length - prefix.size();
  for (int step : {-1, 1}) {
    const int next = prefix.back() + step;
    if (next < 0) continue;
    if (static_cast<std::size_t>(next) + 1 > remaining) continue;
    prefix.push_back(next);
    extend_sequences(prefix, max_length, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<DimensionSequence> all_dimension_sequences(std::size_t max_length) {
  std::vector<std::vector<int>> raw;
  if (max_length == 0) return {};
  std::vector<int> prefix{0};
  extend_sequences(prefix, max_length, raw);
  std::sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  std::vector<DimensionSequence> out;
  out.reserve(raw.size());
  for (auto& r : raw) out.emplace_back(std::move(r));
  return out;
}

}  // namespace theta
