#include "theta/complex.hpp"

#include <deque>
#include <string>

#include "theta/errors.hpp"

namespace theta {

namespace {

const std::vector<BasisIndex> kNoElements;

std::string element_name(BasisIndex b) { return "basis element " + std::to_string(b); }

// Kahn's algorithm: true iff the directed graph has no cycle.
bool is_acyclic(std::size_t vertex_count, const std::vector<std::vector<std::size_t>>& edges) {
  std::vector<std::size_t> indegree(vertex_count, 0);
  for (const auto& out : edges)
    for (std::size_t v : out) ++indegree[v];
  std::deque<std::size_t> ready;
  for (std::size_t v = 0; v < vertex_count; ++v)
    if (indegree[v] == 0) ready.push_back(v);
  std::size_t removed = 0;
  while (!ready.empty()) {
    const std::size_t v = ready.front();
    ready.pop_front();
    ++removed;
    for (std::size_t w : edges[v])
      if (--indegree[w] == 0) ready.push_back(w);
  }
  return removed == vertex_count;
}

}  // namespace

void validate_structure(const ComplexData& data) {
  const std::size_t n = data.degrees.size();
  if (data.boundaries.size() != n || data.augmentation.size() != n)
    throw Error(ErrorCode::MalformedComplex, "degree, boundary and augmentation lists differ in length");
  for (BasisIndex b = 0; b < n; ++b) {
    const int q = data.degrees[b];
    if (q < 0) throw Error(ErrorCode::MalformedComplex, element_name(b) + " has negative degree");
    const Chain& db = data.boundaries[b];
    if (q == 0 && !db.is_zero())
      throw Error(ErrorCode::MalformedComplex, element_name(b) + " has degree 0 but a boundary");
    if (q > 0 && db.degree() != q - 1 && !db.is_zero())
      throw Error(ErrorCode::MalformedComplex, element_name(b) + " boundary has the wrong degree");
    for (const auto& [t, c] : db.terms()) {
      if (t >= n || data.degrees[t] != q - 1)
        throw Error(ErrorCode::MalformedComplex,
                    element_name(b) + " boundary term " + std::to_string(t) + " is not of degree " +
                        std::to_string(q - 1));
    }
    if (q > 0 && data.augmentation[b] != 0)
      throw Error(ErrorCode::MalformedComplex, element_name(b) + " has positive degree but an augmentation");
  }
  for (BasisIndex b = 0; b < n; ++b) {
    const int q = data.degrees[b];
    if (q >= 2) {
      Chain dd(q - 2);
      for (const auto& [t, c] : data.boundaries[b].terms()) {
        Chain term = data.boundaries[t];
        term *= c;
        dd += term;
      }
      if (!dd.is_zero())
        throw Error(ErrorCode::NotChainComplex, "boundary of the boundary of " + element_name(b) + " is nonzero");
    } else if (q == 1) {
      Integer e = 0;
      for (const auto& [t, c] : data.boundaries[b].terms()) e += c * data.augmentation[t];
      if (e != 0)
        throw Error(ErrorCode::NotAugmentedComplex,
                    "augmentation of the boundary of " + element_name(b) + " is nonzero");
    }
  }
}

AugmentedDirectedComplex::AugmentedDirectedComplex(ComplexData data) : data_(std::move(data)) {
  validate_structure(data_);
  // Zero boundaries are stored with degree |b| - 1 so that equality is exact.
  for (BasisIndex b = 0; b < size(); ++b) {
    if (data_.boundaries[b].is_zero()) data_.boundaries[b] = Chain(data_.degrees[b] - 1);
  }
  position_.resize(size());
  for (BasisIndex b = 0; b < size(); ++b) {
    const auto q = static_cast<std::size_t>(data_.degrees[b]);
    if (by_degree_.size() <= q) by_degree_.resize(q + 1);
    position_[b] = by_degree_[q].size();
    by_degree_[q].push_back(b);
  }
}

const std::vector<BasisIndex>& AugmentedDirectedComplex::basis_of_degree(int q) const {
  if (q < 0 || q >= static_cast<int>(by_degree_.size())) return kNoElements;
  return by_degree_[static_cast<std::size_t>(q)];
}

Chain AugmentedDirectedComplex::boundary_of(const Chain& x) const {
  Chain out(x.degree() - 1);
  for (const auto& [b, c] : x.terms()) {
    Chain term = boundary(b);
    term *= c;
    out += term;
  }
  return out;
}

Integer AugmentedDirectedComplex::augment(const Chain& x) const {
  Integer e = 0;
  for (const auto& [b, c] : x.terms()) e += c * augmentation(b);
  return e;
}

Chain AugmentedDirectedComplex::iterated_part(const Chain& x, Sign sign, int times) const {
  Chain current = x;
  for (int i = 0; i < times; ++i) {
    SignedParts parts = pos_neg_parts(boundary_of(current));
    current = sign == Sign::plus ? std::move(parts.positive) : std::move(parts.negative);
  }
  return current;
}

ComplexPtr make_complex(ComplexData data) {
  return std::make_shared<const AugmentedDirectedComplex>(std::move(data));
}

ComplexPtr negated(const AugmentedDirectedComplex& k) {
  ComplexData data = k.data();
  for (Chain& c : data.boundaries) c = -c;
  return make_complex(std::move(data));
}

bool check_unital(const AugmentedDirectedComplex& k) {
  for (BasisIndex b = 0; b < k.size(); ++b) {
    const Chain x = Chain::basis(k.degree(b), b);
    for (Sign s : {Sign::minus, Sign::plus}) {
      if (k.augment(k.iterated_part(x, s, k.degree(b))) != 1) return false;
    }
  }
  return true;
}

bool check_strongly_loop_free(const AugmentedDirectedComplex& k) {
  // a < b when a is a term in d^- b, or b is a term in d^+ a.
  std::vector<std::vector<std::size_t>> edges(k.size());
  for (BasisIndex x = 0; x < k.size(); ++x) {
    if (k.degree(x) == 0) continue;
    const SignedParts parts = pos_neg_parts(k.boundary(x));
    for (const auto& [a, c] : parts.negative.terms()) edges[a].push_back(x);
    for (const auto& [b, c] : parts.positive.terms()) edges[x].push_back(b);
  }
  return is_acyclic(k.size(), edges);
}

bool check_loop_free(const AugmentedDirectedComplex& k) {
  for (int q = 0; q <= k.top_degree(); ++q) {
    // Relation <_q on elements of degree >= q; vertices are all basis
    // elements, lower ones simply stay isolated.
    std::vector<std::vector<std::size_t>> edges(k.size());
    for (BasisIndex b = 0; b < k.size(); ++b) {
      const int depth = k.degree(b) - q;
      if (depth <= 0) continue;
      const Chain x = Chain::basis(k.degree(b), b);
      const Chain source = k.iterated_part(x, Sign::minus, depth), target = k.iterated_part(x, Sign::plus, depth);
      for (const auto& [a, c] : source.terms()) edges[a].push_back(b);
      for (const auto& [a, c] : target.terms()) edges[b].push_back(a);
    }
    if (!is_acyclic(k.size(), edges)) return false;
  }
  return true;
}

}  // namespace theta
