#include "theta/verify/properties.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>

#include "theta/catalog.hpp"
#include "theta/cells.hpp"
#include "theta/duality.hpp"
#include "theta/errors.hpp"
#include "theta/text_format.hpp"
#include "theta/verify/oracles.hpp"

namespace theta::verify {

namespace {

class Recorder {
 public:
  Recorder(std::string module, std::string name) {
    result_.module = std::move(module);
    result_.name = std::move(name);
  }

  // Keeps the first failure message only.
  bool expect(bool ok, const std::function<std::string()>& what) {
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.detail = what();
    }
    return ok;
  }

  void count(std::size_t n) { result_.counts.push_back(n); }

  PropertyResult done(std::string summary) {
    if (result_.passed) result_.detail = std::move(summary);
    return std::move(result_);
  }

 private:
  PropertyResult result_;
};

std::string label(const SimpleADC& k) { return format_dims(k.dims()); }
std::string label(const DimensionSequence& d) { return format_dims(d); }
std::string pair_label(const SimpleADC& k, const SimpleADC& l) { return label(k) + " -> " + label(l); }

SimpleADC line_object(std::size_t arrows, Convention convention) {
  std::vector<int> dims{0};
  for (std::size_t i = 0; i < arrows; ++i) {
    dims.push_back(1);
    dims.push_back(0);
  }
  return SimpleADC(DimensionSequence(std::move(dims)), convention);
}

// a, b, x with d x = 2b - 2a: a valid complex whose basis is not unital.
ComplexPtr doubled_arrow() {
  ComplexData data;
  data.degrees = {0, 0, 1};
  data.boundaries = {Chain(-1), Chain(-1), Chain(0, {{1, 2}, {0, -2}})};
  data.augmentation = {1, 1, 0};
  return make_complex(std::move(data));
}

std::vector<ComplexPtr> assorted_complexes(Convention convention) {
  std::vector<ComplexPtr> out;
  for (const auto& k : catalog_objects(convention)) out.push_back(k.complex());
  for (const auto& k : objects_up_to(9, convention)) out.push_back(v_object(wreath_decomposition(k), convention));
  out.push_back(two_arrow_cycle());
  out.push_back(negated(*two_arrow_cycle()));
  out.push_back(doubled_arrow());
  return out;
}

bool all_zero(const ChainMorphism& f) {
  return std::all_of(f.blocks().begin(), f.blocks().end(), [](const Matrix& m) { return m.is_zero(); });
}

// Increasing sequences of elements of dimension n, including the empty one.
std::vector<std::vector<Element>> subsequences_of_dimension(const SimpleADC& k, int n) {
  std::vector<Element> pool;
  for (Element e = 0; e < k.size(); ++e)
    if (k.dimension(e) == n) pool.push_back(e);
  std::vector<std::vector<Element>> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << pool.size()); ++mask) {
    std::vector<Element> s;
    for (std::size_t i = 0; i < pool.size(); ++i)
      if (mask & (std::size_t{1} << i)) s.push_back(pool[i]);
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<SeparatedSequence> separated_sequences(const SimpleADC& k, int n) {
  std::vector<SeparatedSequence> out;
  for (auto& s : subsequences_of_dimension(k, n))
    if (!s.empty() && is_separated(k, s)) out.push_back(SeparatedSequence{n, std::move(s)});
  return out;
}

// Enumerated cells with their d_n^- and d_n^+ faces resolved to indices.
struct CellTable {
  std::vector<Cell> cells;
  std::map<Cell, std::size_t> index;
  std::vector<std::vector<std::size_t>> lo, hi;                      // [n][cell]
  std::vector<std::map<std::size_t, std::vector<std::size_t>>> by_lo;  // [n][face] -> cells

  static constexpr std::size_t missing = static_cast<std::size_t>(-1);

  CellTable(std::vector<Cell> cs, int top) : cells(std::move(cs)) {
    for (std::size_t i = 0; i < cells.size(); ++i) index.emplace(cells[i], i);
    for (int n = 0; n <= top; ++n) {
      std::vector<std::size_t> l(cells.size()), h(cells.size());
      std::map<std::size_t, std::vector<std::size_t>> group;
      for (std::size_t i = 0; i < cells.size(); ++i) {
        l[i] = find(identity_at(n, Sign::minus, cells[i]));
        h[i] = find(identity_at(n, Sign::plus, cells[i]));
        group[l[i]].push_back(i);
      }
      lo.push_back(std::move(l));
      hi.push_back(std::move(h));
      by_lo.push_back(std::move(group));
    }
  }

  std::size_t find(const Cell& x) const {
    const auto it = index.find(x);
    return it == index.end() ? missing : it->second;
  }

  // Cells y with d_n^- y = d_n^+ x.
  const std::vector<std::size_t>& right_of(int n, std::size_t x) const {
    static const std::vector<std::size_t> none;
    const auto& g = by_lo[static_cast<std::size_t>(n)];
    const auto it = g.find(hi[static_cast<std::size_t>(n)][x]);
    return it == g.end() ? none : it->second;
  }
};

template <typename Fn>
void for_each_pair(const std::vector<SimpleADC>& objects, Fn fn) {
  for (const auto& k : objects)
    for (const auto& l : objects) fn(k, l);
}

}  // namespace

std::vector<SimpleADC> catalog_objects(Convention convention) {
  std::vector<SimpleADC> out;
  for (const auto& e : catalog()) out.emplace_back(e.dims, convention);
  return out;
}

std::vector<SimpleADC> objects_up_to(std::size_t max_length, Convention convention) {
  std::vector<SimpleADC> out;
  for (auto& d : all_dimension_sequences(max_length)) out.emplace_back(std::move(d), convention);
  return out;
}

WreathObject wreath_decomposition(const SimpleADC& k) {
  const auto& d = k.dims().dims();
  std::vector<ComplexPtr> components;
  std::size_t start = 1;
  for (std::size_t i = 1; i < d.size(); ++i) {
    if (d[i] != 0) continue;
    std::vector<int> piece;
    for (std::size_t j = start; j < i; ++j) piece.push_back(d[j] - 1);
    components.push_back(SimpleADC(DimensionSequence(std::move(piece)), k.convention()).complex());
    start = i + 1;
  }
  return WreathObject(std::move(components));
}

// ---------------------------------------------------------------- representations

PropertyResult prop_round_trips(std::size_t max_length) {
  Recorder r("core_representations", "round trips seq <-> updown <-> tree");
  const auto seqs = all_dimension_sequences(max_length);
  const std::size_t expected = dimension_sequence_count(max_length);
  r.expect(seqs.size() == expected, [&] {
    return "generated " + std::to_string(seqs.size()) + " sequences, expected " + std::to_string(expected);
  });
  r.expect(std::adjacent_find(seqs.begin(), seqs.end()) == seqs.end(), [] { return "duplicate sequences"; });
  for (const auto& s : seqs) {
    const UpDownVector u = seq_to_updown(s);
    r.expect(updown_to_seq(u) == s, [&] { return "updown round trip failed for " + label(s); });
    const LevelTree t = updown_to_tree(u);
    r.expect(tree_to_updown(t) == u, [&] { return "tree round trip failed for " + label(s); });
    r.expect(parse_tree(serialize(t)) == t, [&] { return "tree text round trip failed for " + serialize(t); });
    r.expect(parse_dims(format_dims(s)) == s, [&] { return "dims text round trip failed for " + label(s); });
  }
  r.count(seqs.size());
  return r.done(std::to_string(seqs.size()) + " sequences of length <= " + std::to_string(max_length));
}

PropertyResult prop_reference_sequence() {
  Recorder r("core_representations", "17-term sequence has up-and-down vector (2,1,4,2,4,0,1)");
  const auto it = std::find_if(catalog().begin(), catalog().end(), [](const auto& e) { return e.name == "tree-17"; });
  const UpDownVector u = seq_to_updown(it->dims);
  r.expect(u.entries() == std::vector<int>{2, 1, 4, 2, 4, 0, 1}, [&] { return "got " + format_updown(u); });
  r.expect(updown_to_seq(u) == it->dims, [] { return "inverse does not return the sequence"; });
  r.count(u.entries().size());
  return r.done(format_updown(u));
}

PropertyResult prop_globularity(std::size_t max_length) {
  Recorder r("core_representations", "globularity of source and target");
  std::size_t checked = 0;
  for (const auto& s : all_dimension_sequences(max_length)) {
    const GradedOrderedSet g(s);
    for (Element x = 0; x < g.size(); ++x) {
      if (g.dimension(x) < 2) continue;
      const Boundaries b = boundaries(g, x);
      const Boundaries lo = boundaries(g, b.source), hi = boundaries(g, b.target);
      r.expect(lo == hi, [&] { return "element " + std::to_string(x) + " of " + label(s); });
      ++checked;
    }
  }
  r.count(checked);
  return r.done(std::to_string(checked) + " elements of dimension >= 2");
}

PropertyResult prop_unit_steps(std::size_t max_length) {
  Recorder r("core_representations", "unit steps and rejection of invalid sequences");
  std::size_t n = 0;
  for (const auto& s : all_dimension_sequences(max_length)) {
    const auto& d = s.dims();
    r.expect(d.front() == 0 && d.back() == 0, [&] { return "endpoint of " + label(s); });
    for (std::size_t i = 1; i < d.size(); ++i)
      r.expect(d[i] - d[i - 1] == 1 || d[i - 1] - d[i] == 1, [&] { return "step in " + label(s); });
    ++n;
  }
  const std::vector<std::pair<std::vector<int>, ErrorCode>> bad = {
      {{}, ErrorCode::EmptySequence},    {{1}, ErrorCode::EndpointNotZero},   {{0, 1}, ErrorCode::EndpointNotZero},
      {{0, 2, 0}, ErrorCode::StepNotOne}, {{0, 0}, ErrorCode::StepNotOne},    {{0, 1, 1, 0}, ErrorCode::StepNotOne},
      {{0, -1, 0}, ErrorCode::StepNotOne}};
  for (const auto& [dims, code] : bad) {
    std::optional<ErrorCode> got;
    try {
      DimensionSequence{dims};
    } catch (const Error& e) {
      got = e.code();
    }
    r.expect(got == code, [&, code = code] {
      return std::string("expected ") + std::string(to_string(code)) + " for an invalid sequence";
    });
  }
  r.count(n);
  return r.done(std::to_string(n) + " sequences, " + std::to_string(bad.size()) + " rejections");
}

// ---------------------------------------------------------------- adc_core

PropertyResult prop_chain_laws(Convention convention) {
  Recorder r("adc_core", "dd = 0 and eps d = 0");
  const auto complexes = assorted_complexes(convention);
  for (const auto& k : complexes) {
    for (BasisIndex b = 0; b < k->size(); ++b) {
      if (k->degree(b) >= 2) r.expect(k->boundary_of(k->boundary(b)).is_zero(), [&] { return format_complex(*k); });
      if (k->degree(b) == 1) r.expect(k->augment(k->boundary(b)) == 0, [&] { return format_complex(*k); });
    }
  }
  r.count(complexes.size());
  return r.done(std::to_string(complexes.size()) + " complexes");
}

PropertyResult prop_strong_implies_loop_free(Convention convention) {
  Recorder r("adc_core", "strongly loop-free implies loop-free");
  std::size_t strong = 0, loop_free = 0;
  const auto complexes = assorted_complexes(convention);
  for (const auto& k : complexes) {
    const bool s = check_strongly_loop_free(*k), l = check_loop_free(*k);
    strong += s;
    loop_free += l;
    r.expect(!s || l, [&] { return "counterexample:\n" + format_complex(*k); });
  }
  r.expect(!check_strongly_loop_free(*two_arrow_cycle()), [] { return "two-arrow cycle reported strongly loop-free"; });
  r.count(complexes.size());
  r.count(strong);
  r.count(loop_free);
  return r.done(std::to_string(strong) + " strongly loop-free, " + std::to_string(loop_free) + " loop-free of " +
                std::to_string(complexes.size()));
}

PropertyResult prop_unital_points(Convention convention) {
  Recorder r("adc_core", "unital complexes have points of augmentation 1");
  std::size_t unital = 0;
  const auto complexes = assorted_complexes(convention);
  for (const auto& k : complexes) {
    if (k->empty() || !check_unital(*k)) continue;
    ++unital;
    r.expect(k->rank(0) >= 1, [&] { return "unital complex without points"; });
    for (BasisIndex b : k->basis_of_degree(0))
      r.expect(k->augmentation(b) == 1, [&] { return "point with augmentation != 1:\n" + format_complex(*k); });
  }
  r.expect(!check_unital(*doubled_arrow()), [] { return "d x = 2b - 2a reported unital"; });
  r.count(unital);
  return r.done(std::to_string(unital) + " unital complexes");
}

PropertyResult prop_zero_augmentation_forces_zero(Convention convention) {
  Recorder r("adc_core", "eps f = 0 forces f = 0 into loop-free unital targets");
  std::vector<SimpleADC> objects;
  for (const auto& k : catalog_objects(convention))
    if (k.size() <= 7) objects.push_back(k);
  std::size_t pairs = 0;
  for_each_pair(objects, [&](const SimpleADC& k, const SimpleADC& l) {
    for (const auto& f : brute_force_hom(k.complex(), l.complex(), 1, AugmentationLaw::annihilate))
      r.expect(all_zero(f), [&] { return "nonzero map " + pair_label(k, l); });
    ++pairs;
  });
  // Without loop-freeness the conclusion fails: x + y is a cycle.
  const auto arrow = SimpleADC(DimensionSequence({0, 1, 0}), convention);
  const auto into_cycle = brute_force_hom(arrow.complex(), two_arrow_cycle(), 1, AugmentationLaw::annihilate);
  const auto nonzero = std::count_if(into_cycle.begin(), into_cycle.end(), [](const auto& f) { return !all_zero(f); });
  r.expect(nonzero > 0, [] { return "expected a nonzero map into the two-arrow cycle"; });
  r.count(pairs);
  r.count(static_cast<std::size_t>(nonzero));
  return r.done(std::to_string(pairs) + " pairs; " + std::to_string(nonzero) + " nonzero map(s) into the cycle");
}

// ---------------------------------------------------------------- simple_adc

PropertyResult prop_simple_bases(std::size_t max_length, Convention convention) {
  Recorder r("simple_adc", "simple complexes are unital and (strongly) loop-free");
  const auto objects = objects_up_to(max_length, convention);
  for (const auto& k : objects) {
    r.expect(check_unital(*k.complex()), [&] { return "not unital: " + label(k); });
    r.expect(check_loop_free(*k.complex()), [&] { return "not loop-free: " + label(k); });
    r.expect(check_strongly_loop_free(*k.complex()), [&] { return "not strongly loop-free: " + label(k); });
  }
  r.count(objects.size());
  return r.done(std::to_string(objects.size()) + " objects");
}

PropertyResult prop_theta1_counts(std::size_t max_arrows, Convention convention) {
  Recorder r("simple_adc", "one-dimensional hom counts match monotone maps");
  std::string summary;
  for (std::size_t m = 0; m <= max_arrows; ++m) {
    for (std::size_t n = 0; n <= max_arrows; ++n) {
      const SimpleADC k = line_object(m, convention), l = line_object(n, convention);
      const auto homs = enumerate_hom(k, l);
      const auto oracle = brute_force_hom(k.complex(), l.complex(), 2);
      const std::size_t monotone = monotone_map_count(m + 1, n + 1);
      r.expect(homs == oracle, [&] { return "enumeration differs from the matrix oracle for " + pair_label(k, l); });
      r.expect(homs.size() == monotone, [&] {
        return pair_label(k, l) + ": " + std::to_string(homs.size()) + " morphisms, " + std::to_string(monotone) +
               " monotone maps";
      });
      r.count(homs.size());
      if ((m == 1 && n == 1) || (m == 1 && n == 2))
        summary += "m=" + std::to_string(m) + ",n=" + std::to_string(n) + ": " + std::to_string(homs.size()) + "; ";
    }
  }
  return r.done(summary + "all m, n <= " + std::to_string(max_arrows));
}

PropertyResult prop_separated_images(std::size_t max_total_size, Convention convention) {
  Recorder r("simple_adc", "morphisms send basis elements to separated sequences");
  const auto objects = objects_up_to(max_total_size - 1, convention);
  std::size_t pairs = 0, morphisms = 0;
  for_each_pair(objects, [&](const SimpleADC& k, const SimpleADC& l) {
    if (k.size() + l.size() > max_total_size) return;
    ++pairs;
    for (const auto& f : enumerate_hom(k, l)) {
      ++morphisms;
      for (BasisIndex b = 0; b < k.size(); ++b) {
        r.expect(column_is_separated(l, f, b) && image_is_separated(l, f, b),
                 [&] { return pair_label(k, l) + ": basis element " + std::to_string(b); });
      }
    }
  });
  r.count(pairs);
  r.count(morphisms);
  return r.done(std::to_string(morphisms) + " morphisms over " + std::to_string(pairs) + " pairs");
}

PropertyResult prop_hom_oracle(const std::vector<SimpleADC>& objects, int bound) {
  Recorder r("simple_adc", "enumeration equals the brute-force matrix search");
  std::size_t total = 0;
  for_each_pair(objects, [&](const SimpleADC& k, const SimpleADC& l) {
    const auto homs = enumerate_hom(k, l);
    const auto oracle = brute_force_hom(k.complex(), l.complex(), bound);
    r.expect(homs == oracle, [&] {
      return pair_label(k, l) + ": " + std::to_string(homs.size()) + " enumerated, " + std::to_string(oracle.size()) +
             " by search";
    });
    r.count(homs.size());
    total += homs.size();
  });
  return r.done(std::to_string(total) + " morphisms over " + std::to_string(objects.size() * objects.size()) +
                " pairs");
}

PropertyResult prop_order_characterizations(const std::vector<SimpleADC>& objects) {
  Recorder r("simple_adc", "two characterizations of the separated order agree");
  std::size_t pairs = 0, related = 0;
  for (const auto& k : objects) {
    for (int n = 0; n < k.dims().max_dimension(); ++n) {
      const auto seqs = separated_sequences(k, n);
      for (const auto& lo : seqs)
        for (const auto& hi : seqs) {
          const bool a = separated_leq(k, lo, hi);
          const bool b = separated_leq_by_boundary(k, lo, hi, 2);
          r.expect(a == b, [&] { return "disagreement in " + label(k) + " at degree " + std::to_string(n); });
          ++pairs;
          related += a;
        }
    }
  }
  r.count(pairs);
  r.count(related);
  return r.done(std::to_string(pairs) + " pairs, " + std::to_string(related) + " related");
}

PropertyResult prop_bridge_characterizations(const std::vector<SimpleADC>& objects) {
  Recorder r("simple_adc", "interleaving and boundary descriptions of bridges agree");
  std::size_t checks = 0, bridging = 0;
  for (const auto& k : objects) {
    for (int n = 0; n < k.dims().max_dimension(); ++n) {
      const auto seqs = separated_sequences(k, n);
      const auto candidates = subsequences_of_dimension(k, n + 1);
      for (const auto& lo : seqs)
        for (const auto& hi : seqs) {
          if (!separated_leq(k, lo, hi)) continue;
          std::size_t found = 0;
          for (const auto& b : candidates) {
            const bool x = bridges(k, b, lo, hi), y = bridges_by_boundary(k, b, lo, hi);
            r.expect(x == y, [&] { return "disagreement in " + label(k) + " at degree " + std::to_string(n); });
            found += x;
            ++checks;
          }
          const auto listed = bridging_sequences(k, lo, hi);
          r.expect(listed.size() == found, [&] { return "bridging_sequences miscounts in " + label(k); });
          for (const auto& s : listed)
            r.expect(bridges(k, s.elements, lo, hi), [&] { return "listed sequence does not bridge in " + label(k); });
          bridging += found;
        }
    }
  }
  r.count(checks);
  r.count(bridging);
  return r.done(std::to_string(checks) + " candidates, " + std::to_string(bridging) + " bridging");
}

PropertyResult prop_composition_closure(const std::vector<SimpleADC>& objects) {
  Recorder r("simple_adc", "composites of enumerated morphisms are enumerated");
  std::map<std::pair<std::size_t, std::size_t>, std::vector<ChainMorphism>> hom;
  for (std::size_t i = 0; i < objects.size(); ++i)
    for (std::size_t j = 0; j < objects.size(); ++j) hom.emplace(std::pair{i, j}, enumerate_hom(objects[i], objects[j]));
  std::size_t composites = 0;
  for (std::size_t a = 0; a < objects.size(); ++a)
    for (std::size_t b = 0; b < objects.size(); ++b)
      for (std::size_t c = 0; c < objects.size(); ++c) {
        const auto& target = hom.at({a, c});
        for (const auto& f : hom.at({a, b}))
          for (const auto& g : hom.at({b, c})) {
            const ChainMorphism h = compose_morphisms(g, f);
            r.expect(std::binary_search(target.begin(), target.end(), h), [&] {
              return "composite " + label(objects[a]) + " -> " + label(objects[b]) + " -> " + label(objects[c]);
            });
            ++composites;
          }
      }
  r.count(composites);
  return r.done(std::to_string(composites) + " composites");
}

// ---------------------------------------------------------------- omega_cells

PropertyResult prop_cell_counts(Convention convention, int cap) {
  Recorder r("omega_cells", "cell counts 1, 3, 6, 5");
  const std::vector<std::pair<std::vector<int>, std::size_t>> expected = {
      {{0}, 1}, {{0, 1, 0}, 3}, {{0, 1, 0, 1, 0}, 6}, {{0, 1, 2, 1, 0}, 5}};
  std::string summary;
  for (const auto& [dims, want] : expected) {
    const SimpleADC k(DimensionSequence(dims), convention);
    const std::size_t got = enumerate_cells(k.complex(), cap).size();
    r.expect(got == want, [&, want = want] {
      return label(k) + ": " + std::to_string(got) + " cells, expected " + std::to_string(want);
    });
    r.count(got);
    summary += (summary.empty() ? "" : ", ") + std::to_string(got);
  }
  return r.done(summary + " (cap " + std::to_string(cap) + ")");
}

PropertyResult prop_cell_oracle(const std::vector<SimpleADC>& objects, int cap) {
  Recorder r("omega_cells", "cell enumeration equals brute-force double sequences");
  for (const auto& k : objects) {
    const auto cells = enumerate_cells(k.complex(), cap);
    const auto oracle = brute_force_cells(k.complex(), cap);
    r.expect(cells == oracle, [&] {
      return label(k) + ": " + std::to_string(cells.size()) + " enumerated, " + std::to_string(oracle.size()) +
             " by search";
    });
    r.count(cells.size());
  }
  return r.done(std::to_string(objects.size()) + " objects");
}

PropertyResult prop_cell_axioms(const std::vector<SimpleADC>& objects, int cap) {
  Recorder r("omega_cells", "cell axioms, truncation laws and identities");
  std::size_t total = 0;
  for (const auto& k : objects) {
    const auto cells = enumerate_cells(k.complex(), cap);
    const int top = k.dims().max_dimension();
    for (const Cell& x : cells) {
      ++total;
      bool valid = true;
      try {
        valid = make_cell(k.complex(), x.levels()) == x;
      } catch (const Error&) {
        valid = false;
      }
      r.expect(valid, [&] { return "invalid cell " + format_cell(x) + " in " + label(k); });
      for (Sign s : {Sign::minus, Sign::plus})
        r.expect(identity_at(x.dimension(), s, x) == x, [&] { return "not an identity: " + format_cell(x); });
      for (int n = 0; n <= top; ++n)
        for (int m = 0; m < n; ++m)
          for (Sign a : {Sign::minus, Sign::plus})
            for (Sign b : {Sign::minus, Sign::plus})
              r.expect(identity_at(m, b, identity_at(n, a, x)) == identity_at(m, b, x),
                       [&] { return "truncation law fails for " + format_cell(x); });
    }
  }
  r.count(total);
  return r.done(std::to_string(total) + " cells");
}

PropertyResult prop_cell_category_laws(const std::vector<SimpleADC>& objects, int cap) {
  Recorder r("omega_cells", "unit, associativity and interchange");
  std::size_t units = 0, triples = 0, squares = 0;
  for (const auto& k : objects) {
    const int top = k.dims().max_dimension();
    const CellTable t(enumerate_cells(k.complex(), cap), top);
    const auto& c = t.cells;
    bool closed = true;
    for (std::size_t n = 0; n < t.lo.size(); ++n)
      for (std::size_t i = 0; i < c.size(); ++i)
        closed = r.expect(t.lo[n][i] != CellTable::missing && t.hi[n][i] != CellTable::missing,
                          [&] { return "face of " + format_cell(c[i]) + " not enumerated"; }) && closed;
    if (!closed) continue;
    for (int n = 0; n <= top; ++n) {
      const auto un = static_cast<std::size_t>(n);
      for (std::size_t x = 0; x < c.size(); ++x) {
        r.expect(compose(n, c[t.lo[un][x]], c[x]) == c[x] && compose(n, c[x], c[t.hi[un][x]]) == c[x],
                 [&] { return "unit law fails at n=" + std::to_string(n) + " for " + format_cell(c[x]); });
        ++units;
      }
      for (std::size_t y = 0; y < c.size(); ++y) {
        for (std::size_t x = 0; x < c.size(); ++x) {
          if (t.hi[un][x] != t.lo[un][y]) continue;
          for (std::size_t z : t.right_of(n, y)) {
            r.expect(compose(n, compose(n, c[x], c[y]), c[z]) == compose(n, c[x], compose(n, c[y], c[z])),
                     [&] { return "associativity fails at n=" + std::to_string(n); });
            ++triples;
          }
        }
      }
      for (int m = 0; m < n; ++m) {
        const auto um = static_cast<std::size_t>(m);
        for (std::size_t x = 0; x < c.size(); ++x)
          for (std::size_t y : t.right_of(m, x))
            for (std::size_t u : t.right_of(n, x))
              for (std::size_t v : t.right_of(n, y)) {
                if (t.hi[um][u] != t.lo[um][v]) continue;
                const Cell lhs = compose(n, compose(m, c[x], c[y]), compose(m, c[u], c[v]));
                const Cell rhs = compose(m, compose(n, c[x], c[u]), compose(n, c[y], c[v]));
                r.expect(lhs == rhs, [&] {
                  return "interchange fails at m=" + std::to_string(m) + ", n=" + std::to_string(n) + " in " + label(k);
                });
                ++squares;
              }
      }
    }
  }
  r.count(units);
  r.count(triples);
  r.count(squares);
  return r.done(std::to_string(units) + " unit checks, " + std::to_string(triples) + " triples, " +
                std::to_string(squares) + " interchange squares");
}

PropertyResult prop_atom_boundaries(const std::vector<SimpleADC>& objects) {
  Recorder r("omega_cells", "atom boundaries are atoms of the boundary parts");
  std::size_t atoms = 0;
  for (const auto& k : objects) {
    const auto cells = enumerate_cells(k.complex(), 1);
    for (BasisIndex b = 0; b < k.size(); ++b) {
      const Cell a = atom(k.complex(), b);
      r.expect(std::binary_search(cells.begin(), cells.end(), a),
               [&] { return "atom " + std::to_string(b) + " of " + label(k) + " is not a cell"; });
      if (k.dimension(b) > 0)
        r.expect(check_atom_boundary(k, b), [&] { return "atom " + std::to_string(b) + " of " + label(k); });
      ++atoms;
    }
  }
  r.count(atoms);
  return r.done(std::to_string(atoms) + " atoms");
}

PropertyResult prop_nu_functorial(const std::vector<SimpleADC>& objects, int cap) {
  Recorder r("omega_cells", "nu f preserves faces and composition");
  std::size_t maps = 0, images = 0;
  for_each_pair(objects, [&](const SimpleADC& k, const SimpleADC& l) {
    const int top = k.dims().max_dimension();
    const CellTable t(enumerate_cells(k.complex(), cap), top);
    for (const auto& f : enumerate_hom(k, l)) {
      ++maps;
      for (std::size_t x = 0; x < t.cells.size(); ++x) {
        const Cell fx = nu_map(f, t.cells[x]);
        ++images;
        bool valid = true;
        try {
          valid = make_cell(l.complex(), fx.levels()) == fx;
        } catch (const Error&) {
          valid = false;
        }
        r.expect(valid, [&] { return "image is not a cell in " + pair_label(k, l); });
        for (int n = 0; n <= top; ++n) {
          for (Sign s : {Sign::minus, Sign::plus})
            r.expect(nu_map(f, identity_at(n, s, t.cells[x])) == identity_at(n, s, fx),
                     [&] { return "faces not preserved in " + pair_label(k, l); });
          for (std::size_t y : t.right_of(n, x))
            r.expect(nu_map(f, compose(n, t.cells[x], t.cells[y])) == compose(n, fx, nu_map(f, t.cells[y])),
                     [&] { return "composition not preserved in " + pair_label(k, l); });
        }
      }
    }
  });
  r.count(maps);
  r.count(images);
  return r.done(std::to_string(maps) + " morphisms, " + std::to_string(images) + " cell images");
}

PropertyResult prop_cell_stabilization(const std::vector<SimpleADC>& objects) {
  Recorder r("omega_cells", "cell sets agree for coefficient caps 1 and 2");
  for (const auto& k : objects) {
    const auto one = enumerate_cells(k.complex(), 1);
    const auto two = enumerate_cells(k.complex(), 2);
    r.expect(one == two, [&] {
      return label(k) + ": " + std::to_string(one.size()) + " vs " + std::to_string(two.size());
    });
    r.count(one.size());
  }
  return r.done(std::to_string(objects.size()) + " objects");
}

// ---------------------------------------------------------------- disc_duality

PropertyResult prop_double_transpose(const std::vector<SimpleADC>& objects) {
  Recorder r("disc_duality", "double transpose is the identity");
  std::size_t morphisms = 0;
  std::vector<CochainPtr> duals;
  for (const auto& k : objects) {
    duals.push_back(dualize_object(k));
    r.expect(*transpose_back(*duals.back()) == *k.complex(), [&] { return "object " + label(k); });
  }
  for (std::size_t i = 0; i < objects.size(); ++i)
    for (std::size_t j = 0; j < objects.size(); ++j)
      for (const auto& f : enumerate_hom(objects[i], objects[j])) {
        const CochainMorphism g = dualize_morphism(f, duals[j], duals[i]);
        r.expect(transpose_morphism(g, objects[i].complex(), objects[j].complex()) == f,
                 [&] { return "morphism " + pair_label(objects[i], objects[j]); });
        ++morphisms;
      }
  r.count(objects.size());
  r.count(morphisms);
  return r.done(std::to_string(objects.size()) + " objects, " + std::to_string(morphisms) + " morphisms");
}

PropertyResult prop_disc_hom_counts(const std::vector<SimpleADC>& objects) {
  Recorder r("disc_duality", "disc hom-sets are the transposed hom-sets");
  std::vector<CochainPtr> duals;
  for (const auto& k : objects) duals.push_back(dualize_object(k));
  std::size_t total = 0;
  for (std::size_t i = 0; i < objects.size(); ++i)
    for (std::size_t j = 0; j < objects.size(); ++j) {
      const auto homs = enumerate_hom(objects[i], objects[j]);
      const auto discs = enumerate_cochain_hom(duals[j], duals[i], 1);
      std::vector<CochainMorphism> transposed;
      for (const auto& f : homs) transposed.push_back(dualize_morphism(f, duals[j], duals[i]));
      std::sort(transposed.begin(), transposed.end());
      r.expect(discs.size() == homs.size() && discs == transposed, [&] {
        return pair_label(objects[i], objects[j]) + ": " + std::to_string(homs.size()) + " vs " +
               std::to_string(discs.size()) + " disc maps";
      });
      r.count(discs.size());
      total += discs.size();
    }
  return r.done(std::to_string(total) + " disc maps over " + std::to_string(objects.size() * objects.size()) +
                " pairs");
}

PropertyResult prop_window_formula(const std::vector<SimpleADC>& objects) {
  Recorder r("disc_duality", "coboundary matches the window formula");
  std::size_t elements = 0;
  for (const auto& k : objects) {
    const CochainComplex c(k);
    for (BasisIndex q = 0; q < c.size(); ++q) {
      r.expect(c.coboundary(q) == window_coboundary(k.dims(), q, k.convention()),
               [&] { return "element " + std::to_string(q) + " of " + label(k); });
      ++elements;
    }
  }
  r.count(elements);
  return r.done(std::to_string(elements) + " basis elements");
}

// ---------------------------------------------------------------- wreath_product

PropertyResult prop_v_shape(std::size_t max_length, Convention convention) {
  Recorder r("wreath_product", "V joins shifted component sequences");
  const SimpleADC point(DimensionSequence({0}), convention), arrow(DimensionSequence({0, 1, 0}), convention);
  const ComplexPtr v = v_object(wreath_of_simple({point, arrow}), convention);
  const SimpleADC want(DimensionSequence({0, 1, 0, 1, 2, 1, 0}), convention);
  r.expect(*v == *want.complex(), [&] { return "V(2, (point, arrow)) is\n" + format_complex(*v); });
  const auto objects = objects_up_to(max_length, convention);
  for (const auto& k : objects) {
    const ComplexPtr vk = v_object(wreath_decomposition(k), convention);
    r.expect(*vk == *k.complex(), [&] { return "V of the decomposition of " + label(k) + " differs"; });
  }
  r.count(objects.size());
  return r.done("V(2, (point, arrow)) = dims: 0 1 0 1 2 1 0; " + std::to_string(objects.size()) + " objects rebuilt");
}

PropertyResult prop_v_preserves_bases(Convention convention) {
  Recorder r("wreath_product", "V keeps unital and loop-free bases");
  std::vector<ComplexPtr> pool;
  for (const auto& k : catalog_objects(convention)) pool.push_back(k.complex());
  pool.push_back(two_arrow_cycle());
  pool.push_back(doubled_arrow());
  std::vector<std::vector<ComplexPtr>> tuples{{}};
  for (const auto& a : pool) tuples.push_back({a});
  for (const auto& a : pool)
    for (const auto& b : pool) tuples.push_back({a, b});
  using Check = bool (*)(const AugmentedDirectedComplex&);
  const std::vector<std::pair<std::string, Check>> checks = {{"unital", check_unital},
                                                             {"loop-free", check_loop_free},
                                                             {"strongly loop-free", check_strongly_loop_free}};
  std::vector<std::size_t> hypotheses(checks.size(), 0);
  for (const auto& t : tuples) {
    const ComplexPtr v = v_object(WreathObject(t), convention);
    for (std::size_t c = 0; c < checks.size(); ++c) {
      const bool all = std::all_of(t.begin(), t.end(), [&](const ComplexPtr& k) { return checks[c].second(*k); });
      if (!all) continue;
      ++hypotheses[c];
      r.expect(checks[c].second(*v), [&] { return "V loses the " + checks[c].first + " property"; });
    }
  }
  r.count(tuples.size());
  for (std::size_t h : hypotheses) r.count(h);
  return r.done(std::to_string(tuples.size()) + " wreath objects; hypotheses met " + std::to_string(hypotheses[0]) +
                "/" + std::to_string(hypotheses[1]) + "/" + std::to_string(hypotheses[2]) + " times");
}

PropertyResult prop_v_functorial(std::size_t max_v_size, Convention convention) {
  Recorder r("wreath_product", "V preserves identities and composition");
  const auto objects = objects_up_to(max_v_size, convention);
  std::vector<WreathObject> ws;
  std::vector<ComplexPtr> vs;
  for (const auto& k : objects) {
    ws.push_back(wreath_decomposition(k));
    vs.push_back(v_object(ws.back(), convention));
  }
  const HomFunction hom = simple_hom_function(convention);
  std::map<std::pair<std::size_t, std::size_t>, std::vector<WreathMorphism>> homs;
  for (std::size_t i = 0; i < ws.size(); ++i)
    for (std::size_t j = 0; j < ws.size(); ++j) homs.emplace(std::pair{i, j}, enumerate_wreath_hom(ws[i], ws[j], hom));
  for (std::size_t i = 0; i < ws.size(); ++i)
    r.expect(v_morphism(WreathMorphism::identity(ws[i]), vs[i], vs[i]) == ChainMorphism::identity(vs[i]),
             [&] { return "identity of " + label(objects[i]); });
  std::size_t pairs = 0;
  for (std::size_t a = 0; a < ws.size(); ++a)
    for (std::size_t b = 0; b < ws.size(); ++b)
      for (std::size_t c = 0; c < ws.size(); ++c) {
        std::vector<ChainMorphism> second;
        for (const auto& g : homs.at({b, c})) second.push_back(v_morphism(g, vs[b], vs[c]));
        for (const auto& f : homs.at({a, b})) {
          const ChainMorphism vf = v_morphism(f, vs[a], vs[b]);
          const auto& gs = homs.at({b, c});
          for (std::size_t gi = 0; gi < gs.size(); ++gi) {
            r.expect(v_morphism(wreath_compose(gs[gi], f), vs[a], vs[c]) == compose_morphisms(second[gi], vf), [&] {
              return "composite " + label(objects[a]) + " -> " + label(objects[b]) + " -> " + label(objects[c]);
            });
            ++pairs;
          }
        }
      }
  r.count(ws.size());
  r.count(pairs);
  return r.done(std::to_string(pairs) + " composable pairs over " + std::to_string(ws.size()) + " wreath objects");
}

PropertyResult prop_fully_faithful(std::size_t max_v_size, Convention convention) {
  Recorder r("wreath_product", "V is bijective on hom-sets");
  const auto objects = objects_up_to(max_v_size, convention);
  std::vector<WreathObject> ws;
  for (const auto& k : objects) ws.push_back(wreath_decomposition(k));
  const HomFunction hom = simple_hom_function(convention);
  std::map<std::pair<std::vector<int>, std::vector<int>>, std::size_t> counts;
  for (std::size_t i = 0; i < ws.size(); ++i)
    for (std::size_t j = 0; j < ws.size(); ++j) {
      const FullFaithfulness ff = check_fully_faithful(ws[i], ws[j], hom, convention);
      r.expect(ff.holds(), [&] {
        return pair_label(objects[i], objects[j]) + ": " + std::to_string(ff.wreath_count) + " wreath vs " +
               std::to_string(ff.target_count) + " complex morphisms";
      });
      r.count(ff.wreath_count);
      counts[{objects[i].dims().dims(), objects[j].dims().dims()}] = ff.wreath_count;
    }
  std::string summary;
  const auto lookup = [&](std::vector<int> a, std::vector<int> b) -> std::size_t {
    const auto it = counts.find({a, b});
    return it == counts.end() ? 0 : it->second;
  };
  const std::size_t arrows = lookup({0, 1, 0}, {0, 1, 0});
  r.expect(arrows == 3, [&] { return "arrow -> arrow has " + std::to_string(arrows) + " morphisms, expected 3"; });
  summary += "arrow->arrow " + std::to_string(arrows) + " = 3";
  std::vector<int> line{0};
  for (std::size_t n = 1; 2 * n + 1 <= max_v_size; ++n) {
    line.push_back(1);
    line.push_back(0);
    const std::size_t got = lookup({0}, line);
    r.expect(got == n + 1, [&] { return "point -> " + std::to_string(n) + " arrows: " + std::to_string(got); });
    summary += "; point->[" + std::to_string(n) + "] " + std::to_string(got) + " = " + std::to_string(n + 1);
  }
  return r.done(std::to_string(ws.size() * ws.size()) + " pairs; " + summary);
}

PropertyResult prop_filtration(int max_depth, std::size_t cap, Convention convention) {
  Recorder r("wreath_product", "iterated wreath products give the filtration");
  const auto all = all_dimension_sequences(cap);
  std::set<DimensionSequence> previous;
  for (int n = 0; n <= max_depth; ++n) {
    std::set<DimensionSequence> got;
    for (const auto& k : iterated_wreath_objects(n, cap, convention)) got.insert(k.dims());
    std::set<DimensionSequence> want;
    for (const auto& d : all)
      if (d.max_dimension() <= n) want.insert(d);
    r.expect(got == want, [&] {
      return "depth " + std::to_string(n) + ": " + std::to_string(got.size()) + " objects, expected " +
             std::to_string(want.size());
    });
    r.expect(std::includes(got.begin(), got.end(), previous.begin(), previous.end()),
             [&] { return "depth " + std::to_string(n - 1) + " not included in depth " + std::to_string(n); });
    r.count(got.size());
    previous = std::move(got);
  }
  return r.done("depths 0.." + std::to_string(max_depth) + " up to " + std::to_string(cap) + " elements");
}

PropertyResult prop_filtration_covers_catalog(Convention convention) {
  Recorder r("wreath_product", "the filtration exhausts the catalog");
  std::size_t longest = 0;
  int deepest = 0;
  for (const auto& e : catalog()) {
    longest = std::max(longest, e.dims.size());
    deepest = std::max(deepest, e.dims.max_dimension());
  }
  std::set<DimensionSequence> reached;
  for (const auto& k : iterated_wreath_objects(deepest, longest, convention)) reached.insert(k.dims());
  for (const auto& e : catalog())
    r.expect(reached.count(e.dims) == 1, [&] { return e.name + " is not reached"; });
  r.count(reached.size());
  return r.done(std::to_string(reached.size()) + " objects up to depth " + std::to_string(deepest));
}

// ---------------------------------------------------------------- suite

std::vector<PropertyResult> run_suite(const SuiteOptions& options) {
  const Convention conv = options.convention;
  const int cap = options.cell_cap;
  const auto cat = catalog_objects(conv);
  std::vector<SimpleADC> small;
  for (const auto& k : cat)
    if (k.size() <= 7) small.push_back(k);
  std::vector<SimpleADC> tiny;
  for (const auto& k : cat)
    if (k.size() <= 5) tiny.push_back(k);

  const std::vector<std::pair<std::string, std::function<PropertyResult()>>> props = {
      {"round trips", [] { return prop_round_trips(13); }},
      {"reference sequence", [] { return prop_reference_sequence(); }},
      {"globularity", [] { return prop_globularity(13); }},
      {"unit steps", [] { return prop_unit_steps(13); }},
      {"chain laws", [&] { return prop_chain_laws(conv); }},
      {"strong loop-freeness", [&] { return prop_strong_implies_loop_free(conv); }},
      {"unital points", [&] { return prop_unital_points(conv); }},
      {"zero augmentation", [&] { return prop_zero_augmentation_forces_zero(conv); }},
      {"simple bases", [&] { return prop_simple_bases(13, conv); }},
      {"one-dimensional counts", [&] { return prop_theta1_counts(4, conv); }},
      {"separated images", [&] { return prop_separated_images(10, conv); }},
      {"hom oracle", [&] { return prop_hom_oracle(cat, 1); }},
      {"order characterizations", [&] { return prop_order_characterizations(cat); }},
      {"bridge characterizations", [&] { return prop_bridge_characterizations(cat); }},
      {"composition closure", [&] { return prop_composition_closure(small); }},
      {"cell counts", [&] { return prop_cell_counts(conv, cap); }},
      {"cell oracle", [&] { return prop_cell_oracle(small, cap); }},
      {"cell axioms", [&] { return prop_cell_axioms(cat, cap); }},
      {"cell laws", [&] { return prop_cell_category_laws(cat, cap); }},
      {"atoms", [&] { return prop_atom_boundaries(cat); }},
      {"nu functorial", [&] { return prop_nu_functorial(tiny, cap); }},
      {"cell stabilization", [&] { return prop_cell_stabilization(cat); }},
      {"double transpose", [&] { return prop_double_transpose(cat); }},
      {"disc hom counts", [&] { return prop_disc_hom_counts(cat); }},
      {"window formula", [&] { return prop_window_formula(cat); }},
      {"V shape", [&] { return prop_v_shape(13, conv); }},
      {"V bases", [&] { return prop_v_preserves_bases(conv); }},
      {"V functorial", [&] { return prop_v_functorial(7, conv); }},
      {"fully faithful", [&] { return prop_fully_faithful(9, conv); }},
      {"filtration", [&] { return prop_filtration(3, 13, conv); }},
      {"filtration covers catalog", [&] { return prop_filtration_covers_catalog(conv); }},
  };
  std::vector<PropertyResult> out;
  for (const auto& [name, run] : props) {
    try {
      out.push_back(run());
    } catch (const std::exception& e) {
      out.push_back(PropertyResult{"", name, false, std::string("exception: ") + e.what(), {}});
    }
  }
  return out;
}

}  // namespace theta::verify
