#include "theta/verify/acceptance.hpp"

#include <chrono>
#include <cstdio>
#include <functional>

#include "theta/errors.hpp"

namespace theta::verify {

namespace {

struct Criterion {
  std::string title;
  double budget;
};

Criterion criterion_of(int id) {
  switch (id) {
    case 1: return {"representation bijections", 1};
    case 2: return {"one-dimensional hom counts against the matrix oracle", 10};
    case 3: return {"separated images, order and bridge characterizations", 30};
    case 4: return {"cell counts and omega-category laws", 30};
    case 5: return {"duality with finite discs", 10};
    case 6: return {"wreath product and V", 60};
    case 7: return {"filtration by iterated wreath products", 10};
    case 8: return {"convention robustness", 150};
    default: throw Error(ErrorCode::ParseError, "no criterion " + std::to_string(id));
  }
}

std::vector<std::function<PropertyResult()>> parts_of(int id, Convention conv) {
  const auto cat = catalog_objects(conv);
  std::vector<SimpleADC> small;
  for (const auto& k : cat)
    if (k.size() <= 7) small.push_back(k);
  switch (id) {
    case 1:
      return {[] { return prop_round_trips(13); }, [] { return prop_reference_sequence(); }};
    case 2:
      return {[=] { return prop_theta1_counts(4, conv); }};
    case 3: {
      auto objects = objects_up_to(9, conv);
      for (const auto& k : cat)
        if (k.size() > 9) objects.push_back(k);
      return {[=] { return prop_separated_images(10, conv); },
              [=] { return prop_order_characterizations(objects); },
              [=] { return prop_bridge_characterizations(objects); }};
    }
    case 4:
      return {[=] { return prop_cell_counts(conv, 1); },
              [=] { return prop_cell_oracle(small, 1); },
              [=] { return prop_cell_axioms(cat, 1); },
              [=] { return prop_cell_category_laws(cat, 1); },
              [=] { return prop_atom_boundaries(cat); },
              [=] { return prop_cell_stabilization(cat); }};
    case 5:
      return {[=] { return prop_double_transpose(cat); },
              [=] { return prop_disc_hom_counts(cat); },
              [=] { return prop_window_formula(cat); }};
    case 6:
      return {[=] { return prop_v_shape(13, conv); },
              [=] { return prop_v_preserves_bases(conv); },
              [=] { return prop_v_functorial(7, conv); },
              [=] { return prop_fully_faithful(9, conv); }};
    case 7:
      return {[=] { return prop_filtration(3, 13, conv); }};
    default:
      throw Error(ErrorCode::ParseError, "no criterion " + std::to_string(id));
  }
}

double elapsed(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void finish(CriterionResult& c) {
  if (c.passed && c.seconds > c.budget_seconds) {
    c.passed = false;
    c.detail = "over the time budget; " + c.detail;
  }
}

}  // namespace

CriterionResult run_criterion(int id, Convention convention) {
  const Criterion info = criterion_of(id);
  CriterionResult c{id, info.title, true, "", {}, 0, info.budget, {}};
  const auto start = std::chrono::steady_clock::now();
  for (const auto& part : parts_of(id, convention)) {
    PropertyResult p;
    try {
      p = part();
    } catch (const std::exception& e) {
      p = PropertyResult{"", "criterion " + std::to_string(id), false, std::string("exception: ") + e.what(), {}};
    }
    if (!p.passed && c.passed) c.detail = p.name + ": " + p.detail;
    c.passed = c.passed && p.passed;
    c.cardinalities.insert(c.cardinalities.end(), p.counts.begin(), p.counts.end());
    c.parts.push_back(std::move(p));
  }
  c.seconds = elapsed(start);
  if (c.passed) {
    for (const auto& p : c.parts) c.detail += (c.detail.empty() ? "" : " | ") + p.detail;
  }
  finish(c);
  return c;
}

CriterionResult run_convention_robustness(const std::vector<CriterionResult>& standard_runs) {
  const Criterion info = criterion_of(8);
  CriterionResult c{8, info.title, true, "", {}, 0, info.budget, {}};
  const auto start = std::chrono::steady_clock::now();
  std::size_t compared = 0;
  for (const auto& s : standard_runs) {
    const CriterionResult w = run_criterion(s.id, Convention::swapped);
    for (auto& p : w.parts) c.parts.push_back(p);
    if (!w.passed && c.passed) {
      c.passed = false;
      c.detail = "criterion " + std::to_string(s.id) + " fails under the swapped convention: " + w.detail;
    }
    if (w.cardinalities != s.cardinalities && c.passed) {
      c.passed = false;
      c.detail = "criterion " + std::to_string(s.id) + " cardinalities differ between conventions";
    }
    compared += w.cardinalities.size();
    c.cardinalities.insert(c.cardinalities.end(), w.cardinalities.begin(), w.cardinalities.end());
  }
  c.seconds = elapsed(start);
  if (c.passed)
    c.detail = std::to_string(compared) + " cardinalities identical across criteria 2-7 under both conventions";
  finish(c);
  return c;
}

std::vector<CriterionResult> run_acceptance() {
  std::vector<CriterionResult> out;
  out.push_back(run_criterion(1));
  std::vector<CriterionResult> standard;
  for (int id = 2; id <= 7; ++id) {
    out.push_back(run_criterion(id, Convention::standard));
    standard.push_back(out.back());
  }
  out.push_back(run_convention_robustness(standard));
  return out;
}

std::string format_criterion(const CriterionResult& c) {
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.2f s / %.0f s", c.seconds, c.budget_seconds);
  return std::string(c.passed ? "PASS" : "FAIL") + " [" + std::to_string(c.id) + "] " + c.title + " (" + timing +
         "): " + c.detail;
}

}  // namespace theta::verify
