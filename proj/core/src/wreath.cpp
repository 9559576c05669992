#include "theta/wreath.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>

#include "theta/errors.hpp"

namespace theta {

WreathObject::WreathObject(std::size_t m, std::vector<ComplexPtr> components)
    : components_(std::move(components)) {
  if (components_.size() != m)
    throw Error(ErrorCode::InvalidWreathMorphism, "expected " + std::to_string(m) + " components, got " +
                                                      std::to_string(components_.size()));
}

bool operator==(const WreathObject& a, const WreathObject& b) {
  if (a.length() != b.length()) return false;
  for (std::size_t i = 0; i < a.length(); ++i)
    if (!same_complex(a.components_[i], b.components_[i])) return false;
  return true;
}

WreathObject wreath_of_simple(const std::vector<SimpleADC>& components) {
  std::vector<ComplexPtr> ks;
  for (const auto& k : components) ks.push_back(k.complex());
  return WreathObject(std::move(ks));
}

WreathMorphism::WreathMorphism(WreathObject source, WreathObject target, std::vector<std::size_t> phi,
                               std::vector<ChainMorphism> family)
    : source_(std::move(source)), target_(std::move(target)), phi_(std::move(phi)), family_(std::move(family)) {
  const std::size_t m = source_.length();
  const std::size_t n = target_.length();
  if (phi_.size() != m + 1)
    throw Error(ErrorCode::InvalidWreathMorphism, "phi must have " + std::to_string(m + 1) + " entries");
  for (std::size_t i = 1; i <= m; ++i)
    if (phi_[i - 1] > phi_[i]) throw Error(ErrorCode::InvalidWreathMorphism, "phi is not monotone");
  if (phi_[m] > n) throw Error(ErrorCode::InvalidWreathMorphism, "phi exceeds the target length");
  if (family_.size() != phi_[m] - phi_[0])
    throw Error(ErrorCode::InvalidWreathMorphism, "f must have phi(m) - phi(0) = " +
                                                      std::to_string(phi_[m] - phi_[0]) + " members");
  offset_.assign(m + 2, 0);
  for (std::size_t i = 1; i <= m; ++i) {
    offset_[i + 1] = offset_[i] + (phi_[i] - phi_[i - 1]);
    for (std::size_t j = phi_[i - 1] + 1; j <= phi_[i]; ++j) {
      const ChainMorphism& f = component(i, j);
      if (!same_complex(f.source(), source_.component(i)) || !same_complex(f.target(), target_.component(j)))
        throw Error(ErrorCode::InvalidWreathMorphism,
                    "f_" + std::to_string(i) + "^" + std::to_string(j) + " has the wrong source or target");
    }
  }
}

WreathMorphism WreathMorphism::identity(const WreathObject& w) {
  std::vector<std::size_t> phi;
  std::vector<ChainMorphism> family;
  for (std::size_t i = 0; i <= w.length(); ++i) phi.push_back(i);
  for (const auto& k : w.components()) family.push_back(ChainMorphism::identity(k));
  return WreathMorphism(w, w, std::move(phi), std::move(family));
}

const ChainMorphism& WreathMorphism::component(std::size_t i, std::size_t j) const {
  return family_[offset_[i] + (j - phi_[i - 1] - 1)];
}

WreathMorphism wreath_compose(const WreathMorphism& second, const WreathMorphism& first) {
  if (!(first.target() == second.source()))
    throw Error(ErrorCode::SourceTargetMismatch, "wreath morphisms are not composable");
  const auto& phi = first.phi();
  const auto& psi = second.phi();
  std::vector<std::size_t> chi;
  for (std::size_t v : phi) chi.push_back(psi[v]);
  std::vector<ChainMorphism> family;
  for (std::size_t i = 1; i < phi.size(); ++i) {
    for (std::size_t k = chi[i - 1] + 1; k <= chi[i]; ++k) {
      // The unique j in (phi(i-1), phi(i)] with psi(j-1) < k <= psi(j).
      std::size_t j = phi[i - 1] + 1;
      while (!(psi[j - 1] < k && k <= psi[j])) ++j;
      family.push_back(compose_morphisms(second.component(j, k), first.component(i, j)));
    }
  }
  return WreathMorphism(first.source(), second.target(), std::move(chi), std::move(family));
}

SuspensionLayout layout_of(const WreathObject& w) {
  SuspensionLayout layout;
  BasisIndex next = 0;
  layout.point.push_back(next++);
  for (const auto& k : w.components()) {
    std::vector<BasisIndex> s;
    for (BasisIndex b = 0; b < k->size(); ++b) s.push_back(next++);
    layout.suspended.push_back(std::move(s));
    layout.point.push_back(next++);
  }
  return layout;
}

ComplexPtr v_object(const WreathObject& w, Convention convention) {
  const SuspensionLayout layout = layout_of(w);
  const std::size_t total = layout.point.back() + 1;
  ComplexData data;
  data.degrees.assign(total, 0);
  data.boundaries.assign(total, Chain(-1));
  data.augmentation.assign(total, 0);
  for (BasisIndex p : layout.point) data.augmentation[p] = 1;
  const int sign = orientation(convention);
  for (std::size_t i = 1; i <= w.length(); ++i) {
    const auto& k = *w.component(i);
    const auto& s = layout.suspended[i - 1];
    for (BasisIndex b = 0; b < k.size(); ++b) {
      const int q = k.degree(b);
      data.degrees[s[b]] = q + 1;
      Chain boundary(q);
      if (q > 0) {
        for (const auto& [t, c] : k.boundary(b).terms()) boundary.add(s[t], c);
      } else {
        const Integer e = k.augmentation(b) * sign;
        boundary.add(layout.point[i], e);
        boundary.add(layout.point[i - 1], -e);
      }
      data.boundaries[s[b]] = std::move(boundary);
    }
  }
  return make_complex(std::move(data));
}

ChainMorphism v_morphism(const WreathMorphism& wm, const ComplexPtr& v_source, const ComplexPtr& v_target) {
  const SuspensionLayout from = layout_of(wm.source());
  const SuspensionLayout to = layout_of(wm.target());
  const auto& phi = wm.phi();
  std::vector<Chain> images(v_source->size());
  for (std::size_t i = 0; i < from.point.size(); ++i) images[from.point[i]] = Chain::basis(0, to.point[phi[i]]);
  for (std::size_t i = 1; i <= wm.source().length(); ++i) {
    const auto& k = *wm.source().component(i);
    for (BasisIndex b = 0; b < k.size(); ++b) {
      Chain img(k.degree(b) + 1);
      for (std::size_t j = phi[i - 1] + 1; j <= phi[i]; ++j) {
        const Chain part = wm.component(i, j).image(b);
        for (const auto& [t, c] : part.terms()) img.add(to.suspended[j - 1][t], c);
      }
      images[from.suspended[i - 1][b]] = std::move(img);
    }
  }
  std::vector<Matrix> blocks;
  for (int q = 0; q <= v_source->top_degree(); ++q) blocks.emplace_back(v_target->rank(q), v_source->rank(q));
  for (BasisIndex x = 0; x < images.size(); ++x) {
    Matrix& m = blocks[static_cast<std::size_t>(v_source->degree(x))];
    for (const auto& [t, c] : images[x].terms()) m.at(v_target->position_in_degree(t), v_source->position_in_degree(x)) = c;
  }
  return ChainMorphism(v_source, v_target, std::move(blocks));
}

ChainMorphism v_morphism(const WreathMorphism& wm, Convention convention) {
  return v_morphism(wm, v_object(wm.source(), convention), v_object(wm.target(), convention));
}

HomFunction simple_hom_function(Convention convention) {
  return [convention](const ComplexPtr& k, const ComplexPtr& l) {
    auto ks = SimpleADC::recognize(k, convention);
    auto ls = SimpleADC::recognize(l, convention);
    if (!ks || !ls) throw Error(ErrorCode::NotSimple, "hom enumeration needs simple complexes");
    return enumerate_hom(*ks, *ls);
  };
}

std::vector<WreathMorphism> enumerate_wreath_hom(const WreathObject& source, const WreathObject& target,
                                                 const HomFunction& hom) {
  const std::size_t m = source.length();
  const std::size_t n = target.length();
  std::map<std::pair<std::size_t, std::size_t>, std::vector<ChainMorphism>> cache;
  auto homs = [&](std::size_t i, std::size_t j) -> const std::vector<ChainMorphism>& {
    auto it = cache.find({i, j});
    if (it == cache.end()) it = cache.emplace(std::pair{i, j}, hom(source.component(i), target.component(j))).first;
    return it->second;
  };

  std::vector<WreathMorphism> out;
  std::vector<std::size_t> phi(m + 1, 0);
  while (true) {
    // Slots (i, j) with phi(i-1) < j <= phi(i), in family order.
    std::vector<const std::vector<ChainMorphism>*> slots;
    bool empty_slot = false;
    for (std::size_t i = 1; i <= m && !empty_slot; ++i)
      for (std::size_t j = phi[i - 1] + 1; j <= phi[i]; ++j) {
        slots.push_back(&homs(i, j));
        if (slots.back()->empty()) {
          empty_slot = true;
          break;
        }
      }
    if (!empty_slot) {
      std::vector<std::size_t> choice(slots.size(), 0);
      while (true) {
        std::vector<ChainMorphism> family;
        for (std::size_t s = 0; s < slots.size(); ++s) family.push_back((*slots[s])[choice[s]]);
        out.emplace_back(source, target, phi, std::move(family));
        std::size_t s = slots.size();
        while (s > 0 && choice[s - 1] + 1 == slots[s - 1]->size()) choice[--s] = 0;
        if (s == 0) break;
        ++choice[s - 1];
      }
    }
    // Next nondecreasing phi in lexicographic order.
    std::size_t i = m + 1;
    while (i > 0 && phi[i - 1] == n) --i;
    if (i == 0) break;
    const std::size_t v = phi[i - 1] + 1;
    for (std::size_t t = i - 1; t <= m; ++t) phi[t] = v;
  }
  return out;
}

namespace {

void require_phi(const WreathObject& w) {
  for (const auto& k : w.components()) {
    if (k->empty()) throw Error(ErrorCode::ComponentOutsidePhi, "component is the zero complex");
    if (!check_unital(*k)) throw Error(ErrorCode::ComponentOutsidePhi, "component basis is not unital");
    if (!check_loop_free(*k)) throw Error(ErrorCode::ComponentOutsidePhi, "component basis is not loop-free");
  }
}

}  // namespace

FullFaithfulness check_fully_faithful(const WreathObject& w1, const WreathObject& w2, const HomFunction& hom,
                                      Convention convention) {
  require_phi(w1);
  require_phi(w2);
  const ComplexPtr v1 = v_object(w1, convention);
  const ComplexPtr v2 = v_object(w2, convention);
  const auto wreath = enumerate_wreath_hom(w1, w2, hom);
  std::vector<ChainMorphism> images;
  images.reserve(wreath.size());
  for (const auto& wm : wreath) images.push_back(v_morphism(wm, v1, v2));
  std::sort(images.begin(), images.end());
  auto target = hom(v1, v2);
  std::sort(target.begin(), target.end());

  FullFaithfulness r;
  r.wreath_count = wreath.size();
  r.target_count = target.size();
  r.injective = std::adjacent_find(images.begin(), images.end()) == images.end();
  r.image_is_target = images == target;
  return r;
}

FullFaithfulness check_fully_faithful(const WreathObject& w1, const WreathObject& w2, Convention convention) {
  return check_fully_faithful(w1, w2, simple_hom_function(convention), convention);
}

int theta_level(const SimpleADC& k) { return k.dims().max_dimension(); }

namespace {

void build_tuples(const std::vector<SimpleADC>& pool, std::size_t max_size, std::size_t used,
                  std::vector<ComplexPtr>& tuple, Convention convention, std::vector<SimpleADC>& out) {
  const ComplexPtr v = v_object(WreathObject(tuple), convention);
  auto simple = SimpleADC::recognize(v, convention);
  if (!simple) throw Error(ErrorCode::NotSimple, "V of simple components is not simple");
  out.push_back(std::move(*simple));
  for (const auto& k : pool) {
    if (used + k.size() + 1 > max_size) continue;
    tuple.push_back(k.complex());
    build_tuples(pool, max_size, used + k.size() + 1, tuple, convention, out);
    tuple.pop_back();
  }
}

}  // namespace

std::vector<SimpleADC> iterated_wreath_objects(int depth, std::size_t max_size, Convention convention) {
  std::vector<SimpleADC> level;
  if (max_size >= 1) level.emplace_back(DimensionSequence({0}), convention);
  for (int d = 1; d <= depth; ++d) {
    std::vector<SimpleADC> next;
    std::vector<ComplexPtr> tuple;
    if (max_size >= 1) build_tuples(level, max_size, 1, tuple, convention, next);
    level = std::move(next);
  }
  std::sort(level.begin(), level.end(), [](const SimpleADC& a, const SimpleADC& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.dims() < b.dims();
  });
  return level;
}

}  // namespace theta
