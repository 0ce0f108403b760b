#include "sgkernel/semigroup.hpp"

#include <algorithm>

#include "sgkernel/errors.hpp"
#include "sgkernel/hierarchy.hpp"

namespace sgkernel {

ColorSystem make_color_system(std::vector<Transformation> colors,
                              std::vector<Rational> weights) {
  if (colors.empty()) throw DomainError("color system needs at least one color");
  int n = colors.front().n();
  for (const auto& c : colors)
    if (c.n() != n) throw DomainError("color system: mixed ground-set sizes");
  if (weights.empty()) weights.assign(colors.size(), Rational(1, colors.size()));
  if (weights.size() != colors.size())
    throw DomainError("color system: weight count differs from color count");
  Rational total = 0;
  for (const auto& w : weights) {
    if (w <= 0) throw DomainError("color system: weights must be positive");
    total += w;
  }
  if (total != 1) throw DomainError("color system: weights must sum to 1");
  return ColorSystem{n, std::move(colors), std::move(weights)};
}

RatMat adjacency(const ColorSystem& cs) {
  RatMat a(cs.n, cs.n);
  for (std::size_t i = 0; i < cs.colors.size(); ++i)
    a = a + matrix_of(cs.colors[i]).scaled(cs.weights[i]);
  return a;
}

RatMat level_average(const ColorSystem& cs, int level) {
  RatMat a;
  for (std::size_t i = 0; i < cs.colors.size(); ++i) {
    RatMat m = level_matrix(cs.colors[i], level).scaled(cs.weights[i]);
    a = i == 0 ? m : a + m;
  }
  return a;
}

RatMat augmented_level_average(const ColorSystem& cs, int level) {
  RatMat a;
  for (std::size_t i = 0; i < cs.colors.size(); ++i) {
    RatMat m = augmented_level_matrix(cs.colors[i], level).scaled(cs.weights[i]);
    a = i == 0 ? m : a + m;
  }
  return a;
}

int SemigroupTable::index_of(const Transformation& t) const {
  auto it = index_.find(t.key());
  return it == index_.end() ? -1 : it->second;
}

int SemigroupTable::product(int i, int j) const {
  int k = index_of(compose(elements_[i], elements_[j]));
  if (k < 0) throw DomainError("semigroup table not closed; generation bug");
  return k;
}

int SemigroupTable::min_rank() const {
  int r = elements_.front().n();
  for (const auto& t : elements_) r = std::min(r, rank_of(t));
  return r;
}

SemigroupTable generate_semigroup(const ColorSystem& cs, std::size_t cap) {
  if (cs.n > 12) throw DomainError("generate_semigroup: ground sets beyond n = 12 unsupported");
  SemigroupTable st;
  auto add = [&](const Transformation& t, std::vector<int> word) {
    st.index_.emplace(t.key(), st.size());
    st.elements_.push_back(t);
    st.words_.push_back(std::move(word));
    if (st.elements_.size() > cap)
      throw DomainError("ExplosionGuard: semigroup exceeds cap " + std::to_string(cap));
  };
  for (std::size_t i = 0; i < cs.colors.size(); ++i) {
    int id = st.index_of(cs.colors[i]);
    if (id < 0) {
      id = st.size();
      add(cs.colors[i], {static_cast<int>(i)});
    }
    st.generator_ids_.push_back(id);
  }
  for (int head = 0; head < st.size(); ++head) {
    for (std::size_t i = 0; i < cs.colors.size(); ++i) {
      Transformation next = compose(st.elements_[head], cs.colors[i]);
      if (st.index_of(next) >= 0) continue;
      std::vector<int> word = st.words_[head];
      word.push_back(static_cast<int>(i));
      add(next, std::move(word));
    }
  }
  return st;
}

}  // namespace sgkernel
