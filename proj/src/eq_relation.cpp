#include "icl/eq_relation.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "icl/errors.hpp"

namespace icl {

EqRelation::EqRelation(std::size_t n) : parent_(n), rank_(n, 0) {
  for (std::size_t i = 0; i < n; ++i)
    parent_[i] = static_cast<int>(i);
}

EqRelation EqRelation::universal(std::size_t n) {
  EqRelation r(n);
  for (std::size_t i = 1; i < n; ++i)
    r.unite(0, static_cast<int>(i));
  return r;
}

int EqRelation::find(int i) const {
  while (parent_[i] != i) {
    parent_[i] = parent_[parent_[i]];
    i = parent_[i];
  }
  return i;
}

bool EqRelation::unite(int a, int b) {
  internal_check(!frozen_, "unite on a frozen relation");
  int ra = find(a), rb = find(b);
  if (ra == rb)
    return false;
  if (rank_[ra] < rank_[rb])
    std::swap(ra, rb);
  parent_[rb] = ra;
  if (rank_[ra] == rank_[rb])
    ++rank_[ra];
  return true;
}

void EqRelation::freeze() {
  frozen_ = true;
}

std::size_t EqRelation::num_classes() const {
  std::size_t c = 0;
  for (std::size_t i = 0; i < size(); ++i)
    if (find(static_cast<int>(i)) == static_cast<int>(i))
      ++c;
  return c;
}

std::vector<std::vector<int>> EqRelation::blocks() const {
  std::map<int, std::vector<int>> by_root;
  for (std::size_t i = 0; i < size(); ++i)
    by_root[find(static_cast<int>(i))].push_back(static_cast<int>(i));
  std::vector<std::vector<int>> out;
  out.reserve(by_root.size());
  for (auto& [root, blk] : by_root)
    out.push_back(std::move(blk));
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

std::vector<int> EqRelation::block_of(int a) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < size(); ++i)
    if (related(a, static_cast<int>(i)))
      out.push_back(static_cast<int>(i));
  return out;
}

std::vector<int> EqRelation::canonical() const {
  std::vector<int> label(size(), -1);
  std::vector<int> root_label(size(), -1);
  int next = 0;
  for (std::size_t i = 0; i < size(); ++i) {
    int r = find(static_cast<int>(i));
    if (root_label[r] == -1)
      root_label[r] = next++;
    label[i] = root_label[r];
  }
  return label;
}

bool EqRelation::subrelation_of(const EqRelation& other) const {
  internal_check(size() == other.size(), "relation size mismatch");
  // Every class of *this must land inside one class of other.
  std::vector<int> rep(size(), -1);
  for (std::size_t i = 0; i < size(); ++i) {
    int r = find(static_cast<int>(i));
    if (rep[r] == -1)
      rep[r] = static_cast<int>(i);
    else if (!other.related(rep[r], static_cast<int>(i)))
      return false;
  }
  return true;
}

bool EqRelation::operator==(const EqRelation& o) const {
  if (size() != o.size())
    return false;
  return canonical() == o.canonical();
}

EqRelation eq_meet(const EqRelation& r1, const EqRelation& r2) {
  internal_check(r1.size() == r2.size(), "relation size mismatch");
  EqRelation out(r1.size());
  std::map<std::pair<int, int>, int> first;
  for (std::size_t i = 0; i < r1.size(); ++i) {
    auto key = std::make_pair(r1.find(static_cast<int>(i)), r2.find(static_cast<int>(i)));
    auto [it, fresh] = first.emplace(key, static_cast<int>(i));
    if (!fresh)
      out.unite(it->second, static_cast<int>(i));
  }
  return out;
}

EqRelation eq_join_transitive(const EqRelation& r1, const EqRelation& r2) {
  internal_check(r1.size() == r2.size(), "relation size mismatch");
  EqRelation out(r1.size());
  for (std::size_t i = 0; i < r1.size(); ++i) {
    out.unite(static_cast<int>(i), r1.find(static_cast<int>(i)));
    out.unite(static_cast<int>(i), r2.find(static_cast<int>(i)));
  }
  return out;
}

RestrictedRelation restrict_relation(const EqRelation& rel, const std::vector<int>& subset) {
  RestrictedRelation out{EqRelation(subset.size()), subset};
  std::map<int, int> first;  // root -> position in subset
  for (std::size_t pos = 0; pos < subset.size(); ++pos) {
    int r = rel.find(subset[pos]);
    auto [it, fresh] = first.emplace(r, static_cast<int>(pos));
    if (!fresh)
      out.rel.unite(it->second, static_cast<int>(pos));
  }
  return out;
}

EqRelation left_congruence_closure(const FiniteInverseSemigroup& S,
                                   const std::vector<std::pair<int, int>>& pairs) {
  EqRelation rel(S.size());
  std::vector<std::pair<int, int>> work;
  for (auto [a, b] : pairs)
    if (rel.unite(a, b))
      work.emplace_back(a, b);
  for (std::size_t head = 0; head < work.size(); ++head) {
    auto [a, b] = work[head];
    for (std::size_t c = 0; c < S.size(); ++c) {
      int ca = S.product(static_cast<int>(c), a);
      int cb = S.product(static_cast<int>(c), b);
      if (rel.unite(ca, cb))
        work.emplace_back(ca, cb);
    }
  }
  return rel;
}

EqRelation left_congruence_closure(const FiniteInverseSemigroup& S, const GenPairSet& pairs) {
  return left_congruence_closure(S, pairs.pairs());
}

bool is_left_congruence(const FiniteInverseSemigroup& S, const EqRelation& rho) {
  internal_check(rho.size() == S.size(), "relation size mismatch");
  std::vector<std::vector<int>> blocks = rho.blocks();
  for (const auto& blk : blocks)
    for (std::size_t i = 0; i + 1 < blk.size(); ++i)
      for (std::size_t j = i + 1; j < blk.size(); ++j)
        for (std::size_t c = 0; c < S.size(); ++c)
          if (!rho.related(S.product(static_cast<int>(c), blk[i]),
                           S.product(static_cast<int>(c), blk[j])))
            return false;
  return true;
}

bool is_right_compatible(const FiniteInverseSemigroup& S, const EqRelation& rho) {
  internal_check(rho.size() == S.size(), "relation size mismatch");
  std::vector<std::vector<int>> blocks = rho.blocks();
  for (const auto& blk : blocks)
    for (std::size_t i = 0; i + 1 < blk.size(); ++i)
      for (std::size_t j = i + 1; j < blk.size(); ++j)
        for (std::size_t c = 0; c < S.size(); ++c)
          if (!rho.related(S.product(blk[i], static_cast<int>(c)),
                           S.product(blk[j], static_cast<int>(c))))
            return false;
  return true;
}

namespace {

bool partition_compatible(const FiniteInverseSemigroup& E, const std::vector<int>& label) {
  for (std::size_t a = 0; a < label.size(); ++a)
    for (std::size_t b = a + 1; b < label.size(); ++b) {
      if (label[a] != label[b])
        continue;
      for (std::size_t g = 0; g < E.size(); ++g) {
        int ga = E.product(static_cast<int>(g), static_cast<int>(a));
        int gb = E.product(static_cast<int>(g), static_cast<int>(b));
        if (label[ga] != label[gb])
          return false;
      }
    }
  return true;
}

void enumerate_partitions(std::size_t n, std::vector<int>& label, std::size_t pos, int next,
                          const FiniteInverseSemigroup& E, std::vector<EqRelation>& out) {
  if (pos == n) {
    if (partition_compatible(E, label)) {
      EqRelation r(n);
      std::vector<int> rep(n, -1);
      for (std::size_t i = 0; i < n; ++i) {
        if (rep[label[i]] == -1)
          rep[label[i]] = static_cast<int>(i);
        else
          r.unite(rep[label[i]], static_cast<int>(i));
      }
      out.push_back(std::move(r));
    }
    return;
  }
  for (int c = 0; c <= next && c < static_cast<int>(n); ++c) {
    label[pos] = c;
    enumerate_partitions(n, label, pos + 1, std::max(next, c + 1), E, out);
  }
}

}  // namespace

std::vector<EqRelation> semilattice_congruences(const FiniteInverseSemigroup& E,
                                                std::size_t partition_threshold) {
  for (std::size_t a = 0; a < E.size(); ++a)
    internal_check(E.is_idempotent(static_cast<int>(a)),
                   "semilattice_congruences on a non-semilattice");

  std::vector<EqRelation> out;
  if (E.size() <= partition_threshold) {
    std::vector<int> label(E.size(), 0);
    enumerate_partitions(E.size(), label, 0, 0, E, out);
  } else {
    // Principal congruences, closed under pairwise join.
    std::set<std::vector<int>> seen;
    std::vector<EqRelation> pool;
    EqRelation id(E.size());
    seen.insert(id.canonical());
    pool.push_back(id);
    for (std::size_t a = 0; a < E.size(); ++a)
      for (std::size_t b = a + 1; b < E.size(); ++b) {
        GenPairSet g;
        g.add(static_cast<int>(a), static_cast<int>(b));
        EqRelation r = left_congruence_closure(E, g);
        if (seen.insert(r.canonical()).second)
          pool.push_back(std::move(r));
      }
    for (std::size_t i = 0; i < pool.size(); ++i)
      for (std::size_t j = 0; j < i; ++j) {
        EqRelation r = eq_join_transitive(pool[i], pool[j]);
        if (seen.insert(r.canonical()).second)
          pool.push_back(std::move(r));
      }
    out = std::move(pool);
  }
  std::sort(out.begin(), out.end(),
            [](const EqRelation& a, const EqRelation& b) { return a.canonical() < b.canonical(); });
  return out;
}

}  // namespace icl
