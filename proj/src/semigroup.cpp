#include "icl/semigroup.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <random>
#include <unordered_map>

#include "icl/errors.hpp"

namespace icl {

FiniteInverseSemigroup FiniteInverseSemigroup::closure(
    const std::vector<PartialPerm>& generators, std::size_t cap) {
  if (generators.empty())
    throw InputError("closure of an empty generating set");
  std::size_t degree = generators.front().degree();
  for (const auto& g : generators)
    if (g.degree() != degree)
      throw InputError("generators of mixed degree");

  std::unordered_map<PartialPerm, int> index;
  std::vector<PartialPerm> elems;
  auto add = [&](const PartialPerm& p) -> bool {
    if (index.count(p))
      return false;
    if (elems.size() >= cap)
      throw ResourceError("element cap exceeded during closure");
    index.emplace(p, static_cast<int>(elems.size()));
    elems.push_back(p);
    return true;
  };

  for (const auto& g : generators) {
    add(g);
    add(g.inverse());
  }
  // Pairwise products until stable; the set stays inverse-closed because
  // (xy)^-1 = y^-1 x^-1.
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = 0; j < elems.size(); ++j) {
      add(elems[i] * elems[j]);
      add(elems[j] * elems[i]);
    }
  }

  std::sort(elems.begin(), elems.end());

  FiniteInverseSemigroup S;
  S.size_ = elems.size();
  S.elements_ = std::move(elems);
  index.clear();
  for (std::size_t i = 0; i < S.size_; ++i)
    index.emplace(S.elements_[i], static_cast<int>(i));

  S.cayley_.assign(S.size_ * S.size_, -1);
  for (std::size_t a = 0; a < S.size_; ++a)
    for (std::size_t b = 0; b < S.size_; ++b) {
      auto it = index.find(S.elements_[a] * S.elements_[b]);
      internal_check(it != index.end(), "closure not closed under product");
      S.cayley_[a * S.size_ + b] = it->second;
    }
  S.finish_tables();
  S.verify_axioms();
  return S;
}

FiniteInverseSemigroup FiniteInverseSemigroup::from_table(
    const std::vector<std::vector<int>>& table) {
  FiniteInverseSemigroup S;
  S.size_ = table.size();
  if (S.size_ == 0)
    throw InputError("empty multiplication table");
  S.cayley_.assign(S.size_ * S.size_, -1);
  for (std::size_t a = 0; a < S.size_; ++a) {
    if (table[a].size() != S.size_)
      throw InputError("multiplication table not square");
    for (std::size_t b = 0; b < S.size_; ++b) {
      int v = table[a][b];
      if (v < 0 || v >= static_cast<int>(S.size_))
        throw InputError("multiplication table entry out of range");
      S.cayley_[a * S.size_ + b] = v;
    }
  }
  S.finish_tables();
  S.verify_axioms();
  return S;
}

void FiniteInverseSemigroup::finish_tables() {
  const std::size_t m = size_;

  // Inverses: the unique x with a x a = a and x a x = x.
  inv_.assign(m, -1);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t x = 0; x < m; ++x) {
      if (product(product(static_cast<int>(a), static_cast<int>(x)), static_cast<int>(a)) ==
              static_cast<int>(a) &&
          product(product(static_cast<int>(x), static_cast<int>(a)), static_cast<int>(x)) ==
              static_cast<int>(x)) {
        if (inv_[a] != -1)
          throw InputError("element has multiple inverses; not an inverse semigroup");
        inv_[a] = static_cast<int>(x);
      }
    }
    if (inv_[a] == -1)
      throw InputError("element has no inverse; not an inverse semigroup");
  }

  idem_pos_.assign(m, -1);
  idempotents_.clear();
  for (std::size_t a = 0; a < m; ++a)
    if (product(static_cast<int>(a), static_cast<int>(a)) == static_cast<int>(a)) {
      idem_pos_[a] = static_cast<int>(idempotents_.size());
      idempotents_.push_back(static_cast<int>(a));
    }

  right_idem_.resize(m);
  inv_right_idem_.resize(m);
  for (std::size_t a = 0; a < m; ++a) {
    right_idem_[a] = product(static_cast<int>(a), inv_[a]);
    inv_right_idem_[a] = product(inv_[a], static_cast<int>(a));
  }

  leq_.assign(m * m, false);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      leq_[a * m + b] = product(right_idem_[a], static_cast<int>(b)) == static_cast<int>(a);
}

void FiniteInverseSemigroup::verify_axioms() const {
  const std::size_t m = size_;
  if (m <= 200) {
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b)
        for (std::size_t c = 0; c < m; ++c)
          if (product(product(static_cast<int>(a), static_cast<int>(b)), static_cast<int>(c)) !=
              product(static_cast<int>(a), product(static_cast<int>(b), static_cast<int>(c))))
            throw InputError("multiplication table not associative");
  } else {
    std::mt19937 rng(0xA55A);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(m) - 1);
    for (int t = 0; t < 100000; ++t) {
      int a = pick(rng), b = pick(rng), c = pick(rng);
      if (product(product(a, b), c) != product(a, product(b, c)))
        throw InputError("multiplication table not associative");
    }
  }
  // Idempotents must commute in an inverse semigroup.
  for (int e : idempotents_)
    for (int f : idempotents_)
      if (product(e, f) != product(f, e))
        throw InputError("idempotents do not commute; not an inverse semigroup");
}

int FiniteInverseSemigroup::index_of(const PartialPerm& p) const {
  for (std::size_t i = 0; i < elements_.size(); ++i)
    if (elements_[i] == p)
      return static_cast<int>(i);
  return -1;
}

Bitset inverse_subsemigroup_closure(const FiniteInverseSemigroup& S, const Bitset& seed) {
  Bitset in(S.size());
  std::vector<int> work;
  auto add = [&](int x) {
    if (!in.test(static_cast<std::size_t>(x))) {
      in.set(static_cast<std::size_t>(x));
      work.push_back(x);
    }
  };
  for (int x : seed.members()) {
    add(x);
    add(S.inverse(x));
  }
  for (std::size_t head = 0; head < work.size(); ++head) {
    int x = work[head];
    add(S.inverse(x));
    for (std::size_t i = 0; i <= head; ++i) {
      add(S.product(x, work[i]));
      add(S.product(work[i], x));
    }
  }
  return in;
}

FullInverseSub full_inverse_closure(const FiniteInverseSemigroup& S, const Bitset& extra) {
  Bitset seed = extra;
  for (int e : S.idempotents())
    seed.set(static_cast<std::size_t>(e));
  return FullInverseSub{inverse_subsemigroup_closure(S, seed)};
}

bool is_inverse_sub(const FiniteInverseSemigroup& S, const Bitset& sub) {
  auto mem = sub.members();
  for (int a : mem) {
    if (!sub.test(static_cast<std::size_t>(S.inverse(a))))
      return false;
    for (int b : mem)
      if (!sub.test(static_cast<std::size_t>(S.product(a, b))))
        return false;
  }
  return true;
}

bool is_full_inverse_sub(const FiniteInverseSemigroup& S, const Bitset& sub) {
  for (int e : S.idempotents())
    if (!sub.test(static_cast<std::size_t>(e)))
      return false;
  return is_inverse_sub(S, sub);
}

FullInverseSub idempotent_sub(const FiniteInverseSemigroup& S) {
  Bitset b(S.size());
  for (int e : S.idempotents())
    b.set(static_cast<std::size_t>(e));
  return FullInverseSub{b};
}

FullInverseSub whole_sub(const FiniteInverseSemigroup& S) {
  Bitset b(S.size());
  b.set_all();
  return FullInverseSub{b};
}

std::vector<FullInverseSub> full_inverse_subsemigroups(const FiniteInverseSemigroup& S) {
  // Breadth-first walk of the lattice: grow each known subsemigroup by
  // one outside element and close again.  Every full inverse sub is
  // reachable this way from E(S).
  std::map<Bitset, bool> seen;
  std::vector<Bitset> queue;
  Bitset base = idempotent_sub(S).member;
  seen.emplace(base, true);
  queue.push_back(base);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Bitset cur = queue[head];
    for (std::size_t x = 0; x < S.size(); ++x) {
      if (cur.test(x))
        continue;
      Bitset grown = cur;
      grown.set(x);
      Bitset closed = inverse_subsemigroup_closure(S, grown);
      if (seen.emplace(closed, true).second)
        queue.push_back(closed);
    }
  }
  std::vector<FullInverseSub> out;
  out.reserve(seen.size());
  for (const auto& [mask, _] : seen)
    out.push_back(FullInverseSub{mask});
  std::sort(out.begin(), out.end());
  return out;
}

FiniteInverseSemigroup idempotent_semilattice(const FiniteInverseSemigroup& S) {
  const auto& idem = S.idempotents();
  std::vector<std::vector<int>> table(idem.size(), std::vector<int>(idem.size()));
  for (std::size_t i = 0; i < idem.size(); ++i)
    for (std::size_t j = 0; j < idem.size(); ++j) {
      int p = S.product(idem[i], idem[j]);
      int pos = S.idempotent_position(p);
      internal_check(pos >= 0, "product of idempotents not idempotent");
      table[i][j] = pos;
    }
  return FiniteInverseSemigroup::from_table(table);
}

}  // namespace icl
