#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "helpers.hpp"
#include "icl/corpus.hpp"
#include "icl/errors.hpp"
#include "icl/partial_perm.hpp"
#include "icl/semigroup.hpp"

using namespace icl;
using icl::testing::elem;

namespace {
const int U = PartialPerm::kUndef;

PartialPerm beta() { return PartialPerm({1, U}); }      // 1 -> 2
PartialPerm alpha() { return PartialPerm({1, 0}); }     // transposition
}  // namespace

TEST_CASE("composition is left to right") {
  auto id = PartialPerm::identity(2);
  CHECK(id * id == id);
  CHECK(beta() * beta() == PartialPerm::empty(2));
  CHECK(beta() * beta().inverse() == PartialPerm({0, U}));  // identity on {1}
  CHECK(beta().inverse() * beta() == PartialPerm({U, 1}));  // identity on {2}
  CHECK_THROWS_AS(PartialPerm::identity(2) * PartialPerm::identity(3), InputError);
}

TEST_CASE("inversion reverses the map and is an involution") {
  CHECK(PartialPerm::identity(3).inverse() == PartialPerm::identity(3));
  CHECK(beta().inverse() == PartialPerm({U, 0}));
  CHECK(PartialPerm::empty(2).inverse() == PartialPerm::empty(2));
  auto S = symmetric_inverse_2();
  for (std::size_t i = 0; i < S.size(); ++i)
    CHECK(S.element(static_cast<int>(i)).inverse().inverse() == S.element(static_cast<int>(i)));
}

TEST_CASE("partial perm validation") {
  CHECK_THROWS_AS(PartialPerm({0, 0}), InputError);   // not injective
  CHECK_THROWS_AS(PartialPerm({2, U}), InputError);   // image out of range
  CHECK(PartialPerm({1, U}).rank() == 1);
  CHECK(PartialPerm({1, U}).domain() == std::vector<int>{0});
  CHECK(PartialPerm({1, U}).image_points() == std::vector<int>{1});
  CHECK(PartialPerm({0, U}).is_idempotent());
  CHECK_FALSE(beta().is_idempotent());
}

TEST_CASE("product anti-distributes over inversion") {
  auto S = symmetric_inverse_2();
  for (std::size_t a = 0; a < S.size(); ++a)
    for (std::size_t b = 0; b < S.size(); ++b) {
      auto p = S.element(static_cast<int>(a));
      auto q = S.element(static_cast<int>(b));
      CHECK((p * q).inverse() == q.inverse() * p.inverse());
    }
}

TEST_CASE("canonical element order: rank descending, then image array") {
  auto S = symmetric_inverse_2();
  for (std::size_t i = 0; i + 1 < S.size(); ++i) {
    const auto& a = S.element(static_cast<int>(i));
    const auto& b = S.element(static_cast<int>(i + 1));
    CHECK(a < b);
    CHECK(a.rank() >= b.rank());
  }
  CHECK(S.element(0) == PartialPerm::identity(2));
  CHECK(S.element(static_cast<int>(S.size()) - 1) == PartialPerm::empty(2));
}

TEST_CASE("closure of the symmetric inverse monoid generators") {
  auto S = symmetric_inverse_2();
  REQUIRE(S.size() == 7);
  std::set<std::vector<int>> images;
  for (std::size_t i = 0; i < S.size(); ++i)
    images.insert(S.element(static_cast<int>(i)).image_array());
  std::set<std::vector<int>> expected = {
      {0, 1}, {1, 0}, {0, U}, {U, 1}, {1, U}, {U, 0}, {U, U}};
  CHECK(images == expected);
  CHECK(S.num_idempotents() == 4);
}

TEST_CASE("closure edge cases") {
  CHECK(FiniteInverseSemigroup::closure({PartialPerm::identity(3)}).size() == 1);
  CHECK(brandt_2().size() == 5);
  CHECK_THROWS_AS(FiniteInverseSemigroup::closure({}), InputError);
  CHECK_THROWS_AS(
      FiniteInverseSemigroup::closure({PartialPerm::identity(2), PartialPerm::identity(3)}),
      InputError);
  CHECK_THROWS_AS(FiniteInverseSemigroup::closure({alpha(), beta()}, 5), ResourceError);
}

TEST_CASE("inverse semigroup axioms hold on the corpus") {
  for (const auto& entry : verification_corpus()) {
    const auto& S = entry.semigroup;
    for (std::size_t a = 0; a < S.size(); ++a) {
      int ai = static_cast<int>(a);
      CHECK(S.product(S.product(ai, S.inverse(ai)), ai) == ai);
      CHECK(S.product(S.product(S.inverse(ai), ai), S.inverse(ai)) == S.inverse(ai));
    }
    for (int e : S.idempotents())
      for (int f : S.idempotents())
        CHECK(S.product(e, f) == S.product(f, e));
    for (std::size_t a = 0; a < S.size(); ++a)
      for (std::size_t b = 0; b < S.size(); ++b) {
        int ai = static_cast<int>(a), bi = static_cast<int>(b);
        CHECK(S.inverse(S.product(ai, bi)) == S.product(S.inverse(bi), S.inverse(ai)));
        if (S.natural_leq(ai, bi))
          for (std::size_t c = 0; c < S.size(); ++c)
            CHECK(S.natural_leq(S.product(static_cast<int>(c), ai),
                                S.product(static_cast<int>(c), bi)));
      }
  }
}

TEST_CASE("multiplication tables that are not inverse semigroups are rejected") {
  // Left zero semigroup: every element has several inverses.
  CHECK_THROWS_AS(FiniteInverseSemigroup::from_table({{0, 0}, {1, 1}}), InputError);
  CHECK_THROWS_AS(FiniteInverseSemigroup::from_table({{0, 1}, {0, 1}}), InputError);
}

TEST_CASE("natural partial order") {
  auto S = symmetric_inverse_2();
  int i12 = elem(S, {1, 2}), i1 = elem(S, {1, 0}), iempty = elem(S, {0, 0});
  int b = elem(S, {2, 0});
  CHECK(S.natural_leq(iempty, i12));
  CHECK(S.natural_leq(b, b));
  CHECK_FALSE(S.natural_leq(i1, b));

  for (std::size_t a = 0; a < S.size(); ++a) {
    CHECK(S.natural_leq(static_cast<int>(a), static_cast<int>(a)));
    for (std::size_t c = 0; c < S.size(); ++c) {
      if (S.natural_leq(static_cast<int>(a), static_cast<int>(c)) &&
          S.natural_leq(static_cast<int>(c), static_cast<int>(a)))
        CHECK(a == c);
      for (std::size_t d = 0; d < S.size(); ++d)
        if (S.natural_leq(static_cast<int>(a), static_cast<int>(c)) &&
            S.natural_leq(static_cast<int>(c), static_cast<int>(d)))
          CHECK(S.natural_leq(static_cast<int>(a), static_cast<int>(d)));
    }
  }
  // Left multiplication is monotone.
  for (std::size_t a = 0; a < S.size(); ++a)
    for (std::size_t c = 0; c < S.size(); ++c)
      if (S.natural_leq(static_cast<int>(a), static_cast<int>(c)))
        for (std::size_t g = 0; g < S.size(); ++g)
          CHECK(S.natural_leq(S.product(static_cast<int>(g), static_cast<int>(a)),
                              S.product(static_cast<int>(g), static_cast<int>(c))));
}

TEST_CASE("Green's R relation") {
  auto S = symmetric_inverse_2();
  CHECK(S.green_r(elem(S, {2, 0}), elem(S, {1, 0})));      // both defined on {1}
  CHECK_FALSE(S.green_r(elem(S, {1, 0}), elem(S, {0, 2})));
  CHECK(S.green_r(elem(S, {2, 1}), elem(S, {1, 2})));
}

TEST_CASE("full inverse subsemigroups of the two point symmetric inverse monoid") {
  auto S = symmetric_inverse_2();
  auto subs = full_inverse_subsemigroups(S);
  REQUIRE(subs.size() == 3);
  for (const auto& T : subs) {
    CHECK(is_full_inverse_sub(S, T.member));
  }
  std::set<std::size_t> sizes;
  for (const auto& T : subs)
    sizes.insert(T.count());
  CHECK(sizes == std::set<std::size_t>{4, 6, 7});
  // The middle one is the idempotents plus the two proper partial maps.
  for (const auto& T : subs)
    if (T.count() == 6) {
      CHECK(T.contains(elem(S, {2, 0})));
      CHECK(T.contains(elem(S, {0, 1})));
      CHECK_FALSE(T.contains(elem(S, {2, 1})));
    }
}

TEST_CASE("subsemigroup enumeration matches brute force and semilattice is trivial") {
  for (const auto& entry : verification_corpus()) {
    const auto& S = entry.semigroup;
    auto fast = full_inverse_subsemigroups(S);
    auto brute = icl::testing::full_inverse_subs_brute(S);
    std::sort(brute.begin(), brute.end());
    REQUIRE(fast.size() == brute.size());
    for (std::size_t i = 0; i < fast.size(); ++i)
      CHECK(fast[i].member == brute[i]);
    CHECK(std::is_sorted(fast.begin(), fast.end()));
    // E(S) and S always appear.
    CHECK(fast.front() == idempotent_sub(S));
    CHECK(std::find(fast.begin(), fast.end(), whole_sub(S)) != fast.end());
  }
  CHECK(full_inverse_subsemigroups(diamond_semilattice()).size() == 1);
  CHECK(full_inverse_subsemigroups(brandt_2()).size() == 2);
}

TEST_CASE("idempotent semilattice extraction") {
  auto S = symmetric_inverse_2();
  auto E = idempotent_semilattice(S);
  REQUIRE(E.size() == 4);
  for (std::size_t i = 0; i < E.size(); ++i)
    CHECK(E.is_idempotent(static_cast<int>(i)));
  // Products agree with the ambient ones through the position maps.
  for (std::size_t i = 0; i < E.size(); ++i)
    for (std::size_t j = 0; j < E.size(); ++j) {
      int p = S.product(S.idempotents()[i], S.idempotents()[j]);
      CHECK(S.idempotents()[E.product(static_cast<int>(i), static_cast<int>(j))] == p);
    }
}
