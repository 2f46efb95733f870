#include "doctest.h"
#include "fmlog/campaigns.hpp"
#include "fmlog/errors.hpp"
#include "fmlog/nested.hpp"
#include "oracles.hpp"

using namespace fmlog;

TEST_SUITE("nested") {
  TEST_CASE("nestedness examples") {
    CHECK(is_nested({SubsetIndex(4, std::vector<int>{1, 2}), SubsetIndex(4, std::vector<int>{1, 2, 3})}));
    CHECK_FALSE(is_nested({SubsetIndex(3, std::vector<int>{1, 2}), SubsetIndex(3, std::vector<int>{2, 3})}));
    CHECK(is_nested({SubsetIndex(4, std::vector<int>{1, 2}), SubsetIndex(4, std::vector<int>{3, 4})}));
    CHECK_THROWS_AS(is_nested({SubsetIndex(4, std::vector<int>{1, 2}), SubsetIndex(3, std::vector<int>{2, 3})}),
                    InvalidInput);
  }

  TEST_CASE("tree counts against the power-set oracle") {
    const long expected[] = {1, 1, 4, 26};
    for (int n = 1; n <= 4; ++n) {
      CAPTURE(n);
      CHECK(static_cast<long>(enumerate_stable_trees(n).size()) == expected[n - 1]);
      CHECK(oracle::nested_family_count(n) == expected[n - 1]);
      CHECK(brute_force_nested_count(n) == expected[n - 1]);
    }
    CHECK(enumerate_stable_trees(5).size() == 236u);
    CHECK(brute_force_nested_count(5) == 236);
  }

  TEST_CASE("enumeration bound") {
    CHECK_THROWS_AS(enumerate_stable_trees(9), ResourceLimit);
    CHECK_THROWS_AS(enumerate_stable_trees(0), InvalidInput);
  }

  TEST_CASE("enumeration order is by size then lex") {
    const auto trees = enumerate_stable_trees(4);
    for (std::size_t i = 1; i < trees.size(); ++i) CHECK(tree_to_nested(trees[i - 1]) < tree_to_nested(trees[i]));
    CHECK(trees.front() == StableTree::corolla(4));
  }

  TEST_CASE("tree <-> nested examples") {
    CHECK(tree_to_nested(StableTree::corolla(3)).size() == 0);
    TreeNode inner;
    inner.children = {TreeNode{1, {}}, TreeNode{2, {}}};
    TreeNode root;
    root.children = {inner, TreeNode{3, {}}};
    const StableTree t(3, root);
    CHECK(tree_to_nested(t).masks() == std::vector<Mask>{0b011});
    CHECK(nested_to_tree(NestedCollection::from_masks(3, {})) == StableTree::corolla(3));
    CHECK(nested_to_tree(NestedCollection::from_masks(3, {0b011})) == t);
    CHECK_THROWS_AS(NestedCollection::from_masks(3, {0b011, 0b110}), InvalidInput);
  }

  TEST_CASE("bijection and closure order") {
    const CheckResult r = strata_consistency(6);
    CHECK_MESSAGE(r.ok, r.detail);
    const auto c = NestedCollection::from_masks(3, {0b011});
    const auto open = NestedCollection::from_masks(3, {});
    CHECK(strata_closure_leq(c, c));
    CHECK(strata_closure_leq(c, open));
    CHECK_FALSE(strata_closure_leq(open, c));
  }
}
