#include <gtest/gtest.h>

#include <algorithm>

#include "generators.hpp"
#include "idpl/idinstance.hpp"
#include "oracles.hpp"

namespace inst = idpl::inst;
using Parts = std::vector<std::string>;

namespace {

std::string join(const Parts& p) {
  std::string s;
  for (const auto& x : p) s += x;
  return s;
}

}  // namespace

TEST(DecomposeWord, ReferenceExamples) {
  EXPECT_EQ(inst::decompose_word("नम", {"न", "म"}), (Parts{"न", "म"}));
  EXPECT_EQ(inst::decompose_word("म", {"म"}), (Parts{"म"}));
  EXPECT_EQ(inst::decompose_word("abc", {"ab", "a", "bc"}), (Parts{"a", "bc"}));
}

TEST(DecomposeWord, PrefersLongerPiecesFirst) {
  EXPECT_EQ(inst::decompose_word("aaa", {"a", "aa"}), (Parts{"aa", "a"}));
  EXPECT_EQ(inst::decompose_word("क्ष", {"क", "्", "ष", "क्ष"}), (Parts{"क्ष"}));
}

TEST(DecomposeWord, Failures) {
  EXPECT_FALSE(inst::decompose_word("नर", {"न", "म"}));
  EXPECT_FALSE(inst::decompose_word("abc", {}));
  try {
    inst::decompose_word("", {"a"});
    FAIL();
  } catch (const idpl::Error& e) {
    EXPECT_EQ(e.code(), "EMPTY_WORD");
  }
}

TEST(DecomposeWord, DoesNotSplitInsideCodepoints) {
  // "न" is E0 A4 A8; a taught fragment of its bytes must not match.
  EXPECT_FALSE(inst::decompose_word("न", {"\xE0\xA4", "\xA8"}));
}

TEST(DecomposeWord, AgreesWithExhaustiveSearch) {
  idpl::testing::Rng rng(314);
  const std::vector<std::string> alphabet{"क", "म", "न", "र", "ा", "a", "b"};
  for (int i = 0; i < 400; ++i) {
    Parts taught;
    const int k = std::uniform_int_distribution<int>(1, 8)(rng);
    for (int j = 0; j < k; ++j) taught.push_back(idpl::testing::random_word(rng, alphabet, 1, 3));
    const auto word = i % 2 ? idpl::testing::glued_word(rng, taught, alphabet, 12)
                            : idpl::testing::random_word(rng, alphabet, 1, 12);
    const auto got = inst::decompose_word(word, taught);
    const auto all = idpl::testing::all_segmentations(word, taught);
    ASSERT_EQ(got.has_value(), !all.empty()) << word;
    if (got) {
      EXPECT_EQ(join(*got), word);
      for (const auto& p : *got) EXPECT_NE(std::find(taught.begin(), taught.end(), p), taught.end());
      EXPECT_NE(std::find(all.begin(), all.end(), *got), all.end());
    }
  }
}

TEST(DecomposeWord, MonotoneInTaughtSet) {
  idpl::testing::Rng rng(2718);
  const std::vector<std::string> alphabet{"क", "म", "न", "a"};
  int successes = 0;
  for (int i = 0; i < 300; ++i) {
    Parts taught;
    for (int j = 0; j < 4; ++j) taught.push_back(idpl::testing::random_word(rng, alphabet, 1, 2));
    const auto word = idpl::testing::random_word(rng, alphabet, 1, 8);
    if (!inst::decompose_word(word, taught)) continue;
    ++successes;
    auto bigger = taught;
    for (int j = 0; j < 3; ++j) bigger.push_back(idpl::testing::random_word(rng, alphabet, 1, 3));
    std::shuffle(bigger.begin(), bigger.end(), rng);
    EXPECT_TRUE(inst::decompose_word(word, bigger)) << word;
  }
  EXPECT_GT(successes, 20);
}

TEST(DecomposeWord, AdversarialInputFinishesQuickly) {
  const std::string word(400, 'a');
  EXPECT_FALSE(inst::decompose_word(word + "b", {"a", "aa", "aaa", "aaaa"}));
  EXPECT_TRUE(inst::decompose_word(word, {"a", "aa", "aaa"}));
}

TEST(TaughtFacts, UnionInFirstOccurrenceOrder) {
  inst::IdInstance in{"S", "hi", "", {}};
  auto lesson = [](std::initializer_list<const char*> facts) {
    inst::Lesson l;
    l.title = "t";
    for (const char* f : facts) l.content.emplace_back(inst::Fact{f, std::nullopt, std::nullopt, {}});
    return l;
  };
  in.lessons = {lesson({"न", "म"}), lesson({}), lesson({"र", "न"})};
  EXPECT_EQ(inst::taught_facts_through(in, 0), (Parts{"न", "म"}));
  EXPECT_EQ(inst::taught_facts_through(in, 1), (Parts{"न", "म"}));
  EXPECT_EQ(inst::taught_facts_through(in, 2), (Parts{"न", "म", "र"}));
  EXPECT_THROW(inst::taught_facts_through(in, 3), idpl::Error);

  inst::IdInstance empty{"S", "hi", "", {lesson({})}};
  EXPECT_TRUE(inst::taught_facts_through(empty, 0).empty());
}
