#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>

#include "revmine/lexicon.hpp"
#include "testutil.hpp"

using namespace revmine;

TEST_CASE("load_lexicons reads the bundled seed lists") {
  auto lex = load_lexicons(testutil::data_dir() / "lexicons");
  CHECK(lex.emotion_words.count("excited"));
  CHECK(lex.emotion_words.at("excited").polarity == '+');
  CHECK(lookup(lex, "place_prepositions", "at"));
  CHECK(lookup(lex, "place_prepositions", "in"));
  CHECK_FALSE(lookup(lex, "place_prepositions", "of"));
  CHECK(lookup(lex, "antonym", "easy"));
  CHECK(lookup(lex, "antonym", "hard"));
  CHECK_FALSE(lookup(lex, "emotion", "screen"));
  CHECK(lookup(lex, "human_refs", "husband"));
  CHECK(lookup(lex, "non_product_actions", "contact"));
  CHECK_FALSE(lookup(lex, "non_product_actions", "buy"));
  CHECK(lookup(lex, "action_nouns", "setup"));
  CHECK_THROWS(lookup(lex, "no_such_list", "x"));
}

TEST_CASE("antonym pairs answer symmetrically") {
  LexiconSet lex = testutil::mini_lexicons();
  for (const auto& [a, b] : lex.antonym_pairs) {
    CHECK(lex.has_antonym(a));
    CHECK(lex.has_antonym(b));
  }
}

TEST_CASE("missing mandatory lexicon file is an error") {
  auto dir = std::filesystem::temp_directory_path() / "lex_missing";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "antonyms.txt") << "easy\thard\n";
  std::ofstream(dir / "place_prepositions.txt") << "in\n";
  CHECK_THROWS_WITH(load_lexicons(dir), Catch::Matchers::ContainsSubstring("emotion.txt"));
}

TEST_CASE("a lemma in both stative and linking lists is a load error") {
  auto dir = std::filesystem::temp_directory_path() / "lex_conflict";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "emotion.txt") << "excited\tjoy\t+\n";
  std::ofstream(dir / "antonyms.txt") << "easy\thard\n";
  std::ofstream(dir / "place_prepositions.txt") << "in\n";
  std::ofstream(dir / "stative_verbs.txt") << "seem\n";
  std::ofstream(dir / "linking_verbs.txt") << "seem\n";
  CHECK_THROWS_WITH(load_lexicons(dir), Catch::Matchers::ContainsSubstring("seem"));
}

TEST_CASE("missing optional file yields an empty list with a warning") {
  auto dir = std::filesystem::temp_directory_path() / "lex_optional";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "emotion.txt") << "excited\tjoy\t+\n";
  std::ofstream(dir / "antonyms.txt") << "easy\thard\n";
  std::ofstream(dir / "place_prepositions.txt") << "in\n";
  auto lex = load_lexicons(dir);
  CHECK(lex.human_refs.empty());
  CHECK_FALSE(lex.warnings.empty());
  // the standard suffixes are always present
  CHECK(lex.affordance_suffixes.size() >= 6);
}

TEST_CASE("lexicons round-trip through save and load") {
  auto lex = load_lexicons(testutil::data_dir() / "lexicons");
  auto dir = std::filesystem::temp_directory_path() / "lex_roundtrip";
  std::filesystem::remove_all(dir);
  save_lexicons(lex, dir);
  auto again = load_lexicons(dir);
  CHECK(again == lex);
}
