#include "tangscope/antithesis.hpp"
#include "tangscope/error.hpp"

#include <doctest.h>

#include "fixture.hpp"
#include "oracle.hpp"
#include "synth.hpp"

using namespace tangscope;

namespace {

std::vector<char32_t> basic_palette() {
    return load_palette(fixture::data_dir() + "/lexicons/colors_basic.txt");
}

std::vector<char32_t> extended_palette() {
    return load_palette(fixture::data_dir() + "/lexicons/colors_extended.txt");
}

}  // namespace

TEST_CASE("regulated eight-line poems yield the two structural couplets") {
    for (const char* id : {"df1", "lcq1", "ww1", "df2"}) {
        auto couplets = extract_couplets(fixture::poem(id));
        REQUIRE(couplets.size() == 2);
        CHECK(couplets[0].slot() == std::pair<int, int>(3, 4));
        CHECK(couplets[1].slot() == std::pair<int, int>(5, 6));
        CHECK(couplets[0].confidence == CoupletClass::Structural);
        CHECK(couplets[1].confidence == CoupletClass::Structural);
    }
    auto spring = extract_couplets(fixture::poem("df1"));
    CHECK(spring[0].first_text == U"感時花濺淚");
    CHECK(spring[0].second_text == U"恨別鳥驚心");
    CHECK(spring[1].first_text == U"烽火連三月");
}

TEST_CASE("other forms yield adjacent equal-length heuristic couplets") {
    auto jueju = extract_couplets(fixture::poem("wzh1"));
    REQUIRE(jueju.size() == 2);
    CHECK(jueju[0].slot() == std::pair<int, int>(1, 2));
    CHECK(jueju[1].slot() == std::pair<int, int>(3, 4));
    CHECK(jueju[0].confidence == CoupletClass::Heuristic);

    CHECK(extract_couplets(fixture::poem("syn2")).size() == 2);  // 4 x 6
    CHECK(extract_couplets(fixture::poem("syn3")).empty());      // uneven lines
}

TEST_CASE("aligned pairs cover every offset") {
    auto couplets = extract_couplets(fixture::poem("ww1"));
    auto pairs = aligned_word_pairs(couplets[0], 2);
    REQUIRE(pairs.size() == 4);
    CHECK(pairs[0].word_a == U"白雲");
    CHECK(pairs[0].word_b == U"青靄");
    CHECK(pairs[0].offset == 0);
    CHECK(pairs[0].candidate);
    CHECK(pairs[3].word_a == U"望合");

    auto singles = aligned_word_pairs(couplets[0], 5);
    REQUIRE(singles.size() == 1);
    CHECK_THROWS_AS(aligned_word_pairs(couplets[0], 0), std::invalid_argument);
    CHECK_THROWS_AS(aligned_word_pairs(couplets[0], 6), std::invalid_argument);
}

TEST_CASE("identical aligned words are not candidates") {
    auto poems = parse_corpus(
        std::string_view(R"({"id":"m","title":"t","author":"x","body":"同字在此間，同字在彼間。"})" "\n"),
        CorpusFormat::JsonLines);
    auto pairs = aligned_word_pairs(extract_couplets(poems[0])[0], 2);
    CHECK_FALSE(pairs[0].candidate);  // 同字 == 同字
    CHECK(pairs[2].candidate);        // 在此 != 在彼
}

TEST_CASE("color matrix on the fixture") {
    const auto& poems = fixture::poems();
    ColorMatrix basic = color_matrix(poems, basic_palette());
    CHECK(basic.count(U'白', U'青') == 2);  // 終南山 and the planted quatrain
    CHECK(basic.count(U'青', U'白') == 2);  // symmetric by construction
    CHECK(basic.count(U'白', U'黃') == 1);  // 白日依山盡 / 黃河入海流
    CHECK(basic.count(U'白', U'紅') == 0);
    CHECK(basic.counts.size() == 2);

    ColorMatrix extended = color_matrix(poems, extended_palette());
    CHECK(extended.count(U'白', U'青') == 2);
    CHECK(extended.count(U'白', U'明') == 4);  // planted 白/明 columns
    CHECK(extended.counts.size() == 3);
}

TEST_CASE("color matrix respects the couplet class filter") {
    const auto& poems = fixture::poems();
    ColorMatrix structural = color_matrix(poems, basic_palette(), CoupletFilter::StructuralOnly);
    CHECK(structural.count(U'白', U'青') == 1);
    CHECK(structural.count(U'白', U'黃') == 0);
    ColorMatrix heuristic = color_matrix(poems, basic_palette(), CoupletFilter::HeuristicOnly);
    CHECK(heuristic.count(U'白', U'青') == 1);
    CHECK(heuristic.count(U'白', U'黃') == 1);
    // The two classes partition all couplets.
    ColorMatrix all = color_matrix(poems, basic_palette());
    for (const auto& [pair, count] : all.counts)
        CHECK(count == structural.count(pair.first, pair.second) +
                           heuristic.count(pair.first, pair.second));
}

TEST_CASE("color matrix matches the brute-force reference") {
    auto poems = synth::corpus(80, 23);
    auto palette = basic_palette();
    ColorMatrix matrix = color_matrix(poems, palette);
    auto expected = naive::color_pairs(poems, palette);
    CHECK(std::map<std::pair<char32_t, char32_t>, std::uint64_t>(matrix.counts.begin(),
                                                                 matrix.counts.end()) == expected);
    // Palette order never changes the counts.
    std::vector<char32_t> reversed(palette.rbegin(), palette.rend());
    CHECK(color_matrix(poems, reversed).counts == matrix.counts);
}

TEST_CASE("palette loading and validation") {
    auto palette = basic_palette();
    REQUIRE(palette.size() == 10);
    CHECK(palette[0] == U'白');  // file order preserved
    CHECK(palette[1] == U'青');
    CHECK(palette[9] == U'黑');
    CHECK(extended_palette().size() == 21);

    CHECK_THROWS_AS(color_matrix(fixture::poems(), {U'白', U'青', U'白'}), DataError);
    CHECK_THROWS_AS(load_palette("no_such_palette.txt"), DataError);
}

TEST_CASE("antithesis instances on the fixture") {
    const auto& poems = fixture::poems();
    auto gray = antithesis_instances(poems, U"白髮", U"青雲");
    REQUIRE(gray.size() == 1);
    CHECK(gray[0].poem_id == "syn4");
    CHECK(gray[0].slot == std::pair<int, int>(1, 2));
    CHECK(gray[0].offset == 0);
    CHECK(gray[0].word_a == U"白髮");
    CHECK(gray[0].word_b == U"青雲");

    // Either order matches, words reported as placed in the couplet.
    auto reversed = antithesis_instances(poems, U"青雲", U"白髮");
    REQUIRE(reversed.size() == 1);
    CHECK(reversed[0].word_a == U"白髮");

    auto clouds = antithesis_instances(poems, U"明月", U"白雲");
    CHECK(clouds.size() == 4);
    CHECK(clouds.size() == naive::antithesis_count(poems, U"明月", U"白雲"));

    auto structural = antithesis_instances(poems, U"白雲", U"青靄");
    REQUIRE(structural.size() == 1);
    CHECK(structural[0].confidence == CoupletClass::Structural);
    CHECK(antithesis_instances(poems, U"白雲", U"青靄", 2, CoupletFilter::HeuristicOnly)
              .empty());

    CHECK(antithesis_instances(poems, U"白日", U"好風").size() == 1);
    CHECK_THROWS_AS(antithesis_instances(poems, U"白", U"青雲"), std::invalid_argument);
    CHECK_THROWS_AS(antithesis_instances(poems, U"白髮", U"青雲", 0), std::invalid_argument);
}

TEST_CASE("antithesis counts match the brute-force reference") {
    auto poems = synth::corpus(80, 29);
    for (auto [a, b] : std::vector<std::pair<std::u32string, std::u32string>>{
             {U"白雲", U"明月"}, {U"白髮", U"青山"}, {U"白", U"青"}}) {
        CHECK(antithesis_instances(poems, a, b, static_cast<int>(a.size())).size() ==
              naive::antithesis_count(poems, a, b));
    }
}

TEST_CASE("couplet extraction matches the restated rule on random poems") {
    for (unsigned seed : {100u, 101u}) {
        auto poems = synth::corpus(60, seed);
        for (const Poem& poem : poems) {
            auto got = extract_couplets(poem);
            auto expected = naive::couplets(poem);
            REQUIRE(got.size() == expected.size());
            for (std::size_t i = 0; i < got.size(); ++i) {
                CHECK(got[i].first_line == expected[i].first);
                CHECK(got[i].second_line == expected[i].second);
                CHECK((got[i].confidence == CoupletClass::Structural) ==
                      expected[i].structural);
            }
        }
    }
}
