#pragma once

#include "tangscope/corpus.hpp"

#include <filesystem>
#include <map>
#include <utility>

namespace tangscope {

enum class CoupletClass {
    Structural,  // the (3,4) and (5,6) pairs of a regulated 8-line poem
    Heuristic,   // adjacent (odd,even) equal-length pairs of any other form
};

std::string_view couplet_class_name(CoupletClass c);

struct Couplet {
    std::string poem_id;
    std::uint32_t first_line = 0;  // 0-based indices into the poem
    std::uint32_t second_line = 0;
    std::u32string first_text;
    std::u32string second_text;
    CoupletClass confidence = CoupletClass::Heuristic;

    // 1-based line numbers, e.g. (3,4).
    std::pair<int, int> slot() const {
        return {static_cast<int>(first_line) + 1, static_cast<int>(second_line) + 1};
    }
};

struct AlignedPair {
    std::string poem_id;
    std::pair<int, int> slot{0, 0};
    std::uint32_t offset = 0;
    std::uint32_t length = 0;
    std::u32string word_a;  // from the first line
    std::u32string word_b;  // same offset, second line
    CoupletClass confidence = CoupletClass::Heuristic;
    bool candidate = false;  // false when word_a == word_b
};

struct ColorMatrix {
    std::vector<char32_t> colors;
    // Keyed by (min,max) code point; no diagonal entries.
    std::map<std::pair<char32_t, char32_t>, std::uint64_t> counts;
    std::uint64_t count(char32_t a, char32_t b) const;
};

enum class CoupletFilter { All, StructuralOnly, HeuristicOnly };

std::vector<Couplet> extract_couplets(const Poem& poem);

std::vector<AlignedPair> aligned_word_pairs(const Couplet& couplet, int length = 2);

// Counts unordered pairs of distinct palette colors standing at the same
// offset of a couplet's two lines.
ColorMatrix color_matrix(const std::vector<Poem>& poems, const std::vector<char32_t>& colors,
                         CoupletFilter filter = CoupletFilter::All);

struct AntithesisInstance {
    std::string poem_id;
    std::pair<int, int> slot{0, 0};
    std::uint32_t offset = 0;
    CoupletClass confidence = CoupletClass::Heuristic;
    std::u32string word_a;  // as placed on the first line
    std::u32string word_b;
};

// Aligned pairs matching {word_a, word_b} in either order.
std::vector<AntithesisInstance> antithesis_instances(const std::vector<Poem>& poems,
                                                     std::u32string_view word_a,
                                                     std::u32string_view word_b, int length = 2,
                                                     CoupletFilter filter = CoupletFilter::All);

// One color per line, '#' comments; rejects multi-character entries.
std::vector<char32_t> load_palette(const std::filesystem::path& path);

}  // namespace tangscope
