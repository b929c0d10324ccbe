#pragma once

#include "tangscope/corpus.hpp"

#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace tangscope {

struct Lexicon {
    std::string name;
    std::vector<std::u32string> words;  // sorted, unique, delimiter-free
};

// One word per line, UTF-8, '#' starts a comment.
Lexicon load_lexicon(const std::filesystem::path& path);
Lexicon make_lexicon(std::string name, const std::vector<std::string>& words);

struct UsageRatio {
    std::string author;
    std::string lexicon;
    std::uint64_t numerator = 0;    // poems containing at least one lexicon word
    std::uint64_t denominator = 0;  // the author's poem count
    double percent() const;
    std::string percent_text() const;  // two decimals, round half up
};

// Fraction of the author's poems whose body contains at least one lexicon
// word as a contiguous within-line string.
UsageRatio usage_ratio(const std::vector<Poem>& poems, std::string_view author,
                       const Lexicon& lexicon);

struct WhiteMatrix {
    std::vector<std::string> authors;
    std::vector<std::u32string> words;       // by total frequency desc, then code point
    std::vector<std::uint64_t> frequencies;  // occurrence totals across the listed authors
    std::vector<std::vector<UsageRatio>> cells;  // [word][author], singleton lexicons
};

WhiteMatrix white_word_matrix(const std::vector<Poem>& poems,
                              const std::vector<std::string>& authors,
                              const std::vector<std::u32string>& words);

// Total occurrence counts (every start offset, overlaps included) of each
// lexicon word in the author's poems.
std::map<std::u32string, std::uint64_t> lexical_profile(const std::vector<Poem>& poems,
                                                        std::string_view author,
                                                        const Lexicon& lexicon);

// Count of within-line start offsets of word in the poem body.
std::uint64_t count_in_poem(const Poem& poem, std::u32string_view word);
bool poem_contains(const Poem& poem, std::u32string_view word);

std::string format_percent(std::uint64_t numerator, std::uint64_t denominator);

}  // namespace tangscope
