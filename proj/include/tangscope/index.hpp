#pragma once

#include "tangscope/corpus.hpp"

#include <span>
#include <unordered_map>

namespace tangscope {

struct CharPosition {
    std::uint32_t poem = 0;    // index into the poem vector
    std::uint32_t line = 0;
    std::uint32_t offset = 0;  // within the line
};

// Positional index over every CJK character in the poem bodies. Titles are
// not indexed. The index keeps a view of the poem vector: the corpus must
// outlive it. All queries are read-only and safe to run concurrently.
class CorpusIndex {
public:
    explicit CorpusIndex(const std::vector<Poem>& poems);

    const std::vector<Poem>& poems() const { return *poems_; }

    std::span<const CharPosition> positions_of(char32_t c) const;
    std::span<const std::uint32_t> poems_of_author(std::string_view author) const;
    bool has_author(std::string_view author) const;

    // Total indexed positions == total CJK characters in the corpus.
    std::size_t total_positions() const { return total_positions_; }

    // Flat view of one poem: all line characters joined, delimiters gone.
    std::uint32_t flat_start(std::uint32_t poem, std::uint32_t line) const;
    std::uint32_t flat_length(std::uint32_t poem) const;
    std::u32string flat_text(std::uint32_t poem) const;

private:
    const std::vector<Poem>* poems_;
    std::unordered_map<char32_t, std::vector<CharPosition>> by_char_;
    std::unordered_map<std::string, std::vector<std::uint32_t>> by_author_;
    // Per poem: prefix sums of line lengths, one extra entry for the total.
    std::vector<std::vector<std::uint32_t>> line_starts_;
    std::size_t total_positions_ = 0;
};

}  // namespace tangscope
