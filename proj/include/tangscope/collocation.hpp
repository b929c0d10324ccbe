#pragma once

#include "tangscope/index.hpp"
#include "tangscope/style.hpp"

#include <optional>

namespace tangscope {

struct Occurrence {
    std::string poem_id;
    std::uint32_t poem_index = 0;
    std::uint32_t line = 0;
    std::uint32_t offset = 0;  // start position within the line
    std::u32string word;
};

struct ContextWindow {
    Occurrence center;
    std::u32string before;  // up to n non-delimiter characters, poem-bounded
    std::u32string after;
    int n = 0;
};

struct CollocationRecord {
    std::u32string target;
    std::u32string collocate;
    int window = 0;
    std::uint64_t count = 0;
};

// Occurrence pairs (the default) or poems containing at least one pair.
enum class PairCounting { OccurrencePairs, Poems };

// All within-line start positions of word, in corpus order.
std::vector<Occurrence> occurrences(const CorpusIndex& index, std::u32string_view word);

// One window per occurrence. Characters are gathered across line boundaries
// within the same poem, delimiters skipped, truncated at poem edges.
std::vector<ContextWindow> context_windows(const CorpusIndex& index, std::u32string_view word,
                                           int n);

// Top-k candidate words by co-occurrence with the target at gap <= n.
// Candidates are within-line CJK grams of candidate_len characters, or the
// given lexicon's words when one is supplied. Overlapping occurrences are
// never paired; each (target occurrence, collocate occurrence) pair counts
// once. Descending count, ties by code point.
std::vector<CollocationRecord> collocates(const CorpusIndex& index, std::u32string_view target,
                                          int n, std::size_t k, int candidate_len = 2,
                                          const std::optional<Lexicon>& candidates = {},
                                          PairCounting counting = PairCounting::OccurrencePairs);

// Number of non-overlapping occurrence pairs of w1 and w2 in the same poem
// with at most n non-delimiter characters strictly between them.
std::uint64_t cooccurrence_count(const CorpusIndex& index, std::u32string_view w1,
                                 std::u32string_view w2, int n,
                                 PairCounting counting = PairCounting::OccurrencePairs);

}  // namespace tangscope
