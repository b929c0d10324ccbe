#pragma once

#include "tangscope/index.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tangscope {

struct NGramTable {
    int n = 0;
    std::optional<std::string> author;  // unset = whole corpus
    std::unordered_map<std::u32string, std::uint64_t> counts;
};

// Counts every within-line window of n consecutive CJK characters.
// Windows never cross a delimiter and never contain non-CJK characters.
NGramTable ngram_table(const std::vector<Poem>& poems, int n,
                       const std::optional<std::string>& author = {});

// Descending count, ties broken by code-point order of the gram.
std::vector<std::pair<std::u32string, std::uint64_t>> top_k(const NGramTable& table,
                                                            std::size_t k);

using WordCounts = std::map<std::u32string, std::uint64_t>;

// Words of word_len characters ending at (suffix) or starting with (prefix)
// the target character, counted per within-line occurrence.
WordCounts words_with_suffix(const CorpusIndex& index, char32_t target, int word_len = 2,
                             const std::optional<std::string>& author = {});
WordCounts words_with_prefix(const CorpusIndex& index, char32_t target, int word_len = 2,
                             const std::optional<std::string>& author = {});

// Same ordering rule as top_k, applied to a word->count map.
std::vector<std::pair<std::u32string, std::uint64_t>> sort_by_count(const WordCounts& counts);

}  // namespace tangscope
