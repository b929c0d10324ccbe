#include "tangscope/lexstats.hpp"

#include "tangscope/text.hpp"

#include <algorithm>
#include <stdexcept>

namespace tangscope {

NGramTable ngram_table(const std::vector<Poem>& poems, int n,
                       const std::optional<std::string>& author) {
    if (n < 1) throw std::invalid_argument("n-gram length must be >= 1");
    NGramTable table;
    table.n = n;
    table.author = author;
    const std::size_t len = static_cast<std::size_t>(n);
    for (const Poem& poem : poems) {
        if (author && poem.author != *author) continue;
        for (const Line& line : poem.lines) {
            const std::u32string& chars = line.chars;
            if (chars.size() < len) continue;
            // cjk_run = consecutive CJK characters ending at position i.
            std::size_t cjk_run = 0;
            for (std::size_t i = 0; i < chars.size(); ++i) {
                cjk_run = is_cjk(chars[i]) ? cjk_run + 1 : 0;
                if (cjk_run >= len)
                    ++table.counts[chars.substr(i + 1 - len, len)];
            }
        }
    }
    return table;
}

std::vector<std::pair<std::u32string, std::uint64_t>> top_k(const NGramTable& table,
                                                            std::size_t k) {
    std::vector<std::pair<std::u32string, std::uint64_t>> entries(table.counts.begin(),
                                                                  table.counts.end());
    auto by_count = [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    };
    if (k < entries.size()) {
        std::partial_sort(entries.begin(), entries.begin() + k, entries.end(), by_count);
        entries.resize(k);
    } else {
        std::sort(entries.begin(), entries.end(), by_count);
    }
    return entries;
}

namespace {

enum class Anchor { Prefix, Suffix };

WordCounts words_with_anchor(const CorpusIndex& index, char32_t target, int word_len,
                             const std::optional<std::string>& author, Anchor anchor) {
    if (word_len < 2) throw std::invalid_argument("word length must be >= 2");
    if (!is_cjk(target)) throw std::invalid_argument("target must be a CJK character");
    const std::uint32_t len = static_cast<std::uint32_t>(word_len);
    WordCounts counts;
    const auto& poems = index.poems();
    for (const CharPosition& pos : index.positions_of(target)) {
        const Poem& poem = poems[pos.poem];
        if (author && poem.author != *author) continue;
        const std::u32string& chars = poem.lines[pos.line].chars;
        std::uint32_t start;
        if (anchor == Anchor::Suffix) {
            if (pos.offset + 1 < len) continue;
            start = pos.offset + 1 - len;
        } else {
            if (pos.offset + len > chars.size()) continue;
            start = pos.offset;
        }
        std::u32string word = chars.substr(start, len);
        if (!all_cjk(word)) continue;
        ++counts[std::move(word)];
    }
    return counts;
}

}  // namespace

WordCounts words_with_suffix(const CorpusIndex& index, char32_t target, int word_len,
                             const std::optional<std::string>& author) {
    return words_with_anchor(index, target, word_len, author, Anchor::Suffix);
}

WordCounts words_with_prefix(const CorpusIndex& index, char32_t target, int word_len,
                             const std::optional<std::string>& author) {
    return words_with_anchor(index, target, word_len, author, Anchor::Prefix);
}

std::vector<std::pair<std::u32string, std::uint64_t>> sort_by_count(const WordCounts& counts) {
    std::vector<std::pair<std::u32string, std::uint64_t>> entries(counts.begin(), counts.end());
    std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    return entries;
}

}  // namespace tangscope
