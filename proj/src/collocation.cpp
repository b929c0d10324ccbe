#include "tangscope/collocation.hpp"

#include "tangscope/text.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace tangscope {

namespace {

void validate_word(std::u32string_view word) {
    if (word.empty()) throw std::invalid_argument("word must be non-empty");
    for (char32_t cp : word)
        if (is_line_delimiter(cp))
            throw std::invalid_argument("word contains a delimiter: " +
                                        encode_utf8(std::u32string(word)));
}

struct FlatSpan {
    std::uint32_t start = 0;
    std::uint32_t end = 0;  // exclusive
};

bool overlaps(const FlatSpan& a, const FlatSpan& b) {
    return a.start < b.end && b.start < a.end;
}

// Non-delimiter characters strictly between the nearer ends.
std::uint32_t gap(const FlatSpan& a, const FlatSpan& b) {
    return a.end <= b.start ? b.start - a.end : a.start - b.end;
}

}  // namespace

std::vector<Occurrence> occurrences(const CorpusIndex& index, std::u32string_view word) {
    validate_word(word);
    std::vector<Occurrence> found;
    const auto& poems = index.poems();
    for (const CharPosition& pos : index.positions_of(word.front())) {
        const std::u32string& chars = poems[pos.poem].lines[pos.line].chars;
        if (pos.offset + word.size() > chars.size()) continue;
        if (chars.compare(pos.offset, word.size(), word) != 0) continue;
        found.push_back(Occurrence{poems[pos.poem].id, pos.poem, pos.line, pos.offset,
                                   std::u32string(word)});
    }
    return found;
}

std::vector<ContextWindow> context_windows(const CorpusIndex& index, std::u32string_view word,
                                           int n) {
    if (n < 1) throw std::invalid_argument("window size must be >= 1");
    std::vector<ContextWindow> windows;
    const std::uint32_t len = static_cast<std::uint32_t>(n);
    std::uint32_t cached_poem = 0;
    std::u32string flat;
    bool have_flat = false;
    for (Occurrence& occ : occurrences(index, word)) {
        if (!have_flat || occ.poem_index != cached_poem) {
            cached_poem = occ.poem_index;
            flat = index.flat_text(cached_poem);
            have_flat = true;
        }
        std::uint32_t start = index.flat_start(occ.poem_index, occ.line) + occ.offset;
        std::uint32_t end = start + static_cast<std::uint32_t>(occ.word.size());
        std::uint32_t before_start = start >= len ? start - len : 0;
        std::uint32_t after_end =
            std::min<std::uint32_t>(end + len, static_cast<std::uint32_t>(flat.size()));
        ContextWindow window;
        window.before = flat.substr(before_start, start - before_start);
        window.after = flat.substr(end, after_end - end);
        window.n = n;
        window.center = std::move(occ);
        windows.push_back(std::move(window));
    }
    return windows;
}

namespace {

// Within-line occurrences of fixed-length CJK grams in one poem, as flat spans.
std::vector<std::pair<std::u32string, FlatSpan>> poem_grams(const CorpusIndex& index,
                                                            std::uint32_t poem_index,
                                                            std::uint32_t gram_len) {
    std::vector<std::pair<std::u32string, FlatSpan>> grams;
    const Poem& poem = index.poems()[poem_index];
    for (std::uint32_t l = 0; l < poem.lines.size(); ++l) {
        const std::u32string& chars = poem.lines[l].chars;
        if (chars.size() < gram_len) continue;
        std::uint32_t base = index.flat_start(poem_index, l);
        std::uint32_t cjk_run = 0;
        for (std::uint32_t i = 0; i < chars.size(); ++i) {
            cjk_run = is_cjk(chars[i]) ? cjk_run + 1 : 0;
            if (cjk_run >= gram_len) {
                std::uint32_t start = i + 1 - gram_len;
                grams.emplace_back(chars.substr(start, gram_len),
                                   FlatSpan{base + start, base + start + gram_len});
            }
        }
    }
    return grams;
}

// Within-line occurrences of one specific word in one poem.
std::vector<FlatSpan> poem_word_spans(const CorpusIndex& index, std::uint32_t poem_index,
                                      std::u32string_view word) {
    std::vector<FlatSpan> spans;
    const Poem& poem = index.poems()[poem_index];
    for (std::uint32_t l = 0; l < poem.lines.size(); ++l) {
        const std::u32string& chars = poem.lines[l].chars;
        if (chars.size() < word.size()) continue;
        std::uint32_t base = index.flat_start(poem_index, l);
        for (std::size_t pos = chars.find(word, 0); pos != std::u32string::npos;
             pos = chars.find(word, pos + 1)) {
            std::uint32_t start = base + static_cast<std::uint32_t>(pos);
            spans.push_back(FlatSpan{start, start + static_cast<std::uint32_t>(word.size())});
        }
    }
    return spans;
}

}  // namespace

std::vector<CollocationRecord> collocates(const CorpusIndex& index, std::u32string_view target,
                                          int n, std::size_t k, int candidate_len,
                                          const std::optional<Lexicon>& candidates,
                                          PairCounting counting) {
    if (n < 1) throw std::invalid_argument("window size must be >= 1");
    if (candidate_len < 1) throw std::invalid_argument("candidate length must be >= 1");
    validate_word(target);

    // Target occurrences grouped by poem, as flat spans.
    std::vector<Occurrence> target_occs = occurrences(index, target);
    std::map<std::uint32_t, std::vector<FlatSpan>> by_poem;
    for (const Occurrence& occ : target_occs) {
        std::uint32_t start = index.flat_start(occ.poem_index, occ.line) + occ.offset;
        by_poem[occ.poem_index].push_back(
            FlatSpan{start, start + static_cast<std::uint32_t>(occ.word.size())});
    }

    const std::uint32_t max_gap = static_cast<std::uint32_t>(n);
    std::map<std::u32string, std::uint64_t> counts;
    for (const auto& [poem_index, spans] : by_poem) {
        std::vector<std::pair<std::u32string, FlatSpan>> grams;
        if (candidates) {
            for (const std::u32string& word : candidates->words)
                for (const FlatSpan& span : poem_word_spans(index, poem_index, word))
                    grams.emplace_back(word, span);
        } else {
            grams = poem_grams(index, poem_index, static_cast<std::uint32_t>(candidate_len));
        }
        std::set<std::u32string> seen_in_poem;
        for (const auto& [word, gram_span] : grams) {
            if (word == target) continue;
            for (const FlatSpan& target_span : spans) {
                if (overlaps(gram_span, target_span)) continue;
                if (gap(gram_span, target_span) > max_gap) continue;
                if (counting == PairCounting::Poems) {
                    seen_in_poem.insert(word);
                    break;
                }
                ++counts[word];
            }
        }
        for (const std::u32string& word : seen_in_poem) ++counts[word];
    }

    std::vector<CollocationRecord> records;
    records.reserve(counts.size());
    for (const auto& [word, count] : counts)
        records.push_back(CollocationRecord{std::u32string(target), word, n, count});
    std::stable_sort(records.begin(), records.end(),
                     [](const CollocationRecord& a, const CollocationRecord& b) {
                         if (a.count != b.count) return a.count > b.count;
                         return a.collocate < b.collocate;
                     });
    if (records.size() > k) records.resize(k);
    return records;
}

std::uint64_t cooccurrence_count(const CorpusIndex& index, std::u32string_view w1,
                                 std::u32string_view w2, int n, PairCounting counting) {
    if (w1 == w2) throw std::invalid_argument("co-occurrence requires two distinct words");
    if (n < 1) throw std::invalid_argument("window size must be >= 1");
    validate_word(w1);
    validate_word(w2);

    auto group = [&](std::u32string_view word) {
        std::map<std::uint32_t, std::vector<FlatSpan>> by_poem;
        for (const Occurrence& occ : occurrences(index, word)) {
            std::uint32_t start = index.flat_start(occ.poem_index, occ.line) + occ.offset;
            by_poem[occ.poem_index].push_back(
                FlatSpan{start, start + static_cast<std::uint32_t>(occ.word.size())});
        }
        return by_poem;
    };

    auto first = group(w1);
    auto second = group(w2);
    const std::uint32_t max_gap = static_cast<std::uint32_t>(n);
    std::uint64_t total = 0;
    for (const auto& [poem_index, spans1] : first) {
        auto it = second.find(poem_index);
        if (it == second.end()) continue;
        std::uint64_t pairs = 0;
        for (const FlatSpan& a : spans1)
            for (const FlatSpan& b : it->second)
                if (!overlaps(a, b) && gap(a, b) <= max_gap) ++pairs;
        if (counting == PairCounting::Poems)
            total += pairs > 0 ? 1 : 0;
        else
            total += pairs;
    }
    return total;
}

}  // namespace tangscope
