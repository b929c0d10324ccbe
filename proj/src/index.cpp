#include "tangscope/index.hpp"

#include "tangscope/text.hpp"

namespace tangscope {

CorpusIndex::CorpusIndex(const std::vector<Poem>& poems) : poems_(&poems) {
    line_starts_.resize(poems.size());
    for (std::uint32_t p = 0; p < poems.size(); ++p) {
        const Poem& poem = poems[p];
        by_author_[poem.author].push_back(p);
        auto& starts = line_starts_[p];
        starts.reserve(poem.lines.size() + 1);
        std::uint32_t flat = 0;
        for (std::uint32_t l = 0; l < poem.lines.size(); ++l) {
            starts.push_back(flat);
            const std::u32string& chars = poem.lines[l].chars;
            for (std::uint32_t o = 0; o < chars.size(); ++o) {
                if (is_cjk(chars[o])) {
                    by_char_[chars[o]].push_back(CharPosition{p, l, o});
                    ++total_positions_;
                }
            }
            flat += static_cast<std::uint32_t>(chars.size());
        }
        starts.push_back(flat);
    }
}

std::span<const CharPosition> CorpusIndex::positions_of(char32_t c) const {
    auto it = by_char_.find(c);
    if (it == by_char_.end()) return {};
    return it->second;
}

std::span<const std::uint32_t> CorpusIndex::poems_of_author(std::string_view author) const {
    auto it = by_author_.find(std::string(author));
    if (it == by_author_.end()) return {};
    return it->second;
}

bool CorpusIndex::has_author(std::string_view author) const {
    return by_author_.count(std::string(author)) > 0;
}

std::uint32_t CorpusIndex::flat_start(std::uint32_t poem, std::uint32_t line) const {
    return line_starts_[poem][line];
}

std::uint32_t CorpusIndex::flat_length(std::uint32_t poem) const {
    return line_starts_[poem].back();
}

std::u32string CorpusIndex::flat_text(std::uint32_t poem) const {
    std::u32string flat;
    flat.reserve(flat_length(poem));
    for (const Line& line : (*poems_)[poem].lines) flat += line.chars;
    return flat;
}

}  // namespace tangscope
