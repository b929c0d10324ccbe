#include "tangscope/antithesis.hpp"

#include "tangscope/error.hpp"
#include "tangscope/style.hpp"
#include "tangscope/text.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>
#include <unordered_set>

namespace tangscope {

std::string_view couplet_class_name(CoupletClass c) {
    return c == CoupletClass::Structural ? "structural" : "heuristic";
}

namespace {

bool is_lushi(VerseForm form) {
    return form == VerseForm::WuyanLushi || form == VerseForm::QiyanLushi;
}

bool keep(CoupletClass c, CoupletFilter filter) {
    switch (filter) {
        case CoupletFilter::All: return true;
        case CoupletFilter::StructuralOnly: return c == CoupletClass::Structural;
        case CoupletFilter::HeuristicOnly: return c == CoupletClass::Heuristic;
    }
    return true;
}

Couplet make_couplet(const Poem& poem, std::uint32_t first, std::uint32_t second,
                     CoupletClass confidence) {
    return Couplet{poem.id, first, second, poem.lines[first].chars, poem.lines[second].chars,
                   confidence};
}

}  // namespace

std::vector<Couplet> extract_couplets(const Poem& poem) {
    std::vector<Couplet> couplets;
    if (is_lushi(poem.form)) {
        couplets.push_back(make_couplet(poem, 2, 3, CoupletClass::Structural));
        couplets.push_back(make_couplet(poem, 4, 5, CoupletClass::Structural));
        return couplets;
    }
    for (std::uint32_t i = 0; i + 1 < poem.lines.size(); i += 2) {
        if (poem.lines[i].chars.size() != poem.lines[i + 1].chars.size()) continue;
        couplets.push_back(make_couplet(poem, i, i + 1, CoupletClass::Heuristic));
    }
    return couplets;
}

std::vector<AlignedPair> aligned_word_pairs(const Couplet& couplet, int length) {
    if (length < 1 || static_cast<std::size_t>(length) > couplet.first_text.size())
        throw std::invalid_argument("pair length out of range");
    const std::uint32_t len = static_cast<std::uint32_t>(length);
    std::vector<AlignedPair> pairs;
    for (std::uint32_t offset = 0; offset + len <= couplet.first_text.size(); ++offset) {
        AlignedPair pair;
        pair.poem_id = couplet.poem_id;
        pair.slot = couplet.slot();
        pair.offset = offset;
        pair.length = len;
        pair.word_a = couplet.first_text.substr(offset, len);
        pair.word_b = couplet.second_text.substr(offset, len);
        pair.confidence = couplet.confidence;
        pair.candidate = pair.word_a != pair.word_b;
        pairs.push_back(std::move(pair));
    }
    return pairs;
}

std::uint64_t ColorMatrix::count(char32_t a, char32_t b) const {
    auto it = counts.find(std::minmax(a, b));
    return it == counts.end() ? 0 : it->second;
}

ColorMatrix color_matrix(const std::vector<Poem>& poems, const std::vector<char32_t>& colors,
                         CoupletFilter filter) {
    std::unordered_set<char32_t> palette;
    for (char32_t c : colors)
        if (!palette.insert(c).second)
            throw DataError("duplicate color in palette: " + encode_utf8(c));
    ColorMatrix matrix;
    matrix.colors = colors;
    for (const Poem& poem : poems) {
        for (const Couplet& couplet : extract_couplets(poem)) {
            if (!keep(couplet.confidence, filter)) continue;
            for (std::size_t offset = 0; offset < couplet.first_text.size(); ++offset) {
                char32_t a = couplet.first_text[offset];
                char32_t b = couplet.second_text[offset];
                if (a == b) continue;
                if (palette.count(a) && palette.count(b)) ++matrix.counts[std::minmax(a, b)];
            }
        }
    }
    return matrix;
}

std::vector<AntithesisInstance> antithesis_instances(const std::vector<Poem>& poems,
                                                     std::u32string_view word_a,
                                                     std::u32string_view word_b, int length,
                                                     CoupletFilter filter) {
    if (length < 1) throw std::invalid_argument("pair length must be >= 1");
    if (word_a.size() != static_cast<std::size_t>(length) ||
        word_b.size() != static_cast<std::size_t>(length))
        throw std::invalid_argument("word lengths must equal the pair length");
    std::vector<AntithesisInstance> instances;
    for (const Poem& poem : poems) {
        for (const Couplet& couplet : extract_couplets(poem)) {
            if (!keep(couplet.confidence, filter)) continue;
            if (couplet.first_text.size() < static_cast<std::size_t>(length)) continue;
            for (const AlignedPair& pair : aligned_word_pairs(couplet, length)) {
                bool forward = pair.word_a == word_a && pair.word_b == word_b;
                bool reverse = pair.word_a == word_b && pair.word_b == word_a;
                if (!forward && !reverse) continue;
                instances.push_back(AntithesisInstance{pair.poem_id, pair.slot, pair.offset,
                                                       pair.confidence, pair.word_a,
                                                       pair.word_b});
            }
        }
    }
    return instances;
}

std::vector<char32_t> load_palette(const std::filesystem::path& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw DataError("cannot read palette file: " + path.string());
    std::vector<char32_t> colors;  // file order, duplicates preserved
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(file, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::u32string entry;
        try {
            entry = normalize_to_codepoints(line);
        } catch (const EncodingError&) {
            throw DataError(path.string() + ":" + std::to_string(lineno) + ": not valid UTF-8");
        }
        if (entry.empty()) continue;
        if (entry.size() != 1)
            throw DataError(path.string() + ":" + std::to_string(lineno) +
                            ": palette entries must be single characters, got " +
                            encode_utf8(entry));
        colors.push_back(entry.front());
    }
    return colors;
}

}  // namespace tangscope
