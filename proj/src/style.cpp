#include "tangscope/style.hpp"

#include "tangscope/error.hpp"
#include "tangscope/text.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

namespace tangscope {

namespace {

void validate_word(const std::u32string& word, const std::string& where) {
    if (word.empty()) throw DataError(where + ": empty word");
    for (char32_t cp : word)
        if (is_line_delimiter(cp))
            throw DataError(where + ": word contains a delimiter: " + encode_utf8(word));
}

Lexicon finish_lexicon(std::string name, std::vector<std::u32string> words) {
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    return Lexicon{std::move(name), std::move(words)};
}

}  // namespace

Lexicon load_lexicon(const std::filesystem::path& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw DataError("cannot read lexicon file: " + path.string());
    std::vector<std::u32string> words;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(file, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::u32string word;
        try {
            word = normalize_to_codepoints(line);
        } catch (const EncodingError&) {
            throw DataError(path.string() + ":" + std::to_string(lineno) + ": not valid UTF-8");
        }
        if (word.empty()) continue;
        validate_word(word, path.string() + ":" + std::to_string(lineno));
        words.push_back(std::move(word));
    }
    return finish_lexicon(path.stem().string(), std::move(words));
}

Lexicon make_lexicon(std::string name, const std::vector<std::string>& words) {
    std::vector<std::u32string> decoded;
    decoded.reserve(words.size());
    for (const std::string& w : words) {
        std::u32string word = decode_utf8(w);
        validate_word(word, "lexicon " + name);
        decoded.push_back(std::move(word));
    }
    return finish_lexicon(std::move(name), std::move(decoded));
}

double UsageRatio::percent() const {
    return denominator == 0 ? 0.0
                            : 100.0 * static_cast<double>(numerator) /
                                  static_cast<double>(denominator);
}

std::string format_percent(std::uint64_t numerator, std::uint64_t denominator) {
    if (denominator == 0) return "0.00";
    // percent with 2 decimals = 10000 * num / den, rounded half up.
    std::uint64_t scaled = numerator * 10000;
    std::uint64_t q = scaled / denominator;
    std::uint64_t r = scaled % denominator;
    if (2 * r >= denominator) ++q;
    std::string digits = std::to_string(q / 100);
    std::string frac = std::to_string(q % 100);
    if (frac.size() < 2) frac.insert(frac.begin(), '0');
    return digits + "." + frac;
}

std::string UsageRatio::percent_text() const {
    return format_percent(numerator, denominator);
}

std::uint64_t count_in_poem(const Poem& poem, std::u32string_view word) {
    if (word.empty()) return 0;
    std::uint64_t count = 0;
    for (const Line& line : poem.lines) {
        const std::u32string& chars = line.chars;
        if (chars.size() < word.size()) continue;
        for (std::size_t pos = chars.find(word, 0); pos != std::u32string::npos;
             pos = chars.find(word, pos + 1))
            ++count;
    }
    return count;
}

bool poem_contains(const Poem& poem, std::u32string_view word) {
    if (word.empty()) return false;
    for (const Line& line : poem.lines)
        if (line.chars.find(word) != std::u32string::npos) return true;
    return false;
}

UsageRatio usage_ratio(const std::vector<Poem>& poems, std::string_view author,
                       const Lexicon& lexicon) {
    if (lexicon.words.empty()) throw DataError("lexicon '" + lexicon.name + "' is empty");
    UsageRatio ratio;
    ratio.author = std::string(author);
    ratio.lexicon = lexicon.name;
    for (const Poem& poem : poems) {
        if (poem.author != author) continue;
        ++ratio.denominator;
        for (const std::u32string& word : lexicon.words) {
            if (poem_contains(poem, word)) {
                ++ratio.numerator;
                break;
            }
        }
    }
    if (ratio.denominator == 0)
        throw DataError("author not present in corpus: " + std::string(author));
    return ratio;
}

WhiteMatrix white_word_matrix(const std::vector<Poem>& poems,
                              const std::vector<std::string>& authors,
                              const std::vector<std::u32string>& words) {
    WhiteMatrix matrix;
    matrix.authors = authors;

    struct Row {
        std::u32string word;
        std::uint64_t freq = 0;
        std::vector<UsageRatio> cells;
    };
    std::vector<Row> rows;
    rows.reserve(words.size());
    for (const std::u32string& word : words) {
        Row row;
        row.word = word;
        Lexicon single{encode_utf8(word), {word}};
        for (const std::string& author : authors) {
            UsageRatio cell = usage_ratio(poems, author, single);
            row.cells.push_back(std::move(cell));
        }
        rows.push_back(std::move(row));
    }
    // Frequency column: occurrence totals over the listed authors' poems.
    for (const Poem& poem : poems) {
        if (std::find(authors.begin(), authors.end(), poem.author) == authors.end()) continue;
        for (Row& row : rows) row.freq += count_in_poem(poem, row.word);
    }
    std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        if (a.freq != b.freq) return a.freq > b.freq;
        return a.word < b.word;
    });
    for (Row& row : rows) {
        matrix.words.push_back(std::move(row.word));
        matrix.frequencies.push_back(row.freq);
        matrix.cells.push_back(std::move(row.cells));
    }
    return matrix;
}

std::map<std::u32string, std::uint64_t> lexical_profile(const std::vector<Poem>& poems,
                                                        std::string_view author,
                                                        const Lexicon& lexicon) {
    if (lexicon.words.empty()) throw DataError("lexicon '" + lexicon.name + "' is empty");
    bool author_seen = false;
    std::map<std::u32string, std::uint64_t> profile;
    for (const std::u32string& word : lexicon.words) profile[word] = 0;
    for (const Poem& poem : poems) {
        if (poem.author != author) continue;
        author_seen = true;
        for (const std::u32string& word : lexicon.words)
            profile[word] += count_in_poem(poem, word);
    }
    if (!author_seen)
        throw DataError("author not present in corpus: " + std::string(author));
    return profile;
}

}  // namespace tangscope
