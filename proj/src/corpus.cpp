#include "tangscope/corpus.hpp"

#include "tangscope/error.hpp"
#include "tangscope/text.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace tangscope {

bool is_unknown_author(std::string_view author) {
    return author == kUnknownAuthor;
}

std::string_view verse_form_name(VerseForm form) {
    switch (form) {
        case VerseForm::WuyanJueju: return "wuyan_jueju";
        case VerseForm::QiyanJueju: return "qiyan_jueju";
        case VerseForm::WuyanLushi: return "wuyan_lushi";
        case VerseForm::QiyanLushi: return "qiyan_lushi";
        case VerseForm::Other: return "other";
    }
    return "other";
}

std::vector<Line> segment_lines(std::u32string_view body) {
    std::vector<Line> lines;
    std::size_t i = 0;
    while (i < body.size()) {
        std::size_t seg_start = i;
        while (i < body.size() && !is_line_delimiter(body[i])) ++i;
        std::size_t seg_end = i;
        while (i < body.size() && is_line_delimiter(body[i])) ++i;
        if (seg_end > seg_start) {
            lines.push_back(Line{std::u32string(body.substr(seg_start, seg_end - seg_start)),
                                 std::u32string(body.substr(seg_end, i - seg_end))});
        }
        // A delimiter run with no preceding segment is dropped with it.
    }
    return lines;
}

std::vector<Line> segment_lines(std::string_view normalized_body) {
    return segment_lines(std::u32string_view(decode_utf8(normalized_body)));
}

VerseForm classify_form(const Poem& poem) {
    const auto& lines = poem.lines;
    auto uniform = [&](std::size_t len) {
        return std::all_of(lines.begin(), lines.end(),
                           [&](const Line& l) { return l.chars.size() == len; });
    };
    if (lines.size() == 4 && uniform(5)) return VerseForm::WuyanJueju;
    if (lines.size() == 4 && uniform(7)) return VerseForm::QiyanJueju;
    if (lines.size() == 8 && uniform(5)) return VerseForm::WuyanLushi;
    if (lines.size() == 8 && uniform(7)) return VerseForm::QiyanLushi;
    return VerseForm::Other;
}

namespace {

struct RawRecord {
    std::string id;
    std::string title;
    std::string author;
    std::string body;
};

Poem finish_poem(RawRecord&& rec, std::size_t record_index) {
    Poem poem;
    poem.id = std::move(rec.id);
    poem.title = std::move(rec.title);
    poem.author = std::move(rec.author);
    poem.body_raw = std::move(rec.body);
    std::u32string body;
    try {
        body = normalize_to_codepoints(poem.body_raw);
        poem.title = normalize_text(poem.title);
        poem.author = normalize_text(poem.author);
    } catch (const EncodingError& e) {
        throw DataError("record " + std::to_string(record_index) + ": " + e.what());
    }
    if (!body.empty() && is_line_delimiter(body.front()))
        throw DataError("record " + std::to_string(record_index) +
                        ": body begins with a delimiter");
    poem.lines = segment_lines(std::u32string_view(body));
    poem.form = classify_form(poem);
    return poem;
}

std::vector<Poem> parse_json_lines(std::istream& input) {
    std::vector<Poem> poems;
    std::unordered_set<std::string> seen_ids;
    std::string line;
    std::size_t record = 0;
    while (std::getline(input, line)) {
        ++record;
        // Tolerate blank lines and a trailing newline.
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        nlohmann::json obj = nlohmann::json::parse(line, nullptr, false);
        if (obj.is_discarded())
            throw DataError("record " + std::to_string(record) + ": not valid JSON");
        if (!obj.is_object())
            throw DataError("record " + std::to_string(record) + ": not a JSON object");
        RawRecord rec;
        for (auto [field, dest] : {std::pair{"id", &rec.id}, {"title", &rec.title},
                                   {"author", &rec.author}, {"body", &rec.body}}) {
            auto it = obj.find(field);
            if (it == obj.end() || !it->is_string())
                throw DataError("record " + std::to_string(record) + ": missing string field '" +
                                std::string(field) + "'");
            *dest = it->get<std::string>();
        }
        if (rec.id.empty())
            throw DataError("record " + std::to_string(record) + ": empty id");
        if (!seen_ids.insert(rec.id).second)
            throw DataError("record " + std::to_string(record) + ": duplicate id '" + rec.id + "'");
        poems.push_back(finish_poem(std::move(rec), record));
    }
    return poems;
}

std::vector<Poem> parse_plain_text(std::istream& input) {
    std::vector<Poem> poems;
    std::vector<std::string> block;
    std::size_t record = 0;

    auto flush = [&]() {
        while (!block.empty() && block.back().empty()) block.pop_back();
        std::size_t first = 0;
        while (first < block.size() && block[first].empty()) ++first;
        if (first >= block.size()) {
            block.clear();
            return;
        }
        ++record;
        if (block.size() - first < 2)
            throw DataError("record " + std::to_string(record) +
                            ": expected title, author and body lines");
        RawRecord rec;
        rec.id = "p" + std::to_string(record);
        rec.title = block[first];
        rec.author = block[first + 1];
        std::string body;
        for (std::size_t i = first + 2; i < block.size(); ++i) {
            if (!body.empty()) body += '\n';
            body += block[i];
        }
        rec.body = body;
        block.clear();
        poems.push_back(finish_poem(std::move(rec), record));
    };

    std::string line;
    while (std::getline(input, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line == "%%") {
            flush();
        } else {
            block.push_back(line);
        }
    }
    flush();
    return poems;
}

}  // namespace

std::vector<Poem> parse_corpus(std::istream& input, CorpusFormat format) {
    switch (format) {
        case CorpusFormat::JsonLines: return parse_json_lines(input);
        case CorpusFormat::PlainText: return parse_plain_text(input);
    }
    throw std::invalid_argument("unknown corpus format");
}

std::vector<Poem> parse_corpus(std::string_view input, CorpusFormat format) {
    std::istringstream stream{std::string(input)};
    return parse_corpus(stream, format);
}

std::vector<Poem> load_corpus(const std::filesystem::path& path,
                              std::optional<CorpusFormat> format) {
    std::ifstream file(path, std::ios::binary);
    if (!file)
        throw DataError("cannot read corpus file: " + path.string());
    if (!format) {
        auto ext = path.extension().string();
        if (ext == ".jsonl" || ext == ".json" || ext == ".ndjson") {
            format = CorpusFormat::JsonLines;
        } else {
            int c;
            while ((c = file.peek()) != EOF &&
                   (c == ' ' || c == '\t' || c == '\r' || c == '\n'))
                file.get();
            format = (c == '{') ? CorpusFormat::JsonLines : CorpusFormat::PlainText;
        }
    }
    return parse_corpus(file, *format);
}

CorpusStats corpus_stats(const std::vector<Poem>& poems) {
    CorpusStats stats;
    stats.work_count = poems.size();
    std::unordered_set<std::string_view> authors;
    for (const Poem& poem : poems) {
        authors.insert(poem.author);
        for (const Line& line : poem.lines) {
            for (char32_t cp : line.chars)
                if (is_cjk(cp)) ++stats.char_count;
            stats.char_count += line.trailing_delims.size();
        }
    }
    stats.author_count = authors.size();
    return stats;
}

std::vector<AuthorWorks> author_ranking(const std::vector<Poem>& poems) {
    std::map<std::string_view, std::uint64_t> counts;
    for (const Poem& poem : poems) ++counts[poem.author];
    std::vector<AuthorWorks> ranking;
    ranking.reserve(counts.size());
    for (const auto& [author, works] : counts)
        ranking.push_back(AuthorWorks{std::string(author), works, is_unknown_author(author)});
    std::stable_sort(ranking.begin(), ranking.end(),
                     [](const AuthorWorks& a, const AuthorWorks& b) {
                         if (a.works != b.works) return a.works > b.works;
                         return a.author < b.author;
                     });
    return ranking;
}

std::string joined_body(const Poem& poem) {
    std::u32string body;
    for (const Line& line : poem.lines) {
        body += line.chars;
        body += line.trailing_delims;
    }
    return encode_utf8(body);
}

}  // namespace tangscope
