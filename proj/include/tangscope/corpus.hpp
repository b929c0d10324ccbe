#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tangscope {

// Placeholder author string used by CTP e-texts for unattributed works.
inline constexpr std::string_view kUnknownAuthor = "不詳";

bool is_unknown_author(std::string_view author);

enum class VerseForm {
    WuyanJueju,   // 4 lines x 5 chars
    QiyanJueju,   // 4 x 7
    WuyanLushi,   // 8 x 5
    QiyanLushi,   // 8 x 7
    Other,
};

std::string_view verse_form_name(VerseForm form);

struct Line {
    std::u32string chars;            // never contains a delimiter
    std::u32string trailing_delims;  // delimiter run after the segment; empty at body end
};

struct Poem {
    std::string id;
    std::string title;
    std::string author;
    std::string body_raw;            // as ingested
    std::vector<Line> lines;         // segmented from the normalized body
    VerseForm form = VerseForm::Other;
};

struct CorpusStats {
    std::uint64_t work_count = 0;
    std::uint64_t author_count = 0;
    // CJK characters plus delimiter marks, measured on normalized bodies.
    std::uint64_t char_count = 0;
};

struct AuthorWorks {
    std::string author;
    std::uint64_t works = 0;
    bool unknown = false;  // the 不詳 placeholder, not a person
};

enum class CorpusFormat { JsonLines, PlainText };

// Splits a normalized body at every delimiter mark. Delimiter runs attach
// to the preceding segment; empty segments are dropped.
std::vector<Line> segment_lines(std::u32string_view body);
std::vector<Line> segment_lines(std::string_view normalized_body);

VerseForm classify_form(const Poem& poem);

// JSON Lines: one object per poem with keys id, title, author, body.
// Plain text: records separated by a line containing only %%; first line
// is the title, second the author, the rest the body.
std::vector<Poem> parse_corpus(std::istream& input, CorpusFormat format);
std::vector<Poem> parse_corpus(std::string_view input, CorpusFormat format);

// Reads a corpus file; sniffs the format when none is given.
std::vector<Poem> load_corpus(const std::filesystem::path& path,
                              std::optional<CorpusFormat> format = {});

CorpusStats corpus_stats(const std::vector<Poem>& poems);

// Descending by work count, ties by code-point order of the author string.
std::vector<AuthorWorks> author_ranking(const std::vector<Poem>& poems);

// Lines joined with their trailing delimiters; equals
// normalize_text(body_raw) for every parsed poem.
std::string joined_body(const Poem& poem);

}  // namespace tangscope
