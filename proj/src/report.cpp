#include "tangscope/report.hpp"

#include "tangscope/text.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace tangscope {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string dump(const ordered_json& doc) { return doc.dump(2) + "\n"; }

std::string slot_text(std::pair<int, int> slot) {
    return std::to_string(slot.first) + "," + std::to_string(slot.second);
}

std::string flags_text(const MentionEdge& edge) {
    std::string flags;
    auto add = [&](bool set, const char* name) {
        if (!set) return;
        if (!flags.empty()) flags += ',';
        flags += name;
    };
    add(edge.self_loop, "self_loop");
    add(edge.anachronistic, "anachronistic");
    add(edge.short_form, "short_form");
    return flags.empty() ? "-" : flags;
}

}  // namespace

TableFormat parse_table_format(std::string_view name) {
    if (name == "tsv") return TableFormat::Tsv;
    if (name == "json") return TableFormat::Json;
    throw std::invalid_argument("unknown table format: " + std::string(name));
}

std::string render_stats(const CorpusStats& stats, TableFormat format) {
    if (format == TableFormat::Json) {
        ordered_json doc;
        doc["work_count"] = stats.work_count;
        doc["author_count"] = stats.author_count;
        doc["char_count"] = stats.char_count;
        return dump(doc);
    }
    std::ostringstream out;
    out << "work_count\t" << stats.work_count << "\n"
        << "author_count\t" << stats.author_count << "\n"
        << "char_count\t" << stats.char_count << "\n";
    return out.str();
}

std::string render_ranking(const std::vector<AuthorWorks>& ranking, TableFormat format) {
    if (format == TableFormat::Json) {
        ordered_json doc = ordered_json::array();
        for (const AuthorWorks& row : ranking)
            doc.push_back({{"author", row.author}, {"works", row.works},
                           {"unknown", row.unknown}});
        return dump(doc);
    }
    std::ostringstream out;
    for (const AuthorWorks& row : ranking)
        out << row.author << '\t' << row.works << '\t' << (row.unknown ? "unknown" : "known")
            << '\n';
    return out.str();
}

std::string render_grams(const std::vector<std::pair<std::u32string, std::uint64_t>>& grams,
                         TableFormat format) {
    if (format == TableFormat::Json) {
        ordered_json doc = ordered_json::array();
        for (const auto& [gram, count] : grams)
            doc.push_back({{"gram", encode_utf8(gram)}, {"count", count}});
        return dump(doc);
    }
    std::ostringstream out;
    for (const auto& [gram, count] : grams) out << encode_utf8(gram) << '\t' << count << '\n';
    return out.str();
}

std::string render_ratio(const UsageRatio& ratio, TableFormat format) {
    if (format == TableFormat::Json) {
        ordered_json doc;
        doc["author"] = ratio.author;
        doc["lexicon"] = ratio.lexicon;
        doc["percent"] = ratio.percent_text();
        doc["numerator"] = ratio.numerator;
        doc["denominator"] = ratio.denominator;
        return dump(doc);
    }
    std::ostringstream out;
    out << "author\t" << ratio.author << "\n"
        << "lexicon\t" << ratio.lexicon << "\n"
        << "percent\t" << ratio.percent_text() << "\n"
        << "numerator\t" << ratio.numerator << "\n"
        << "denominator\t" << ratio.denominator << "\n";
    return out.str();
}

std::string render_white_matrix(const WhiteMatrix& matrix,
                                const std::vector<UsageRatio>& ratio_a,
                                const std::vector<UsageRatio>& ratio_b, TableFormat format) {
    if (format == TableFormat::Json) {
        ordered_json doc;
        doc["authors"] = matrix.authors;
        auto ratio_row = [](const std::vector<UsageRatio>& row) {
            ordered_json arr = ordered_json::array();
            for (const UsageRatio& r : row) arr.push_back(r.percent_text());
            return arr;
        };
        if (!ratio_a.empty()) doc["ratio_a"] = ratio_row(ratio_a);
        if (!ratio_b.empty()) doc["ratio_b"] = ratio_row(ratio_b);
        ordered_json rows = ordered_json::array();
        for (std::size_t w = 0; w < matrix.words.size(); ++w) {
            ordered_json row;
            row["word"] = encode_utf8(matrix.words[w]);
            row["freq"] = matrix.frequencies[w];
            ordered_json cells = ordered_json::array();
            for (const UsageRatio& cell : matrix.cells[w]) cells.push_back(cell.percent_text());
            row["percents"] = cells;
            rows.push_back(std::move(row));
        }
        doc["rows"] = rows;
        return dump(doc);
    }
    std::ostringstream out;
    out << "freq\tword";
    for (const std::string& author : matrix.authors) out << '\t' << author;
    out << '\n';
    auto ratio_row = [&](const char* label, const std::vector<UsageRatio>& row) {
        if (row.empty()) return;
        out << '\t' << label;
        for (const UsageRatio& r : row) out << '\t' << r.percent_text();
        out << '\n';
    };
    ratio_row("Ratio A", ratio_a);
    ratio_row("Ratio B", ratio_b);
    for (std::size_t w = 0; w < matrix.words.size(); ++w) {
        out << matrix.frequencies[w] << '\t' << encode_utf8(matrix.words[w]);
        for (const UsageRatio& cell : matrix.cells[w]) out << '\t' << cell.percent_text();
        out << '\n';
    }
    return out.str();
}

std::string render_collocations(const std::vector<CollocationRecord>& records,
                                TableFormat format) {
    if (format == TableFormat::Json) {
        ordered_json doc = ordered_json::array();
        for (const CollocationRecord& rec : records)
            doc.push_back({{"target", encode_utf8(rec.target)},
                           {"collocate", encode_utf8(rec.collocate)},
                           {"window", rec.window},
                           {"count", rec.count}});
        return dump(doc);
    }
    std::ostringstream out;
    for (const CollocationRecord& rec : records)
        out << encode_utf8(rec.target) << '\t' << encode_utf8(rec.collocate) << '\t' << rec.count
            << '\n';
    return out.str();
}

std::string render_couplets(const std::vector<Couplet>& couplets, TableFormat format) {
    if (format == TableFormat::Json) {
        ordered_json doc = ordered_json::array();
        for (const Couplet& c : couplets)
            doc.push_back({{"poem", c.poem_id},
                           {"slot", slot_text(c.slot())},
                           {"confidence", std::string(couplet_class_name(c.confidence))},
                           {"first", encode_utf8(c.first_text)},
                           {"second", encode_utf8(c.second_text)}});
        return dump(doc);
    }
    std::ostringstream out;
    for (const Couplet& c : couplets)
        out << c.poem_id << '\t' << slot_text(c.slot()) << '\t'
            << couplet_class_name(c.confidence) << '\t' << encode_utf8(c.first_text) << '\t'
            << encode_utf8(c.second_text) << '\n';
    return out.str();
}

std::string render_color_matrix(const ColorMatrix& matrix, TableFormat format,
                                std::size_t top_rows) {
    if (format == TableFormat::Json) {
        ordered_json doc;
        ordered_json colors = ordered_json::array();
        for (char32_t color : matrix.colors) colors.push_back(encode_utf8(color));
        doc["colors"] = colors;
        ordered_json pairs = ordered_json::array();
        for (const auto& [pair, count] : matrix.counts)
            pairs.push_back({{"a", encode_utf8(pair.first)},
                             {"b", encode_utf8(pair.second)},
                             {"count", count}});
        doc["pairs"] = pairs;
        return dump(doc);
    }
    // Table layout: one (C, F) column pair per palette color, rows ranked by
    // count descending, ties by code point.
    std::vector<std::vector<std::pair<char32_t, std::uint64_t>>> columns;
    std::size_t depth = 0;
    for (char32_t color : matrix.colors) {
        std::vector<std::pair<char32_t, std::uint64_t>> column;
        for (char32_t other : matrix.colors) {
            if (other == color) continue;
            std::uint64_t count = matrix.count(color, other);
            if (count > 0) column.emplace_back(other, count);
        }
        std::stable_sort(column.begin(), column.end(), [](const auto& a, const auto& b) {
            if (a.second != b.second) return a.second > b.second;
            return a.first < b.first;
        });
        if (top_rows > 0 && column.size() > top_rows) column.resize(top_rows);
        depth = std::max(depth, column.size());
        columns.push_back(std::move(column));
    }
    std::ostringstream out;
    for (std::size_t i = 0; i < matrix.colors.size(); ++i) {
        if (i) out << '\t';
        out << encode_utf8(matrix.colors[i]) << '\t';
    }
    out << '\n';
    for (std::size_t row = 0; row < depth; ++row) {
        for (std::size_t i = 0; i < columns.size(); ++i) {
            if (i) out << '\t';
            if (row < columns[i].size())
                out << encode_utf8(columns[i][row].first) << '\t' << columns[i][row].second;
            else
                out << '\t';
        }
        out << '\n';
    }
    return out.str();
}

std::string render_antithesis(const std::vector<AntithesisInstance>& instances,
                              TableFormat format) {
    if (format == TableFormat::Json) {
        ordered_json doc = ordered_json::array();
        for (const AntithesisInstance& inst : instances)
            doc.push_back({{"poem", inst.poem_id},
                           {"slot", slot_text(inst.slot)},
                           {"offset", inst.offset},
                           {"confidence", std::string(couplet_class_name(inst.confidence))},
                           {"word_a", encode_utf8(inst.word_a)},
                           {"word_b", encode_utf8(inst.word_b)}});
        return dump(doc);
    }
    std::ostringstream out;
    for (const AntithesisInstance& inst : instances)
        out << inst.poem_id << '\t' << slot_text(inst.slot) << '\t' << inst.offset << '\t'
            << couplet_class_name(inst.confidence) << '\t' << encode_utf8(inst.word_a) << '\t'
            << encode_utf8(inst.word_b) << '\n';
    return out.str();
}

std::string render_mentions(const std::vector<MentionEdge>& edges, TableFormat format) {
    if (format == TableFormat::Json) {
        ordered_json doc = ordered_json::array();
        for (const MentionEdge& edge : edges)
            doc.push_back({{"source", edge.source},
                           {"target", edge.target},
                           {"poem", edge.poem_id},
                           {"location", std::string(mention_location_name(edge.location))},
                           {"matched", edge.matched_text},
                           {"self_loop", edge.self_loop},
                           {"anachronistic", edge.anachronistic},
                           {"short_form", edge.short_form}});
        return dump(doc);
    }
    std::ostringstream out;
    for (const MentionEdge& edge : edges)
        out << edge.source << '\t' << edge.target << '\t' << edge.poem_id << '\t'
            << mention_location_name(edge.location) << '\t' << edge.matched_text << '\t'
            << flags_text(edge) << '\n';
    return out.str();
}

std::string render_verbs(const std::vector<VerbContext>& contexts, TableFormat format) {
    if (format == TableFormat::Json) {
        ordered_json doc = ordered_json::array();
        for (const VerbContext& ctx : contexts)
            doc.push_back({{"verb", encode_utf8(ctx.verb)},
                           {"target", ctx.target},
                           {"count", ctx.count}});
        return dump(doc);
    }
    std::ostringstream out;
    for (const VerbContext& ctx : contexts)
        out << encode_utf8(ctx.verb) << '\t' << ctx.target << '\t' << ctx.count << '\n';
    return out.str();
}

}  // namespace tangscope
