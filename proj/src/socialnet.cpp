#include "tangscope/socialnet.hpp"

#include "tangscope/error.hpp"
#include "tangscope/text.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace tangscope {

Gazetteer::Gazetteer(std::vector<PersonRecord> people) : people_(std::move(people)) {
    for (std::size_t i = 0; i < people_.size(); ++i) {
        const PersonRecord& person = people_[i];
        if (!by_name_.emplace(person.canonical, i).second)
            throw DataError("duplicate canonical name in gazetteer: " + person.canonical);
    }
    // Aliases resolve to the earliest record that claims them.
    for (std::size_t i = 0; i < people_.size(); ++i)
        for (const std::string& alias : people_[i].aliases) by_name_.emplace(alias, i);
}

const PersonRecord* Gazetteer::resolve(std::string_view name) const {
    auto it = by_name_.find(std::string(name));
    return it == by_name_.end() ? nullptr : &people_[it->second];
}

namespace {

std::optional<int> parse_year(const std::string& field, const std::string& where) {
    if (field.empty()) return std::nullopt;
    std::size_t used = 0;
    int year;
    try {
        year = std::stoi(field, &used);
    } catch (const std::exception&) {
        throw DataError(where + ": invalid year '" + field + "'");
    }
    if (used != field.size()) throw DataError(where + ": invalid year '" + field + "'");
    return year;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(sep, start);
        if (end == std::string::npos) {
            parts.push_back(text.substr(start));
            break;
        }
        parts.push_back(text.substr(start, end - start));
        start = end + 1;
    }
    return parts;
}

}  // namespace

Gazetteer parse_gazetteer(std::istream& input, const std::string& source_name) {
    std::vector<PersonRecord> people;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(input, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        const std::string where = source_name + ":" + std::to_string(lineno);
        std::vector<std::string> fields = split(line, '\t');
        if (fields.size() != 4)
            throw DataError(where + ": expected 4 tab-separated fields, got " +
                            std::to_string(fields.size()));
        PersonRecord person;
        person.canonical = fields[0];
        if (person.canonical.empty()) throw DataError(where + ": empty canonical name");
        for (const std::string& alias : split(fields[1], ';'))
            if (!alias.empty() && alias != person.canonical) person.aliases.push_back(alias);
        std::sort(person.aliases.begin(), person.aliases.end());
        person.aliases.erase(std::unique(person.aliases.begin(), person.aliases.end()),
                             person.aliases.end());
        person.birth_year = parse_year(fields[2], where);
        person.death_year = parse_year(fields[3], where);
        if (person.birth_year && person.death_year && *person.birth_year > *person.death_year)
            throw DataError(where + ": birth year after death year for " + person.canonical);
        people.push_back(std::move(person));
    }
    return Gazetteer(std::move(people));
}

Gazetteer load_gazetteer(const std::filesystem::path& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw DataError("cannot read gazetteer file: " + path.string());
    return parse_gazetteer(file, path.string());
}

std::string_view mention_location_name(MentionLocation location) {
    return location == MentionLocation::Title ? "title" : "body";
}

namespace {

struct Matcher {
    std::unordered_map<std::u32string, std::size_t> names;  // name -> person index
    std::vector<std::size_t> lengths;                       // distinct, descending
};

Matcher build_matcher(const Gazetteer& lexicon, int min_len) {
    Matcher matcher;
    std::set<std::size_t, std::greater<>> lengths;
    const auto& people = lexicon.people();
    for (std::size_t i = 0; i < people.size(); ++i) {
        auto add = [&](const std::string& name) {
            std::u32string decoded = decode_utf8(name);
            if (decoded.size() < static_cast<std::size_t>(min_len)) return;
            if (matcher.names.emplace(decoded, i).second) lengths.insert(decoded.size());
        };
        add(people[i].canonical);
        for (const std::string& alias : people[i].aliases) add(alias);
    }
    matcher.lengths.assign(lengths.begin(), lengths.end());
    return matcher;
}

void scan_segments(const std::vector<Line>& segments, const Matcher& matcher,
                   const Gazetteer& lexicon, const Poem& poem, MentionLocation location,
                   const PersonRecord* author_person, std::vector<MentionEdge>& edges) {
    for (std::uint32_t seg = 0; seg < segments.size(); ++seg) {
        const std::u32string& chars = segments[seg].chars;
        std::size_t i = 0;
        while (i < chars.size()) {
            bool matched = false;
            for (std::size_t len : matcher.lengths) {
                if (len > chars.size() - i) continue;
                auto it = matcher.names.find(chars.substr(i, len));
                if (it == matcher.names.end()) continue;
                const PersonRecord& person = lexicon.people()[it->second];
                MentionEdge edge;
                edge.source = poem.author;
                edge.target = person.canonical;
                edge.poem_id = poem.id;
                edge.location = location;
                edge.matched_text = encode_utf8(chars.substr(i, len));
                edge.line = seg;
                edge.offset = static_cast<std::uint32_t>(i);
                edge.self_loop = author_person == &person;
                edge.short_form = edge.matched_text != person.canonical;
                edges.push_back(std::move(edge));
                i += len;
                matched = true;
                break;
            }
            if (!matched) ++i;
        }
    }
}

}  // namespace

std::vector<MentionEdge> find_mentions(const std::vector<Poem>& poems, const Gazetteer& lexicon,
                                       int min_len) {
    if (min_len < 1) throw std::invalid_argument("minimum match length must be >= 1");
    if (lexicon.empty()) throw DataError("gazetteer is empty");
    Matcher matcher = build_matcher(lexicon, min_len);
    std::vector<MentionEdge> edges;
    for (const Poem& poem : poems) {
        const PersonRecord* author_person = lexicon.resolve(poem.author);
        std::vector<Line> title = segment_lines(normalize_to_codepoints(poem.title));
        scan_segments(title, matcher, lexicon, poem, MentionLocation::Title, author_person,
                      edges);
        scan_segments(poem.lines, matcher, lexicon, poem, MentionLocation::Body, author_person,
                      edges);
    }
    return edges;
}

void flag_anachronisms(std::vector<MentionEdge>& edges, const Gazetteer& lexicon,
                       const Gazetteer& author_lexicon) {
    for (MentionEdge& edge : edges) {
        const PersonRecord* target = lexicon.resolve(edge.target);
        const PersonRecord* author = author_lexicon.resolve(edge.source);
        if (!target || !author) continue;
        if (target->death_year && author->birth_year &&
            *target->death_year < *author->birth_year)
            edge.anachronistic = true;
    }
}

std::vector<VerbContext> verb_contexts(const std::vector<Poem>& poems, const Gazetteer& lexicon,
                                       const std::vector<MentionEdge>& edges) {
    (void)lexicon;
    std::unordered_map<std::string, const Poem*> by_id;
    for (const Poem& poem : poems) by_id.emplace(poem.id, &poem);
    std::map<std::pair<char32_t, std::string>, std::uint64_t> counts;
    for (const MentionEdge& edge : edges) {
        if (edge.offset == 0) continue;  // nothing precedes a segment-initial mention
        auto it = by_id.find(edge.poem_id);
        if (it == by_id.end()) continue;
        const Poem& poem = *it->second;
        char32_t preceding;
        if (edge.location == MentionLocation::Title) {
            std::vector<Line> title = segment_lines(normalize_to_codepoints(poem.title));
            if (edge.line >= title.size()) continue;
            preceding = title[edge.line].chars.at(edge.offset - 1);
        } else {
            if (edge.line >= poem.lines.size()) continue;
            preceding = poem.lines[edge.line].chars.at(edge.offset - 1);
        }
        ++counts[{preceding, edge.target}];
    }
    std::vector<VerbContext> contexts;
    contexts.reserve(counts.size());
    for (const auto& [key, count] : counts)
        contexts.push_back(VerbContext{key.first, key.second, count});
    std::stable_sort(contexts.begin(), contexts.end(),
                     [](const VerbContext& a, const VerbContext& b) {
                         if (a.count != b.count) return a.count > b.count;
                         if (a.verb != b.verb) return a.verb < b.verb;
                         return a.target < b.target;
                     });
    return contexts;
}

MentionGraph build_graph(const std::vector<MentionEdge>& edges) {
    std::map<std::pair<std::string, std::string>, std::uint64_t> weights;
    std::set<std::string> nodes;
    for (const MentionEdge& edge : edges) {
        ++weights[{edge.source, edge.target}];
        nodes.insert(edge.source);
        nodes.insert(edge.target);
    }
    MentionGraph graph;
    graph.nodes.assign(nodes.begin(), nodes.end());
    for (const auto& [key, weight] : weights)
        graph.edges.push_back(MentionGraph::Edge{key.first, key.second, weight});
    return graph;
}

namespace {

std::string dot_escape(const std::string& label) {
    std::string out;
    for (char c : label) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

std::string xml_escape(const std::string& text) {
    std::string out;
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

GraphFormat parse_graph_format(std::string_view name) {
    if (name == "dot") return GraphFormat::Dot;
    if (name == "graphml") return GraphFormat::GraphML;
    if (name == "csv") return GraphFormat::Csv;
    throw std::invalid_argument("unknown graph format: " + std::string(name));
}

std::string export_graph(const MentionGraph& graph, GraphFormat format) {
    std::ostringstream out;
    switch (format) {
        case GraphFormat::Dot:
            out << "digraph mentions {\n";
            for (const std::string& node : graph.nodes)
                out << "  \"" << dot_escape(node) << "\";\n";
            for (const auto& edge : graph.edges)
                out << "  \"" << dot_escape(edge.source) << "\" -> \""
                    << dot_escape(edge.target) << "\" [weight=" << edge.weight << "];\n";
            out << "}\n";
            break;
        case GraphFormat::GraphML:
            out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
                << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
                << "  <key id=\"w\" for=\"edge\" attr.name=\"weight\" attr.type=\"long\"/>\n"
                << "  <graph id=\"mentions\" edgedefault=\"directed\">\n";
            for (const std::string& node : graph.nodes)
                out << "    <node id=\"" << xml_escape(node) << "\"/>\n";
            for (const auto& edge : graph.edges)
                out << "    <edge source=\"" << xml_escape(edge.source) << "\" target=\""
                    << xml_escape(edge.target) << "\"><data key=\"w\">" << edge.weight
                    << "</data></edge>\n";
            out << "  </graph>\n</graphml>\n";
            break;
        case GraphFormat::Csv:
            out << "source,target,weight\n";
            for (const auto& edge : graph.edges)
                out << csv_escape(edge.source) << ',' << csv_escape(edge.target) << ','
                    << edge.weight << '\n';
            break;
    }
    return out.str();
}

}  // namespace tangscope
