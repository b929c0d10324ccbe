#pragma once

#include "tangscope/corpus.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <unordered_map>

namespace tangscope {

struct PersonRecord {
    std::string canonical;
    std::vector<std::string> aliases;  // style names, pen names, short forms
    std::optional<int> birth_year;     // negative = BC
    std::optional<int> death_year;
};

// Flat gazetteer: rows of canonical<TAB>aliases(;-separated)<TAB>birth<TAB>death.
// Blank year fields mean unknown; '#' starts a comment.
class Gazetteer {
public:
    Gazetteer() = default;
    explicit Gazetteer(std::vector<PersonRecord> people);

    const std::vector<PersonRecord>& people() const { return people_; }
    bool empty() const { return people_.empty(); }

    // Resolves a name or alias to its person record. When an alias is shared,
    // the record listed first in the gazetteer wins.
    const PersonRecord* resolve(std::string_view name) const;

private:
    std::vector<PersonRecord> people_;
    std::unordered_map<std::string, std::size_t> by_name_;
};

Gazetteer load_gazetteer(const std::filesystem::path& path);
Gazetteer parse_gazetteer(std::istream& input, const std::string& source_name);

enum class MentionLocation { Title, Body };

std::string_view mention_location_name(MentionLocation location);

struct MentionEdge {
    std::string source;   // the poem's author
    std::string target;   // canonical name of the mentioned person
    std::string poem_id;
    MentionLocation location = MentionLocation::Body;
    std::string matched_text;
    std::uint32_t line = 0;    // segment index within the title or body
    std::uint32_t offset = 0;  // match start within that segment
    bool self_loop = false;
    bool anachronistic = false;
    bool short_form = false;  // matched an alias rather than the canonical name
};

// Scans titles and bodies for names and aliases of at least min_len
// characters. Matching is longest-first and non-overlapping, left to right
// within each segment. Self-mentions are kept and flagged.
std::vector<MentionEdge> find_mentions(const std::vector<Poem>& poems, const Gazetteer& lexicon,
                                       int min_len = 2);

// Sets the anachronistic flag where the target died before the author was
// born (both years known). Never adds or removes edges.
void flag_anachronisms(std::vector<MentionEdge>& edges, const Gazetteer& lexicon,
                       const Gazetteer& author_lexicon);

struct VerbContext {
    char32_t verb = 0;   // character immediately preceding the match
    std::string target;  // canonical name
    std::uint64_t count = 0;
};

// Characters directly before each mention within the same segment,
// aggregated by (character, target). Sorted by count desc, then code point.
std::vector<VerbContext> verb_contexts(const std::vector<Poem>& poems, const Gazetteer& lexicon,
                                       const std::vector<MentionEdge>& edges);

struct MentionGraph {
    struct Edge {
        std::string source;
        std::string target;
        std::uint64_t weight = 0;  // collapsed mention count
    };
    std::vector<std::string> nodes;  // code-point order
    std::vector<Edge> edges;         // (source, target) code-point order
};

MentionGraph build_graph(const std::vector<MentionEdge>& edges);

enum class GraphFormat { Dot, GraphML, Csv };

GraphFormat parse_graph_format(std::string_view name);
std::string export_graph(const MentionGraph& graph, GraphFormat format);

}  // namespace tangscope
