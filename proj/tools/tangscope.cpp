// tangscope: corpus analytics for classical Chinese poetry collections.

#include "tangscope/antithesis.hpp"
#include "tangscope/collocation.hpp"
#include "tangscope/corpus.hpp"
#include "tangscope/error.hpp"
#include "tangscope/index.hpp"
#include "tangscope/lexstats.hpp"
#include "tangscope/report.hpp"
#include "tangscope/socialnet.hpp"
#include "tangscope/style.hpp"
#include "tangscope/text.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace ts = tangscope;

namespace {

struct CommonOpts {
    std::string corpus;
    std::string corpus_format;  // auto | jsonl | text
    std::string format = "tsv";
    std::string out;
};

void add_common(CLI::App* cmd, CommonOpts& opts, const std::string& format_values) {
    cmd->add_option("corpus", opts.corpus, "Corpus file (JSON Lines or %%-separated text)")
        ->required();
    cmd->add_option("--corpus-format", opts.corpus_format, "Force the corpus format")
        ->check(CLI::IsMember({"auto", "jsonl", "text"}))
        ->default_val("auto");
    cmd->add_option("--format", opts.format, "Output format (" + format_values + ")");
    cmd->add_option("--out", opts.out, "Write output to FILE instead of standard output");
}

std::vector<ts::Poem> load(const CommonOpts& opts) {
    std::optional<ts::CorpusFormat> format;
    if (opts.corpus_format == "jsonl") format = ts::CorpusFormat::JsonLines;
    if (opts.corpus_format == "text") format = ts::CorpusFormat::PlainText;
    return ts::load_corpus(opts.corpus, format);
}

void emit(const std::string& bytes, const CommonOpts& opts) {
    if (opts.out.empty()) {
        std::cout << bytes;
        std::cout.flush();
        if (!std::cout) throw ts::DataError("failed to write to standard output");
        return;
    }
    std::ofstream file(opts.out, std::ios::binary);
    if (!file) throw ts::DataError("cannot open output file: " + opts.out);
    file << bytes;
    file.flush();
    if (!file) throw ts::DataError("failed to write output file: " + opts.out);
}

ts::TableFormat table_format(const CommonOpts& opts) {
    return ts::parse_table_format(opts.format);
}

// A flag value that must be exactly one character after normalization.
char32_t single_char(const std::string& value, const char* flag) {
    std::u32string chars = ts::normalize_to_codepoints(value);
    if (chars.size() != 1)
        throw std::invalid_argument(std::string(flag) + " expects exactly one character");
    return chars[0];
}

std::optional<std::string> author_filter(const std::string& author) {
    if (author.empty()) return std::nullopt;
    return ts::normalize_text(author);
}

// One name per line, '#' comments, file order preserved.
std::vector<std::string> read_name_list(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw ts::DataError("cannot open list file: " + path);
    std::vector<std::string> names;
    std::string line;
    while (std::getline(file, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::string name = ts::normalize_text(line);
        if (!name.empty()) names.push_back(std::move(name));
    }
    return names;
}

ts::CoupletFilter parse_confidence(const std::string& value) {
    if (value == "all") return ts::CoupletFilter::All;
    if (value == "structural") return ts::CoupletFilter::StructuralOnly;
    if (value == "heuristic") return ts::CoupletFilter::HeuristicOnly;
    throw std::invalid_argument("unknown confidence class: " + value);
}

// "A,B" with a halfwidth or fullwidth comma.
std::pair<std::u32string, std::u32string> parse_word_pair(const std::string& value) {
    std::u32string raw = ts::decode_utf8(value);
    std::size_t comma = raw.find(U',');
    if (comma == std::u32string::npos) comma = raw.find(U'，');
    if (comma == std::u32string::npos)
        throw std::invalid_argument("--pair expects two words separated by a comma");
    std::u32string a = ts::normalize_to_codepoints(ts::encode_utf8(raw.substr(0, comma)));
    std::u32string b = ts::normalize_to_codepoints(ts::encode_utf8(raw.substr(comma + 1)));
    if (a.empty() || b.empty())
        throw std::invalid_argument("--pair expects two non-empty words");
    return {std::move(a), std::move(b)};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Corpus analytics for classical Chinese poetry collections"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);

    // stats
    CommonOpts stats_opts;
    CLI::App* stats = app.add_subcommand("stats", "Corpus size: works, authors, characters");
    add_common(stats, stats_opts, "tsv|json");
    stats->callback([&] {
        auto poems = load(stats_opts);
        emit(ts::render_stats(ts::corpus_stats(poems), table_format(stats_opts)), stats_opts);
    });

    // rank
    CommonOpts rank_opts;
    std::size_t rank_top = 0;
    CLI::App* rank = app.add_subcommand("rank", "Authors by work count, descending");
    add_common(rank, rank_opts, "tsv|json");
    rank->add_option("--top", rank_top, "Keep only the first N authors");
    rank->callback([&] {
        auto poems = load(rank_opts);
        auto ranking = ts::author_ranking(poems);
        if (rank_top > 0 && ranking.size() > rank_top) ranking.resize(rank_top);
        emit(ts::render_ranking(ranking, table_format(rank_opts)), rank_opts);
    });

    // ngrams
    CommonOpts ngrams_opts;
    int ngrams_n = 2;
    std::size_t ngrams_top = 50;
    std::string ngrams_author;
    CLI::App* ngrams = app.add_subcommand("ngrams", "Most frequent n-character strings");
    add_common(ngrams, ngrams_opts, "tsv|json");
    ngrams->add_option("--n", ngrams_n, "Window length in characters")
        ->check(CLI::PositiveNumber);
    ngrams->add_option("--top", ngrams_top, "Number of rows to keep");
    ngrams->add_option("--author", ngrams_author, "Restrict to one author's poems");
    ngrams->callback([&] {
        auto poems = load(ngrams_opts);
        auto table = ts::ngram_table(poems, ngrams_n, author_filter(ngrams_author));
        emit(ts::render_grams(ts::top_k(table, ngrams_top), table_format(ngrams_opts)),
             ngrams_opts);
    });

    // affix
    CommonOpts affix_opts;
    std::string affix_char;
    std::string affix_side = "suffix";
    std::string affix_author;
    int affix_len = 2;
    std::size_t affix_top = 0;
    CLI::App* affix =
        app.add_subcommand("affix", "Words ending with (or starting with) a character");
    add_common(affix, affix_opts, "tsv|json");
    affix->add_option("--char", affix_char, "Anchor character")->required();
    affix->add_option("--side", affix_side, "Anchor position within the word")
        ->check(CLI::IsMember({"suffix", "prefix"}));
    affix->add_option("--len", affix_len, "Word length in characters")
        ->check(CLI::Range(2, 8));
    affix->add_option("--author", affix_author, "Restrict to one author's poems");
    affix->add_option("--top", affix_top, "Keep only the first N rows (0 = all)");
    affix->callback([&] {
        auto poems = load(affix_opts);
        ts::CorpusIndex index(poems);
        char32_t anchor = single_char(affix_char, "--char");
        auto filter = author_filter(affix_author);
        ts::WordCounts counts = affix_side == "prefix"
                                    ? ts::words_with_prefix(index, anchor, affix_len, filter)
                                    : ts::words_with_suffix(index, anchor, affix_len, filter);
        auto rows = ts::sort_by_count(counts);
        if (affix_top > 0 && rows.size() > affix_top) rows.resize(affix_top);
        emit(ts::render_grams(rows, table_format(affix_opts)), affix_opts);
    });

    // ratio
    CommonOpts ratio_opts;
    std::string ratio_author;
    std::string ratio_lexicon;
    CLI::App* ratio =
        app.add_subcommand("ratio", "Share of an author's poems containing lexicon words");
    add_common(ratio, ratio_opts, "tsv|json");
    ratio->add_option("--author", ratio_author, "Author name")->required();
    ratio->add_option("--lexicon", ratio_lexicon, "Lexicon file, one word per line")
        ->required();
    ratio->callback([&] {
        auto poems = load(ratio_opts);
        auto lexicon = ts::load_lexicon(ratio_lexicon);
        auto result = ts::usage_ratio(poems, ts::normalize_text(ratio_author), lexicon);
        emit(ts::render_ratio(result, table_format(ratio_opts)), ratio_opts);
    });

    // whitetable
    CommonOpts white_opts;
    std::string white_authors;
    std::string white_lexicon;
    std::string white_ratio_b;
    CLI::App* whitetable = app.add_subcommand(
        "whitetable", "Per-author usage matrix for a word list, with ratio rows");
    add_common(whitetable, white_opts, "tsv|json");
    whitetable->add_option("--authors", white_authors, "Author list file, one per line")
        ->required();
    whitetable->add_option("--lexicon", white_lexicon, "Word list file")->required();
    whitetable->add_option("--ratio-b", white_ratio_b,
                           "Second lexicon for an extra ratio row");
    whitetable->callback([&] {
        auto poems = load(white_opts);
        auto authors = read_name_list(white_authors);
        if (authors.empty()) throw ts::DataError("author list is empty: " + white_authors);
        auto lexicon = ts::load_lexicon(white_lexicon);
        auto matrix = ts::white_word_matrix(poems, authors, lexicon.words);
        std::vector<ts::UsageRatio> ratio_a;
        for (const std::string& author : authors)
            ratio_a.push_back(ts::usage_ratio(poems, author, lexicon));
        std::vector<ts::UsageRatio> ratio_b;
        if (!white_ratio_b.empty()) {
            auto lexicon_b = ts::load_lexicon(white_ratio_b);
            for (const std::string& author : authors)
                ratio_b.push_back(ts::usage_ratio(poems, author, lexicon_b));
        }
        emit(ts::render_white_matrix(matrix, ratio_a, ratio_b, table_format(white_opts)),
             white_opts);
    });

    // colloc
    CommonOpts colloc_opts;
    std::string colloc_word;
    int colloc_window = 30;
    std::size_t colloc_top = 20;
    int colloc_len = 2;
    std::string colloc_lexicon;
    bool colloc_per_poem = false;
    CLI::App* colloc =
        app.add_subcommand("colloc", "Words co-occurring with a target within a window");
    add_common(colloc, colloc_opts, "tsv|json");
    colloc->add_option("--word", colloc_word, "Target word")->required();
    colloc->add_option("--window", colloc_window, "Maximum characters between the words")
        ->check(CLI::PositiveNumber);
    colloc->add_option("--top", colloc_top, "Number of rows to keep");
    colloc->add_option("--len", colloc_len, "Candidate word length")->check(CLI::Range(1, 8));
    colloc->add_option("--lexicon", colloc_lexicon,
                       "Restrict candidates to this word list");
    colloc->add_flag("--per-poem", colloc_per_poem,
                     "Count poems containing a pair instead of occurrence pairs");
    colloc->callback([&] {
        auto poems = load(colloc_opts);
        ts::CorpusIndex index(poems);
        std::u32string target = ts::normalize_to_codepoints(colloc_word);
        if (target.empty()) throw std::invalid_argument("--word expects a non-empty word");
        std::optional<ts::Lexicon> candidates;
        if (!colloc_lexicon.empty()) candidates = ts::load_lexicon(colloc_lexicon);
        auto counting =
            colloc_per_poem ? ts::PairCounting::Poems : ts::PairCounting::OccurrencePairs;
        auto rows = ts::collocates(index, target, colloc_window, colloc_top, colloc_len,
                                   candidates, counting);
        emit(ts::render_collocations(rows, table_format(colloc_opts)), colloc_opts);
    });

    // couplets
    CommonOpts couplets_opts;
    std::string couplets_poem;
    CLI::App* couplets = app.add_subcommand("couplets", "Couplets extracted from poems");
    add_common(couplets, couplets_opts, "tsv|json");
    couplets->add_option("--poem", couplets_poem, "Only the poem with this id");
    couplets->callback([&] {
        auto poems = load(couplets_opts);
        std::vector<ts::Couplet> rows;
        bool found = couplets_poem.empty();
        for (const ts::Poem& poem : poems) {
            if (!couplets_poem.empty() && poem.id != couplets_poem) continue;
            found = true;
            auto extracted = ts::extract_couplets(poem);
            rows.insert(rows.end(), extracted.begin(), extracted.end());
        }
        if (!found) throw ts::DataError("no poem with id: " + couplets_poem);
        emit(ts::render_couplets(rows, table_format(couplets_opts)), couplets_opts);
    });

    // colors
    CommonOpts colors_opts;
    std::string colors_palette;
    std::string colors_confidence = "all";
    std::size_t colors_top = 0;
    CLI::App* colors =
        app.add_subcommand("colors", "Color pairing matrix over aligned couplet positions");
    add_common(colors, colors_opts, "tsv|json");
    colors->add_option("--palette", colors_palette, "Palette file, one color per line")
        ->required();
    colors->add_option("--confidence", colors_confidence, "Couplet classes to include")
        ->check(CLI::IsMember({"all", "structural", "heuristic"}));
    colors->add_option("--top", colors_top, "Rows per column in the table (0 = all)");
    colors->callback([&] {
        auto poems = load(colors_opts);
        auto palette = ts::load_palette(colors_palette);
        auto matrix = ts::color_matrix(poems, palette, parse_confidence(colors_confidence));
        emit(ts::render_color_matrix(matrix, table_format(colors_opts), colors_top),
             colors_opts);
    });

    // antithesis
    CommonOpts anti_opts;
    std::string anti_pair;
    std::string anti_confidence = "all";
    CLI::App* antithesis =
        app.add_subcommand("antithesis", "Couplets pairing two given words at one offset");
    add_common(antithesis, anti_opts, "tsv|json");
    antithesis->add_option("--pair", anti_pair, "Word pair, e.g. 白髮,青雲")->required();
    antithesis->add_option("--confidence", anti_confidence, "Couplet classes to include")
        ->check(CLI::IsMember({"all", "structural", "heuristic"}));
    antithesis->callback([&] {
        auto poems = load(anti_opts);
        auto [word_a, word_b] = parse_word_pair(anti_pair);
        if (word_a.size() != word_b.size())
            throw std::invalid_argument("--pair expects words of equal length");
        auto rows = ts::antithesis_instances(poems, word_a, word_b,
                                             static_cast<int>(word_a.size()),
                                             parse_confidence(anti_confidence));
        emit(ts::render_antithesis(rows, table_format(anti_opts)), anti_opts);
    });

    // network
    CommonOpts net_opts;
    net_opts.format = "dot";
    std::string net_gazetteer;
    int net_min_len = 2;
    bool net_edges = false;
    CLI::App* network =
        app.add_subcommand("network", "Person-mention graph from titles and bodies");
    add_common(network, net_opts, "dot|graphml|csv; tsv|json with --edges");
    network->add_option("--gazetteer", net_gazetteer, "Person gazetteer TSV")->required();
    network->add_option("--min-len", net_min_len, "Shortest name form to match")
        ->check(CLI::PositiveNumber);
    network->add_flag("--edges", net_edges,
                      "Emit one row per mention instead of the collapsed graph");
    network->callback([&] {
        auto poems = load(net_opts);
        auto gazetteer = ts::load_gazetteer(net_gazetteer);
        auto edges = ts::find_mentions(poems, gazetteer, net_min_len);
        ts::flag_anachronisms(edges, gazetteer, gazetteer);
        if (net_edges) {
            if (net_opts.format == "dot") net_opts.format = "tsv";
            emit(ts::render_mentions(edges, table_format(net_opts)), net_opts);
            return;
        }
        auto graph = ts::build_graph(edges);
        emit(ts::export_graph(graph, ts::parse_graph_format(net_opts.format)), net_opts);
    });

    // verbs
    CommonOpts verbs_opts;
    std::string verbs_gazetteer;
    int verbs_min_len = 2;
    CLI::App* verbs =
        app.add_subcommand("verbs", "Characters immediately preceding person mentions");
    add_common(verbs, verbs_opts, "tsv|json");
    verbs->add_option("--gazetteer", verbs_gazetteer, "Person gazetteer TSV")->required();
    verbs->add_option("--min-len", verbs_min_len, "Shortest name form to match")
        ->check(CLI::PositiveNumber);
    verbs->callback([&] {
        auto poems = load(verbs_opts);
        auto gazetteer = ts::load_gazetteer(verbs_gazetteer);
        auto edges = ts::find_mentions(poems, gazetteer, verbs_min_len);
        auto rows = ts::verb_contexts(poems, gazetteer, edges);
        emit(ts::render_verbs(rows, table_format(verbs_opts)), verbs_opts);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const ts::DataError& e) {
        std::cerr << "tangscope: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "tangscope: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "tangscope: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
