#pragma once

#include "tangscope/antithesis.hpp"
#include "tangscope/collocation.hpp"
#include "tangscope/corpus.hpp"
#include "tangscope/lexstats.hpp"
#include "tangscope/socialnet.hpp"
#include "tangscope/style.hpp"

#include <optional>
#include <string>

namespace tangscope {

enum class TableFormat { Tsv, Json };

TableFormat parse_table_format(std::string_view name);

// All renderers produce byte-deterministic UTF-8 output: rows are fully
// ordered and no locale-dependent formatting is used.

std::string render_stats(const CorpusStats& stats, TableFormat format);
std::string render_ranking(const std::vector<AuthorWorks>& ranking, TableFormat format);
std::string render_grams(const std::vector<std::pair<std::u32string, std::uint64_t>>& grams,
                         TableFormat format);
std::string render_ratio(const UsageRatio& ratio, TableFormat format);
std::string render_white_matrix(const WhiteMatrix& matrix,
                                const std::vector<UsageRatio>& ratio_a,
                                const std::vector<UsageRatio>& ratio_b, TableFormat format);
std::string render_collocations(const std::vector<CollocationRecord>& records,
                                TableFormat format);
std::string render_couplets(const std::vector<Couplet>& couplets, TableFormat format);
std::string render_color_matrix(const ColorMatrix& matrix, TableFormat format,
                                std::size_t top_rows = 0);
std::string render_antithesis(const std::vector<AntithesisInstance>& instances,
                              TableFormat format);
std::string render_mentions(const std::vector<MentionEdge>& edges, TableFormat format);
std::string render_verbs(const std::vector<VerbContext>& contexts, TableFormat format);

}  // namespace tangscope
