#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "sortscope/corpus.hpp"

namespace sortscope {

/// Bio segmentation grammar. Segments split on the delimiter characters, on
/// any emoji codepoint, and on the standalone separator tokens; each segment
/// is compatibility-folded, lowercased, edge-punctuation-stripped (hashtags
/// normalize to their word), and whitespace-collapsed. Segments over the
/// token or codepoint caps are discarded.
struct SegmentationOptions {
    std::u32string delimiters = U"|•·◦▪‖/\\;,~★✨\n\t";
    std::vector<std::string> separator_tokens = {"and", "&", "+"};
    std::size_t max_tokens = 6;
    std::size_t max_chars = 60;
};

/// Splits a bio into candidate identifier phrases, in bio order, duplicates
/// kept. Total function: never throws on any input text.
std::vector<std::string> segment_bio(std::string_view bio,
                                     const SegmentationOptions& opts = {});

/// Deduplicated, sorted phrase set of one bio.
std::vector<std::string> phrase_set(std::string_view bio,
                                    const SegmentationOptions& opts = {});

struct PhraseCountTable {
    std::string period;
    std::unordered_map<std::string, std::uint64_t> counts;  // phrase -> distinct users
};

/// Distinct-user counts per phrase: a phrase appearing twice in one bio
/// counts once. Sharded over `threads` and merged additively, so the result
/// is independent of the thread count.
PhraseCountTable count_phrases(const PeriodCorpus& corpus,
                               const SegmentationOptions& opts = {}, int threads = 1);

/// Exactly the phrases with count >= min_users, sorted.
std::vector<std::string> threshold_phrases(const PhraseCountTable& table,
                                           std::uint64_t min_users);

/// Writes `phrase,period,user_count` rows (sorted by phrase) for phrases
/// meeting the threshold.
void write_phrase_counts(const PhraseCountTable& table, std::uint64_t min_users,
                         const std::filesystem::path& path);

}  // namespace sortscope
