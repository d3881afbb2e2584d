#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace sortscope {

/// One user's profile snapshot in one time period. The atomic input record.
struct UserSnapshot {
    std::string user_id;
    std::string bio;
    std::uint64_t follower_count = 0;
    std::uint64_t tweet_count = 0;
    std::string lang;
};

struct IngestReport {
    std::uint64_t accepted = 0;
    std::uint64_t dropped_empty_bio = 0;
    std::uint64_t dropped_language = 0;
    std::uint64_t malformed = 0;

    std::uint64_t total() const {
        return accepted + dropped_empty_bio + dropped_language + malformed;
    }
};

/// All accepted snapshots of one period, in input order. Immutable after
/// load; safe to share read-only across threads.
struct PeriodCorpus {
    std::string period;
    std::vector<UserSnapshot> records;
    IngestReport ingest_report;
};

enum class InputFormat { Jsonl, Csv };

/// Streams and validates one snapshot file into a PeriodCorpus.
///
/// Dropped records: empty/whitespace-only bios; records whose lang differs
/// from `lang_filter` when one is given. Malformed records (bad JSON/CSV,
/// missing or mistyped fields, empty user_id, period not matching `period`,
/// duplicate user_id after the first occurrence, blank lines) are skipped
/// and counted. Bio text is kept byte-for-byte; normalization happens at
/// segmentation time.
///
/// Throws IoError when the file cannot be read, FormatError when more than
/// 10% of the lines read are malformed (wrong-input-file guard).
PeriodCorpus load_corpus(const std::filesystem::path& path, const std::string& period,
                         const std::optional<std::string>& lang_filter,
                         InputFormat format = InputFormat::Jsonl);

struct CorpusSummary {
    std::uint64_t n_users = 0;
    std::optional<double> follower_mean, follower_std, follower_median;
    std::optional<double> tweet_mean, tweet_std, tweet_median;
};

/// Means use all accepted records, stds are sample (n-1, null when n < 2),
/// medians take the lower-middle element for even n.
CorpusSummary corpus_summary(const PeriodCorpus& corpus);

/// Versioned single-file cache written by `ingest` and read by every later
/// stage. Header line carries the period and ingest report; each record is
/// one compact JSON array line.
void write_corpus_cache(const PeriodCorpus& corpus, const std::filesystem::path& path);
PeriodCorpus read_corpus_cache(const std::filesystem::path& path);

}  // namespace sortscope
