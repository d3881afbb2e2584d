#include "sortscope/corpus.hpp"

#include <fstream>
#include <unordered_set>

#include <json.hpp>

#include "sortscope/csv.hpp"
#include "sortscope/errors.hpp"
#include "sortscope/stats.hpp"
#include "sortscope/text.hpp"

namespace sortscope {

namespace {

bool is_blank(const std::string& s) {
    std::size_t pos = 0;
    while (pos < s.size()) {
        if (!text::is_space(text::decode_utf8(s, pos))) return false;
    }
    return true;
}

// Field extraction shared by the JSONL and CSV paths. Returns false when the
// record is malformed.
struct RawRecord {
    std::string user_id, period, bio, lang;
    std::uint64_t followers = 0, statuses = 0;
};

bool parse_jsonl_line(const std::string& line, RawRecord& out) {
    nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) return false;
    auto* uid = j.find("user_id") != j.end() ? &j["user_id"] : nullptr;
    if (!uid || !uid->is_string()) return false;
    auto get_str = [&](const char* key, std::string& dst) {
        auto it = j.find(key);
        if (it == j.end() || !it->is_string()) return false;
        dst = it->get<std::string>();
        return true;
    };
    auto get_count = [&](const char* key, std::uint64_t& dst) {
        auto it = j.find(key);
        if (it == j.end() || !it->is_number_integer()) return false;
        if (it->is_number_unsigned()) {
            dst = it->get<std::uint64_t>();
            return true;
        }
        auto v = it->get<std::int64_t>();
        if (v < 0) return false;
        dst = static_cast<std::uint64_t>(v);
        return true;
    };
    out.user_id = uid->get<std::string>();
    return get_str("period", out.period) && get_str("bio", out.bio) &&
           get_str("lang", out.lang) && get_count("followers_count", out.followers) &&
           get_count("statuses_count", out.statuses);
}

class CsvRecordSource {
public:
    explicit CsvRecordSource(std::istream& in) : reader_(in) {
        std::vector<std::string> header;
        if (!reader_.next(header)) {
            done_ = true;
            return;
        }
        for (std::size_t i = 0; i < header.size(); ++i) {
            if (header[i] == "user_id") col_user_ = i;
            else if (header[i] == "period") col_period_ = i;
            else if (header[i] == "bio") col_bio_ = i;
            else if (header[i] == "followers_count") col_followers_ = i;
            else if (header[i] == "statuses_count") col_statuses_ = i;
            else if (header[i] == "lang") col_lang_ = i;
        }
        if (col_user_ == kMissing || col_period_ == kMissing || col_bio_ == kMissing ||
            col_followers_ == kMissing || col_statuses_ == kMissing || col_lang_ == kMissing) {
            throw FormatError("csv input: header must name user_id, period, bio, "
                              "followers_count, statuses_count, lang");
        }
    }

    // Returns 0 at end, 1 for a parsed record, -1 for a malformed record.
    int next(RawRecord& out) {
        if (done_) return 0;
        std::vector<std::string> f;
        if (!reader_.next(f)) return 0;
        if (f.size() == 1 && f[0].empty()) return -1;  // blank line
        std::size_t need = std::max({col_user_, col_period_, col_bio_, col_followers_,
                                     col_statuses_, col_lang_}) + 1;
        if (f.size() < need) return -1;
        out.user_id = f[col_user_];
        out.period = f[col_period_];
        out.bio = f[col_bio_];
        out.lang = f[col_lang_];
        if (!parse_count(f[col_followers_], out.followers)) return -1;
        if (!parse_count(f[col_statuses_], out.statuses)) return -1;
        return 1;
    }

private:
    static bool parse_count(const std::string& s, std::uint64_t& dst) {
        if (s.empty() || s.size() > 19) return false;
        std::uint64_t v = 0;
        for (char c : s) {
            if (c < '0' || c > '9') return false;
            v = v * 10 + static_cast<std::uint64_t>(c - '0');
        }
        dst = v;
        return true;
    }

    static constexpr std::size_t kMissing = static_cast<std::size_t>(-1);
    csv::Reader reader_;
    bool done_ = false;
    std::size_t col_user_ = kMissing, col_period_ = kMissing, col_bio_ = kMissing;
    std::size_t col_followers_ = kMissing, col_statuses_ = kMissing, col_lang_ = kMissing;
};

}  // namespace

PeriodCorpus load_corpus(const std::filesystem::path& path, const std::string& period,
                         const std::optional<std::string>& lang_filter, InputFormat format) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open input file: " + path.string());

    PeriodCorpus corpus;
    corpus.period = period;
    std::unordered_set<std::string> seen_ids;
    std::uint64_t lines_read = 0;

    auto consume = [&](bool parsed, RawRecord& rec) {
        ++lines_read;
        if (!parsed || rec.user_id.empty() || rec.period != period) {
            ++corpus.ingest_report.malformed;
            return;
        }
        if (!seen_ids.insert(rec.user_id).second) {
            ++corpus.ingest_report.malformed;  // duplicate user_id: keep first
            return;
        }
        if (is_blank(rec.bio)) {
            ++corpus.ingest_report.dropped_empty_bio;
            return;
        }
        if (lang_filter && rec.lang != *lang_filter) {
            ++corpus.ingest_report.dropped_language;
            return;
        }
        ++corpus.ingest_report.accepted;
        corpus.records.push_back(UserSnapshot{std::move(rec.user_id), std::move(rec.bio),
                                              rec.followers, rec.statuses,
                                              std::move(rec.lang)});
    };

    if (format == InputFormat::Jsonl) {
        std::string line;
        RawRecord rec;
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            rec = RawRecord{};
            consume(!line.empty() && parse_jsonl_line(line, rec), rec);
        }
    } else {
        CsvRecordSource source(in);
        RawRecord rec;
        int r;
        while ((r = source.next(rec)) != 0) {
            consume(r == 1, rec);
            rec = RawRecord{};
        }
    }

    if (lines_read > 0 &&
        static_cast<double>(corpus.ingest_report.malformed) >
            0.10 * static_cast<double>(lines_read)) {
        throw FormatError("more than 10% of lines malformed (" +
                          std::to_string(corpus.ingest_report.malformed) + " of " +
                          std::to_string(lines_read) + ") in " + path.string() +
                          "; wrong input file?");
    }
    return corpus;
}

CorpusSummary corpus_summary(const PeriodCorpus& corpus) {
    CorpusSummary s;
    s.n_users = corpus.records.size();
    if (s.n_users == 0) return s;

    std::vector<double> followers, tweets;
    followers.reserve(corpus.records.size());
    tweets.reserve(corpus.records.size());
    for (const auto& r : corpus.records) {
        followers.push_back(static_cast<double>(r.follower_count));
        tweets.push_back(static_cast<double>(r.tweet_count));
    }
    s.follower_mean = stats::mean(followers);
    s.follower_std = stats::sample_std(followers);
    s.follower_median = stats::median_lower(followers);
    s.tweet_mean = stats::mean(tweets);
    s.tweet_std = stats::sample_std(tweets);
    s.tweet_median = stats::median_lower(tweets);
    return s;
}

void write_corpus_cache(const PeriodCorpus& corpus, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write corpus cache: " + path.string());
    nlohmann::json header = {
        {"format", "sortscope-corpus"},
        {"version", 1},
        {"period", corpus.period},
        {"report",
         {{"accepted", corpus.ingest_report.accepted},
          {"dropped_empty_bio", corpus.ingest_report.dropped_empty_bio},
          {"dropped_language", corpus.ingest_report.dropped_language},
          {"malformed", corpus.ingest_report.malformed}}},
    };
    out << header.dump() << '\n';
    for (const auto& r : corpus.records) {
        nlohmann::json row =
            nlohmann::json::array({r.user_id, r.bio, r.follower_count, r.tweet_count, r.lang});
        out << row.dump() << '\n';
    }
    if (!out) throw IoError("write failed: " + path.string());
}

PeriodCorpus read_corpus_cache(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open corpus cache: " + path.string());
    std::string line;
    if (!std::getline(in, line)) throw FormatError("empty corpus cache: " + path.string());
    nlohmann::json header = nlohmann::json::parse(line, nullptr, false);
    if (header.is_discarded() || header.value("format", "") != "sortscope-corpus" ||
        header.value("version", 0) != 1) {
        throw FormatError("not a sortscope corpus cache: " + path.string());
    }
    PeriodCorpus corpus;
    corpus.period = header.at("period").get<std::string>();
    const auto& rep = header.at("report");
    corpus.ingest_report.accepted = rep.at("accepted").get<std::uint64_t>();
    corpus.ingest_report.dropped_empty_bio = rep.at("dropped_empty_bio").get<std::uint64_t>();
    corpus.ingest_report.dropped_language = rep.at("dropped_language").get<std::uint64_t>();
    corpus.ingest_report.malformed = rep.at("malformed").get<std::uint64_t>();
    corpus.records.reserve(corpus.ingest_report.accepted);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        nlohmann::json row = nlohmann::json::parse(line, nullptr, false);
        if (row.is_discarded() || !row.is_array() || row.size() != 5) {
            throw FormatError("corrupt corpus cache record in " + path.string());
        }
        corpus.records.push_back(UserSnapshot{row[0].get<std::string>(), row[1].get<std::string>(),
                                              row[2].get<std::uint64_t>(),
                                              row[3].get<std::uint64_t>(),
                                              row[4].get<std::string>()});
    }
    if (corpus.records.size() != corpus.ingest_report.accepted) {
        throw FormatError("corpus cache record count mismatch: " + path.string());
    }
    return corpus;
}

}  // namespace sortscope
