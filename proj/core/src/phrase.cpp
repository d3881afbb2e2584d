#include "sortscope/phrase.hpp"

#include <algorithm>
#include <fstream>
#include <thread>
#include <unordered_set>

#include "sortscope/csv.hpp"
#include "sortscope/errors.hpp"
#include "sortscope/text.hpp"

namespace sortscope {

namespace {

std::vector<char32_t> normalize_codepoints(std::string_view bio) {
    std::vector<char32_t> cps;
    cps.reserve(bio.size());
    std::size_t pos = 0;
    std::string expansion;
    while (pos < bio.size()) {
        char32_t cp = text::compat_fold(text::decode_utf8(bio, pos), expansion);
        if (!expansion.empty()) {
            for (char c : expansion) cps.push_back(static_cast<char32_t>(c));
        } else if (cp != 0) {
            cps.push_back(text::fold_lower(cp));
        }
    }
    return cps;
}

// Trims edge punctuation and edge whitespace; collapses interior whitespace
// runs to single spaces. Returns empty when nothing survives.
std::vector<char32_t> tidy_segment(const std::vector<char32_t>& seg) {
    std::size_t b = 0, e = seg.size();
    auto trimmable = [](char32_t cp) {
        return text::is_space(cp) || text::is_edge_punctuation(cp);
    };
    while (b < e && trimmable(seg[b])) ++b;
    while (e > b && trimmable(seg[e - 1])) --e;
    std::vector<char32_t> out;
    out.reserve(e - b);
    bool in_space = false;
    for (std::size_t i = b; i < e; ++i) {
        if (text::is_space(seg[i])) {
            in_space = true;
            continue;
        }
        if (in_space && !out.empty()) out.push_back(U' ');
        in_space = false;
        out.push_back(seg[i]);
    }
    return out;
}

}  // namespace

std::vector<std::string> segment_bio(std::string_view bio, const SegmentationOptions& opts) {
    std::vector<std::string> phrases;
    if (bio.empty()) return phrases;

    const std::vector<char32_t> cps = normalize_codepoints(bio);

    auto is_delimiter = [&](char32_t cp) {
        return opts.delimiters.find(static_cast<char32_t>(cp)) != std::u32string::npos ||
               text::is_emoji(cp);
    };

    // Pre-decode separator tokens once.
    std::vector<std::vector<char32_t>> separators;
    separators.reserve(opts.separator_tokens.size());
    for (const auto& s : opts.separator_tokens) separators.push_back(text::to_codepoints(s));

    auto flush_phrase = [&](const std::vector<char32_t>& raw) {
        std::vector<char32_t> tidy = tidy_segment(raw);
        if (tidy.empty()) return;
        if (tidy.size() > opts.max_chars) return;
        std::size_t tokens = 1;
        for (char32_t cp : tidy) {
            if (cp == U' ') ++tokens;
        }
        if (tokens > opts.max_tokens) return;
        phrases.push_back(text::from_codepoints(tidy));
    };

    // First pass: hard delimiters and emoji. Second pass within each chunk:
    // standalone separator tokens split at whitespace-token boundaries.
    std::vector<char32_t> chunk;
    auto flush_chunk = [&]() {
        if (chunk.empty()) return;
        std::vector<std::vector<char32_t>> tokens;
        std::vector<char32_t> tok;
        for (char32_t cp : chunk) {
            if (text::is_space(cp)) {
                if (!tok.empty()) tokens.push_back(std::move(tok)), tok.clear();
            } else {
                tok.push_back(cp);
            }
        }
        if (!tok.empty()) tokens.push_back(std::move(tok));

        std::vector<char32_t> piece;
        for (const auto& t : tokens) {
            bool is_sep = std::any_of(separators.begin(), separators.end(),
                                      [&](const auto& s) { return s == t; });
            if (is_sep) {
                flush_phrase(piece);
                piece.clear();
            } else {
                if (!piece.empty()) piece.push_back(U' ');
                piece.insert(piece.end(), t.begin(), t.end());
            }
        }
        flush_phrase(piece);
        chunk.clear();
    };

    for (char32_t cp : cps) {
        if (is_delimiter(cp)) {
            flush_chunk();
        } else {
            chunk.push_back(cp);
        }
    }
    flush_chunk();
    return phrases;
}

std::vector<std::string> phrase_set(std::string_view bio, const SegmentationOptions& opts) {
    std::vector<std::string> v = segment_bio(bio, opts);
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

PhraseCountTable count_phrases(const PeriodCorpus& corpus, const SegmentationOptions& opts,
                               int threads) {
    PhraseCountTable table;
    table.period = corpus.period;
    if (corpus.records.empty()) return table;

    int n_shards = std::max(1, threads);
    if (static_cast<std::size_t>(n_shards) > corpus.records.size()) {
        n_shards = static_cast<int>(corpus.records.size());
    }
    std::vector<std::unordered_map<std::string, std::uint64_t>> shard_counts(n_shards);

    auto work = [&](int shard) {
        auto& local = shard_counts[shard];
        std::size_t begin = corpus.records.size() * shard / n_shards;
        std::size_t end = corpus.records.size() * (shard + 1) / n_shards;
        for (std::size_t i = begin; i < end; ++i) {
            for (auto& p : phrase_set(corpus.records[i].bio, opts)) ++local[std::move(p)];
        }
    };

    if (n_shards == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_shards);
        for (int s = 0; s < n_shards; ++s) pool.emplace_back(work, s);
        for (auto& t : pool) t.join();
    }

    table.counts = std::move(shard_counts[0]);
    for (int s = 1; s < n_shards; ++s) {
        for (auto& [phrase, c] : shard_counts[s]) table.counts[phrase] += c;
    }
    return table;
}

std::vector<std::string> threshold_phrases(const PhraseCountTable& table,
                                           std::uint64_t min_users) {
    if (min_users < 1) throw ParameterError("threshold_phrases: min_users must be >= 1");
    std::vector<std::string> out;
    for (const auto& [phrase, c] : table.counts) {
        if (c >= min_users) out.push_back(phrase);
    }
    std::sort(out.begin(), out.end());
    return out;
}

void write_phrase_counts(const PhraseCountTable& table, std::uint64_t min_users,
                         const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write phrase counts: " + path.string());
    csv::write_row(out, {"phrase", "period", "user_count"});
    for (const auto& phrase : threshold_phrases(table, min_users)) {
        csv::write_row(out, {phrase, table.period, std::to_string(table.counts.at(phrase))});
    }
    if (!out) throw IoError("write failed: " + path.string());
}

}  // namespace sortscope
