#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bcast/extraction.hpp"
#include "bcast/families.hpp"
#include "bcast/graph.hpp"

namespace bcast {

/// Nonnegative fraction in lowest terms.
struct Fraction {
    long long num = 0;
    long long den = 1;

    [[nodiscard]] std::string str() const;
    friend bool operator==(const Fraction&, const Fraction&) = default;
};

struct BoundCheck {
    Fraction bound;  // 4a - 4 min{1, 2a/(f_max+2)}
    bool holds = false;
    bool equal = false;
};

/// Evaluates alpha_b <= 4 alpha - 4 min{1, 2 alpha / (f_max + 2)} in exact
/// integer arithmetic. Requires alpha, f_max >= 1.
[[nodiscard]] BoundCheck check_bound(long long alpha, long long alpha_b, long long f_max);

struct FmaxBound {
    int f_max = 0;
    BoundCheck check;
};

struct ExtractionSummary {
    std::string which;
    int set_size = 0;
    long long weight = 0;
    bool independent = false;
    bool case_bound = false;
    bool quarter_bound = false;
};

struct RecognizedFamily {
    Family family;
    int k;
    int l;
    int r_size;
};

struct VerificationRecord {
    std::string id;
    std::string graph6;
    int n = 0;
    int diameter = 0;
    int alpha = 0;
    int alpha_b = 0;
    std::vector<int> optimal_fmax;
    int optimal_support_count = 0;
    bool degenerate = false;     // single vertex: f(x) <= ecc(x) = 0 forces the zero broadcast
    bool trivial_case = false;   // diameter <= 2 and alpha <= 2
    std::vector<FmaxBound> bounds;
    bool holds = true;
    bool equality = false;
    std::optional<RecognizedFamily> recognized;
    std::optional<ExtractionSummary> extraction;
    bool k0_anomaly = false;
    bool violation = false;  // bound, sandwich, trivial-case or extraction failure
    bool mismatch = false;   // equality and recognizer verdict disagree
    std::vector<std::string> notes;
    std::optional<std::string> error;
};

struct VerifyOptions {
    bool allow_k0 = false;
};

/// Solves g exactly and checks every claim that applies to it. Throws
/// DisconnectedGraphError for disconnected input.
[[nodiscard]] VerificationRecord verify_graph(const Graph& g, VerifyOptions options = {});

struct EnumerateSource {
    int max_n = 7;
    int min_n = 1;
    bool allow_n8 = false;
    std::string checkpoint;  // optional progress file, read on start and rewritten per batch
};

/// Graph i (0-based) is random_connected(n, p, seed + i).
struct RandomSource {
    int n = 6;
    double p = 0.5;
    std::uint64_t seed = 0;
    int count = 1;
};

struct FileSource {
    std::string path;
};

using CampaignSource = std::variant<EnumerateSource, RandomSource, FileSource>;

struct CampaignOptions {
    VerifyOptions verify;
    int jobs = 0;
    std::size_t batch_size = 4096;
};

struct CampaignSummary {
    std::size_t graphs = 0;
    std::size_t holds = 0;
    std::size_t equal = 0;
    std::size_t trivial = 0;
    std::size_t degenerate = 0;
    std::size_t k0_anomalies = 0;
    std::size_t violations = 0;
    std::size_t mismatches = 0;
    std::size_t errors = 0;

    [[nodiscard]] bool ok() const { return violations == 0 && mismatches == 0; }
};

/// Verifies every graph from the source on a worker pool and hands records to
/// `sink` in source order.
CampaignSummary run_campaign(const CampaignSource& source, const CampaignOptions& options,
                             const std::function<void(const VerificationRecord&)>& sink);

// Reports -------------------------------------------------------------------

[[nodiscard]] std::string record_to_json(const VerificationRecord& r);
[[nodiscard]] std::string summary_to_json(const CampaignSummary& s);
[[nodiscard]] std::string csv_header();
[[nodiscard]] std::string record_to_csv(const VerificationRecord& r);
[[nodiscard]] std::string certificate_to_json(const ExtractionCertificate& c);
[[nodiscard]] std::string family_params_to_json(const FamilyParams& p);

}  // namespace bcast
