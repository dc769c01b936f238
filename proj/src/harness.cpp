#include "bcast/harness.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>

#include "bcast/parallel.hpp"
#include "bcast/solvers.hpp"

namespace bcast {

std::string Fraction::str() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

BoundCheck check_bound(long long alpha, long long alpha_b, long long f_max) {
    BoundCheck out;
    if (2 * alpha >= f_max + 2) {
        const long long bound = 4 * alpha - 4;
        out.bound = {bound, 1};
        out.holds = alpha_b <= bound;
        out.equal = alpha_b == bound;
        return out;
    }
    // 4a - 8a/(f+2) = 4a f / (f+2)
    const long long num = 4 * alpha * f_max;
    const long long den = f_max + 2;
    const long long g = std::gcd(num, den);
    out.bound = {num / g, den / g};
    out.holds = alpha_b * den <= num;
    out.equal = alpha_b * den == num;
    return out;
}

namespace {

void flag_violation(VerificationRecord& r, std::string note) {
    r.violation = true;
    r.notes.push_back(std::move(note));
}

void flag_mismatch(VerificationRecord& r, std::string note) {
    r.mismatch = true;
    r.notes.push_back(std::move(note));
}

void check_recognizer(VerificationRecord& r, const std::optional<FamilyParams>& fam) {
    bool equal_large = false;
    bool equal_small = false;
    for (const auto& b : r.bounds) {
        if (b.check.equal) {
            (b.f_max >= 4 ? equal_large : equal_small) = true;
        }
    }
    if (equal_small) {
        r.k0_anomaly = true;
        r.notes.push_back("equality with f_max < 4");
    }
    if (fam) {
        r.recognized = RecognizedFamily{fam->family, fam->k, fam->l, fam->r_size};
        if (fam->k == 0) {
            r.k0_anomaly = true;
            if (!equal_small) {
                flag_mismatch(r, "recognized as k=0 member without equality");
            }
            return;
        }
        const int expected_fmax = fam->family == Family::G0 ? 4 * fam->k : 4 * fam->k + 2;
        bool matched = std::any_of(r.bounds.begin(), r.bounds.end(),
                                   [&](const FmaxBound& b) { return b.check.equal && b.f_max == expected_fmax; });
        if (!matched) {
            flag_mismatch(r, "family member without equality at f_max=" + std::to_string(expected_fmax));
        }
    } else if (equal_large) {
        flag_mismatch(r, "equality with f_max >= 4 outside both families");
    }
}

}  // namespace

VerificationRecord verify_graph(const Graph& g, VerifyOptions options) {
    const DistanceMatrix d(g);
    VerificationRecord r;
    r.graph6 = write_graph6(g);
    r.n = g.order();
    r.diameter = d.diameter();

    const auto ind = alpha(g);
    const auto sol = alpha_b(g, d);
    r.alpha = ind.value;
    r.alpha_b = sol.value;
    r.optimal_fmax = sol.optimal_fmax;
    r.optimal_support_count = static_cast<int>(sol.supports.size());
    r.trivial_case = r.diameter <= 2 && r.alpha <= 2;

    if (r.n == 1) {
        r.degenerate = true;
        r.notes.push_back("single vertex: alpha_b = 0");
        return r;
    }

    if (r.alpha > r.alpha_b || r.alpha_b > 4 * r.alpha) {
        flag_violation(r, "alpha <= alpha_b <= 4 alpha fails");
    }

    if (r.trivial_case) {
        if (r.alpha_b != r.alpha) {
            flag_violation(r, "small-diameter case: alpha_b differs from alpha");
        }
    } else {
        for (int f_max : r.optimal_fmax) {
            FmaxBound b{f_max, check_bound(r.alpha, r.alpha_b, f_max)};
            r.holds = r.holds && b.check.holds;
            r.equality = r.equality || b.check.equal;
            if (!b.check.holds) {
                flag_violation(r, "bound fails at f_max=" + std::to_string(f_max));
            }
            r.bounds.push_back(b);
        }
        check_recognizer(r, recognize(g, d, {options.allow_k0}));
    }

    try {
        const auto cert = extract_independent_set(g, d, sol.witness);
        ExtractionSummary s;
        s.which = to_string(cert.which);
        s.set_size = static_cast<int>(cert.independent_set.size());
        s.weight = cert.weight;
        s.independent = is_independent(g, cert.independent_set);
        s.case_bound = cert.meets_case_bound();
        s.quarter_bound = cert.meets_quarter_bound();
        if (!s.independent || !s.case_bound || !s.quarter_bound || s.set_size > r.alpha) {
            flag_violation(r, "extraction certificate fails");
        }
        r.extraction = s;
    } catch (const ExtractionError& e) {
        flag_violation(r, std::string("extraction: ") + e.what());
    }
    return r;
}

namespace {

struct Item {
    std::string id;
    std::optional<Graph> graph;
    std::string raw;  // graph6 text when graph is not yet parsed
};

class CampaignRunner {
  public:
    CampaignRunner(const CampaignOptions& options, const std::function<void(const VerificationRecord&)>& sink)
        : options_(options), sink_(sink) {}

    void push(Item item) {
        batch_.push_back(std::move(item));
        if (batch_.size() >= options_.batch_size) {
            flush();
        }
    }

    void flush() {
        std::vector<VerificationRecord> out(batch_.size());
        parallel_for(batch_.size(), options_.jobs, [&](std::size_t i) { out[i] = process(batch_[i]); });
        for (const auto& r : out) {
            tally(r);
            sink_(r);
        }
        batch_.clear();
        if (after_flush_) {
            after_flush_();
        }
    }

    void on_flush(std::function<void()> hook) { after_flush_ = std::move(hook); }

    const CampaignSummary& summary() const { return summary_; }

  private:
    VerificationRecord process(const Item& item) const {
        VerificationRecord r;
        try {
            r = item.graph ? verify_graph(*item.graph, options_.verify)
                           : verify_graph(parse_graph6(item.raw), options_.verify);
        } catch (const std::exception& e) {
            r = VerificationRecord{};
            r.graph6 = item.graph ? write_graph6(*item.graph) : item.raw;
            r.error = e.what();
        }
        r.id = item.id;
        return r;
    }

    void tally(const VerificationRecord& r) {
        ++summary_.graphs;
        if (r.error) {
            ++summary_.errors;
            return;
        }
        summary_.holds += (r.holds && !r.violation) ? 1 : 0;
        summary_.equal += r.equality ? 1 : 0;
        summary_.trivial += r.trivial_case ? 1 : 0;
        summary_.degenerate += r.degenerate ? 1 : 0;
        summary_.k0_anomalies += r.k0_anomaly ? 1 : 0;
        summary_.violations += r.violation ? 1 : 0;
        summary_.mismatches += r.mismatch ? 1 : 0;
    }

    const CampaignOptions& options_;
    const std::function<void(const VerificationRecord&)>& sink_;
    std::vector<Item> batch_;
    CampaignSummary summary_;
    std::function<void()> after_flush_;
};

struct Checkpoint {
    int n = 0;
    std::uint64_t next_pattern = 0;
};

std::optional<Checkpoint> read_checkpoint(const std::string& path) {
    if (path.empty() || !std::filesystem::exists(path)) {
        return std::nullopt;
    }
    std::ifstream in(path);
    Checkpoint c;
    if (!(in >> c.n >> c.next_pattern)) {
        return std::nullopt;
    }
    return c;
}

void write_checkpoint(const std::string& path, const Checkpoint& c) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        out << c.n << ' ' << c.next_pattern << '\n';
    }
    std::filesystem::rename(tmp, path);
}

void run_enumerate(const EnumerateSource& src, CampaignRunner& runner) {
    auto resume = read_checkpoint(src.checkpoint);
    for (int n = std::max(1, src.min_n); n <= src.max_n; ++n) {
        std::uint64_t start = 0;
        if (resume) {
            if (n < resume->n) {
                continue;
            }
            if (n == resume->n) {
                start = resume->next_pattern;
            }
        }
        std::uint64_t next = start;
        if (!src.checkpoint.empty()) {
            runner.on_flush([&, n] { write_checkpoint(src.checkpoint, {n, next}); });
        }
        for_each_connected(
            n,
            [&](const Graph& g, std::uint64_t pattern) {
                next = pattern + 1;
                runner.push({"n" + std::to_string(n) + ":" + std::to_string(pattern), g, {}});
            },
            {src.allow_n8}, start);
        runner.flush();
        runner.on_flush({});
        if (!src.checkpoint.empty()) {
            write_checkpoint(src.checkpoint, {n + 1, 0});
        }
    }
}

}  // namespace

CampaignSummary run_campaign(const CampaignSource& source, const CampaignOptions& options,
                             const std::function<void(const VerificationRecord&)>& sink) {
    CampaignRunner runner(options, sink);
    if (const auto* e = std::get_if<EnumerateSource>(&source)) {
        run_enumerate(*e, runner);
    } else if (const auto* r = std::get_if<RandomSource>(&source)) {
        for (int i = 0; i < r->count; ++i) {
            runner.push({"random:" + std::to_string(i),
                         random_connected(r->n, r->p, r->seed + static_cast<std::uint64_t>(i)), {}});
        }
    } else if (const auto* f = std::get_if<FileSource>(&source)) {
        std::ifstream in(f->path);
        if (!in) {
            VerificationRecord rec;
            rec.id = f->path;
            rec.error = "cannot open " + f->path;
            CampaignSummary s;
            s.graphs = 1;
            s.errors = 1;
            sink(rec);
            return s;
        }
        std::string line;
        for (int lineno = 1; std::getline(in, line); ++lineno) {
            if (!line.empty() && line.back() == '\r') {
                line.pop_back();
            }
            if (line.empty()) {
                continue;
            }
            runner.push({f->path + ":" + std::to_string(lineno), std::nullopt, line});
        }
    }
    runner.flush();
    return runner.summary();
}

}  // namespace bcast
