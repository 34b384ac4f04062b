#include "walk_lab.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <thread>

#include <boost/math/distributions/chi_squared.hpp>

namespace ordwalk {

namespace {

std::string format_param(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

double parse_param(const std::string& tok) {
    size_t pos = 0;
    double value = 0.0;
    try {
        value = std::stod(tok, &pos);
    } catch (const std::exception&) {
        fail(ErrorCode::ParseError, "bad distribution parameter: '" + tok + "'");
    }
    if (pos != tok.size())
        fail(ErrorCode::ParseError, "bad distribution parameter: '" + tok + "'");
    if (!std::isfinite(value))
        fail(ErrorCode::InvalidArgument, "distribution parameter must be finite");
    return value;
}

} // namespace

DistSpec DistSpec::parse(const std::string& text) {
    const size_t colon = text.find(':');
    if (colon == std::string::npos)
        fail(ErrorCode::ParseError, "distribution spec must look like kind:param,param");
    const std::string kind = text.substr(0, colon);
    std::vector<double> params;
    std::string cur;
    for (char c : text.substr(colon + 1)) {
        if (c == ',') {
            params.push_back(parse_param(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    params.push_back(parse_param(cur));

    const auto need = [&](size_t count) {
        if (params.size() != count)
            fail(ErrorCode::ParseError,
                 kind + " takes " + std::to_string(count) + " parameter(s)");
    };
    DistSpec d;
    if (kind == "uniform") {
        need(2);
        d = {DistKind::Uniform, params[0], params[1]};
        if (!(d.p1 < d.p2)) fail(ErrorCode::InvalidArgument, "uniform needs lo < hi");
    } else if (kind == "gaussian") {
        need(2);
        d = {DistKind::Gaussian, params[0], params[1]};
        if (!(d.p2 > 0)) fail(ErrorCode::InvalidArgument, "gaussian needs sd > 0");
    } else if (kind == "exponential") {
        need(1);
        d = {DistKind::Exponential, params[0], 0.0};
        if (!(d.p1 > 0)) fail(ErrorCode::InvalidArgument, "exponential needs rate > 0");
    } else if (kind == "cauchy") {
        need(2);
        d = {DistKind::Cauchy, params[0], params[1]};
        if (!(d.p2 > 0)) fail(ErrorCode::InvalidArgument, "cauchy needs scale > 0");
    } else if (kind == "lognormal") {
        need(2);
        d = {DistKind::Lognormal, params[0], params[1]};
        if (!(d.p2 > 0)) fail(ErrorCode::InvalidArgument, "lognormal needs sigma > 0");
    } else if (kind == "shifted-uniform") {
        need(2);
        d = {DistKind::ShiftedUniform, params[0], params[1]};
        if (!(0 < d.p1 && d.p1 < d.p2))
            fail(ErrorCode::InvalidArgument, "shifted-uniform needs 0 < lo < hi");
    } else {
        fail(ErrorCode::ParseError, "unknown distribution kind: '" + kind + "'");
    }
    return d;
}

std::string DistSpec::text() const {
    switch (kind) {
        case DistKind::Uniform: return "uniform:" + format_param(p1) + "," + format_param(p2);
        case DistKind::Gaussian: return "gaussian:" + format_param(p1) + "," + format_param(p2);
        case DistKind::Exponential: return "exponential:" + format_param(p1);
        case DistKind::Cauchy: return "cauchy:" + format_param(p1) + "," + format_param(p2);
        case DistKind::Lognormal: return "lognormal:" + format_param(p1) + "," + format_param(p2);
        case DistKind::ShiftedUniform:
            return "shifted-uniform:" + format_param(p1) + "," + format_param(p2);
    }
    fail(ErrorCode::Internal, "unreachable");
}

double sample_step(const DistSpec& dist, PhiloxStream& rng) {
    switch (dist.kind) {
        case DistKind::Uniform:
        case DistKind::ShiftedUniform:
            return dist.p1 + (dist.p2 - dist.p1) * rng.next_u01();
        case DistKind::Gaussian: {
            const double u1 = rng.next_u01();
            const double u2 = rng.next_u01();
            return dist.p1 +
                   dist.p2 * std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
        }
        case DistKind::Exponential:
            return -std::log(rng.next_u01()) / dist.p1;
        case DistKind::Cauchy:
            return dist.p1 + dist.p2 * std::tan(std::numbers::pi * (rng.next_u01() - 0.5));
        case DistKind::Lognormal: {
            const double u1 = rng.next_u01();
            const double u2 = rng.next_u01();
            const double g = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
            return std::exp(dist.p1 + dist.p2 * g);
        }
    }
    fail(ErrorCode::Internal, "unreachable");
}

Perm sample_pattern(const DistSpec& dist, int n, PhiloxStream& rng,
                    std::uint64_t* tie_rejections) {
    if (n < 1) fail(ErrorCode::InvalidArgument, "pattern length must be >= 1");
    std::vector<double> walk(static_cast<size_t>(n));
    for (int attempt = 0; attempt < 1000; ++attempt) {
        walk[0] = 0.0;
        for (int i = 1; i < n; ++i)
            walk[static_cast<size_t>(i)] = walk[static_cast<size_t>(i) - 1] + sample_step(dist, rng);
        try {
            return pattern_of_walk(walk);
        } catch (const OwError& e) {
            if (e.code() != ErrorCode::RepeatedValue) throw;
            if (tie_rejections) ++*tie_rejections;
        }
    }
    fail(ErrorCode::Internal, "tie resampling cap exceeded");
}

FrequencyTable estimate_frequencies(const DistSpec& dist, int n, std::uint64_t trials,
                                    std::uint64_t seed, int workers) {
    if (trials < 1) fail(ErrorCode::InvalidArgument, "at least one trial required");
    if (workers < 1) fail(ErrorCode::InvalidArgument, "at least one worker required");
    if (n < 1) fail(ErrorCode::InvalidArgument, "pattern length must be >= 1");
    const std::uint64_t w = std::min<std::uint64_t>(static_cast<std::uint64_t>(workers), trials);

    std::vector<std::map<Perm, std::uint64_t>> counts(w);
    std::vector<std::uint64_t> ties(w, 0);
    std::vector<std::string> errors(w);
    const auto run = [&](std::uint64_t wi, std::uint64_t lo, std::uint64_t hi) {
        try {
            for (std::uint64_t t = lo; t < hi; ++t) {
                PhiloxStream rng(seed, t);
                ++counts[wi][sample_pattern(dist, n, rng, &ties[wi])];
            }
        } catch (const std::exception& e) {
            errors[wi] = e.what();
        }
    };

    const std::uint64_t base = trials / w, extra = trials % w;
    std::vector<std::thread> threads;
    std::uint64_t lo = 0;
    for (std::uint64_t wi = 0; wi < w; ++wi) {
        const std::uint64_t hi = lo + base + (wi < extra ? 1 : 0);
        threads.emplace_back(run, wi, lo, hi);
        lo = hi;
    }
    for (auto& t : threads) t.join();
    for (const auto& err : errors)
        if (!err.empty()) fail(ErrorCode::Internal, "worker failed: " + err);

    FrequencyTable table;
    table.n = n;
    table.trials = trials;
    table.seed = seed;
    table.dist = dist;
    for (std::uint64_t wi = 0; wi < w; ++wi) {
        table.tie_rejections += ties[wi];
        for (const auto& [p, c] : counts[wi]) table.counts[p] += c;
    }
    return table;
}

double chi_square_quantile(int df, double prob) {
    return boost::math::quantile(boost::math::chi_squared_distribution<double>(df), prob);
}

ClassReport class_report(const FrequencyTable& freqs,
                         const std::vector<EquivalenceClass>& classes) {
    if (classes.empty() || classes.front().representative.size() != freqs.n)
        fail(ErrorCode::LengthMismatch, "classes were enumerated for a different length");
    ClassReport report;
    for (const EquivalenceClass& cls : classes) {
        ClassRow row;
        row.representative = cls.representative;
        row.members = cls.members;
        std::uint64_t total = 0;
        for (const Perm& m : cls.members) {
            const auto it = freqs.counts.find(m);
            const std::uint64_t c = it == freqs.counts.end() ? 0 : it->second;
            row.counts.push_back(c);
            total += c;
            if (c == 0) report.missing.push_back(m);
        }
        const size_t size = cls.members.size();
        row.pooled_mean = static_cast<double>(total) / static_cast<double>(size);
        row.df = static_cast<int>(size) - 1;
        if (row.df >= 1) {
            row.threshold = chi_square_quantile(row.df, 0.999);
            if (row.pooled_mean > 0) { // singleton or never-observed classes cannot flag
                for (std::uint64_t c : row.counts) {
                    const double d = static_cast<double>(c) - row.pooled_mean;
                    row.statistic += d * d / row.pooled_mean;
                }
                row.flagged = row.statistic > row.threshold;
            }
        }
        report.any_flagged = report.any_flagged || row.flagged;
        report.rows.push_back(std::move(row));
    }
    std::sort(report.missing.begin(), report.missing.end());
    return report;
}

DiscriminationReport cross_distribution_discrimination(int n,
                                                       const std::vector<DistSpec>& dists,
                                                       std::uint64_t trials,
                                                       std::uint64_t seed) {
    if (n < 1 || n > 6)
        fail(ErrorCode::SizeTooLarge, "discrimination report limited to n <= 6");
    if (dists.empty()) fail(ErrorCode::InvalidArgument, "at least one distribution required");
    if (trials < 1) fail(ErrorCode::InvalidArgument, "at least one trial required");

    DiscriminationReport report;
    report.n = n;
    report.trials = trials;
    report.seed = seed;
    report.z_threshold = 6.0;

    std::vector<FrequencyTable> tables;
    for (size_t d = 0; d < dists.size(); ++d)
        tables.push_back(estimate_frequencies(dists[d], n, trials, seed + d));

    const auto classes = enumerate_classes(n);
    std::vector<std::pair<Perm, size_t>> labeled;
    for (size_t c = 0; c < classes.size(); ++c)
        for (const Perm& m : classes[c].members) labeled.push_back({m, c});
    std::sort(labeled.begin(), labeled.end());

    const double t = static_cast<double>(trials);
    for (size_t x = 0; x < labeled.size(); ++x) {
        for (size_t y = x + 1; y < labeled.size(); ++y) {
            DiscriminationRow row;
            row.a = labeled[x].first;
            row.b = labeled[y].first;
            row.same_class = labeled[x].second == labeled[y].second;
            for (size_t d = 0; d < dists.size(); ++d) {
                const auto& counts = tables[d].counts;
                const auto ca = counts.count(row.a) ? counts.at(row.a) : 0;
                const auto cb = counts.count(row.b) ? counts.at(row.b) : 0;
                const double pa = static_cast<double>(ca) / t;
                const double pb = static_cast<double>(cb) / t;
                const double pooled = (static_cast<double>(ca) + static_cast<double>(cb)) / (2.0 * t);
                double z = 0.0;
                if (pooled > 0.0 && pooled < 1.0)
                    z = std::abs(pa - pb) / std::sqrt(2.0 * pooled * (1.0 - pooled) / t);
                if (z >= row.z) {
                    row.z = z;
                    row.best_dist = dists[d].text();
                    row.freq_a = pa;
                    row.freq_b = pb;
                }
            }
            row.separated = row.z > report.z_threshold;
            report.rows.push_back(std::move(row));
        }
    }
    return report;
}

} // namespace ordwalk
