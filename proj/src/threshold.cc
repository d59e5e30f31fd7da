// Copyright 2026 The ftpost Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ftpost/threshold.h"

#include <algorithm>
#include <bit>
#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "ftpost/errors.h"

namespace ftpost {

namespace {

double plogp(double v) {
    return v > 0 ? -v * std::log2(v) : 0.0;
}

std::string fmt_p(double p) {
    std::ostringstream out;
    out.precision(9);
    out << p;
    return out.str();
}

// splitmix64 output function.
uint64_t mix64(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

uint64_t derive_key(uint64_t a, uint64_t b) {
    return mix64(a ^ mix64(b + 0x9e3779b97f4a7c15ULL));
}

struct SplitMix64 {
    uint64_t state;

    uint64_t next() {
        state += 0x9e3779b97f4a7c15ULL;
        return mix64(state);
    }
    double uniform() {
        return double(next() >> 11) * 0x1.0p-53;
    }
    size_t below(size_t n) {
        return size_t(uniform() * double(n));
    }
};

using Member = std::array<double, 4>;

Pauli sample_pauli(const Member &p, SplitMix64 &rng) {
    double u = rng.uniform();
    double acc = 0;
    size_t last = 0;
    for (size_t k = 0; k < 4; k++) {
        if (p[k] <= 0) {
            continue;
        }
        last = k;
        acc += p[k];
        if (u < acc) {
            return kPaulis[k];
        }
    }
    return kPaulis[last];
}

struct LevelStats {
    double infidelity = 0;
    double worst_sector = 0;
};

LevelStats level_stats(const std::vector<Member> &pop) {
    double inf = 0, bit = 0, phase = 0, cross = 0;
    for (const auto &m : pop) {
        inf += m[1] + m[2] + m[3];
        bit += m[1] + m[2];
        phase += m[3] + m[2];
        cross += m[1] + m[3];
    }
    double n = double(pop.size());
    return {inf / n, std::max({bit, phase, cross}) / n};
}

void next_level(
    const std::vector<Member> &pop,
    const std::vector<Member> &scaled,
    std::vector<Member> &out,
    uint64_t level_key,
    size_t begin,
    size_t end) {
    const size_t n = pop.size();
    for (size_t j = begin; j < end; j++) {
        SplitMix64 rng{derive_key(level_key, j)};
        std::array<const double *, 7> children;
        Pauli7 e;
        for (int i = 0; i < 7; i++) {
            size_t pick = rng.below(n);
            children[i] = scaled[pick].data();
            Pauli q = sample_pauli(pop[pick], rng);
            int bit = 6 - i;
            e.x |= uint8_t(x_bit(q) << bit);
            e.z |= uint8_t(z_bit(q) << bit);
        }
        auto w = coset_weights_713(children, e);
        size_t best = 0;
        for (size_t k = 1; k < 4; k++) {
            if (w[k] > w[best]) {
                best = k;
            }
        }
        double total = w[0] + w[1] + w[2] + w[3];
        Member m{};
        for (size_t k = 0; k < 4; k++) {
            m[index_of(kPaulis[k] * kPaulis[best])] = w[k] / total;
        }
        out[j] = m;
    }
}

}  // namespace

double shannon_entropy(const PauliDist &d) {
    double h = 0;
    for (double v : d.p) {
        h += plogp(v);
    }
    return h;
}

double binary_entropy(double p) {
    if (!(p >= 0 && p <= 1)) {
        throw std::invalid_argument("binary_entropy needs p in [0,1]");
    }
    return plogp(p) + plogp(1 - p);
}

double solve_root(const std::function<double(double)> &f, double lo, double hi, double tol) {
    if (!(lo < hi) || !(tol > 0)) {
        throw std::invalid_argument("solve_root needs lo < hi and tol > 0");
    }
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0) {
        return lo;
    }
    if (fhi == 0) {
        return hi;
    }
    if ((flo > 0) == (fhi > 0) || std::isnan(flo) || std::isnan(fhi)) {
        throw BracketFailure(
            "no sign change on [" + fmt_p(lo) + ", " + fmt_p(hi) + "]: f = " + fmt_p(flo) + ", " + fmt_p(fhi));
    }
    boost::uintmax_t max_iter = 500;
    auto done = [tol](double a, double b) {
        return std::abs(b - a) <= tol;
    };
    auto r = boost::math::tools::toms748_solve(f, lo, hi, flo, fhi, done, max_iter);
    return (r.first + r.second) / 2;
}

double output_entropy(const NoiseFamily &family, double p) {
    try {
        return shannon_entropy(run_pipeline(family.at(p)).output);
    } catch (const NoConvergence &) {
        return std::numeric_limits<double>::infinity();
    } catch (const DegenerateAcceptance &) {
        return std::numeric_limits<double>::infinity();
    }
}

HashingResult hashing_threshold(const NoiseFamily &family, double tol) {
    // Entropy is capped at 2 so that breakdown points still count as "above".
    auto g = [&](double p) {
        return std::min(output_entropy(family, p), 2.0) - 1;
    };
    double lo = 1e-4;
    double hi = 0.02;
    while (g(hi) < 0) {
        lo = hi;
        hi *= 1.25;
        if (hi > 0.5) {
            throw BracketFailure("entropy of " + family.name() + " never reaches 1 below p = 0.5");
        }
    }
    if (g(lo) >= 0) {
        throw BracketFailure("entropy of " + family.name() + " already exceeds 1 at p = " + fmt_p(lo));
    }
    double prev = -1;
    for (int k = 0; k <= 8; k++) {
        double h = g(lo + (hi - lo) * k / 8);
        if (!(h > prev)) {
            throw BracketFailure("entropy of " + family.name() + " is not increasing across the bracket");
        }
        prev = h;
    }
    HashingResult r;
    r.p_threshold = solve_root(g, lo, hi, tol);
    r.pipeline = run_pipeline(family.at(r.p_threshold));
    r.dist = r.pipeline.output;
    r.entropy = shannon_entropy(r.dist);
    return r;
}

double capacity_hashing_one_type(OneTypeKind kind, double tol) {
    switch (kind) {
        case OneTypeKind::PhaseOnly:
            return solve_root(
                [](double p) {
                    return binary_entropy(p) - 0.5;
                },
                1e-9,
                0.25,
                tol);
        case OneTypeKind::Symmetric:
            return solve_root(
                [](double p) {
                    return shannon_entropy(PauliDist::from(1 - 3 * p, p, p, p)) - 1;
                },
                1e-9,
                0.2,
                tol);
    }
    throw std::invalid_argument("unknown one-type noise kind");
}

std::vector<SweepPoint> sweep_r(std::span<const double> grid, double tol) {
    std::vector<SweepPoint> out;
    for (double r : grid) {
        SweepPoint pt{r, std::numeric_limits<double>::quiet_NaN(), ""};
        try {
            if (!(r >= 0)) {
                throw std::invalid_argument("r must be >= 0");
            }
            pt.threshold = hashing_threshold(NoiseFamily::depolarizing(r), tol).p_threshold;
        } catch (const std::exception &ex) {
            pt.error = ex.what();
        }
        out.push_back(pt);
    }
    return out;
}

PauliDist ConcatNoise::level0(double p) const {
    if (one_type) {
        if (!(p >= 0 && p <= 1)) {
            throw std::invalid_argument("one-type noise needs p in [0,1]");
        }
        return PauliDist::from(1 - p, 0, 0, p);
    }
    return run_pipeline(family.at(p)).output;
}

std::string ConcatNoise::name() const {
    return one_type ? "one-type" : family.name();
}

std::array<double, 2> ConcatNoise::default_bracket() const {
    if (one_type) {
        return {0.10, 0.12};
    }
    double h = hashing_threshold(family).p_threshold;
    return {0.9 * h, 1.05 * h};
}

void McConfig::validate() const {
    if (!seed) {
        throw std::invalid_argument("a Monte Carlo run needs an explicit seed");
    }
    if (population < 2 || max_levels < 1 || seeds < 1 || threads < 1 || bootstrap_resamples < 1) {
        throw std::invalid_argument("population >= 2 and levels, seeds, threads, resamples >= 1 required");
    }
    if (!(tol > 0) || !(below > 0) || !(above_fraction > 0 && above_fraction <= 1)) {
        throw std::invalid_argument("tol and below must be positive and above_fraction in (0,1]");
    }
    if ((lo != 0 || hi != 0) && !(0 < lo && lo < hi && hi < 1)) {
        throw std::invalid_argument("bracket must satisfy 0 < lo < hi < 1");
    }
}

McRun run_population(const PauliDist &level0, const McConfig &cfg, uint64_t stream_key) {
    level0.validate();
    const double above = cfg.above_fraction / 2;
    const size_t n = cfg.population;

    McRun run;
    std::vector<Member> pop(n, level0.p);
    std::vector<Member> scaled(n);
    std::vector<Member> next(n);
    for (size_t level = 0;; level++) {
        LevelStats st = level_stats(pop);
        run.infidelity.push_back(st.infidelity);
        run.worst_sector.push_back(st.worst_sector);
        if (st.infidelity < cfg.below) {
            run.verdict = McVerdict::Below;
            return run;
        }
        if (st.worst_sector >= above) {
            run.verdict = McVerdict::Above;
            return run;
        }
        if (level == cfg.max_levels) {
            return run;
        }
        for (size_t j = 0; j < n; j++) {
            double top = *std::max_element(pop[j].begin(), pop[j].end());
            for (size_t q = 0; q < 4; q++) {
                scaled[j][q] = pop[j][q] / top;
            }
        }
        uint64_t level_key = derive_key(stream_key, level + 1);
        size_t threads = std::min(cfg.threads, n);
        if (threads == 1) {
            next_level(pop, scaled, next, level_key, 0, n);
        } else {
            std::vector<std::thread> workers;
            for (size_t t = 0; t < threads; t++) {
                workers.emplace_back(
                    next_level, std::cref(pop), std::cref(scaled), std::ref(next), level_key, n * t / threads,
                    n * (t + 1) / threads);
            }
            for (auto &w : workers) {
                w.join();
            }
        }
        std::swap(pop, next);
    }
}

McThreshold concat_threshold_mc(const ConcatNoise &noise, const McConfig &cfg) {
    cfg.validate();
    double lo = cfg.lo;
    double hi = cfg.hi;
    if (lo == 0 && hi == 0) {
        auto b = noise.default_bracket();
        lo = b[0];
        hi = b[1];
    }

    McThreshold result;
    for (size_t s = 0; s < cfg.seeds; s++) {
        const uint64_t seed = derive_key(*cfg.seed, s);
        auto verdict = [&](double p) {
            PauliDist d;
            try {
                d = noise.level0(p);
            } catch (const NoConvergence &) {
                return McVerdict::Above;
            }
            McVerdict v = run_population(d, cfg, derive_key(seed, std::bit_cast<uint64_t>(p))).verdict;
            if (v == McVerdict::Inconclusive) {
                throw Inconclusive(
                    noise.name() + " at p = " + fmt_p(p) + " stayed undecided for " + std::to_string(cfg.max_levels) +
                    " levels");
            }
            return v;
        };
        double a = lo;
        double b = hi;
        if (verdict(a) != McVerdict::Below || verdict(b) != McVerdict::Above) {
            throw BracketFailure(
                "Monte Carlo bracket [" + fmt_p(a) + ", " + fmt_p(b) + "] does not straddle the " + noise.name() +
                " threshold");
        }
        while (b - a > cfg.tol) {
            double mid = (a + b) / 2;
            if (verdict(mid) == McVerdict::Below) {
                a = mid;
            } else {
                b = mid;
            }
        }
        result.per_seed.push_back((a + b) / 2);
    }

    const auto &v = result.per_seed;
    result.threshold = std::accumulate(v.begin(), v.end(), 0.0) / double(v.size());
    std::mt19937_64 rng(*cfg.seed);
    std::uniform_int_distribution<size_t> pick(0, v.size() - 1);
    double sum = 0;
    double sum_sq = 0;
    for (size_t b = 0; b < cfg.bootstrap_resamples; b++) {
        double m = 0;
        for (size_t i = 0; i < v.size(); i++) {
            m += v[pick(rng)];
        }
        m /= double(v.size());
        sum += m;
        sum_sq += m * m;
    }
    double nb = double(cfg.bootstrap_resamples);
    double var = sum_sq / nb - (sum / nb) * (sum / nb);
    result.error_bar = std::sqrt(std::max(var, 0.0));
    return result;
}

double first_level_entropy_2317(const NoiseFamily &family, double p) {
    return golay_logical_entropy(run_pipeline(family.at(p)).output);
}

double entropy_match_threshold(const NoiseFamily &family, double target_e1, double lo, double hi, double tol) {
    return solve_root(
        [&](double p) {
            return first_level_entropy_2317(family, p) - target_e1;
        },
        lo,
        hi,
        tol);
}

double sector_noise(const NoiseFamily &family, double p) {
    PauliDist d = run_pipeline(family.at(p)).output;
    return 1 - 2 * (d.p[1] + d.p[2]);
}

double crash_difference(CrashCode code, double x1, double x2) {
    CrashPolynomial f = crash_poly(code);
    return (f(x1) - f(x2)) / 2;
}

double crash_difference_threshold(CrashCode code, const NoiseFamily &family, double baseline, double delta, double tol) {
    if (!(baseline > 0)) {
        throw std::invalid_argument("baseline threshold must be positive");
    }
    if (delta == 0) {
        return baseline;
    }
    double xb = sector_noise(family, baseline);
    return solve_root(
        [&](double p) {
            return crash_difference(code, sector_noise(family, p), xb) - delta;
        },
        baseline / 2,
        baseline,
        tol);
}

double first_level_fidelity_at(CrashCode code, const NoiseFamily &family, double p) {
    PauliDist d = run_pipeline(family.at(p)).output;
    if (code == CrashCode::Steane7) {
        Children7 children;
        children.fill(d);
        return first_level_fidelity(children);
    }
    CrashPolynomial f = crash_poly(code);
    double xs = 1 - 2 * (d.p[1] + d.p[2]);
    double zs = 1 - 2 * (d.p[3] + d.p[2]);
    return (1 + f(xs)) / 2 * (1 + f(zs)) / 2;
}

FixedFidelity fixed_fidelity_point(CrashCode code, const NoiseFamily &family, double lo, double hi, double tol) {
    auto g = [&](double p) {
        return run_pipeline(family.at(p)).output.fidelity() - first_level_fidelity_at(code, family, p);
    };
    FixedFidelity r;
    r.p = solve_root(g, lo, hi, tol);
    r.fidelity = run_pipeline(family.at(r.p)).output.fidelity();
    return r;
}

double convergence_alpha() {
    return std::log2(std::log2(std::exp(1.0)));
}

double convergence_delta(double t, double t_c, int d, int l) {
    if (!(t_c > 0) || !(t <= t_c) || d < 2 || l < 0) {
        throw std::invalid_argument("convergence_delta needs 0 < t_c, t <= t_c, d >= 2, l >= 0");
    }
    return (t_c - t) * std::pow(double(d), l * convergence_alpha()) / t_c;
}

OverheadEstimate overhead_estimate(double n, double p, double r, double eps) {
    if (!(n >= 0) || !(p >= 0 && p < 1) || !(r > 0 && r < 1) || !(eps > 0 && eps < 1)) {
        throw std::invalid_argument("overhead_estimate needs n >= 0, p in [0,1), r and eps in (0,1)");
    }
    OverheadEstimate o;
    o.n = n;
    o.r = r;
    o.eps = eps;
    o.p_k = std::pow(1 - p, n);
    o.exponent = -n * std::log1p(-p) / std::log(r);
    o.order = n * std::pow(eps, o.exponent);
    return o;
}

}  // namespace ftpost
