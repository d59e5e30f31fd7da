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

#include "ftpost/noise_model.h"

#include <map>
#include <sstream>
#include <stdexcept>

namespace ftpost {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void check_prob(double v, const char *name) {
    if (!(v >= 0 && v <= 1)) {
        throw std::invalid_argument(std::string("noise parameter ") + name + " must lie in [0,1]");
    }
}

TwoQubitPauliDist depolarizing_dist(double p) {
    TwoQubitPauliDist d;
    d.fill(p / 15);
    d[0] = 1 - p;
    return d;
}

TwoQubitPauliDist independent_dist(double pf, double pb) {
    // Source: X with pb, Z with pf. Destination: X with pf, Z with pb.
    auto one = [](double px, double pz) {
        return std::array<double, 4>{(1 - px) * (1 - pz), px * (1 - pz), px * pz, (1 - px) * pz};
    };
    auto s = one(pb, pf);
    auto d = one(pf, pb);
    TwoQubitPauliDist out;
    for (size_t a = 0; a < 4; a++) {
        for (size_t b = 0; b < 4; b++) {
            out[4 * a + b] = s[a] * d[b];
        }
    }
    return out;
}

using KeyValues = std::map<std::string, double, std::less<>>;

std::pair<std::string, KeyValues> split_spec(std::string_view spec) {
    auto colon = spec.find(':');
    std::string kind(spec.substr(0, colon));
    KeyValues kv;
    if (colon == std::string_view::npos) {
        return {kind, kv};
    }
    std::string_view rest = spec.substr(colon + 1);
    while (!rest.empty()) {
        auto comma = rest.find(',');
        std::string_view item = rest.substr(0, comma);
        auto eq = item.find('=');
        if (eq == std::string_view::npos || eq == 0) {
            throw std::invalid_argument("malformed noise parameter '" + std::string(item) + "'");
        }
        std::string key(item.substr(0, eq));
        std::string value(item.substr(eq + 1));
        size_t used = 0;
        double v;
        try {
            v = std::stod(value, &used);
        } catch (const std::exception &) {
            throw std::invalid_argument("bad number in noise parameter '" + std::string(item) + "'");
        }
        if (used != value.size()) {
            throw std::invalid_argument("bad number in noise parameter '" + std::string(item) + "'");
        }
        if (!kv.emplace(key, v).second) {
            throw std::invalid_argument("duplicate noise parameter '" + key + "'");
        }
        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    }
    return {kind, kv};
}

double take(KeyValues &kv, const char *key, bool required, double fallback = 0) {
    auto it = kv.find(key);
    if (it == kv.end()) {
        if (required) {
            throw std::invalid_argument(std::string("missing noise parameter '") + key + "'");
        }
        return fallback;
    }
    double v = it->second;
    kv.erase(it);
    return v;
}

void reject_leftovers(const KeyValues &kv, const std::string &kind) {
    if (!kv.empty()) {
        throw std::invalid_argument("unknown parameter '" + kv.begin()->first + "' for noise model '" + kind + "'");
    }
}

}  // namespace

void validate(const NoiseModel &m) {
    std::visit(
        overloaded{
            [](const Depolarizing &d) {
                check_prob(d.p, "p");
                if (!(d.r >= 0)) {
                    throw std::invalid_argument("measurement fraction r must be >= 0");
                }
                check_prob(4.0 / 15.0 * d.r * d.p, "p_m");
            },
            [](const Knill &k) {
                check_prob(k.p, "p");
            },
            [](const Forward &f) {
                check_prob(f.pf, "pf");
            },
            [](const Independent &i) {
                check_prob(i.pf, "pf");
                check_prob(i.pb, "pb");
                check_prob(i.pm, "pm");
            },
        },
        m);
}

TwoQubitPauliDist two_qubit_dist(const NoiseModel &m) {
    validate(m);
    return std::visit(
        overloaded{
            [](const Depolarizing &d) {
                return depolarizing_dist(d.p);
            },
            [](const Knill &k) {
                return depolarizing_dist(k.p);
            },
            [](const Forward &f) {
                return independent_dist(f.pf, 0);
            },
            [](const Independent &i) {
                return independent_dist(i.pf, i.pb);
            },
        },
        m);
}

TwoQubitDiagonalNoise diagonal_q(const NoiseModel &m) {
    TwoQubitPauliDist d = two_qubit_dist(m);
    TwoQubitDiagonalNoise q;
    for (size_t s = 0; s < 16; s++) {
        double acc = 0;
        for (size_t t = 0; t < 16; t++) {
            acc += d[t] * commutation_sign_pair(t, s);
        }
        q.q[s] = acc;
    }
    return q;
}

double measurement_m(const NoiseModel &m) {
    validate(m);
    return std::visit(
        overloaded{
            [](const Depolarizing &d) {
                return 1 - 8.0 / 15.0 * d.r * d.p;
            },
            [](const Knill &k) {
                return 1 - 8.0 / 15.0 * k.p;
            },
            [](const Forward &) {
                return 1.0;
            },
            [](const Independent &i) {
                return 1 - 2 * i.pm;
            },
        },
        m);
}

NoiseModel parse_noise_model(std::string_view spec) {
    auto [kind, kv] = split_spec(spec);
    NoiseModel m;
    if (kind == "depolarizing") {
        double p = take(kv, "p", true);
        double r = take(kv, "r", false, 0);
        m = Depolarizing{p, r};
    } else if (kind == "knill") {
        m = Knill{take(kv, "p", true)};
    } else if (kind == "forward") {
        m = Forward{take(kv, "pf", true)};
    } else if (kind == "independent") {
        double pf = take(kv, "pf", true);
        double pb = take(kv, "pb", false, 0);
        double pm = take(kv, "pm", false, 0);
        m = Independent{pf, pb, pm};
    } else {
        throw std::invalid_argument("unknown noise model '" + kind + "'");
    }
    reject_leftovers(kv, kind);
    validate(m);
    return m;
}

std::string format_noise_model(const NoiseModel &m) {
    std::ostringstream out;
    out.precision(10);
    std::visit(
        overloaded{
            [&](const Depolarizing &d) {
                out << "depolarizing:p=" << d.p << ",r=" << d.r;
            },
            [&](const Knill &k) {
                out << "knill:p=" << k.p;
            },
            [&](const Forward &f) {
                out << "forward:pf=" << f.pf;
            },
            [&](const Independent &i) {
                out << "independent:pf=" << i.pf << ",pb=" << i.pb << ",pm=" << i.pm;
            },
        },
        m);
    return out.str();
}

NoiseModel NoiseFamily::at(double p) const {
    switch (kind) {
        case Kind::Depolarizing:
            return Depolarizing{p, r};
        case Kind::Knill:
            return Knill{p};
        case Kind::Forward:
            return Forward{p};
    }
    throw std::logic_error("unhandled noise family");
}

std::string NoiseFamily::name() const {
    switch (kind) {
        case Kind::Depolarizing:
            if (r != 0) {
                std::ostringstream out;
                out << "depolarizing:r=" << r;
                return out.str();
            }
            return "depolarizing";
        case Kind::Knill:
            return "knill";
        case Kind::Forward:
            return "forward";
    }
    return "?";
}

NoiseFamily parse_noise_family(std::string_view spec) {
    auto [kind, kv] = split_spec(spec);
    NoiseFamily f;
    if (kind == "depolarizing") {
        f = NoiseFamily::depolarizing(take(kv, "r", false, 0));
        if (f.r < 0) {
            throw std::invalid_argument("measurement fraction r must be >= 0");
        }
    } else if (kind == "knill") {
        f = NoiseFamily::knill();
    } else if (kind == "forward") {
        f = NoiseFamily::forward();
    } else {
        throw std::invalid_argument("unknown noise family '" + kind + "' (expected depolarizing, knill or forward)");
    }
    reject_leftovers(kv, kind);
    return f;
}

}  // namespace ftpost
