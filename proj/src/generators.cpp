// Copyright (c) wheelsep contributors.
// SPDX-License-Identifier: Apache-2.0
#include "wheelsep/generators.hpp"

#include <numeric>

#include "wheelsep/error.hpp"

namespace wheelsep {

__extension__ typedef unsigned __int128 Wide;

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
    if (bound == 0) {
        throw PreconditionError("empty range");
    }
    return static_cast<std::uint64_t>((static_cast<Wide>(next()) * bound) >> 64);
}

bool SplitMix64::chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

Graph gen_series_parallel(std::size_t n, std::uint64_t seed) {
    if (n == 0) {
        throw PreconditionError("n must be at least 1");
    }
    if (n == 1) {
        return Graph({0}, {});
    }
    SplitMix64 rng(seed);
    std::vector<VertexId> vs{0, 1};
    std::vector<Graph::Edge> es{{0, 1}};
    while (vs.size() < n) {
        const auto x = static_cast<VertexId>(vs.size());
        vs.push_back(x);
        const auto op = rng.below(3);
        if (op == 2) {
            es.emplace_back(static_cast<VertexId>(rng.below(x)), x);
            continue;
        }
        const auto pick = static_cast<std::size_t>(rng.below(es.size()));
        const auto [a, b] = es[pick];
        if (op == 0) {
            es[pick] = {a, x};
            es.emplace_back(b, x);
        } else {
            es.emplace_back(a, x);
            es.emplace_back(b, x);
        }
    }
    return Graph(std::move(vs), es);
}

namespace {

Graph random_graph(std::size_t n, std::uint64_t num, std::uint64_t den, SplitMix64& rng) {
    std::vector<VertexId> vs(n);
    std::iota(vs.begin(), vs.end(), 0);
    std::vector<Graph::Edge> es;
    for (VertexId a = 0; a < n; ++a) {
        for (VertexId b = a + 1; b < n; ++b) {
            if (rng.chance(num, den)) {
                es.emplace_back(a, b);
            }
        }
    }
    return Graph(std::move(vs), es);
}

void require_probability(std::uint64_t num, std::uint64_t den) {
    if (den == 0 || num > den) {
        throw PreconditionError("edge probability must be a fraction in [0, 1]");
    }
}

} // namespace

Graph gen_random_connected(std::size_t n, std::uint64_t num, std::uint64_t den, std::uint64_t seed,
                           std::size_t budget) {
    require_probability(num, den);
    if (n == 0) {
        throw PreconditionError("n must be at least 1");
    }
    SplitMix64 rng(seed);
    for (std::size_t attempt = 0; attempt < budget; ++attempt) {
        Graph g = random_graph(n, num, den, rng);
        if (is_connected(g)) {
            return g;
        }
    }
    throw PreconditionError("rejection budget exhausted");
}

Graph gen_oracle_filtered(std::size_t n, std::size_t ell, std::uint64_t num, std::uint64_t den, std::uint64_t seed,
                          Excluded excluded, std::size_t cap, std::size_t budget) {
    require_probability(num, den);
    if (n == 0) {
        throw PreconditionError("n must be at least 1");
    }
    if (n > cap) {
        throw PreconditionError("n exceeds the oracle cap");
    }
    const std::size_t least = excluded == Excluded::Wheel ? 3 : 2;
    if (ell < least) {
        throw PreconditionError("pattern size too small");
    }
    const Graph pattern = excluded == Excluded::Wheel ? families::wheel(ell) : families::fan(ell);
    SplitMix64 rng(seed);
    for (std::size_t attempt = 0; attempt < budget; ++attempt) {
        Graph g = random_graph(n, num, den, rng);
        if (is_connected(g) && !find_induced_minor(g, pattern, cap)) {
            return g;
        }
    }
    throw PreconditionError("rejection budget exhausted");
}

Cobweb gen_cobweb(std::size_t m, std::size_t k, std::uint64_t seed, std::size_t budget) {
    if (m < 4) {
        throw PreconditionError("cycle length must be at least 4");
    }
    if (k == 0) {
        throw PreconditionError("need at least one outside vertex");
    }
    SplitMix64 rng(seed);
    std::vector<VertexId> vs(m + k);
    std::iota(vs.begin(), vs.end(), 0);
    const VertexSequence cycle(vs.begin(), vs.begin() + static_cast<std::ptrdiff_t>(m));
    const VertexSet outside(vs.begin() + static_cast<std::ptrdiff_t>(m), vs.end());
    for (std::size_t attempt = 0; attempt < budget; ++attempt) {
        std::vector<Graph::Edge> es;
        for (VertexId i = 0; i < m; ++i) {
            es.emplace_back(i, static_cast<VertexId>((i + 1) % m));
        }
        for (VertexId u : outside) {
            std::vector<VertexId> nb;
            while (nb.size() < 2) {
                nb.clear();
                for (VertexId c = 0; c < m; ++c) {
                    if (rng.chance(1, 2)) {
                        nb.push_back(c);
                    }
                }
            }
            for (VertexId c : nb) {
                es.emplace_back(c, u);
            }
        }
        Graph g(vs, es);
        try {
            return validate_cobweb(g, cycle, outside);
        } catch (const PreconditionError&) {
        }
    }
    throw PreconditionError("rejection budget exhausted");
}

Weighting gen_weighting(const Graph& g, std::uint64_t seed, std::uint64_t max_denominator, bool unit,
                        bool allow_trivial) {
    if (max_denominator == 0) {
        throw PreconditionError("max denominator must be at least 1");
    }
    if (unit) {
        return Weighting::uniform(g);
    }
    SplitMix64 rng(seed);
    std::map<VertexId, Rational> values;
    bool positive = false;
    for (VertexId v : g.vertices()) {
        const std::uint64_t q = 1 + rng.below(max_denominator);
        const std::uint64_t p = rng.below(q + 1);
        values[v] = Rational(p, q);
        positive = positive || p > 0;
    }
    if (!positive && !allow_trivial && !g.empty()) {
        values[g.vertices().front()] = 1;
    }
    return Weighting(std::move(values));
}

} // namespace wheelsep
