// Copyright (c) wheelsep contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wheelsep/graph.hpp"

namespace wheelsep {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// "p/q" in lowest terms; integers print as "p/1".
std::string to_string(const Rational& r);
// Accepts "p/q" or "p". Throws PreconditionError on malformed or negative
// input, or when `require_lowest_terms` is set and gcd(p, q) != 1.
Rational parse_rational(std::string_view text, bool require_lowest_terms = false);

// Exact nonnegative vertex weights. All comparisons against "half the total"
// are done on integer numerators over a common denominator, so there is no
// tolerance anywhere.
class Weighting {
  public:
    Weighting() = default;
    // Throws PreconditionError on a negative weight.
    explicit Weighting(std::map<VertexId, Rational> values);

    static Weighting uniform(const Graph& g, const Rational& value = 1);

    const std::map<VertexId, Rational>& values() const noexcept { return values_; }
    // Throws PreconditionError for vertices outside the domain.
    const Rational& at(VertexId v) const;
    bool covers(const Graph& g) const;

    const Rational& total() const noexcept { return total_; }
    bool trivial() const noexcept { return total_ == 0; }
    bool normal() const noexcept { return total_ == 1; }

    Rational weight(const VertexSet& a) const;
    // w(a) > w(G) / 2, exact.
    bool heavy(const VertexSet& a) const;

    Weighting restricted(const VertexSet& keep) const;

    friend bool operator==(const Weighting& a, const Weighting& b) { return a.values_ == b.values_; }

  private:
    std::map<VertexId, Rational> values_;
    Rational total_ = 0;
    std::vector<BigInt> scaled_; // numerators over a common denominator, by id
    BigInt scaled_total_ = 0;
};

// w / w(G). Throws PreconditionError("cannot normalize trivial weighting").
Weighting normalize(const Weighting& w);

// The unique component D of g - s with w(D) > 1/2. Requires a normal w whose
// domain is V(g).
std::optional<VertexSet> heavy_component(const Graph& g, const Weighting& w, const VertexSet& s);

// No component of g - s carries more than half the total weight. Works for
// any weighting; the trivial weighting makes every set balanced.
bool is_balanced_separator(const Graph& g, const Weighting& w, const VertexSet& s);

// -- certificates -------------------------------------------------------------

enum class Route { Empty, TwoVertices, NeighborBound, CycleSmall, Tw2, FanDominated };

std::string_view route_name(Route r);
std::optional<Route> parse_route(std::string_view name);

// A balanced separator together with the evidence for its bound: either a
// small dominating set, or a cardinality bound. Empty carries neither.
struct SeparatorCertificate {
    VertexSet separator;
    Route route = Route::Empty;
    std::optional<VertexSet> dominators;
    std::optional<std::size_t> size_bound;

    friend bool operator==(const SeparatorCertificate&, const SeparatorCertificate&) = default;
};

struct ClauseResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerificationReport {
    std::vector<ClauseResult> clauses;

    bool passed() const;
    std::string summary() const;
};

// Re-derives everything from scratch. Clauses: "shape" (evidence matches the
// route), "balanced", "domination" (|dominators| <= ell and separator inside
// N[dominators]) and "size" (|separator| <= size_bound <= (ell-1)^2). ell must
// be at least 3, or at least 2 for the fan route.
VerificationReport verify_certificate(const Graph& g, const Weighting& w, const SeparatorCertificate& cert, int ell);

} // namespace wheelsep
