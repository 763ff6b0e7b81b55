// Copyright (c) wheelsep contributors.
// SPDX-License-Identifier: Apache-2.0
#include "wheelsep/weights.hpp"

#include <array>
#include <sstream>

#include "wheelsep/error.hpp"

namespace wheelsep {

namespace mp = boost::multiprecision;

std::string to_string(const Rational& r) {
    return mp::numerator(r).str() + "/" + mp::denominator(r).str();
}

Rational parse_rational(std::string_view text, bool require_lowest_terms) {
    auto parse_digits = [&](std::string_view part) {
        if (part.empty() || part.size() > 4000) {
            throw PreconditionError("malformed rational: \"" + std::string(text) + "\"");
        }
        for (char c : part) {
            if (c < '0' || c > '9') {
                throw PreconditionError("malformed rational: \"" + std::string(text) + "\"");
            }
        }
        return BigInt(std::string(part));
    };
    const auto slash = text.find('/');
    BigInt num = parse_digits(text.substr(0, slash));
    BigInt den = slash == std::string_view::npos ? BigInt(1) : parse_digits(text.substr(slash + 1));
    if (den == 0) {
        throw PreconditionError("zero denominator: \"" + std::string(text) + "\"");
    }
    if (require_lowest_terms && mp::gcd(num, den) != 1 && !(num == 0 && den == 1)) {
        throw PreconditionError("rational not in lowest terms: \"" + std::string(text) + "\"");
    }
    return Rational(num, den);
}

Weighting::Weighting(std::map<VertexId, Rational> values) : values_(std::move(values)) {
    BigInt common = 1;
    for (const auto& [v, r] : values_) {
        if (r < 0) {
            throw PreconditionError("negative weight at vertex " + std::to_string(v));
        }
        total_ += r;
        common = mp::lcm(common, BigInt(mp::denominator(r)));
    }
    const VertexId bound = values_.empty() ? 0 : values_.rbegin()->first + 1;
    scaled_.assign(bound, 0);
    for (const auto& [v, r] : values_) {
        scaled_[v] = mp::numerator(r) * (common / mp::denominator(r));
        scaled_total_ += scaled_[v];
    }
}

Weighting Weighting::uniform(const Graph& g, const Rational& value) {
    std::map<VertexId, Rational> values;
    for (VertexId v : g.vertices()) {
        values.emplace(v, value);
    }
    return Weighting(std::move(values));
}

const Rational& Weighting::at(VertexId v) const {
    auto it = values_.find(v);
    if (it == values_.end()) {
        throw PreconditionError("vertex not in weighting: " + std::to_string(v));
    }
    return it->second;
}

bool Weighting::covers(const Graph& g) const {
    if (values_.size() != g.order()) {
        return false;
    }
    for (VertexId v : g.vertices()) {
        if (!values_.count(v)) {
            return false;
        }
    }
    return true;
}

Rational Weighting::weight(const VertexSet& a) const {
    Rational sum = 0;
    for (VertexId v : a) {
        sum += at(v);
    }
    return sum;
}

bool Weighting::heavy(const VertexSet& a) const {
    BigInt sum = 0;
    for (VertexId v : a) {
        if (v >= scaled_.size() || !values_.count(v)) {
            throw PreconditionError("vertex not in weighting: " + std::to_string(v));
        }
        sum += scaled_[v];
    }
    return 2 * sum > scaled_total_;
}

Weighting Weighting::restricted(const VertexSet& keep) const {
    std::map<VertexId, Rational> values;
    for (VertexId v : keep) {
        values.emplace(v, at(v));
    }
    return Weighting(std::move(values));
}

Weighting normalize(const Weighting& w) {
    if (w.trivial()) {
        throw PreconditionError("cannot normalize trivial weighting");
    }
    std::map<VertexId, Rational> values;
    for (const auto& [v, r] : w.values()) {
        values.emplace(v, r / w.total());
    }
    return Weighting(std::move(values));
}

namespace {

void require_domain(const Graph& g, const Weighting& w) {
    if (!w.covers(g)) {
        throw PreconditionError("weighting domain differs from the vertex set of the graph");
    }
}

std::optional<VertexSet> heavy_part(const Graph& g, const Weighting& w, const VertexSet& s) {
    for (auto& comp : components_without(g, s)) {
        if (w.heavy(comp)) {
            return std::move(comp);
        }
    }
    return std::nullopt;
}

} // namespace

std::optional<VertexSet> heavy_component(const Graph& g, const Weighting& w, const VertexSet& s) {
    require_domain(g, w);
    if (!w.normal()) {
        throw PreconditionError("weighting is not normal");
    }
    return heavy_part(g, w, s);
}

bool is_balanced_separator(const Graph& g, const Weighting& w, const VertexSet& s) {
    require_domain(g, w);
    if (w.trivial()) {
        return true;
    }
    return !heavy_part(g, w, s).has_value();
}

namespace {
constexpr std::array<std::pair<Route, std::string_view>, 6> kRouteNames{{
    {Route::Empty, "Empty"},
    {Route::TwoVertices, "TwoVertices"},
    {Route::NeighborBound, "NeighborBound"},
    {Route::CycleSmall, "CycleSmall"},
    {Route::Tw2, "Tw2"},
    {Route::FanDominated, "FanDominated"},
}};
} // namespace

std::string_view route_name(Route r) {
    for (const auto& [route, name] : kRouteNames) {
        if (route == r) {
            return name;
        }
    }
    return "?";
}

std::optional<Route> parse_route(std::string_view name) {
    for (const auto& [route, n] : kRouteNames) {
        if (n == name) {
            return route;
        }
    }
    return std::nullopt;
}

bool VerificationReport::passed() const {
    for (const auto& c : clauses) {
        if (!c.passed) {
            return false;
        }
    }
    return !clauses.empty();
}

std::string VerificationReport::summary() const {
    std::ostringstream os;
    for (const auto& c : clauses) {
        os << (c.passed ? "pass " : "FAIL ") << c.name;
        if (!c.detail.empty()) {
            os << ": " << c.detail;
        }
        os << '\n';
    }
    return os.str();
}

VerificationReport verify_certificate(const Graph& g, const Weighting& w, const SeparatorCertificate& cert, int ell) {
    VerificationReport report;
    auto add = [&](std::string name, bool ok, std::string detail) {
        report.clauses.push_back({std::move(name), ok, std::move(detail)});
    };

    const bool fan = cert.route == Route::FanDominated;
    const int min_ell = (fan || cert.route == Route::Empty) ? 2 : 3;
    if (ell < min_ell) {
        add("parameters", false, "ell = " + std::to_string(ell) + " below " + std::to_string(min_ell));
        return report;
    }

    const bool wants_dominators = cert.route == Route::TwoVertices || cert.route == Route::NeighborBound || fan;
    const bool wants_bound = cert.route == Route::CycleSmall || cert.route == Route::Tw2;
    bool shape = cert.dominators.has_value() == wants_dominators && cert.size_bound.has_value() == wants_bound;
    std::string shape_detail;
    if (!shape) {
        shape_detail = "route " + std::string(route_name(cert.route)) + " carries the wrong kind of evidence";
    } else if (cert.route == Route::Empty && !cert.separator.empty()) {
        shape = false;
        shape_detail = "Empty route with a non-empty separator";
    }
    for (VertexId v : cert.separator) {
        if (!g.contains(v)) {
            shape = false;
            shape_detail = "separator vertex " + std::to_string(v) + " not in graph";
        }
    }
    add("shape", shape, shape_detail);
    if (!shape) {
        return report;
    }

    if (!w.covers(g)) {
        add("balanced", false, "weighting domain differs from the graph");
    } else {
        const bool ok = is_balanced_separator(g, w, cert.separator);
        add("balanced", ok, ok ? "" : "G - S has a heavy component");
    }

    if (cert.dominators) {
        const auto& dom = *cert.dominators;
        bool ok = true;
        std::string detail;
        const auto limit = static_cast<std::size_t>(cert.route == Route::TwoVertices ? std::min(2, ell) : ell);
        for (VertexId v : dom) {
            if (!g.contains(v)) {
                ok = false;
                detail = "dominator " + std::to_string(v) + " not in graph";
            }
        }
        if (ok && dom.size() > limit) {
            ok = false;
            detail = std::to_string(dom.size()) + " dominators > " + std::to_string(limit);
        }
        if (ok && !is_subset(cert.separator, closed_neighborhood(g, dom))) {
            ok = false;
            detail = "separator not inside N[dominators]";
        }
        add("domination", ok, detail);
    }

    if (cert.size_bound) {
        const std::size_t cap = static_cast<std::size_t>(ell - 1) * static_cast<std::size_t>(ell - 1);
        bool ok = true;
        std::string detail;
        if (*cert.size_bound > cap) {
            ok = false;
            detail = "size bound " + std::to_string(*cert.size_bound) + " > (ell-1)^2 = " + std::to_string(cap);
        } else if (cert.separator.size() > *cert.size_bound) {
            ok = false;
            detail = std::to_string(cert.separator.size()) + " vertices > bound " + std::to_string(*cert.size_bound);
        }
        add("size", ok, detail);
    }
    return report;
}

} // namespace wheelsep
