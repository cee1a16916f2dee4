#pragma once

#include <algorithm>
#include <memory>
#include <numeric>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mdim/errors.hpp"
#include "mdim/graph.hpp"
#include "mdim/rational.hpp"
#include "mdim/tree_dim.hpp"

namespace mdim {

// Symbolic description of a generated graph family. Compact string form:
//   path:6  cycle:7  wheel:8  petersen  bouquet:3,5  multipartite:1,3,3
//   grid:3x4  spider:1,3,3,3  remark:path:2,s=2  blowup:path:3,sizes=2K,2E,3K
// Bouquet cycle lengths and spider leg lengths are kept sorted ascending so
// the first entry is always the minimum the closed forms index on.
struct FamilySpec {
    enum class Kind {
        Path,
        Cycle,
        Wheel,
        Petersen,
        Bouquet,
        CompleteMultipartite,
        Grid,
        Spider,
        Remark,
        Blowup,
    };
    struct BlowupGroup {
        int size = 0;
        bool complete = false; // complete (K) vs edgeless (E) replacement
    };

    Kind kind = Kind::Petersen;
    int n = 0;                        // path / cycle / wheel order
    std::vector<int> parts;           // bouquet lengths | part sizes | spider legs
    int grid_s = 0, grid_t = 0;       // grid dimensions
    std::shared_ptr<FamilySpec> base; // remark / blowup base family
    int subdivisions = 0;             // remark s
    std::vector<BlowupGroup> groups;  // blowup replacements

    static FamilySpec parse(std::string_view text);
    std::string to_string() const;
};

int family_order(const FamilySpec& spec);
Graph generate(const FamilySpec& spec);

namespace detail {

inline int parse_int(std::string_view s, std::string_view whole) {
    if (s.empty() || s.size() > 8) throw parse_error("bad family spec: \"" + std::string(whole) + "\"");
    int v = 0;
    for (char c : s) {
        if (c < '0' || c > '9')
            throw parse_error("bad family spec: \"" + std::string(whole) + "\"");
        v = v * 10 + (c - '0');
    }
    return v;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        auto next = s.find(sep, pos);
        if (next == std::string_view::npos) {
            out.push_back(s.substr(pos));
            break;
        }
        out.push_back(s.substr(pos, next - pos));
        pos = next + 1;
    }
    return out;
}

inline std::vector<int> parse_int_list(std::string_view s, std::string_view whole) {
    std::vector<int> out;
    for (auto piece : split(s, ',')) out.push_back(parse_int(piece, whole));
    return out;
}

} // namespace detail

inline void validate(const FamilySpec& spec) {
    using Kind = FamilySpec::Kind;
    switch (spec.kind) {
    case Kind::Path:
        if (spec.n < 2) throw domain_error("path needs n >= 2");
        break;
    case Kind::Cycle:
        if (spec.n < 3) throw domain_error("cycle needs n >= 3");
        break;
    case Kind::Wheel:
        if (spec.n < 5) throw domain_error("wheel needs n >= 5");
        break;
    case Kind::Petersen:
        break;
    case Kind::Bouquet:
        if (spec.parts.size() < 2) throw domain_error("bouquet needs at least 2 cycles");
        for (int len : spec.parts)
            if (len < 3) throw domain_error("bouquet cycles need length >= 3");
        break;
    case Kind::CompleteMultipartite:
        if (spec.parts.size() < 2) throw domain_error("multipartite needs at least 2 parts");
        for (int a : spec.parts)
            if (a < 1) throw domain_error("multipartite part sizes must be positive");
        break;
    case Kind::Grid:
        if (spec.grid_s < 2 || spec.grid_t < 2) throw domain_error("grid needs s,t >= 2");
        break;
    case Kind::Spider:
        if (spec.parts.size() < 3) throw domain_error("spider needs at least 3 legs");
        for (int len : spec.parts)
            if (len < 1) throw domain_error("spider legs need length >= 1");
        break;
    case Kind::Remark: {
        if (spec.subdivisions < 1) throw domain_error("remark construction needs s >= 1");
        if (!spec.base) throw domain_error("remark construction needs a base family");
        validate(*spec.base);
        const Graph base = generate(*spec.base);
        if (base.n < 2 || !is_connected(base))
            throw domain_error("remark base must be connected with >= 2 vertices");
        break;
    }
    case Kind::Blowup: {
        if (!spec.base) throw domain_error("blowup needs a base family");
        validate(*spec.base);
        const Graph base = generate(*spec.base);
        if (base.n < 2 || !is_connected(base))
            throw domain_error("blowup base must be connected with >= 2 vertices");
        if (spec.groups.size() != static_cast<std::size_t>(base.n))
            throw domain_error("blowup needs one group per base vertex");
        for (const auto& grp : spec.groups)
            if (grp.size < 2) throw domain_error("blowup group sizes must be >= 2");
        break;
    }
    }
}

inline FamilySpec FamilySpec::parse(std::string_view text) {
    FamilySpec spec;
    auto fail = [&]() -> FamilySpec& {
        throw parse_error("bad family spec: \"" + std::string(text) + "\"");
    };
    if (text == "petersen") {
        spec.kind = Kind::Petersen;
        return spec;
    }
    auto colon = text.find(':');
    if (colon == std::string_view::npos) fail();
    std::string_view head = text.substr(0, colon), rest = text.substr(colon + 1);
    if (rest.empty()) fail();
    if (head == "path" || head == "cycle" || head == "wheel") {
        spec.kind = head == "path" ? Kind::Path : head == "cycle" ? Kind::Cycle : Kind::Wheel;
        spec.n = detail::parse_int(rest, text);
    } else if (head == "bouquet" || head == "spider" || head == "multipartite") {
        spec.kind = head == "bouquet" ? Kind::Bouquet
                    : head == "spider" ? Kind::Spider
                                       : Kind::CompleteMultipartite;
        spec.parts = detail::parse_int_list(rest, text);
        if (spec.kind != Kind::CompleteMultipartite)
            std::sort(spec.parts.begin(), spec.parts.end());
    } else if (head == "grid") {
        auto x = rest.find('x');
        if (x == std::string_view::npos) fail();
        spec.kind = Kind::Grid;
        spec.grid_s = detail::parse_int(rest.substr(0, x), text);
        spec.grid_t = detail::parse_int(rest.substr(x + 1), text);
    } else if (head == "remark") {
        auto marker = rest.rfind(",s=");
        if (marker == std::string_view::npos) fail();
        spec.kind = Kind::Remark;
        spec.base = std::make_shared<FamilySpec>(FamilySpec::parse(rest.substr(0, marker)));
        spec.subdivisions = detail::parse_int(rest.substr(marker + 3), text);
    } else if (head == "blowup") {
        auto marker = rest.find(",sizes=");
        if (marker == std::string_view::npos) fail();
        spec.kind = Kind::Blowup;
        spec.base = std::make_shared<FamilySpec>(FamilySpec::parse(rest.substr(0, marker)));
        for (auto piece : detail::split(rest.substr(marker + 7), ',')) {
            if (piece.size() < 2 || (piece.back() != 'K' && piece.back() != 'E')) fail();
            BlowupGroup grp;
            grp.size = detail::parse_int(piece.substr(0, piece.size() - 1), text);
            grp.complete = piece.back() == 'K';
            spec.groups.push_back(grp);
        }
    } else {
        fail();
    }
    validate(spec);
    return spec;
}

inline std::string FamilySpec::to_string() const {
    auto join = [](const std::vector<int>& xs) {
        std::string s;
        for (std::size_t i = 0; i < xs.size(); ++i)
            s += (i ? "," : "") + std::to_string(xs[i]);
        return s;
    };
    switch (kind) {
    case Kind::Path: return "path:" + std::to_string(n);
    case Kind::Cycle: return "cycle:" + std::to_string(n);
    case Kind::Wheel: return "wheel:" + std::to_string(n);
    case Kind::Petersen: return "petersen";
    case Kind::Bouquet: return "bouquet:" + join(parts);
    case Kind::CompleteMultipartite: return "multipartite:" + join(parts);
    case Kind::Grid: return "grid:" + std::to_string(grid_s) + "x" + std::to_string(grid_t);
    case Kind::Spider: return "spider:" + join(parts);
    case Kind::Remark:
        return "remark:" + base->to_string() + ",s=" + std::to_string(subdivisions);
    case Kind::Blowup: {
        std::string s = "blowup:" + base->to_string() + ",sizes=";
        for (std::size_t i = 0; i < groups.size(); ++i)
            s += (i ? "," : "") + std::to_string(groups[i].size) + (groups[i].complete ? "K" : "E");
        return s;
    }
    }
    return "?";
}

inline int family_order(const FamilySpec& spec) {
    using Kind = FamilySpec::Kind;
    switch (spec.kind) {
    case Kind::Path:
    case Kind::Cycle:
    case Kind::Wheel: return spec.n;
    case Kind::Petersen: return 10;
    case Kind::Bouquet: {
        int total = 1;
        for (int len : spec.parts) total += len - 1;
        return total;
    }
    case Kind::CompleteMultipartite:
        return std::accumulate(spec.parts.begin(), spec.parts.end(), 0);
    case Kind::Grid: return spec.grid_s * spec.grid_t;
    case Kind::Spider:
        return 1 + std::accumulate(spec.parts.begin(), spec.parts.end(), 0);
    case Kind::Remark: return family_order(*spec.base) * (1 + 3 * spec.subdivisions);
    case Kind::Blowup: {
        int total = 0;
        for (const auto& grp : spec.groups) total += grp.size;
        return total;
    }
    }
    return 0;
}

// Canonical vertex numbering per family: paths/cycles sequential; wheel rim
// 0..n-2 with the hub last; grid row-major (i,j) -> i*t+j; bouquet cut-vertex
// 0 with cycles consecutive; spider center 0 with legs outward in sorted
// order; remark base vertices first, then per base vertex three legs of s
// vertices each, numbered outward; blowup groups contiguous in base order.
inline Graph generate(const FamilySpec& spec) {
    using Kind = FamilySpec::Kind;
    validate(spec);
    std::vector<std::pair<int, int>> edges;
    switch (spec.kind) {
    case Kind::Path:
        for (int i = 0; i + 1 < spec.n; ++i) edges.emplace_back(i, i + 1);
        return make_graph(spec.n, edges);
    case Kind::Cycle:
        for (int i = 0; i + 1 < spec.n; ++i) edges.emplace_back(i, i + 1);
        edges.emplace_back(spec.n - 1, 0);
        return make_graph(spec.n, edges);
    case Kind::Wheel: {
        const int rim = spec.n - 1;
        for (int i = 0; i + 1 < rim; ++i) edges.emplace_back(i, i + 1);
        edges.emplace_back(rim - 1, 0);
        for (int i = 0; i < rim; ++i) edges.emplace_back(i, rim);
        return make_graph(spec.n, edges);
    }
    case Kind::Petersen: {
        for (int i = 0; i < 5; ++i) {
            edges.emplace_back(i, (i + 1) % 5);     // outer cycle
            edges.emplace_back(i, 5 + i);           // spokes
            edges.emplace_back(5 + i, 5 + (i + 2) % 5); // inner pentagram
        }
        return make_graph(10, edges);
    }
    case Kind::Bouquet: {
        int next = 1;
        for (int len : spec.parts) {
            const int first = next;
            for (int j = 0; j + 1 < len - 1; ++j, ++next) edges.emplace_back(next, next + 1);
            const int last = next++;
            edges.emplace_back(0, first);
            edges.emplace_back(last, 0);
        }
        return make_graph(family_order(spec), edges);
    }
    case Kind::CompleteMultipartite: {
        std::vector<int> offset{0};
        for (int a : spec.parts) offset.push_back(offset.back() + a);
        for (std::size_t p = 0; p < spec.parts.size(); ++p)
            for (std::size_t q = p + 1; q < spec.parts.size(); ++q)
                for (int u = offset[p]; u < offset[p + 1]; ++u)
                    for (int v = offset[q]; v < offset[q + 1]; ++v) edges.emplace_back(u, v);
        return make_graph(offset.back(), edges);
    }
    case Kind::Grid: {
        const int s = spec.grid_s, t = spec.grid_t;
        auto id = [t](int i, int j) { return i * t + j; };
        for (int i = 0; i < s; ++i)
            for (int j = 0; j < t; ++j) {
                if (i + 1 < s) edges.emplace_back(id(i, j), id(i + 1, j));
                if (j + 1 < t) edges.emplace_back(id(i, j), id(i, j + 1));
            }
        return make_graph(s * t, edges);
    }
    case Kind::Spider: {
        int next = 1;
        for (int len : spec.parts) {
            edges.emplace_back(0, next);
            for (int j = 0; j + 1 < len; ++j, ++next) edges.emplace_back(next, next + 1);
            ++next;
        }
        return make_graph(family_order(spec), edges);
    }
    case Kind::Remark: {
        const Graph base = generate(*spec.base);
        const int s = spec.subdivisions;
        for (int u = 0; u < base.n; ++u)
            for (int v : base.adj[u])
                if (u < v) edges.emplace_back(u, v);
        for (int u = 0; u < base.n; ++u)
            for (int leg = 0; leg < 3; ++leg) {
                const int start = base.n + 3 * s * u + leg * s;
                edges.emplace_back(u, start);
                for (int j = 0; j + 1 < s; ++j) edges.emplace_back(start + j, start + j + 1);
            }
        return make_graph(base.n * (1 + 3 * s), edges);
    }
    case Kind::Blowup: {
        const Graph base = generate(*spec.base);
        std::vector<int> offset{0};
        for (const auto& grp : spec.groups) offset.push_back(offset.back() + grp.size);
        for (std::size_t gi = 0; gi < spec.groups.size(); ++gi)
            if (spec.groups[gi].complete)
                for (int u = offset[gi]; u < offset[gi + 1]; ++u)
                    for (int v = u + 1; v < offset[gi + 1]; ++v) edges.emplace_back(u, v);
        for (int bu = 0; bu < base.n; ++bu)
            for (int bv : base.adj[bu])
                if (bu < bv)
                    for (int u = offset[bu]; u < offset[bu + 1]; ++u)
                        for (int v = offset[bv]; v < offset[bv + 1]; ++v) edges.emplace_back(u, v);
        return make_graph(offset.back(), edges);
    }
    }
    throw domain_error("unknown family kind");
}

// kappa by the per-family closed form. The blowup family is intentionally
// unsupported here; its kappa is checked against pair_system by the tests.
inline int closed_form_kappa(const FamilySpec& spec) {
    using Kind = FamilySpec::Kind;
    validate(spec);
    switch (spec.kind) {
    case Kind::Path: return spec.n == 2 ? 2 : spec.n - 1;
    case Kind::Cycle: return spec.n % 2 == 0 ? spec.n - 2 : spec.n - 1;
    case Kind::Wheel: return spec.n == 5 ? 2 : 4;
    case Kind::Petersen: return 6;
    case Kind::Bouquet: {
        const int shortest = spec.parts.front(); // sorted ascending
        return shortest % 2 == 1 ? shortest - 1 : shortest - 2;
    }
    case Kind::CompleteMultipartite: return 2;
    case Kind::Grid: return spec.grid_s + spec.grid_t - 2;
    case Kind::Spider: return spec.parts[0] + spec.parts[1];
    case Kind::Remark: return 2 * spec.subdivisions;
    case Kind::Blowup:
        throw domain_error("no closed-form kappa for blowup families; use pair_system");
    }
    throw domain_error("unknown family kind");
}

namespace detail {

[[noreturn]] inline void k_range_error(const FamilySpec& spec, const Rational& k,
                                       const Rational& lo, const Rational& hi) {
    throw domain_error("k=" + k.to_string() + " outside [" + lo.to_string() + ", " +
                       hi.to_string() + "] for " + spec.to_string());
}

inline void require_k_range(const FamilySpec& spec, const Rational& k, const Rational& lo,
                            const Rational& hi) {
    if (k < lo || k > hi) k_range_error(spec, k, lo, hi);
}

} // namespace detail

// dim_f^k by the per-family closed form, on each family's stated k range.
inline Rational closed_form_fkdim(const FamilySpec& spec, const Rational& k) {
    using Kind = FamilySpec::Kind;
    validate(spec);
    switch (spec.kind) {
    case Kind::Path: {
        const int kappa = closed_form_kappa(spec);
        detail::require_k_range(spec, k, 1, kappa);
        if (k <= 2) return k;
        // 2 + (k-2)(n-2)/(n-3), only reachable for n >= 4
        return Rational(2) + (k - 2) * Rational(spec.n - 2, spec.n - 3);
    }
    case Kind::Cycle: {
        const int kappa = closed_form_kappa(spec);
        detail::require_k_range(spec, k, 1, kappa);
        return k * Rational(spec.n, kappa);
    }
    case Kind::Wheel: {
        detail::require_k_range(spec, k, 1, closed_form_kappa(spec));
        if (spec.n == 5) return Rational(2) * k;
        if (spec.n == 6) return Rational(3, 2) * k;
        return k * Rational(spec.n - 1, 4);
    }
    case Kind::Petersen:
        detail::require_k_range(spec, k, 1, 6);
        return Rational(5, 3) * k;
    case Kind::Bouquet:
        detail::require_k_range(spec, k, 1, closed_form_kappa(spec));
        return k * Rational(static_cast<long long>(spec.parts.size()));
    case Kind::CompleteMultipartite: {
        detail::require_k_range(spec, k, 1, 2);
        const int n = family_order(spec);
        const auto ones = std::count(spec.parts.begin(), spec.parts.end(), 1);
        return ones == 1 ? k * Rational(n - 1, 2) : k * Rational(n, 2);
    }
    case Kind::Grid:
        detail::require_k_range(spec, k, 1, closed_form_kappa(spec));
        return Rational(2) * k;
    case Kind::Spider:
        detail::require_k_range(spec, k, 1, closed_form_kappa(spec));
        return spider_fkdim_value(static_cast<int>(spec.parts.size()), spec.parts[0], k);
    case Kind::Remark:
        detail::require_k_range(spec, k, 1, 2 * spec.subdivisions);
        return Rational(3) * k * Rational(family_order(*spec.base), 2);
    case Kind::Blowup:
        throw domain_error("no closed-form dim_f^k for blowup families");
    }
    throw domain_error("unknown family kind");
}

// Integer k-metric dimension closed forms exist for grids and the remark
// construction only.
inline long long closed_form_kdim(const FamilySpec& spec, int k) {
    using Kind = FamilySpec::Kind;
    validate(spec);
    if (spec.kind == Kind::Grid) {
        detail::require_k_range(spec, k, 1, closed_form_kappa(spec));
        return 2LL * k;
    }
    if (spec.kind == Kind::Remark) {
        detail::require_k_range(spec, k, 1, 2 * spec.subdivisions);
        const long long n = family_order(*spec.base);
        return k % 2 == 0 ? 3LL * k * n / 2 : (3LL * k + 1) * n / 2;
    }
    throw domain_error("closed-form dim^k is only available for grid and remark families");
}

// dim_f by the per-family closed form (the k = 1 values).
inline Rational closed_form_fdim(const FamilySpec& spec) {
    using Kind = FamilySpec::Kind;
    validate(spec);
    switch (spec.kind) {
    case Kind::Path: return 1;
    case Kind::Cycle:
        return spec.n % 2 == 0 ? Rational(spec.n, spec.n - 2) : Rational(spec.n, spec.n - 1);
    case Kind::Wheel:
        if (spec.n == 5) return 2;
        if (spec.n == 6) return Rational(3, 2);
        return Rational(spec.n - 1, 4);
    case Kind::Petersen: return Rational(5, 3);
    case Kind::Bouquet: return Rational(static_cast<long long>(spec.parts.size()));
    case Kind::CompleteMultipartite: {
        const int n = family_order(spec);
        const auto ones = std::count(spec.parts.begin(), spec.parts.end(), 1);
        return ones == 1 ? Rational(n - 1, 2) : Rational(n, 2);
    }
    case Kind::Grid: return 2;
    case Kind::Spider: return Rational(static_cast<long long>(spec.parts.size()), 2);
    case Kind::Remark: return Rational(3 * family_order(*spec.base), 2);
    case Kind::Blowup: return Rational(family_order(spec), 2);
    }
    throw domain_error("unknown family kind");
}

} // namespace mdim
