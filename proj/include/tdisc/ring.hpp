#pragma once

#include <algorithm>
#include <memory>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "tdisc/errors.hpp"

namespace tdisc {

// Ambient polynomial ring over Q: an ordered variable list with optional
// positive weights. When a module works over a base/fiber split (coordinates
// on Z versus the cone directions y), the first `base_count` variables form
// the base block.
struct RingSpec {
    std::vector<std::string> vars;
    std::vector<long> weights;  // one per variable, all > 0
    int base_count = -1;        // -1: no block structure declared

    std::size_t size() const { return vars.size(); }

    int index_of(const std::string& name) const {
        for (std::size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == name) return static_cast<int>(i);
        return -1;
    }

    bool has_blocks() const { return base_count >= 0; }

    std::vector<int> base_indices() const {
        std::vector<int> out;
        for (int i = 0; i < base_count; ++i) out.push_back(i);
        return out;
    }
    std::vector<int> fiber_indices() const {
        std::vector<int> out;
        for (int i = std::max(base_count, 0); i < static_cast<int>(vars.size()); ++i) out.push_back(i);
        return out;
    }
};

using Ring = std::shared_ptr<const RingSpec>;

inline Ring make_ring(std::vector<std::string> vars, std::vector<long> weights = {}, int base_count = -1) {
    auto rs = std::make_shared<RingSpec>();
    if (vars.empty()) throw error("ring needs at least one variable");
    std::set<std::string> seen;
    for (const auto& v : vars) {
        if (v.empty()) throw error("empty variable name");
        if (!seen.insert(v).second) throw error("duplicate variable name '" + v + "'");
    }
    if (weights.empty()) weights.assign(vars.size(), 1);
    if (weights.size() != vars.size()) throw error("weight list length mismatch");
    for (long w : weights)
        if (w <= 0) throw error("weights must be strictly positive");
    if (base_count > static_cast<int>(vars.size())) throw error("base block larger than ring");
    rs->vars = std::move(vars);
    rs->weights = std::move(weights);
    rs->base_count = base_count;
    return rs;
}

// Extends a ring by fresh variables (appended). Throws on name collision.
inline Ring extend_ring(const Ring& r, const std::vector<std::string>& extra,
                        const std::vector<long>& extra_weights = {}, int base_count = -1) {
    std::vector<std::string> vars = r->vars;
    std::vector<long> weights = r->weights;
    for (std::size_t i = 0; i < extra.size(); ++i) {
        if (r->index_of(extra[i]) >= 0) throw error("variable name collision: '" + extra[i] + "'");
        vars.push_back(extra[i]);
        weights.push_back(extra_weights.empty() ? 1 : extra_weights[i]);
    }
    return make_ring(std::move(vars), std::move(weights), base_count);
}

// Deterministic fresh names: "y1..yk", falling back to "yy1.." etc. on collision.
inline std::vector<std::string> fresh_names(const Ring& r, const std::string& stem, int count,
                                            const std::vector<std::string>& also_avoid = {}) {
    std::string s = stem;
    for (int attempt = 0; attempt < 8; ++attempt) {
        std::vector<std::string> names;
        bool ok = true;
        for (int i = 1; i <= count; ++i) {
            std::string n = s + std::to_string(i);
            if (r->index_of(n) >= 0 ||
                std::find(also_avoid.begin(), also_avoid.end(), n) != also_avoid.end()) {
                ok = false;
                break;
            }
            names.push_back(n);
        }
        if (ok) return names;
        s += stem;
    }
    throw error("could not generate fresh variable names with stem '" + stem + "'");
}

// Monomial: exponent vector indexed like the ring's variable list.
struct Monomial {
    std::vector<int> e;

    Monomial() = default;
    explicit Monomial(std::size_t n) : e(n, 0) {}
    explicit Monomial(std::vector<int> exps) : e(std::move(exps)) {}

    static Monomial one(std::size_t n) { return Monomial(n); }
    static Monomial var(std::size_t n, int idx, int power = 1) {
        Monomial m(n);
        m.e[idx] = power;
        return m;
    }

    bool is_one() const {
        return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    }

    long total_degree() const { return std::accumulate(e.begin(), e.end(), 0L); }

    long weighted_degree(const RingSpec& r) const {
        long d = 0;
        for (std::size_t i = 0; i < e.size(); ++i) d += static_cast<long>(e[i]) * r.weights[i];
        return d;
    }

    long degree_on(const std::vector<int>& idxs) const {
        long d = 0;
        for (int i : idxs) d += e[i];
        return d;
    }

    bool divides(const Monomial& other) const {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > other.e[i]) return false;
        return true;
    }

    bool depends_on(int idx) const { return e[idx] > 0; }

    bool depends_on_any(const std::vector<int>& idxs) const {
        for (int i : idxs)
            if (e[i] > 0) return true;
        return false;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial m(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) m.e[i] = e[i] + o.e[i];
        return m;
    }

    // Exact quotient; caller guarantees divisibility.
    Monomial operator/(const Monomial& o) const {
        Monomial m(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) m.e[i] = e[i] - o.e[i];
        return m;
    }

    bool operator==(const Monomial& o) const { return e == o.e; }
    bool operator!=(const Monomial& o) const { return e != o.e; }
};

inline Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial m(a.e.size());
    for (std::size_t i = 0; i < a.e.size(); ++i) m.e[i] = std::max(a.e[i], b.e[i]);
    return m;
}

inline bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] > 0 && b.e[i] > 0) return false;
    return true;
}

// Canonical comparison used for in-memory term storage and serialization:
// graded reverse lexicographic, independent of the active computational order.
inline bool grevlex_less(const Monomial& a, const Monomial& b) {
    long da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    // a < b iff the last nonzero entry of a-b is positive
    for (std::size_t i = a.e.size(); i-- > 0;) {
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
    }
    return false;
}

}  // namespace tdisc
