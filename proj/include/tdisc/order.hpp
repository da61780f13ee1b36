#pragma once

#include <string>
#include <vector>

#include "tdisc/ring.hpp"

namespace tdisc {

enum class OrderKind { Lex, GrevLex, WGrevLex, Block };

// A total monomial order compatible with multiplication. Block orders
// eliminate their first block: any monomial meeting the block ranks above
// every monomial free of it.
struct MonomialOrder {
    OrderKind kind = OrderKind::GrevLex;
    std::vector<int> block;  // first-block variable indices (Block only)

    static MonomialOrder lex() { return {OrderKind::Lex, {}}; }
    static MonomialOrder grevlex() { return {OrderKind::GrevLex, {}}; }
    static MonomialOrder wgrevlex() { return {OrderKind::WGrevLex, {}}; }
    static MonomialOrder elim(std::vector<int> first_block) {
        return {OrderKind::Block, std::move(first_block)};
    }

    // strict "a < b"
    bool less(const Monomial& a, const Monomial& b, const RingSpec& ring) const {
        switch (kind) {
            case OrderKind::Lex: {
                for (std::size_t i = 0; i < a.e.size(); ++i)
                    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
                return false;
            }
            case OrderKind::GrevLex:
                return grevlex_less(a, b);
            case OrderKind::WGrevLex: {
                long wa = a.weighted_degree(ring), wb = b.weighted_degree(ring);
                if (wa != wb) return wa < wb;
                return grevlex_less(a, b);
            }
            case OrderKind::Block: {
                long da = a.degree_on(block), db = b.degree_on(block);
                if (da != db) return da < db;
                // grevlex on the block part, then grevlex on the rest
                for (std::size_t i = block.size(); i-- > 0;) {
                    int ia = a.e[block[i]], ib = b.e[block[i]];
                    if (ia != ib) return ia > ib;
                }
                return grevlex_less(a, b);
            }
        }
        return false;
    }

    bool greater(const Monomial& a, const Monomial& b, const RingSpec& ring) const {
        return less(b, a, ring);
    }

    // Cache key; block indices make distinct elimination orders distinct.
    std::string key() const {
        std::string s;
        switch (kind) {
            case OrderKind::Lex: s = "lex"; break;
            case OrderKind::GrevLex: s = "grevlex"; break;
            case OrderKind::WGrevLex: s = "wgrevlex"; break;
            case OrderKind::Block: s = "block"; break;
        }
        for (int i : block) s += ":" + std::to_string(i);
        return s;
    }
};

}  // namespace tdisc
