#pragma once

#include <algorithm>
#include <cstddef>
#include <set>
#include <tuple>
#include <vector>

#include "satkit/polynomial.hpp"

namespace satkit {

/// Gröbner basis of an ideal under the ring's monomial order. When
/// `reduced` is set the basis is the canonical one: monic elements, fully
/// inter-reduced, sorted ascending by leading monomial — unique for the
/// (ideal, order) pair.
struct GroebnerBasis {
    RingPtr ring;
    std::vector<Polynomial> elements;
    bool reduced = false;

    bool is_trivial() const {  // ideal = (1)
        return elements.size() == 1 && elements[0].is_constant() && !elements[0].is_zero();
    }
};

/// S(f, g) = (lcm/lt(f))·f − (lcm/lt(g))·g; the leading terms cancel.
inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
    if (f.is_zero() || g.is_zero())
        throw ZeroInputError("s_polynomial of zero polynomial");
    require_same_ring(f.ring(), g.ring(), "s_polynomial");
    Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
    Polynomial left = Polynomial::zero(f.ring()).add_scaled(
        f.leading_coeff().inverse(), l / f.leading_monomial(), f);
    return left.add_scaled(-g.leading_coeff().inverse(), l / g.leading_monomial(), g);
}

/// Full multivariate division remainder of f by the basis elements.
/// Deterministic: the reducer is always the lowest-index element whose
/// leading term divides. No term of the result is divisible by any leading
/// term of the basis, and f − result lies in the ideal the basis generates.
inline Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                              const RingPtr& ring) {
    require_same_ring(f.ring(), ring, "normal_form");
    std::vector<Polynomial::Term> rem_terms;
    Polynomial cur = f;
    while (!cur.is_zero()) {
        const auto lt = cur.leading_term();
        const Polynomial* reducer = nullptr;
        for (const auto& g : basis) {
            if (g.is_zero()) continue;
            if (g.leading_monomial().divides(lt.mono)) {
                reducer = &g;
                break;
            }
        }
        if (reducer) {
            cur = cur.add_scaled(-(lt.coeff / reducer->leading_coeff()),
                                 lt.mono / reducer->leading_monomial(), *reducer);
        } else {
            // leading term is irreducible; shift it to the remainder
            rem_terms.push_back(lt);
            cur = cur.tail();
        }
    }
    return Polynomial::from_terms(ring, std::move(rem_terms));
}

inline Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis) {
    return normal_form(f, basis.elements, basis.ring ? basis.ring : f.ring());
}

struct BuchbergerOptions {
    bool sugar = false;  // sugar pair-selection strategy; default is normal (min lcm degree)
};

namespace detail {

struct Pair {
    std::size_t i, j;       // i < j
    Monomial lcm_mono;
    int lcm_deg;
    int sugar;
};

}  // namespace detail

/// Buchberger's algorithm. The output generates the same ideal as the input
/// and every S-polynomial of output pairs reduces to zero against it.
/// Product (coprime leads) and chain criteria prune the pair queue;
/// intermediate results are kept primitive to contain coefficient growth.
/// An empty input yields the empty basis of the zero ideal.
inline GroebnerBasis buchberger(const std::vector<Polynomial>& generators,
                                const RingPtr& ring,
                                const BuchbergerOptions& opts = {}) {
    std::vector<Polynomial> basis;
    std::vector<int> sugar_deg;
    for (const auto& g : generators) {
        require_same_ring(g.ring(), ring, "buchberger");
        if (!g.is_zero()) {
            basis.push_back(g.primitive());
            sugar_deg.push_back(g.total_degree());
        }
    }

    std::vector<detail::Pair> pending;
    std::set<std::pair<std::size_t, std::size_t>> done;
    auto push_pairs = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            Monomial l = lcm(basis[i].leading_monomial(), basis[j].leading_monomial());
            int sug = std::max(sugar_deg[i] - basis[i].total_degree(),
                               sugar_deg[j] - basis[j].total_degree()) + l.degree();
            pending.push_back({i, j, l, l.degree(), sug});
        }
    };
    for (std::size_t j = 0; j < basis.size(); ++j) push_pairs(j);

    auto select = [&]() {
        std::size_t best = 0;
        for (std::size_t k = 1; k < pending.size(); ++k) {
            const auto& a = pending[k];
            const auto& b = pending[best];
            auto key = [&](const detail::Pair& p) {
                return opts.sugar ? std::make_tuple(p.sugar, p.lcm_deg, p.i, p.j)
                                  : std::make_tuple(p.lcm_deg, static_cast<int>(p.i),
                                                    static_cast<std::size_t>(p.j), std::size_t{0});
            };
            if (key(a) < key(b)) best = k;
        }
        return best;
    };

    bool trivial = std::any_of(basis.begin(), basis.end(), [](const Polynomial& p) {
        return p.is_constant() && !p.is_zero();
    });

    while (!pending.empty() && !trivial) {
        std::size_t pick = select();
        detail::Pair p = pending[pick];
        pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(pick));
        done.insert({p.i, p.j});

        // product criterion
        if (coprime(basis[p.i].leading_monomial(), basis[p.j].leading_monomial()))
            continue;

        // chain criterion: a third element divides the lcm and both companion
        // pairs were already handled (strict divisibility guards the induction)
        bool chained = false;
        for (std::size_t k = 0; k < basis.size() && !chained; ++k) {
            if (k == p.i || k == p.j) continue;
            if (!basis[k].leading_monomial().divides(p.lcm_mono)) continue;
            auto pr1 = std::minmax(p.i, k);
            auto pr2 = std::minmax(p.j, k);
            if (!done.count({pr1.first, pr1.second}) || !done.count({pr2.first, pr2.second}))
                continue;
            Monomial l1 = lcm(basis[p.i].leading_monomial(), basis[k].leading_monomial());
            Monomial l2 = lcm(basis[p.j].leading_monomial(), basis[k].leading_monomial());
            if (l1 != p.lcm_mono && l2 != p.lcm_mono) chained = true;
        }
        if (chained) continue;

        Polynomial s = s_polynomial(basis[p.i], basis[p.j]);
        Polynomial h = normal_form(s, basis, ring);
        if (h.is_zero()) continue;
        h = h.primitive();
        if (h.is_constant()) trivial = true;
        basis.push_back(h);
        sugar_deg.push_back(p.sugar);
        push_pairs(basis.size() - 1);
    }

    if (trivial)
        return GroebnerBasis{ring, {Polynomial::constant(ring, 1)}, false};
    return GroebnerBasis{ring, std::move(basis), false};
}

/// Canonical reduced basis: minimal, fully inter-reduced, monic, sorted
/// ascending by leading monomial. Unique per (ideal, order).
inline GroebnerBasis reduce_basis(const GroebnerBasis& gb) {
    const RingPtr& ring = gb.ring;
    std::vector<Polynomial> elems;
    for (const auto& g : gb.elements)
        if (!g.is_zero()) elems.push_back(g.monic());

    // minimalize: drop any element whose lead is divisible by another's lead
    std::vector<bool> keep(elems.size(), true);
    for (std::size_t i = 0; i < elems.size(); ++i) {
        if (!keep[i]) continue;
        for (std::size_t j = 0; j < elems.size(); ++j) {
            if (i == j || !keep[j]) continue;
            if (elems[j].leading_monomial().divides(elems[i].leading_monomial())) {
                // on equal leading monomials keep the earlier element
                if (elems[i].leading_monomial() == elems[j].leading_monomial() && i < j)
                    continue;
                keep[i] = false;
                break;
            }
        }
    }
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < elems.size(); ++i)
        if (keep[i]) minimal.push_back(elems[i]);

    // inter-reduce tails
    std::vector<Polynomial> out(minimal.size());
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Polynomial r = normal_form(minimal[i], others, ring);
        out[i] = r.is_zero() ? r : r.monic();
    }
    out.erase(std::remove_if(out.begin(), out.end(),
                             [](const Polynomial& p) { return p.is_zero(); }),
              out.end());

    const MonomialOrder& ord = ring->order();
    std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
        return ord.less(a.leading_monomial(), b.leading_monomial());
    });
    return GroebnerBasis{ring, std::move(out), true};
}

/// Convenience: reduced basis straight from generators.
inline GroebnerBasis reduced_groebner(const std::vector<Polynomial>& generators,
                                      const RingPtr& ring,
                                      const BuchbergerOptions& opts = {}) {
    return reduce_basis(buchberger(generators, ring, opts));
}

}  // namespace satkit
