#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "satkit/errors.hpp"
#include "satkit/monomial.hpp"
#include "satkit/rational.hpp"
#include "satkit/ring.hpp"

namespace satkit {

/// Sparse multivariate polynomial over Q in canonical form: terms strictly
/// descending under the ring's monomial order, no zero coefficients.
/// Equality is structural equality. Values are immutable once built; all
/// operations return fresh polynomials.
class Polynomial {
public:
    struct Term {
        Rational coeff;
        Monomial mono;
    };

    Polynomial() = default;

    static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring), {}); }

    static Polynomial constant(RingPtr ring, Rational c) {
        std::vector<Term> t;
        if (!c.is_zero()) t.push_back({std::move(c), Monomial(ring->nvars())});
        return Polynomial(std::move(ring), std::move(t));
    }

    static Polynomial variable(RingPtr ring, std::size_t i) {
        Monomial m(ring->nvars());
        m[i] = 1;
        return term(std::move(ring), Rational(1), m);
    }

    static Polynomial term(RingPtr ring, Rational c, Monomial m) {
        std::vector<Term> t;
        if (!c.is_zero()) t.push_back({std::move(c), std::move(m)});
        return Polynomial(std::move(ring), std::move(t));
    }

    /// Builds canonical form from an arbitrary term list (merges duplicates,
    /// drops zeros, sorts descending).
    static Polynomial from_terms(RingPtr ring, std::vector<Term> terms) {
        const MonomialOrder& ord = ring->order();
        std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
            return ord.greater(a.mono, b.mono);
        });
        std::vector<Term> out;
        out.reserve(terms.size());
        for (auto& t : terms) {
            if (!out.empty() && out.back().mono == t.mono) {
                out.back().coeff += t.coeff;
                if (out.back().coeff.is_zero()) out.pop_back();
            } else if (!t.coeff.is_zero()) {
                out.push_back(std::move(t));
            }
        }
        return Polynomial(std::move(ring), std::move(out));
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t nterms() const { return terms_.size(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
    }

    const Term& leading_term() const {
        if (terms_.empty()) throw ZeroInputError("leading term of zero polynomial");
        return terms_.front();
    }
    const Monomial& leading_monomial() const { return leading_term().mono; }
    const Rational& leading_coeff() const { return leading_term().coeff; }

    int total_degree() const {
        int d = -1;
        for (const auto& t : terms_) d = std::max(d, t.mono.degree());
        return d;
    }

    /// Polynomial without its leading term.
    Polynomial tail() const {
        if (terms_.empty()) return *this;
        return Polynomial(ring_, std::vector<Term>(terms_.begin() + 1, terms_.end()));
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (!same_ring(a.ring_, b.ring_)) return false;
        if (a.terms_.size() != b.terms_.size()) return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            if (a.terms_[i].coeff != b.terms_[i].coeff || a.terms_[i].mono != b.terms_[i].mono)
                return false;
        return true;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial operator-() const {
        std::vector<Term> t = terms_;
        for (auto& x : t) x.coeff = -x.coeff;
        return Polynomial(ring_, std::move(t));
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        return merge(a, b, false);
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        return merge(a, b, true);
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        require_same_ring(a.ring_, b.ring_, "polynomial multiplication");
        if (a.is_zero() || b.is_zero()) return zero(a.ring_);
        const MonomialOrder& ord = a.ring_->order();
        auto cmp = [&](const Monomial& x, const Monomial& y) { return ord.greater(x, y); };
        std::map<Monomial, Rational, decltype(cmp)> acc(cmp);
        for (const auto& ta : a.terms_)
            for (const auto& tb : b.terms_) {
                Monomial m = ta.mono * tb.mono;
                auto [it, fresh] = acc.try_emplace(std::move(m), Rational(0));
                it->second += ta.coeff * tb.coeff;
            }
        std::vector<Term> out;
        out.reserve(acc.size());
        for (auto& [m, c] : acc)
            if (!c.is_zero()) out.push_back({std::move(c), m});
        return Polynomial(a.ring_, std::move(out));
    }

    Polynomial scaled(const Rational& c) const {
        if (c.is_zero()) return zero(ring_);
        std::vector<Term> t = terms_;
        for (auto& x : t) x.coeff *= c;
        return Polynomial(ring_, std::move(t));
    }

    /// this + c * x^m * g, the inner step of polynomial division.
    Polynomial add_scaled(const Rational& c, const Monomial& m, const Polynomial& g) const {
        require_same_ring(ring_, g.ring_, "add_scaled");
        const MonomialOrder& ord = ring_->order();
        std::vector<Term> out;
        out.reserve(terms_.size() + g.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < terms_.size() && j < g.terms_.size()) {
            Monomial gm = g.terms_[j].mono * m;
            Ordering o = ord.compare(terms_[i].mono, gm);
            if (o == Ordering::Greater) {
                out.push_back(terms_[i++]);
            } else if (o == Ordering::Less) {
                Rational cc = c * g.terms_[j].coeff;
                if (!cc.is_zero()) out.push_back({std::move(cc), std::move(gm)});
                ++j;
            } else {
                Rational cc = terms_[i].coeff + c * g.terms_[j].coeff;
                if (!cc.is_zero()) out.push_back({std::move(cc), std::move(gm)});
                ++i, ++j;
            }
        }
        for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
        for (; j < g.terms_.size(); ++j) {
            Rational cc = c * g.terms_[j].coeff;
            if (!cc.is_zero()) out.push_back({std::move(cc), g.terms_[j].mono * m});
        }
        return Polynomial(ring_, std::move(out));
    }

    Polynomial pow(unsigned e) const {
        Polynomial acc = constant(ring_, 1);
        Polynomial base = *this;
        for (; e; e >>= 1) {
            if (e & 1) acc = acc * base;
            if (e > 1) base = base * base;
        }
        return acc;
    }

    /// Leading coefficient scaled to 1.
    Polynomial monic() const {
        if (is_zero()) return *this;
        return scaled(leading_coeff().inverse());
    }

    /// Primitive part with positive leading coefficient: divides out the
    /// rational content. Keeps intermediate coefficient growth in check.
    Polynomial primitive() const {
        if (is_zero()) return *this;
        Rational g(0);
        for (const auto& t : terms_) g = content_gcd(g, t.coeff);
        if (leading_coeff().sign() < 0) g = -g;
        return scaled(g.inverse());
    }

    /// Exact evaluation at a rational point.
    Rational evaluate(const std::vector<Rational>& point) const {
        if (point.size() != ring_->nvars())
            throw ArityMismatchError("evaluation point length mismatch");
        Rational acc(0);
        for (const auto& t : terms_) {
            Rational v = t.coeff;
            for (std::size_t i = 0; i < point.size(); ++i)
                if (t.mono[i] > 0) v *= point[i].pow(static_cast<unsigned>(t.mono[i]));
            acc += v;
        }
        return acc;
    }

    /// Ring morphism induced by variable images: substitutes images[i] for
    /// variable i. The images live in (and the result is returned in) the
    /// target ring.
    Polynomial substitute(const RingPtr& target, const std::vector<Polynomial>& images) const {
        if (images.size() != ring_->nvars())
            throw ArityMismatchError("substitution image count mismatch");
        Polynomial acc = zero(target);
        for (const auto& t : terms_) {
            Polynomial prod = constant(target, t.coeff);
            for (std::size_t i = 0; i < images.size(); ++i)
                if (t.mono[i] > 0)
                    prod = prod * images[i].pow(static_cast<unsigned>(t.mono[i]));
            acc = acc + prod;
        }
        return acc;
    }

    /// Variable renaming / permutation: variable i of this ring becomes
    /// variable index_map[i] of the target ring. Exponents carry over.
    Polynomial map_vars(const RingPtr& target, const std::vector<std::size_t>& index_map) const {
        if (index_map.size() != ring_->nvars())
            throw ArityMismatchError("variable map length mismatch");
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (const auto& t : terms_) {
            Monomial m(target->nvars());
            for (std::size_t i = 0; i < index_map.size(); ++i) m[index_map[i]] = t.mono[i];
            out.push_back({t.coeff, std::move(m)});
        }
        return from_terms(target, std::move(out));
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& t : terms_) {
            Rational c = t.coeff;
            if (first) {
                if (c.sign() < 0) { os << "-"; c = -c; }
                first = false;
            } else {
                os << (c.sign() < 0 ? " - " : " + ");
                if (c.sign() < 0) c = -c;
            }
            if (t.mono.is_one()) {
                os << c.str();
                continue;
            }
            bool need_star = !c.is_one();
            if (need_star) os << c.str();
            for (std::size_t i = 0; i < t.mono.size(); ++i) {
                if (t.mono[i] == 0) continue;
                if (need_star) os << "*";
                os << ring_->var_name(i);
                if (t.mono[i] > 1) os << "^" << t.mono[i];
                need_star = true;
            }
        }
        return os.str();
    }

private:
    Polynomial(RingPtr ring, std::vector<Term> terms)
        : ring_(std::move(ring)), terms_(std::move(terms)) {}

    static Polynomial merge(const Polynomial& a, const Polynomial& b, bool subtract) {
        require_same_ring(a.ring_, b.ring_, "polynomial addition");
        const MonomialOrder& ord = a.ring_->order();
        std::vector<Term> out;
        out.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() && j < b.terms_.size()) {
            Ordering o = ord.compare(a.terms_[i].mono, b.terms_[j].mono);
            if (o == Ordering::Greater) {
                out.push_back(a.terms_[i++]);
            } else if (o == Ordering::Less) {
                Term t = b.terms_[j++];
                if (subtract) t.coeff = -t.coeff;
                out.push_back(std::move(t));
            } else {
                Rational c = subtract ? a.terms_[i].coeff - b.terms_[j].coeff
                                      : a.terms_[i].coeff + b.terms_[j].coeff;
                if (!c.is_zero()) out.push_back({std::move(c), a.terms_[i].mono});
                ++i, ++j;
            }
        }
        for (; i < a.terms_.size(); ++i) out.push_back(a.terms_[i]);
        for (; j < b.terms_.size(); ++j) {
            Term t = b.terms_[j];
            if (subtract) t.coeff = -t.coeff;
            out.push_back(std::move(t));
        }
        return Polynomial(a.ring_, std::move(out));
    }

    RingPtr ring_;
    std::vector<Term> terms_;
};

/// Spec-level arithmetic entry point.
enum class PolyOp { Add, Sub, Mul };

inline Polynomial poly_arith(PolyOp op, const Polynomial& f, const Polynomial& g) {
    switch (op) {
        case PolyOp::Add: return f + g;
        case PolyOp::Sub: return f - g;
        case PolyOp::Mul: return f * g;
    }
    throw Error("unknown polynomial operation");
}

inline Rational evaluate_poly(const Polynomial& f, const std::vector<Rational>& point) {
    return f.evaluate(point);
}

}  // namespace satkit
