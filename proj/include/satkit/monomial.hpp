#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <vector>

#include "satkit/errors.hpp"

namespace satkit {

/// Exponent vector of a power product. Length always matches the ambient
/// ring's variable count; entries are non-negative.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
    explicit Monomial(std::vector<int> exps) : e_(std::move(exps)) {}

    std::size_t size() const { return e_.size(); }
    int operator[](std::size_t i) const { return e_[i]; }
    int& operator[](std::size_t i) { return e_[i]; }
    const std::vector<int>& exponents() const { return e_; }

    int degree() const { return std::accumulate(e_.begin(), e_.end(), 0); }
    bool is_one() const {
        return std::all_of(e_.begin(), e_.end(), [](int x) { return x == 0; });
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e_ != b.e_; }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        check_sizes(a, b);
        Monomial r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) r.e_[i] = a.e_[i] + b.e_[i];
        return r;
    }

    /// True if this divides m componentwise.
    bool divides(const Monomial& m) const {
        check_sizes(*this, m);
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > m.e_[i]) return false;
        return true;
    }

    /// Exact quotient m / this (caller guarantees divisibility).
    friend Monomial operator/(const Monomial& a, const Monomial& b) {
        check_sizes(a, b);
        Monomial r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) r.e_[i] = a.e_[i] - b.e_[i];
        return r;
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        check_sizes(a, b);
        Monomial r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) r.e_[i] = std::max(a.e_[i], b.e_[i]);
        return r;
    }

    /// True if a and b share no variable (their gcd is 1).
    friend bool coprime(const Monomial& a, const Monomial& b) {
        check_sizes(a, b);
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a.e_[i] > 0 && b.e_[i] > 0) return false;
        return true;
    }

private:
    static void check_sizes(const Monomial& a, const Monomial& b) {
        if (a.size() != b.size())
            throw ArityMismatchError("monomial length mismatch");
    }
    std::vector<int> e_;
};

enum class Ordering { Less = -1, Equal = 0, Greater = 1 };

/// Total, multiplicative well-order on monomials.
///
/// Kinds: lex (first variable dominant), grevlex (degree first, ties broken
/// by the last variable with the smaller exponent winning), and block orders
/// (grevlex inside each of two blocks, the first block dominant). Block
/// orders have the elimination property for the leading block.
class MonomialOrder {
public:
    enum class Kind { Lex, Grevlex, Block };

    static MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0); }
    static MonomialOrder grevlex() { return MonomialOrder(Kind::Grevlex, 0); }
    static MonomialOrder block(std::size_t split) { return MonomialOrder(Kind::Block, split); }

    Kind kind() const { return kind_; }
    std::size_t split() const { return split_; }

    Ordering compare(const Monomial& a, const Monomial& b) const {
        if (a.size() != b.size())
            throw ArityMismatchError("monomial length mismatch in comparison");
        switch (kind_) {
            case Kind::Lex:
                return lex_cmp(a, b, 0, a.size());
            case Kind::Grevlex:
                return grevlex_cmp(a, b, 0, a.size());
            case Kind::Block: {
                Ordering first = grevlex_cmp(a, b, 0, std::min(split_, a.size()));
                if (first != Ordering::Equal) return first;
                return grevlex_cmp(a, b, std::min(split_, a.size()), a.size());
            }
        }
        return Ordering::Equal;  // unreachable
    }

    bool less(const Monomial& a, const Monomial& b) const {
        return compare(a, b) == Ordering::Less;
    }
    bool greater(const Monomial& a, const Monomial& b) const {
        return compare(a, b) == Ordering::Greater;
    }

    friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
        return a.kind_ == b.kind_ && (a.kind_ != Kind::Block || a.split_ == b.split_);
    }
    friend bool operator!=(const MonomialOrder& a, const MonomialOrder& b) {
        return !(a == b);
    }
    friend bool operator<(const MonomialOrder& a, const MonomialOrder& b) {
        if (a.kind_ != b.kind_) return a.kind_ < b.kind_;
        return a.kind_ == Kind::Block && a.split_ < b.split_;
    }

private:
    MonomialOrder(Kind k, std::size_t split) : kind_(k), split_(split) {}

    static Ordering lex_cmp(const Monomial& a, const Monomial& b,
                            std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            if (a[i] != b[i]) return a[i] > b[i] ? Ordering::Greater : Ordering::Less;
        }
        return Ordering::Equal;
    }

    static Ordering grevlex_cmp(const Monomial& a, const Monomial& b,
                                std::size_t lo, std::size_t hi) {
        int da = 0, db = 0;
        for (std::size_t i = lo; i < hi; ++i) { da += a[i]; db += b[i]; }
        if (da != db) return da > db ? Ordering::Greater : Ordering::Less;
        for (std::size_t i = hi; i-- > lo;) {
            if (a[i] != b[i]) return a[i] < b[i] ? Ordering::Greater : Ordering::Less;
        }
        return Ordering::Equal;
    }

    Kind kind_;
    std::size_t split_;
};

/// Spec-level comparison entry point.
inline Ordering monomial_compare(const MonomialOrder& order, const Monomial& a,
                                 const Monomial& b) {
    return order.compare(a, b);
}

}  // namespace satkit
