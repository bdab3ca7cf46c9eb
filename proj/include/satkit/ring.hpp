#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "satkit/errors.hpp"
#include "satkit/monomial.hpp"

namespace satkit {

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

/// Ambient polynomial ring Q[v1,...,vn] with a fixed monomial order.
/// Variable names are unique within a ring. Rings compare structurally.
class PolyRing {
public:
    PolyRing(std::vector<std::string> vars, MonomialOrder order)
        : vars_(std::move(vars)), order_(order) {
        for (std::size_t i = 0; i < vars_.size(); ++i)
            for (std::size_t j = i + 1; j < vars_.size(); ++j)
                if (vars_[i] == vars_[j])
                    throw Error("duplicate variable name '" + vars_[i] + "'");
    }

    const std::vector<std::string>& vars() const { return vars_; }
    std::size_t nvars() const { return vars_.size(); }
    const std::string& var_name(std::size_t i) const { return vars_[i]; }
    const MonomialOrder& order() const { return order_; }

    std::optional<std::size_t> var_index(const std::string& name) const {
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == name) return i;
        return std::nullopt;
    }

    friend bool operator==(const PolyRing& a, const PolyRing& b) {
        return a.vars_ == b.vars_ && a.order_ == b.order_;
    }
    friend bool operator!=(const PolyRing& a, const PolyRing& b) { return !(a == b); }

private:
    std::vector<std::string> vars_;
    MonomialOrder order_;
};

inline RingPtr make_ring(std::vector<std::string> vars,
                         MonomialOrder order = MonomialOrder::grevlex()) {
    return std::make_shared<PolyRing>(std::move(vars), order);
}

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
    return a == b || (a && b && *a == *b);
}

inline void require_same_ring(const RingPtr& a, const RingPtr& b, const char* where) {
    if (!same_ring(a, b))
        throw RingMismatchError(std::string("ring mismatch in ") + where);
}

}  // namespace satkit
