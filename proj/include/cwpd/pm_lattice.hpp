#pragma once

// Sparse Picard-Manin classes: a coefficient on the line class ell plus
// finitely many exceptional classes e_p, paired by the Minkowski-type form
//   c.d = c_ell d_ell - sum_p c_p d_p.

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include <json.hpp>

#include "cwpd/rational.hpp"

namespace cwpd::pm {

enum class Family : std::uint8_t { P, Q, Anonymous };

/// Names an exceptional class. P and Q labels belong to the base-point towers
/// of h_n and h_n^{-1} and carry the n they were built for; anonymous labels
/// stand for base points of other maps and for spare spatial directions.
class PointLabel {
   public:
    static PointLabel p(std::uint32_t n, std::uint32_t index);
    static PointLabel q(std::uint32_t n, std::uint32_t index);
    static PointLabel anonymous(std::uint32_t id);

    Family family() const { return family_; }
    std::uint32_t index() const { return index_; }
    /// Zero for anonymous labels.
    std::uint32_t context_n() const { return context_n_; }
    std::uint32_t anon_id() const { return anon_id_; }

    /// "p3@n2", "q0@n5", "a7".
    std::string to_string() const;
    static PointLabel parse(std::string_view text);

    friend auto operator<=>(const PointLabel&, const PointLabel&) = default;
    friend bool operator==(const PointLabel&, const PointLabel&) = default;

   private:
    PointLabel(Family f, std::uint32_t index, std::uint32_t n, std::uint32_t anon)
        : family_(f), index_(index), context_n_(n), anon_id_(anon) {}

    Family family_;
    std::uint32_t index_;
    std::uint32_t context_n_;
    std::uint32_t anon_id_;
};

namespace detail {
inline bool is_zero(const Rational& v) { return sgn(v) == 0; }
inline bool is_zero(double v) { return v == 0.0; }
}  // namespace detail

/// Finite-support class with coefficients in T, kept in canonical form
/// (no stored zero coefficient), so == is mathematical equality.
template <class T>
class BasicClass {
   public:
    using Map = std::map<PointLabel, T>;

    BasicClass() = default;

    static BasicClass ell(const T& coeff = T(1)) {
        BasicClass c;
        c.ell_ = coeff;
        return c;
    }
    static BasicClass exceptional(const PointLabel& label, const T& coeff = T(1)) {
        BasicClass c;
        c.add_exc(label, coeff);
        return c;
    }

    const T& ell_coeff() const { return ell_; }
    const Map& exc() const { return exc_; }
    T coeff(const PointLabel& label) const {
        auto it = exc_.find(label);
        return it == exc_.end() ? T(0) : it->second;
    }
    bool is_zero() const { return detail::is_zero(ell_) && exc_.empty(); }

    BasicClass& add_ell(const T& v) {
        ell_ += v;
        return *this;
    }
    BasicClass& add_exc(const PointLabel& label, const T& v) {
        if (detail::is_zero(v)) return *this;
        auto [it, inserted] = exc_.try_emplace(label, v);
        if (!inserted) {
            it->second += v;
            if (detail::is_zero(it->second)) exc_.erase(it);
        }
        return *this;
    }

    BasicClass& operator+=(const BasicClass& o) {
        ell_ += o.ell_;
        for (const auto& [label, v] : o.exc_) add_exc(label, v);
        return *this;
    }
    BasicClass& operator-=(const BasicClass& o) {
        ell_ -= o.ell_;
        for (const auto& [label, v] : o.exc_) add_exc(label, T(-v));
        return *this;
    }
    BasicClass& operator*=(const T& t) {
        if (detail::is_zero(t)) {
            ell_ = T(0);
            exc_.clear();
            return *this;
        }
        ell_ *= t;
        for (auto& entry : exc_) entry.second *= t;
        return *this;
    }

    friend BasicClass operator+(BasicClass a, const BasicClass& b) { return a += b; }
    friend BasicClass operator-(BasicClass a, const BasicClass& b) { return a -= b; }
    friend BasicClass operator-(BasicClass a) { return a *= T(-1); }
    friend BasicClass operator*(BasicClass a, const T& t) { return a *= t; }
    friend BasicClass operator*(const T& t, BasicClass a) { return a *= t; }
    friend bool operator==(const BasicClass& a, const BasicClass& b) {
        return a.ell_ == b.ell_ && a.exc_ == b.exc_;
    }

   private:
    T ell_{0};
    Map exc_;
};

using PMClass = BasicClass<Rational>;
using RealClass = BasicClass<double>;

template <class T>
T intersect(const BasicClass<T>& c, const BasicClass<T>& d) {
    T acc = c.ell_coeff() * d.ell_coeff();
    // Walk the smaller support.
    const auto& small = c.exc().size() <= d.exc().size() ? c : d;
    const auto& large = &small == &c ? d : c;
    for (const auto& [label, v] : small.exc()) {
        auto it = large.exc().find(label);
        if (it != large.exc().end()) acc -= v * it->second;
    }
    return acc;
}

inline PMClass add(const PMClass& c, const PMClass& d) { return c + d; }
inline PMClass scale(const PMClass& c, const Rational& t) { return c * t; }

/// c.c = 1 and c.ell > 0; ell is the ample reference class.
bool is_unit_timelike(const PMClass& c);

RealClass to_real(const PMClass& c);

/// {"ell": "p/q", "exc": [{"label": "q3@n2", "coeff": "p/q"}, ...]},
/// exceptional entries in label order.
nlohmann::ordered_json to_json(const PMClass& c);
PMClass pm_class_from_json(const nlohmann::ordered_json& j);

}  // namespace cwpd::pm
