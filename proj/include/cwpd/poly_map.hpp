#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "cwpd/polynomial.hpp"

namespace cwpd::cremona {

/// Polynomial map (x, y) -> (comp_x, comp_y) of the affine plane.
class PolyMap {
   public:
    PolyMap(Polynomial comp_x, Polynomial comp_y);

    static PolyMap identity(Field f);
    /// a: (x, y) -> (y, x).
    static PolyMap swap(Field f);
    /// h_n: (x, y) -> (y, y^n - x).
    static PolyMap hn(unsigned n, Field f);
    /// h_n^{-1}: (x, y) -> (x^n - y, x).
    static PolyMap hn_inverse(unsigned n, Field f);
    /// j_n: (x, y) -> (y^n - x, y).
    static PolyMap jn(unsigned n, Field f);
    /// (a x + b, c y + d).
    static PolyMap affine_diagonal(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d);

    /// "[Q] x + 1; y^2" or "[Fp:7] 2*x; 4*y".
    static PolyMap parse(std::string_view text);
    std::string to_string() const;

    const Polynomial& comp_x() const { return x_; }
    const Polynomial& comp_y() const { return y_; }
    const Field& field() const { return x_.field(); }

    friend bool operator==(const PolyMap&, const PolyMap&) = default;
    friend bool operator<(const PolyMap& f, const PolyMap& g) {
        if (f.x_ == g.x_) return f.y_ < g.y_;
        return f.x_ < g.x_;
    }

   private:
    Polynomial x_;
    Polynomial y_;
};

/// f o g, i.e. (x, y) -> f(g(x, y)).
PolyMap compose(const PolyMap& f, const PolyMap& g);

/// Largest total degree of the two components. Throws for constant maps.
unsigned degree(const PolyMap& f);

struct AffineDiagonal {
    Scalar a, b, c, d;
};

/// Coefficients of f when f = (a x + b, c y + d) with a, c != 0.
std::optional<AffineDiagonal> as_affine_diagonal(const PolyMap& f);

/// h_n o f o h_n^{-1} (direction +1) or h_n^{-1} o f o h_n (direction -1)
/// for f = (a x + b, c y + d). Throws for non-affine input or when the
/// characteristic divides n.
PolyMap conjugate_by_hn(const PolyMap& f, unsigned n, int direction);

/// For maps of degree <= 1: whether the extension to P^2 fixes
/// p0 = [1:0:0] (no x-term in comp_y), resp. q0 = [0:1:0] (no y-term in comp_x).
bool preserves_p0(const PolyMap& f);
bool preserves_q0(const PolyMap& f);

}  // namespace cwpd::cremona
