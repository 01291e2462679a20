#ifndef VOATWIST_POLY_HPP
#define VOATWIST_POLY_HPP

#include <map>
#include <optional>
#include <vector>

#include "voatwist/rational.hpp"

namespace voatwist {

/// Sparse multivariate polynomial over Q with nonnegative integer exponents.
/// Variables are positional; the interpretation (z1..zn, w) lives one level up.
class Poly {
public:
    using Key = std::vector<int>;

    Poly() : nv_(0) {}
    explicit Poly(int nv) : nv_(nv) {}

    static Poly constant(int nv, const Rational& c) {
        Poly p(nv);
        if (c != 0) p.t_.emplace(Key(nv, 0), c);
        return p;
    }
    static Poly variable(int nv, int i) {
        Poly p(nv);
        Key k(nv, 0);
        k[i] = 1;
        p.t_.emplace(k, Rational(1));
        return p;
    }

    int nvars() const { return nv_; }
    bool is_zero() const { return t_.empty(); }
    const std::map<Key, Rational>& terms() const { return t_; }

    void add_term(const Key& k, const Rational& c) {
        if (c == 0) return;
        auto it = t_.find(k);
        if (it == t_.end()) t_.emplace(k, c);
        else {
            it->second += c;
            if (it->second == 0) t_.erase(it);
        }
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly r = a;
        for (auto& [k, c] : b.t_) r.add_term(k, c);
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        Poly r = a;
        for (auto& [k, c] : b.t_) r.add_term(k, -c);
        return r;
    }
    friend Poly operator*(const Poly& a, const Rational& c) {
        Poly r(a.nv_);
        if (c == 0) return r;
        for (auto& [k, q] : a.t_) r.t_.emplace(k, q * c);
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r(a.nv_);
        for (auto& [ka, ca] : a.t_)
            for (auto& [kb, cb] : b.t_) {
                Key k = ka;
                for (int i = 0; i < r.nv_; ++i) k[i] += kb[i];
                r.add_term(k, ca * cb);
            }
        return r;
    }

    Poly derivative(int var) const;
    /// Substitute x_var := x_target (both remain variables of the result).
    Poly substitute_var(int var, int target) const;
    /// Set x_var := 0 and check the result only involves the remaining vars.
    Poly at_zero(int var) const;
    /// Multiply by x_var^k (k >= 0).
    Poly shift(int var, int k) const;
    /// Exact division by (x_a - x_b); nullopt if not divisible.
    std::optional<Poly> divide_by_difference(int a, int b) const;
    /// Exact division by x_var^k when possible.
    std::optional<Poly> divide_by_power(int var, int k) const;

    int min_exp(int var) const;
    int max_exp(int var) const;

    /// Remove variable `var` (must not occur) and renumber the rest.
    Poly drop_var(int var) const;
    /// Insert a fresh (unused) variable at position `pos`.
    Poly insert_var(int pos) const;
    Poly permute(const std::vector<int>& perm) const;  // new[i] = old[perm[i]]

    friend bool operator==(const Poly& a, const Poly& b) { return a.nv_ == b.nv_ && a.t_ == b.t_; }

private:
    int nv_;
    std::map<Key, Rational> t_;
};

} // namespace voatwist

#endif
