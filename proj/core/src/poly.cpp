#include "voatwist/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace voatwist {

Poly Poly::derivative(int var) const {
    Poly r(nv_);
    for (auto& [k, c] : t_) {
        if (k[var] == 0) continue;
        Key nk = k;
        nk[var] -= 1;
        r.add_term(nk, c * k[var]);
    }
    return r;
}

Poly Poly::substitute_var(int var, int target) const {
    Poly r(nv_);
    for (auto& [k, c] : t_) {
        Key nk = k;
        nk[target] += nk[var];
        nk[var] = 0;
        r.add_term(nk, c);
    }
    return r;
}

Poly Poly::at_zero(int var) const {
    Poly r(nv_);
    for (auto& [k, c] : t_)
        if (k[var] == 0) r.add_term(k, c);
    return r;
}

Poly Poly::shift(int var, int k0) const {
    Poly r(nv_);
    for (auto& [k, c] : t_) {
        Key nk = k;
        nk[var] += k0;
        if (nk[var] < 0) throw std::invalid_argument("Poly::shift: negative exponent");
        r.t_.emplace(nk, c);
    }
    return r;
}

std::optional<Poly> Poly::divide_by_difference(int a, int b) const {
    if (is_zero()) return Poly(nv_);
    // remainder = substitution x_a := x_b must vanish
    if (!substitute_var(a, b).is_zero()) return std::nullopt;
    // quotient: with p = sum_k c_k x_a^k (c_k free of x_a),
    // q = sum_{k>=1} x_a^{k-1} sum_{j>=k} c_j x_b^{j-k}
    Poly q(nv_);
    for (auto& [k, c] : t_) {
        int e = k[a];
        for (int m = 1; m <= e; ++m) {
            Key nk = k;
            nk[a] = m - 1;
            nk[b] += e - m;
            q.add_term(nk, c);
        }
    }
    return q;
}

std::optional<Poly> Poly::divide_by_power(int var, int k0) const {
    Poly r(nv_);
    for (auto& [k, c] : t_) {
        if (k[var] < k0) return std::nullopt;
        Key nk = k;
        nk[var] -= k0;
        r.t_.emplace(nk, c);
    }
    return r;
}

int Poly::min_exp(int var) const {
    int m = -1;
    for (auto& [k, c] : t_) m = (m < 0) ? k[var] : std::min(m, k[var]);
    return m < 0 ? 0 : m;
}

int Poly::max_exp(int var) const {
    int m = 0;
    for (auto& [k, c] : t_) m = std::max(m, k[var]);
    return m;
}

Poly Poly::drop_var(int var) const {
    Poly r(nv_ - 1);
    for (auto& [k, c] : t_) {
        if (k[var] != 0) throw std::invalid_argument("Poly::drop_var: variable occurs");
        Key nk;
        nk.reserve(nv_ - 1);
        for (int i = 0; i < nv_; ++i)
            if (i != var) nk.push_back(k[i]);
        r.t_.emplace(std::move(nk), c);
    }
    return r;
}

Poly Poly::insert_var(int pos) const {
    Poly r(nv_ + 1);
    for (auto& [k, c] : t_) {
        Key nk;
        nk.reserve(nv_ + 1);
        for (int i = 0; i < pos; ++i) nk.push_back(k[i]);
        nk.push_back(0);
        for (int i = pos; i < nv_; ++i) nk.push_back(k[i]);
        r.t_.emplace(std::move(nk), c);
    }
    return r;
}

Poly Poly::permute(const std::vector<int>& perm) const {
    Poly r(nv_);
    for (auto& [k, c] : t_) {
        Key nk(nv_);
        for (int i = 0; i < nv_; ++i) nk[i] = k[perm[i]];
        r.t_.emplace(std::move(nk), c);
    }
    return r;
}

} // namespace voatwist
