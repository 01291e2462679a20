#include "voatwist/multipoint.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace voatwist {

namespace {

using LaurentKey = std::vector<Exponent>;
using Laurent = std::map<LaurentKey, Rational>;

void laurent_add(Laurent& l, const LaurentKey& k, const Rational& c) {
    if (c == 0) return;
    auto it = l.find(k);
    if (it == l.end()) l.emplace(k, c);
    else {
        it->second += c;
        if (it->second == 0) l.erase(it);
    }
}

} // namespace

Poly difference_power(int nv, int a, int b, int l) {
    Poly r = Poly::constant(nv, Rational(1));
    Poly d = Poly::variable(nv, a) - Poly::variable(nv, b);
    for (int i = 0; i < l; ++i) r = r * d;
    return r;
}

MultiPointFunction MultiPointFunction::constant(std::vector<std::string> vars, const Rational& c) {
    MultiPointFunction f(std::move(vars));
    f.num_ = Poly::constant(static_cast<int>(f.vars_.size()), c);
    return f;
}

MultiPointFunction MultiPointFunction::power(std::vector<std::string> vars, const std::string& var,
                                             const Exponent& e, const Rational& c) {
    MultiPointFunction f = constant(std::move(vars), c);
    if (!f.is_zero()) f.pref_[f.var_index(var)] = e;
    return f;
}

MultiPointFunction MultiPointFunction::inv_difference(std::vector<std::string> vars,
                                                      const std::string& a, const std::string& b,
                                                      int l, const Rational& c) {
    MultiPointFunction f = constant(std::move(vars), c);
    if (f.is_zero() || l == 0) return f;
    int ia = f.var_index(a), ib = f.var_index(b);
    if (ia > ib) {
        // (x_a - x_b)^{-l} = (-1)^l (x_b - x_a)^{-l}
        std::swap(ia, ib);
        if (l % 2 != 0) f.num_ = f.num_ * Rational(-1);
    }
    if (l < 0) {
        f.num_ = f.num_ * difference_power(static_cast<int>(f.vars_.size()), ia, ib, -l);
        f.canonicalize();
    } else {
        f.poles_[{ia, ib}] = l;
    }
    return f;
}

int MultiPointFunction::var_index(const std::string& name) const {
    for (size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return static_cast<int>(i);
    throw UnsupportedShape("unknown variable: " + name);
}

void MultiPointFunction::canonicalize() {
    if (num_.is_zero()) {
        poles_.clear();
        std::fill(pref_.begin(), pref_.end(), Exponent(0));
        return;
    }
    for (size_t v = 0; v < vars_.size(); ++v) {
        int m = num_.min_exp(static_cast<int>(v));
        if (m > 0) {
            num_ = *num_.divide_by_power(static_cast<int>(v), m);
            pref_[v] += Exponent(m);
        }
    }
    for (auto it = poles_.begin(); it != poles_.end();) {
        auto [ab, l] = *it;
        while (l > 0) {
            auto q = num_.divide_by_difference(ab.first, ab.second);
            if (!q) break;
            num_ = *q;
            --l;
        }
        if (l == 0) it = poles_.erase(it);
        else {
            it->second = l;
            ++it;
        }
    }
}

MultiPointFunction align_and_combine(const MultiPointFunction& a, const MultiPointFunction& b,
                                     bool subtract) {
    if (a.vars_ != b.vars_) throw UnsupportedShape("operands over different point sets");
    if (a.is_zero()) return subtract ? b * Rational(-1) : b;
    if (b.is_zero()) return a;
    int nv = static_cast<int>(a.vars_.size());
    MultiPointFunction r(a.vars_);
    std::vector<int> shift_a(nv), shift_b(nv);
    for (int v = 0; v < nv; ++v) {
        Exponent d = a.pref_[v] - b.pref_[v];
        if (!d.is_integer())
            throw UnsupportedShape("incompatible fractional prefactors in sum at " + a.vars_[v]);
        Exponent c = std::min(a.pref_[v], b.pref_[v]);
        r.pref_[v] = c;
        shift_a[v] = static_cast<int>((a.pref_[v] - c).num);
        shift_b[v] = static_cast<int>((b.pref_[v] - c).num);
    }
    std::map<std::pair<int, int>, int> allp = a.poles_;
    for (auto& [k, l] : b.poles_) allp[k] = std::max(allp.count(k) ? allp[k] : 0, l);
    Poly pa = a.num_, pb = b.num_;
    for (auto& [k, l] : allp) {
        int la = a.poles_.count(k) ? a.poles_.at(k) : 0;
        int lb = b.poles_.count(k) ? b.poles_.at(k) : 0;
        if (l > la) pa = pa * difference_power(nv, k.first, k.second, l - la);
        if (l > lb) pb = pb * difference_power(nv, k.first, k.second, l - lb);
    }
    for (int v = 0; v < nv; ++v) {
        if (shift_a[v]) pa = pa.shift(v, shift_a[v]);
        if (shift_b[v]) pb = pb.shift(v, shift_b[v]);
    }
    r.num_ = subtract ? pa - pb : pa + pb;
    r.poles_ = allp;
    r.canonicalize();
    return r;
}

MultiPointFunction operator+(const MultiPointFunction& a, const MultiPointFunction& b) {
    return align_and_combine(a, b, false);
}
MultiPointFunction operator-(const MultiPointFunction& a, const MultiPointFunction& b) {
    return align_and_combine(a, b, true);
}

MultiPointFunction operator*(const MultiPointFunction& a, const MultiPointFunction& b) {
    if (a.vars_ != b.vars_) throw UnsupportedShape("operands over different point sets");
    MultiPointFunction r(a.vars_);
    r.num_ = a.num_ * b.num_;
    if (r.num_.is_zero()) return r;
    for (size_t v = 0; v < a.vars_.size(); ++v) r.pref_[v] = a.pref_[v] + b.pref_[v];
    r.poles_ = a.poles_;
    for (auto& [k, l] : b.poles_) r.poles_[k] += l;
    r.canonicalize();
    return r;
}

MultiPointFunction operator*(const MultiPointFunction& a, const Rational& c) {
    MultiPointFunction r = a;
    r.num_ = r.num_ * c;
    if (r.num_.is_zero()) r = MultiPointFunction::zero(a.vars_);
    return r;
}

MultiPointFunction MultiPointFunction::derivative(const std::string& var) const {
    int v = var_index(var);
    MultiPointFunction t1 = *this;
    t1.num_ = num_.derivative(v);
    t1.canonicalize();
    MultiPointFunction acc = t1;
    if (!(pref_[v] == Exponent(0))) {
        MultiPointFunction t2 = *this;
        t2.num_ = num_ * pref_[v].to_rational();
        t2.pref_[v] -= Exponent(1);
        t2.canonicalize();
        acc += t2;
    }
    for (auto& [k, l] : poles_) {
        if (k.first != v && k.second != v) continue;
        Rational sign = (k.first == v) ? Rational(-l) : Rational(l);
        MultiPointFunction t3 = *this;
        t3.num_ = num_ * sign;
        t3.poles_[k] = l + 1;
        t3.canonicalize();
        acc += t3;
    }
    return acc;
}

MultiPointFunction MultiPointFunction::mul_power(const std::string& var, const Exponent& e) const {
    MultiPointFunction r = *this;
    if (!r.is_zero()) r.pref_[var_index(var)] += e;
    return r;
}

MultiPointFunction MultiPointFunction::mul_difference(const std::string& a, const std::string& b,
                                                      int k) const {
    if (k == 0 || is_zero()) return *this;
    int ia = var_index(a), ib = var_index(b);
    Rational sgn(1);
    if (ia > ib) {
        std::swap(ia, ib);
        if (k % 2 != 0) sgn = -1;
    }
    MultiPointFunction r = *this;
    if (k > 0) {
        r.num_ = r.num_ * difference_power(static_cast<int>(vars_.size()), ia, ib, k) * sgn;
    } else {
        r.num_ = r.num_ * sgn;
        r.poles_[{ia, ib}] += -k;
    }
    r.canonicalize();
    return r;
}

bool MultiPointFunction::rational_equal(const MultiPointFunction& other) const {
    if (vars_ != other.vars_) throw UnsupportedShape("rational_equal: different point sets");
    if (is_zero() || other.is_zero()) return is_zero() && other.is_zero();
    int nv = static_cast<int>(vars_.size());
    for (int v = 0; v < nv; ++v)
        if (!(pref_[v] - other.pref_[v]).is_integer()) return false;
    std::map<std::pair<int, int>, int> allp = poles_;
    for (auto& [k, l] : other.poles_) allp[k] = std::max(allp.count(k) ? allp[k] : 0, l);
    Poly pa = num_, pb = other.num_;
    for (auto& [k, l] : allp) {
        int la = poles_.count(k) ? poles_.at(k) : 0;
        int lb = other.poles_.count(k) ? other.poles_.at(k) : 0;
        if (l > la) pa = pa * difference_power(nv, k.first, k.second, l - la);
        if (l > lb) pb = pb * difference_power(nv, k.first, k.second, l - lb);
    }
    for (int v = 0; v < nv; ++v) {
        Exponent d = pref_[v] - other.pref_[v];
        if (d > Exponent(0)) pa = pa.shift(v, static_cast<int>(d.num));
        else if (Exponent(0) > d) pb = pb.shift(v, static_cast<int>(-d.num));
    }
    return pa == pb;
}

Exponent MultiPointFunction::coset(const std::string& var) const {
    Exponent e = pref_[var_index(var)];
    long long f = e.floor();
    return e - Exponent(f);
}

namespace {

struct VPole {
    int other;   // index of the second variable
    int order;   // l >= 1
    bool v_first;  // true: (v - x)^{-l}; false: (x - v)^{-l}
};

// coefficient of t^i in the expansion of the pole factor at v = 0
Rational pole_coef_at_zero(const VPole& p, long long i) {
    Rational b = binomial(Rational(-p.order), i);
    long long sgn_pow = p.v_first ? (p.order + i) : i;
    return (sgn_pow % 2 != 0) ? -b : b;
}

// coefficient of v^{-l-i} x^{i} in the expansion at v = infinity
Rational pole_coef_at_inf(const VPole& p, long long i) {
    Rational b = binomial(Rational(p.order + i - 1), i);
    return (p.v_first || p.order % 2 == 0) ? b : -b;
}

} // namespace

// Shared driver for the expansions and residues at var = 0 / infinity.
// Calls sink(e, laurent_key_over_remaining_vars, coefficient) for every term
// with v-exponent e in [elo, ehi].
void for_each_term_at_pole0_inf(const MultiPointFunction& f, const std::string& var, bool at_inf,
                                const Exponent& elo, const Exponent& ehi,
                                const std::function<void(const Exponent&, const LaurentKey&,
                                                         const Rational&)>& sink) {
    int v = f.var_index(var);
    int nv = static_cast<int>(f.vars().size());
    std::vector<VPole> vpoles;
    int total_order = 0;
    for (auto& [k, l] : f.poles()) {
        if (k.first == v) vpoles.push_back({k.second, l, true});
        else if (k.second == v) vpoles.push_back({k.first, l, false});
        if (k.first == v || k.second == v) total_order += l;
    }
    const Exponent rho = f.prefactors()[v];
    for (auto& [k, c] : f.numerator().terms()) {
        LaurentKey base;
        base.reserve(nv - 1);
        for (int i = 0; i < nv; ++i)
            if (i != v) base.push_back(Exponent(k[i]) + f.prefactors()[i]);
        Exponent e0 = rho + Exponent(k[v]);
        // recursive composition over the v-poles
        std::function<void(size_t, long long, const LaurentKey&, const Rational&)> rec =
            [&](size_t pi, long long isum, const LaurentKey& key, const Rational& coef) {
                if (pi == vpoles.size()) {
                    Exponent e = at_inf ? e0 - Exponent(total_order + isum) : e0 + Exponent(isum);
                    if (elo <= e && e <= ehi) sink(e, key, coef);
                    return;
                }
                const VPole& p = vpoles[pi];
                // bound the remaining index budget
                long long imax;
                if (at_inf) {
                    Exponent room = e0 - Exponent(total_order) - elo;
                    imax = room.floor() - isum;
                } else {
                    Exponent room = ehi - e0;
                    imax = room.floor() - isum;
                }
                int oi = p.other < v ? p.other : p.other - 1;
                for (long long i = 0; i <= imax; ++i) {
                    Rational pc = at_inf ? pole_coef_at_inf(p, i) : pole_coef_at_zero(p, i);
                    LaurentKey nk = key;
                    nk[oi] += at_inf ? Exponent(i) : Exponent(-p.order - i);
                    rec(pi + 1, isum + i, nk, coef * pc);
                }
            };
        rec(0, 0, base, c);
    }
}

namespace {

// Assemble an MPF over `vars` from a Laurent polynomial plus pass-through poles.
MultiPointFunction from_laurent(const std::vector<std::string>& vars, const Laurent& laur,
                                const std::map<std::pair<int, int>, int>& poles) {
    MultiPointFunction r = MultiPointFunction::zero(vars);
    if (laur.empty()) return r;
    int nv = static_cast<int>(vars.size());
    std::vector<Exponent> mins(nv, Exponent(0));
    bool first = true;
    for (auto& [k, c] : laur) {
        for (int i = 0; i < nv; ++i) mins[i] = first ? k[i] : std::min(mins[i], k[i]);
        first = false;
    }
    Poly num(nv);
    for (auto& [k, c] : laur) {
        Poly::Key pk(nv);
        for (int i = 0; i < nv; ++i) {
            Exponent d = k[i] - mins[i];
            if (!d.is_integer())
                throw UnsupportedShape("mixed exponent cosets in expansion coefficient");
            pk[i] = static_cast<int>(d.num);
        }
        num.add_term(pk, c);
    }
    MultiPointFunction acc = MultiPointFunction::zero(vars);
    for (auto& [k, c] : num.terms()) {
        MultiPointFunction m = MultiPointFunction::constant(vars, c);
        for (int i = 0; i < nv; ++i)
            if (k[i] != 0) m = m.mul_power(vars[i], Exponent(k[i]));
        acc += m;
    }
    for (int i = 0; i < nv; ++i)
        if (!(mins[i] == Exponent(0))) acc = acc.mul_power(vars[i], mins[i]);
    for (auto& [k, l] : poles) acc = acc.mul_difference(vars[k.first], vars[k.second], -l);
    return acc;
}

} // namespace

MultiPointFunction MultiPointFunction::residue_at_zero(const std::string& var) const {
    int v = var_index(var);
    std::vector<std::string> rest;
    for (size_t i = 0; i < vars_.size(); ++i)
        if (static_cast<int>(i) != v) rest.push_back(vars_[i]);
    std::map<std::pair<int, int>, int> rest_poles;
    for (auto& [k, l] : poles_) {
        if (k.first == v || k.second == v) continue;
        auto shift = [&](int i) { return i < v ? i : i - 1; };
        rest_poles[{shift(k.first), shift(k.second)}] = l;
    }
    if (!pref_[v].is_integer()) return zero(rest);
    Laurent laur;
    Exponent m1(-1);
    for_each_term_at_pole0_inf(*this, var, false, m1, m1,
                               [&](const Exponent&, const LaurentKey& k, const Rational& c) {
                                   laurent_add(laur, k, c);
                               });
    return from_laurent(rest, laur, rest_poles);
}

MultiPointFunction MultiPointFunction::residue_at_infinity(const std::string& var) const {
    int v = var_index(var);
    std::vector<std::string> rest;
    for (size_t i = 0; i < vars_.size(); ++i)
        if (static_cast<int>(i) != v) rest.push_back(vars_[i]);
    std::map<std::pair<int, int>, int> rest_poles;
    for (auto& [k, l] : poles_) {
        if (k.first == v || k.second == v) continue;
        auto shift = [&](int i) { return i < v ? i : i - 1; };
        rest_poles[{shift(k.first), shift(k.second)}] = l;
    }
    if (!pref_[v].is_integer()) return zero(rest);
    Laurent laur;
    Exponent m1(-1);
    for_each_term_at_pole0_inf(*this, var, true, m1, m1,
                               [&](const Exponent&, const LaurentKey& k, const Rational& c) {
                                   laurent_add(laur, k, c);
                               });
    return from_laurent(rest, laur, rest_poles);
}

MultiPointFunction MultiPointFunction::residue_at_diagonal(const std::string& var,
                                                           const std::string& base) const {
    int v = var_index(var), u = var_index(base);
    std::vector<std::string> rest;
    for (size_t i = 0; i < vars_.size(); ++i)
        if (static_cast<int>(i) != v) rest.push_back(vars_[i]);
    auto key = std::minmax(v, u);
    std::pair<int, int> pk{key.first, key.second};
    auto it = poles_.find(pk);
    if (it == poles_.end()) return zero(rest);
    int l = it->second;
    Rational orient(1);
    if (pk.first == u && l % 2 != 0) orient = -1;  // (u - v)^{-l} = (-1)^l (v-u)^{-l}
    MultiPointFunction g = *this;
    g.poles_.erase(pk);
    g.num_ = g.num_ * orient;
    for (int i = 0; i < l - 1; ++i) g = g.derivative(var);
    g.num_ = g.num_ * (Rational(1) / Rational(factorial(l - 1)));
    // substitute var := base
    MultiPointFunction r(rest);
    auto shift = [&](int i) { return i < v ? i : i - 1; };
    int ru = shift(u);
    Poly sub = g.num_.substitute_var(v, u).drop_var(v);
    r.num_ = sub;
    for (size_t i = 0; i < vars_.size(); ++i)
        if (static_cast<int>(i) != v) r.pref_[shift(static_cast<int>(i))] = g.pref_[i];
    r.pref_[ru] += g.pref_[v];
    for (auto& [k, pl] : g.poles_) {
        int a = k.first == v ? u : k.first;
        int b = k.second == v ? u : k.second;
        if (a == b) throw UnsupportedShape("degenerate pole after substitution");
        Rational sgn(1);
        int sa = shift(a), sb = shift(b);
        if (sa > sb) {
            std::swap(sa, sb);
            if (pl % 2 != 0) sgn = -1;
        }
        r.poles_[{sa, sb}] += pl;
        if (sgn != 1) r.num_ = r.num_ * sgn;
    }
    r.canonicalize();
    return r;
}

SeriesMPF MultiPointFunction::expand(const ExpansionSite& site, const Exponent& trunc) const {
    SeriesMPF out;
    out.var = site.var;
    int v = var_index(site.var);
    std::vector<std::string> rest;
    for (size_t i = 0; i < vars_.size(); ++i)
        if (static_cast<int>(i) != v) rest.push_back(vars_[i]);

    if (site.tag == ExpansionSite::AtZero || site.tag == ExpansionSite::AtInfinity) {
        bool at_inf = site.tag == ExpansionSite::AtInfinity;
        std::map<std::pair<int, int>, int> rest_poles;
        int vtot = 0;
        for (auto& [k, l] : poles_) {
            if (k.first == v || k.second == v) {
                vtot += l;
                continue;
            }
            auto shift = [&](int i) { return i < v ? i : i - 1; };
            rest_poles[{shift(k.first), shift(k.second)}] = l;
        }
        Exponent lo, hi;
        if (at_inf) {
            hi = pref_[v] + Exponent(num_.max_exp(v) - vtot);
            lo = trunc;
        } else {
            lo = pref_[v] + Exponent(num_.min_exp(v));
            hi = trunc;
        }
        std::map<Exponent, Laurent> buckets;
        for_each_term_at_pole0_inf(*this, site.var, at_inf, lo, hi,
                                   [&](const Exponent& e, const LaurentKey& k, const Rational& c) {
                                       laurent_add(buckets[e], k, c);
                                   });
        for (auto& [e, laur] : buckets) {
            MultiPointFunction coef = from_laurent(rest, laur, rest_poles);
            if (!coef.is_zero()) out.terms.emplace(e, coef);
        }
        out.window = {std::min(lo, hi), std::max(lo, hi)};
        if (is_zero()) out.window = {trunc, trunc};
        return out;
    }

    // diagonal: substitute var = base + t and expand every factor in t
    int u = var_index(site.base);
    auto shift = [&](int i) { return i < v ? i : i - 1; };
    int ru = shift(u);
    auto keyvu = std::minmax(v, u);
    int l0 = 0;
    auto itvu = poles_.find({keyvu.first, keyvu.second});
    if (itvu != poles_.end()) l0 = itvu->second;
    Rational orient(1);
    if (l0 > 0 && keyvu.first == u && l0 % 2 != 0) orient = -1;

    long long budget = (trunc + Exponent(l0)).floor();
    if (budget < 0) {
        out.window = {Exponent(-l0), trunc};
        return out;
    }
    using TSeries = std::map<long long, MultiPointFunction>;
    auto ts_mul = [&](const TSeries& A, const TSeries& B) {
        TSeries r;
        for (auto& [i, fa] : A)
            for (auto& [j, fb] : B) {
                if (i + j > budget) continue;
                MultiPointFunction p = fa * fb;
                if (p.is_zero()) continue;
                auto it2 = r.find(i + j);
                if (it2 == r.end()) r.emplace(i + j, p);
                else it2->second += p;
            }
        return r;
    };

    // base carries the v-free prefactors and poles
    MultiPointFunction basef = MultiPointFunction::constant(rest, orient);
    for (size_t i = 0; i < vars_.size(); ++i)
        if (static_cast<int>(i) != v && !(pref_[i] == Exponent(0)))
            basef = basef.mul_power(rest[shift(static_cast<int>(i))], pref_[i]);
    for (auto& [k, pl] : poles_) {
        if (k.first == v || k.second == v) continue;
        basef = basef.mul_difference(rest[shift(k.first)], rest[shift(k.second)], -pl);
    }
    TSeries acc;
    acc.emplace(0, basef);

    // numerator: v^a -> (base + t)^a
    {
        TSeries tnum;
        for (auto& [k, c] : num_.terms()) {
            MultiPointFunction mono = MultiPointFunction::constant(rest, c);
            for (size_t i = 0; i < vars_.size(); ++i)
                if (static_cast<int>(i) != v && k[i] != 0)
                    mono = mono.mul_power(rest[shift(static_cast<int>(i))], Exponent(k[i]));
            int a = k[v];
            for (int i = 0; i <= a && i <= budget; ++i) {
                MultiPointFunction term =
                    mono.mul_power(rest[ru], Exponent(a - i)) * binomial(Rational(a), i);
                if (term.is_zero()) continue;
                auto it2 = tnum.find(i);
                if (it2 == tnum.end()) tnum.emplace(i, term);
                else it2->second += term;
            }
        }
        acc = ts_mul(acc, tnum);
    }
    // v^{rho}: base^{rho - i} binom(rho, i) t^i
    if (!(pref_[v] == Exponent(0))) {
        TSeries tp;
        for (long long i = 0; i <= budget; ++i) {
            Rational b = binomial(pref_[v].to_rational(), i);
            if (b == 0) continue;
            tp.emplace(i, MultiPointFunction::power(rest, rest[ru], pref_[v] - Exponent(i), b));
        }
        acc = ts_mul(acc, tp);
    }
    // remaining v-poles against x != base
    for (auto& [k, pl] : poles_) {
        bool vfirst;
        int other;
        if (k.first == v) {
            vfirst = true;
            other = k.second;
        } else if (k.second == v) {
            vfirst = false;
            other = k.first;
        } else {
            continue;
        }
        if (other == u) continue;  // handled by t^{-l0}
        TSeries tp;
        for (long long i = 0; i <= budget; ++i) {
            // (v-x)^{-l} = ((u-x)+t)^{-l}; (x-v)^{-l} = ((x-u)-t)^{-l}
            Rational b = binomial(Rational(-pl), i);
            if (!vfirst && i % 2 != 0) b = -b;
            std::string first = vfirst ? rest[ru] : rest[shift(other)];
            std::string second = vfirst ? rest[shift(other)] : rest[ru];
            MultiPointFunction f =
                MultiPointFunction::inv_difference(rest, first, second, pl + static_cast<int>(i), b);
            if (!f.is_zero()) tp.emplace(i, f);
        }
        acc = ts_mul(acc, tp);
    }
    for (auto& [i, f] : acc) {
        Exponent e = Exponent(i - l0);
        if (e > trunc || f.is_zero()) continue;
        out.terms.emplace(e, f);
    }
    out.window = {Exponent(-l0), trunc};
    return out;
}

MultiPointFunction MultiPointFunction::rename_vars(const std::vector<std::string>& names) const {
    if (names.size() != vars_.size()) throw UnsupportedShape("rename_vars: arity mismatch");
    MultiPointFunction r = *this;
    r.vars_ = names;
    return r;
}

MultiPointFunction MultiPointFunction::embed(const std::vector<std::string>& names) const {
    MultiPointFunction r(names);
    std::vector<int> where(vars_.size(), -1);
    {
        size_t j = 0;
        for (size_t i = 0; i < names.size() && j < vars_.size(); ++i)
            if (names[i] == vars_[j]) where[j++] = static_cast<int>(i);
        if (j != vars_.size()) throw UnsupportedShape("embed: old variables must appear in order");
    }
    Poly p(static_cast<int>(names.size()));
    for (auto& [k, c] : num_.terms()) {
        Poly::Key nk(names.size(), 0);
        for (size_t j = 0; j < vars_.size(); ++j) nk[where[j]] = k[j];
        p.add_term(nk, c);
    }
    r.num_ = p;
    for (size_t j = 0; j < vars_.size(); ++j) r.pref_[where[j]] = pref_[j];
    for (auto& [k, l] : poles_) r.poles_[{where[k.first], where[k.second]}] = l;
    return r;
}

MultiPointFunction MultiPointFunction::reorder(const std::vector<std::string>& names) const {
    if (names.size() != vars_.size()) throw UnsupportedShape("reorder: arity mismatch");
    std::vector<int> perm(names.size());  // new index -> old index
    for (size_t i = 0; i < names.size(); ++i) perm[i] = var_index(names[i]);
    MultiPointFunction r(names);
    r.num_ = num_.permute(perm);
    for (size_t i = 0; i < names.size(); ++i) r.pref_[i] = pref_[perm[i]];
    std::vector<int> inv(names.size());
    for (size_t i = 0; i < names.size(); ++i) inv[perm[i]] = static_cast<int>(i);
    for (auto& [k, l] : poles_) {
        int a = inv[k.first], b = inv[k.second];
        Rational sgn(1);
        if (a > b) {
            std::swap(a, b);
            if (l % 2 != 0) sgn = -1;
        }
        r.poles_[{a, b}] = l;
        if (sgn != 1) r.num_ = r.num_ * sgn;
    }
    return r;
}

PuiseuxSeries MultiPointFunction::to_puiseux() const {
    if (vars_.size() != 1 || !poles_.empty())
        throw UnsupportedShape("to_puiseux: not a one-point Laurent function");
    PuiseuxSeries s(vars_[0], Window::all());
    for (auto& [k, c] : num_.terms()) s.add_term(pref_[0] + Exponent(k[0]), c);
    return s;
}

PuiseuxSeries SeriesMPF::to_scalar() const {
    PuiseuxSeries s(var, window);
    for (auto& [e, f] : terms) {
        bool constant = f.poles().empty();
        for (size_t i = 0; constant && i < f.vars().size(); ++i)
            constant = f.prefactors()[i] == Exponent(0) &&
                       f.numerator().max_exp(static_cast<int>(i)) == 0;
        if (!constant) throw UnsupportedShape("to_scalar: nonconstant coefficient");
        Rational c(0);
        for (auto& [k, q] : f.numerator().terms()) c += q;
        s.add_term(e, c);
    }
    return s;
}

Rational SeriesMPF::residue_scalar() const {
    Exponent m1(-1);
    if (m1 > window.hi) throw WindowTooNarrow("residue: -1 beyond window");
    auto it = terms.find(m1);
    if (it == terms.end()) return Rational(0);
    const MultiPointFunction& f = it->second;
    bool constant = f.poles().empty();
    for (size_t i = 0; constant && i < f.vars().size(); ++i)
        constant = f.prefactors()[i] == Exponent(0) &&
                   f.numerator().max_exp(static_cast<int>(i)) == 0;
    if (!constant) throw UnsupportedShape("residue_scalar: nonconstant coefficient");
    Rational c(0);
    for (auto& [k, q] : f.numerator().terms()) c += q;
    return c;
}

nlohmann::json MultiPointFunction::to_json() const {
    nlohmann::json monos = nlohmann::json::array();
    for (auto& [k, c] : num_.terms()) {
        nlohmann::json m;
        m["coef"] = rat_str(c);
        m["exps"] = k;
        monos.push_back(m);
    }
    nlohmann::json prefs = nlohmann::json::object();
    for (size_t i = 0; i < vars_.size(); ++i)
        if (!(pref_[i] == Exponent(0))) prefs[vars_[i]] = pref_[i].str();
    nlohmann::json poles = nlohmann::json::array();
    for (auto& [k, l] : poles_)
        poles.push_back({{"a", vars_[k.first]}, {"b", vars_[k.second]}, {"order", l}});
    return {{"vars", vars_}, {"numerator", monos}, {"prefactors", prefs}, {"poles", poles}};
}

std::string MultiPointFunction::to_latex() const {
    if (is_zero()) return "0";
    std::ostringstream num, den;
    bool first = true;
    for (auto& [k, c] : num_.terms()) {
        Rational cc = c;
        if (!first) num << (cc < 0 ? " - " : " + ");
        else if (cc < 0) num << "-";
        first = false;
        if (cc < 0) cc = -cc;
        bool printed = false;
        if (cc != 1) {
            num << rat_str(cc);
            printed = true;
        }
        for (size_t i = 0; i < vars_.size(); ++i) {
            Exponent e = Exponent(k[i]) + pref_[i];
            if (e == Exponent(0)) continue;
            num << vars_[i];
            if (!(e == Exponent(1))) num << "^{" << e.str() << "}";
            printed = true;
        }
        if (!printed) num << "1";
    }
    for (auto& [k, l] : poles_) {
        den << "(" << vars_[k.first] << "-" << vars_[k.second] << ")";
        if (l != 1) den << "^{" << l << "}";
    }
    std::string d = den.str();
    if (d.empty()) return num.str();
    return "\\frac{" + num.str() + "}{" + d + "}";
}

} // namespace voatwist
