#include "voatwist/voa.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <sstream>

namespace voatwist {

namespace {

Rational voa_weight(const VOAInstance& voa, const Monomial& m) {
    Rational w(0);
    for (auto& hm : m.modes) w += -hm.mode.to_rational();
    if (!m.lattice.empty()) w += voa.pair(m.lattice, m.lattice) / 2;
    return w;
}

// alpha_gen(x) applied to a normal-ordered monomial, for a module whose
// Heisenberg modes live in coset + Z. Pure creation/annihilation plus the
// zero-mode pairing against the lattice tail.
GradedVector gen_mode_impl(const VOAInstance& voa, const Exponent& coset, int gen,
                           const Exponent& x, const Monomial& v) {
    GradedVector out;
    if (!(x - coset).is_integer()) return out;
    if (x < Exponent(0)) {
        Monomial r = v;
        HeisMode hm{gen, x};
        auto pos = std::lower_bound(r.modes.begin(), r.modes.end(), hm);
        r.modes.insert(pos, hm);
        out.add(r, Rational(1));
        return out;
    }
    if (x == Exponent(0)) {
        if (!v.lattice.empty()) {
            Rational c = voa.pair_gen(gen, v.lattice);
            out.add(v, c);
        }
        return out;
    }
    for (size_t p = 0; p < v.modes.size(); ++p) {
        if (v.modes[p].mode == -x) {
            Monomial r = v;
            r.modes.erase(r.modes.begin() + p);
            out.add(r, x.to_rational() * voa.gram[gen][v.modes[p].gen]);
        }
    }
    return out;
}

// partitions of `target` into parts from {1,2,...} (half_odd=false) or
// {1/2,3/2,...} (half_odd=true), parts listed descending
void for_partitions(const Exponent& target, bool half_odd,
                    const std::function<void(const std::vector<Exponent>&)>& fn) {
    long long scale = half_odd ? 2 : 1;
    Exponent t = scale * target;
    if (!t.is_integer() || t < Exponent(0)) return;
    long long n = t.num;
    std::vector<long long> parts;
    std::function<void(long long, long long)> rec = [&](long long rem, long long maxp) {
        if (rem == 0) {
            std::vector<Exponent> out;
            out.reserve(parts.size());
            for (long long p : parts) out.push_back(Exponent(p, scale));
            fn(out);
            return;
        }
        long long start = std::min(rem, maxp);
        for (long long p = start; p >= 1; --p) {
            if (half_odd && p % 2 == 0) continue;
            parts.push_back(p);
            rec(rem - p, p);
            parts.pop_back();
        }
    };
    if (n == 0) {
        fn({});
        return;
    }
    rec(n, n);
}

} // namespace

VOAInstance VOAInstance::heisenberg(int rank, std::vector<std::vector<Rational>> gram, Twist tw) {
    VOAInstance v;
    v.kind = Kind::Heisenberg;
    v.rank = rank;
    v.gram = std::move(gram);
    v.twist = tw;
    v.T = tw == Twist::Theta ? 2 : 1;
    return v;
}

VOAInstance VOAInstance::heisenberg_rank1(Twist tw) {
    return heisenberg(1, {{Rational(2)}}, tw);
}

VOAInstance VOAInstance::lattice_a1(Twist tw) {
    VOAInstance v = heisenberg(1, {{Rational(2)}}, tw);
    v.kind = Kind::LatticeA1;
    return v;
}

Rational VOAInstance::pair(const std::vector<Rational>& a, const std::vector<Rational>& b) const {
    Rational r(0);
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) r += a[i] * gram[i][j] * b[j];
    return r;
}

Rational VOAInstance::pair_gen(int i, const std::vector<Rational>& b) const {
    Rational r(0);
    for (int j = 0; j < rank; ++j) r += gram[i][j] * b[j];
    return r;
}

GradedVector VOAInstance::vacuum() const {
    Monomial m;
    if (is_lattice()) m.lattice.assign(rank, Rational(0));
    return GradedVector::single(m);
}

GradedVector VOAInstance::conformal_vector() const {
    // invert the Gram matrix
    int d = rank;
    std::vector<std::vector<Rational>> a = gram, inv(d, std::vector<Rational>(d, Rational(0)));
    for (int i = 0; i < d; ++i) inv[i][i] = 1;
    for (int c = 0; c < d; ++c) {
        int p = c;
        while (p < d && a[p][c] == 0) ++p;
        if (p == d) throw CalcError("degenerate bilinear form");
        std::swap(a[p], a[c]);
        std::swap(inv[p], inv[c]);
        Rational inv_piv = Rational(1) / a[c][c];
        for (int j = 0; j < d; ++j) {
            a[c][j] *= inv_piv;
            inv[c][j] *= inv_piv;
        }
        for (int r = 0; r < d; ++r) {
            if (r == c || a[r][c] == 0) continue;
            Rational f = a[r][c];
            for (int j = 0; j < d; ++j) {
                a[r][j] -= f * a[c][j];
                inv[r][j] -= f * inv[c][j];
            }
        }
    }
    GradedVector omega;
    for (int i = 0; i < d; ++i) {
        for (int j = i; j < d; ++j) {
            Rational c = inv[i][j] / 2;
            if (i != j) c *= 2;
            if (c == 0) continue;
            Monomial m;
            m.modes = {HeisMode{i, Exponent(-1)}, HeisMode{j, Exponent(-1)}};
            std::sort(m.modes.begin(), m.modes.end());
            if (is_lattice()) m.lattice.assign(rank, Rational(0));
            omega.add(m, c);
        }
    }
    return omega;
}

Module::Module(VOAInstance voa, ModuleId id) : voa_(std::move(voa)), id_(std::move(id)) {
    switch (id_.kind) {
        case ModuleId::Kind::Vacuum:
            h_ = 0;
            break;
        case ModuleId::Kind::HeisLambda:
            h_ = voa_.pair(id_.lambda, id_.lambda) / 2;
            break;
        case ModuleId::Kind::LatticeCoset: {
            // lowest weight over the coset mu + L (rank one scan)
            Rational best;
            bool first = true;
            for (long long k = -8; k <= 8; ++k) {
                std::vector<Rational> b = id_.lambda;
                b[0] += k;
                Rational w = voa_.pair(b, b) / 2;
                if (first || w < best) {
                    best = w;
                    first = false;
                }
            }
            h_ = best;
            break;
        }
        case ModuleId::Kind::TwistedFock:
            h_ = Rational(voa_.rank, 16);
            break;
        case ModuleId::Kind::TwistedLattice:
            h_ = Rational(voa_.rank, 16);
            break;
    }
    if (twisted() && voa_.twist != Twist::Theta)
        throw SectorMismatch("twisted module over an untwisted instance");
}

Rational Module::degree(const Monomial& m) const {
    Rational d(0);
    for (auto& hm : m.modes) d += -hm.mode.to_rational();
    switch (id_.kind) {
        case ModuleId::Kind::Vacuum:
            if (!m.lattice.empty()) d += voa_.pair(m.lattice, m.lattice) / 2;
            break;
        case ModuleId::Kind::LatticeCoset:
            d += voa_.pair(m.lattice, m.lattice) / 2 - h_;
            break;
        default:
            break;
    }
    return d;
}

Rational Module::degree(const GradedVector& v) const {
    bool first = true;
    Rational d(0);
    for (auto& [m, c] : v.terms()) {
        Rational dm = degree(m);
        if (first) {
            d = dm;
            first = false;
        } else if (!(dm == d)) {
            throw NotHomogeneous("vector is not degree-homogeneous");
        }
    }
    return d;
}

bool Module::valid_monomial(const Monomial& m) const {
    Exponent coset = gen_coset();
    for (auto& hm : m.modes)
        if (!(hm.mode < Exponent(0)) || !(hm.mode - (-coset)).is_integer()) return false;
    switch (id_.kind) {
        case ModuleId::Kind::Vacuum:
            if (voa_.is_lattice()) {
                if (m.lattice.size() != static_cast<size_t>(voa_.rank)) return false;
                for (auto& c : m.lattice)
                    if (!is_integer(c)) return false;
            } else if (!m.lattice.empty()) {
                return false;
            }
            return m.tchi == 0;
        case ModuleId::Kind::HeisLambda:
            return m.lattice == id_.lambda && m.tchi == 0;
        case ModuleId::Kind::LatticeCoset: {
            if (m.lattice.size() != static_cast<size_t>(voa_.rank) || m.tchi != 0) return false;
            for (int i = 0; i < voa_.rank; ++i)
                if (!is_integer(m.lattice[i] - id_.lambda[i])) return false;
            return true;
        }
        case ModuleId::Kind::TwistedFock:
            return m.lattice.empty() && m.tchi == 0;
        case ModuleId::Kind::TwistedLattice:
            return m.lattice.empty() && m.tchi == id_.chi;
    }
    return false;
}

GradedVector Module::apply_gen(int gen, const Exponent& x, const Monomial& v) const {
    return gen_mode_impl(voa_, gen_coset(), gen, x, v);
}

GradedVector Module::lattice_op(const std::vector<Rational>& beta, const Exponent& n,
                                const Monomial& v) const {
    if (voa_.rank != 1) throw CalcError("lattice operators supported for rank one only");
    GradedVector out;
    const Rational b = beta[0];
    const bool tw = twisted();
    if (tw && id_.kind != ModuleId::Kind::TwistedLattice) return out;  // no e^beta action
    Rational scalar(1);
    Exponent base_pow(0);
    if (tw) {
        if (!is_integer(b)) throw SectorMismatch("twisted lattice operator with fractional label");
        Rational bb = voa_.pair(beta, beta);  // 2 b^2
        scalar = rat_pow(Rational(2), -to_ll(bb));
        scalar *= rat_pow(Rational(v.tchi), to_ll(b));
        base_pow = -Exponent::from_rational(bb / 2);
    } else {
        if (v.lattice.size() != static_cast<size_t>(voa_.rank))
            throw SectorMismatch("lattice operator on a vector without group-algebra tail");
        Rational pz = voa_.pair(beta, v.lattice);
        base_pow = Exponent::from_rational(pz);
    }
    // run over subsets of the creation modes absorbed by E^+
    size_t k = v.modes.size();
    for (size_t mask = 0; mask < (size_t(1) << k); ++mask) {
        Rational coef = scalar;
        Exponent pow = base_pow;
        Monomial kept;
        kept.lattice = v.lattice;
        kept.tchi = v.tchi;
        for (size_t p = 0; p < k; ++p) {
            if (mask & (size_t(1) << p)) {
                coef *= -voa_.pair_gen(v.modes[p].gen, beta);
                pow += v.modes[p].mode;
            } else {
                kept.modes.push_back(v.modes[p]);
            }
        }
        if (coef == 0) continue;
        if (!tw) {
            kept.lattice[0] = v.lattice[0] + b;
        }
        // E^- insertions must supply z^{-n-1-pow}
        Exponent target = Exponent(-1) - n - pow;
        for_partitions(target, tw, [&](const std::vector<Exponent>& parts) {
            Rational c = coef;
            Monomial res = kept;
            Exponent prev(0);
            long long run = 1;
            for (auto& pt : parts) {
                c *= b / pt.to_rational();
                if (pt == prev) {
                    ++run;
                    c /= run;
                } else {
                    prev = pt;
                    run = 1;
                }
                HeisMode hm{0, -pt};
                auto pos = std::lower_bound(res.modes.begin(), res.modes.end(), hm);
                res.modes.insert(pos, hm);
            }
            out.add(res, c);
        });
    }
    return out;
}

GradedVector Module::act(const GradedVector& a, const Exponent& n, const GradedVector& v) const {
    GradedVector out;
    for (auto& [ma, ca] : a.terms())
        for (auto& [mv, cv] : v.terms()) out += act(ma, n, mv) * (ca * cv);
    return out;
}

GradedVector Module::act(const Monomial& a, const Exponent& n, const Monomial& v) const {
    if (a.tchi != 0) throw SectorMismatch("module vector used as an operator");
    if (a.modes.empty()) {
        if (a.lattice.empty()) return n == Exponent(-1) ? GradedVector::single(v) : GradedVector();
        bool zero_label = true;
        for (auto& c : a.lattice) zero_label = zero_label && c == 0;
        if (zero_label && !voa_.is_lattice())
            return n == Exponent(-1) ? GradedVector::single(v) : GradedVector();
        return lattice_op(a.lattice, n, v);
    }
    auto key = std::make_tuple(a, n, v);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const HeisMode lead = a.modes[0];
    const Exponent l = lead.mode;  // negative integer
    Monomial b = a;
    b.modes.erase(b.modes.begin());
    const Exponent rho = gen_coset();
    const Rational wt_b = voa_weight(voa_, b);
    const Rational deg_v = degree(v);
    const long long lpar = ((l.num % 2) + 2) % 2;

    GradedVector acc;
    // sum over a1-modes to the left of b-modes
    {
        Rational bound = wt_b + deg_v - 1;  // b_(x) v = 0 beyond
        for (long long i = 0;; ++i) {
            Exponent bmode = n - rho + Exponent(i);
            if (bmode.to_rational() > bound) break;
            GradedVector w = act(b, bmode, v);
            if (w.is_zero()) continue;
            Rational c = binomial(Rational(l.num), i);
            if (i % 2 != 0) c = -c;
            if (c == 0) continue;
            for (auto& [mw, cw] : w.terms()) acc += apply_gen(lead.gen, rho + l - Exponent(i), mw) * (c * cw);
        }
    }
    // sum with a1-modes against v first
    {
        for (long long i = 0;; ++i) {
            Exponent x = rho + Exponent(i);
            if (x.to_rational() > deg_v) break;
            GradedVector u = apply_gen(lead.gen, x, v);
            if (u.is_zero()) continue;
            Rational c = binomial(Rational(l.num), i);
            if ((lpar + i) % 2 != 0) c = -c;
            if (c == 0) continue;
            acc += act(GradedVector::single(b), n - rho + l - Exponent(i), u) * (-c);
        }
    }
    // index-shift corrections (vanish on untwisted modules)
    if (!(rho == Exponent(0))) {
        for (long long j = 1;; ++j) {
            Exponent x = l + Exponent(j);
            if (x.to_rational() > wt_b) break;
            GradedVector c = gen_mode_impl(voa_, Exponent(0), lead.gen, x, b);
            if (c.is_zero()) continue;
            Rational bc = binomial(rho.to_rational(), j);
            if (bc == 0) continue;
            acc += act(c, n - Exponent(j), GradedVector::single(v)) * (-bc);
        }
    }
    memo_.emplace(std::move(key), acc);
    return acc;
}

GradedVector Module::l_op(long long n, const GradedVector& v) const {
    return act(voa_.conformal_vector(), Exponent(n + 1), v);
}

GradedVector Module::zero_mode(const GradedVector& a, const GradedVector& v) const {
    Module vac(voa_, ModuleId::vacuum());
    Rational w = weight_of(vac, a);
    if (!is_integer(w)) throw NotHomogeneous("zero mode of non-integer-weight element");
    return act(a, Exponent(to_ll(w) - 1), v);
}

Rational Module::truncation_bound(const GradedVector& a, const GradedVector& v) const {
    Rational wa(0), dv(0);
    for (auto& [m, c] : a.terms()) wa = std::max(wa, voa_weight(voa_, m));
    for (auto& [m, c] : v.terms()) dv = std::max(dv, degree(m));
    return wa + dv - 1;
}

GradedVector mode_action(const Module& m, const ModeOperator& op, const GradedVector& v) {
    auto sector = theta_sector(op.source);
    if (sector && m.voa().twist == Twist::Theta && m.twisted()) {
        Exponent want = Exponent(*sector, m.voa().T);
        if (!(op.mode - want).is_integer())
            throw SectorMismatch("mode " + op.mode.str() + " not in sector coset " + want.str());
    }
    if (sector && !m.twisted() && !op.mode.is_integer())
        throw SectorMismatch("fractional mode on an untwisted module");
    return m.act(op.source, op.mode, v);
}

GradedVector nth_product(const VOAInstance& voa, const GradedVector& a, long long j,
                         const GradedVector& b) {
    Module vac(voa, ModuleId::vacuum());
    return vac.act(a, Exponent(j), b);
}

GradedVector theta_involution(const GradedVector& v) {
    GradedVector out;
    for (auto& [m, c] : v.terms()) {
        Monomial r = m;
        for (auto& q : r.lattice) q = -q;
        Rational cc = (m.modes.size() % 2 != 0) ? -c : c;
        out.add(r, cc);
    }
    return out;
}

std::optional<int> theta_sector(const GradedVector& v) {
    if (v.is_zero()) return 0;
    GradedVector t = theta_involution(v);
    if (t == v) return 0;
    if (t == v * Rational(-1)) return 1;
    return std::nullopt;
}

Rational weight_of(const Module& m, const GradedVector& v) {
    return m.bottom_weight() + m.degree(v);
}

GradedVector jacobi_component_defect(const Module& m, const GradedVector& a, int r,
                                     const GradedVector& b, int s, long long mm, long long nn,
                                     long long l, const GradedVector& v) {
    const int T = m.voa().T;
    Module vac(m.voa(), ModuleId::vacuum());
    Rational wa = weight_of(vac, a), wb = weight_of(vac, b);
    Rational dv = m.degree(v);
    GradedVector lhs;
    // sum over i of binom(l,i)(-1)^i a_(r/T+m+l-i) b_(s/T+n+i)
    for (long long i = 0;; ++i) {
        Exponent bmode = Exponent(s, T) + Exponent(nn + i);
        if (bmode.to_rational() > wb + dv - 1) break;
        if (l >= 0 && i > l) break;
        Rational c = binomial(Rational(l), i);
        if (i % 2 != 0) c = -c;
        if (c == 0) continue;
        GradedVector w = m.act(b, bmode, v);
        if (w.is_zero()) continue;
        lhs += m.act(a, Exponent(r, T) + Exponent(mm + l - i), w) * c;
    }
    for (long long i = 0;; ++i) {
        Exponent amode = Exponent(r, T) + Exponent(mm + i);
        if (amode.to_rational() > wa + dv - 1) break;
        if (l >= 0 && i > l) break;
        Rational c = binomial(Rational(l), i);
        if ((l + i) % 2 != 0) c = -c;
        if (c == 0) continue;
        GradedVector w = m.act(a, amode, v);
        if (w.is_zero()) continue;
        lhs += m.act(b, Exponent(s, T) + Exponent(nn + l - i), w) * (-c);
    }
    GradedVector rhs;
    for (long long j = 0;; ++j) {
        if (Rational(j + l) > wa + wb - 1) break;
        GradedVector c = vac.act(a, Exponent(j + l), b);
        if (c.is_zero()) continue;
        Rational bc = binomial(Exponent(r, T).to_rational() + mm, j);
        if (bc == 0) continue;
        rhs += m.act(c, Exponent(r + s, T) + Exponent(mm + nn - j), v) * bc;
    }
    return lhs - rhs;
}

std::vector<Monomial> module_basis(const Module& m, const Rational& max_degree) {
    std::vector<Monomial> out;
    const VOAInstance& voa = m.voa();
    // tails and their base degrees
    std::vector<std::pair<Monomial, Rational>> tails;
    switch (m.id().kind) {
        case ModuleId::Kind::Vacuum: {
            if (voa.is_lattice()) {
                for (long long b = -16; b <= 16; ++b) {
                    Monomial t;
                    t.lattice = {Rational(b)};
                    Rational d = voa.pair(t.lattice, t.lattice) / 2;
                    if (d <= max_degree) tails.push_back({t, d});
                }
            } else {
                tails.push_back({Monomial{}, Rational(0)});
            }
            break;
        }
        case ModuleId::Kind::HeisLambda: {
            Monomial t;
            t.lattice = m.id().lambda;
            tails.push_back({t, Rational(0)});
            break;
        }
        case ModuleId::Kind::LatticeCoset: {
            for (long long k = -16; k <= 16; ++k) {
                Monomial t;
                t.lattice = {m.id().lambda[0] + k};
                Rational d = voa.pair(t.lattice, t.lattice) / 2 - m.bottom_weight();
                if (d <= max_degree) tails.push_back({t, d});
            }
            break;
        }
        case ModuleId::Kind::TwistedFock:
            tails.push_back({Monomial{}, Rational(0)});
            break;
        case ModuleId::Kind::TwistedLattice: {
            Monomial t;
            t.tchi = m.id().chi;
            tails.push_back({t, Rational(0)});
            break;
        }
    }
    const bool half = m.twisted();
    for (auto& [tail, base] : tails) {
        Rational budget = max_degree - base;
        if (budget < 0) continue;
        // enumerate mode multisets with total <= budget, then assign generators
        std::vector<Exponent> parts;
        std::function<void(Exponent, Rational)> emit_parts;
        std::function<void(size_t, std::vector<HeisMode>&)> assign =
            [&](size_t idx, std::vector<HeisMode>& modes) {
                if (idx == parts.size()) {
                    Monomial mono = tail;
                    mono.modes = modes;
                    std::sort(mono.modes.begin(), mono.modes.end());
                    out.push_back(mono);
                    return;
                }
                // generators ascending across equal parts to avoid duplicates
                int lo = 0;
                if (idx > 0 && parts[idx] == parts[idx - 1]) lo = modes[idx - 1].gen;
                for (int g = lo; g < voa.rank; ++g) {
                    modes.push_back({0, -parts[idx]});
                    modes.back().gen = g;
                    assign(idx + 1, modes);
                    modes.pop_back();
                }
            };
        emit_parts = [&](Exponent maxp, Rational rem) {
            {
                std::vector<HeisMode> modes;
                assign(0, modes);
            }
            // extend the current partition: parts chosen descending
            for (Exponent p = maxp;; p = p - Exponent(1)) {
                if (p.to_rational() > rem) continue;
                if (p < (half ? Exponent(1, 2) : Exponent(1))) break;
                parts.push_back(p);
                emit_parts(p, rem - p.to_rational());
                parts.pop_back();
            }
        };
        // largest possible part
        long long f = static_cast<long long>(numerator(budget) / denominator(budget));
        Exponent maxp = half ? Exponent(2 * f + 1, 2) : Exponent(f);
        emit_parts(maxp, budget);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<EigenElt> sector_eigen_basis(const VOAInstance& voa, const Rational& max_wt) {
    Module vac(voa, ModuleId::vacuum());
    std::vector<Monomial> mons = module_basis(vac, max_wt);
    std::vector<EigenElt> out;
    if (voa.twist == Twist::Identity) {
        for (auto& m : mons) out.push_back({GradedVector::single(m), 0, vac.degree(m)});
        return out;
    }
    for (auto& m : mons) {
        Rational w = vac.degree(m);
        bool zero_label = m.lattice.empty();
        if (!zero_label) {
            zero_label = true;
            for (auto& c : m.lattice) zero_label = zero_label && c == 0;
        }
        int k = static_cast<int>(m.modes.size());
        if (zero_label) {
            out.push_back({GradedVector::single(m), k % 2, w});
        } else {
            if (m.lattice[0] < 0) continue;  // partner handles it
            GradedVector g = GradedVector::single(m);
            GradedVector t = theta_involution(g);
            out.push_back({g + t, 0, w});
            out.push_back({g - t, 1, w});
        }
    }
    return out;
}

std::string Monomial::str(int rank) const { return monomial_str(*this, rank); }

std::string monomial_str(const Monomial& m, int rank) {
    std::ostringstream os;
    for (auto& hm : m.modes) {
        os << "a";
        if (rank > 1) os << hm.gen;
        os << "[" << hm.mode.str() << "]";
    }
    bool zero_label = m.lattice.empty();
    if (!zero_label) {
        zero_label = true;
        for (auto& c : m.lattice) zero_label = zero_label && c == 0;
    }
    if (!m.lattice.empty()) {
        if (os.tellp() > 0) os << ".";
        if (zero_label) {
            os << "e(0)";
        } else {
            os << "e(";
            for (size_t i = 0; i < m.lattice.size(); ++i) {
                if (i) os << ",";
                os << rat_str(m.lattice[i]) << " a";
                if (rank > 1) os << i;
            }
            os << ")";
        }
    }
    if (m.tchi != 0) {
        if (os.tellp() > 0) os << ".";
        os << "t(" << (m.tchi > 0 ? "+" : "-") << ")";
    }
    if (os.tellp() == 0) os << "1";
    return os.str();
}

nlohmann::json GradedVector::to_json(int rank) const {
    nlohmann::json arr = nlohmann::json::array();
    for (auto& [m, c] : t_)
        arr.push_back({{"monomial", monomial_str(m, rank)}, {"coef", rat_str(c)}});
    return arr;
}

} // namespace voatwist
