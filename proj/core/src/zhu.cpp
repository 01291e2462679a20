#include "voatwist/zhu.hpp"

#include <algorithm>

namespace voatwist {

bool mono_less(const Module& ctx, const Monomial& a, const Monomial& b) {
    Rational da = ctx.degree(a), db = ctx.degree(b);
    if (da != db) return da < db;
    return a < b;
}

std::optional<Monomial> Reducer::leading(const GradedVector& v) const {
    std::optional<Monomial> best;
    for (auto& [m, c] : v.terms())
        if (!best || mono_less(*ctx_, *best, m)) best = m;
    return best;
}

GradedVector Reducer::reduce(const GradedVector& v) const {
    GradedVector cur = v;
    while (true) {
        const Monomial* hit = nullptr;
        for (auto& [m, c] : cur.terms()) {
            if (!rows_.count(m)) continue;
            if (!hit || mono_less(*ctx_, *hit, m)) hit = &m;
        }
        if (!hit) return cur;
        Monomial key = *hit;
        Rational c = cur.coeff(key);
        cur += rows_.at(key) * (-c);
    }
}

bool Reducer::add_relation(const GradedVector& r) {
    GradedVector rr = reduce(r);
    if (rr.is_zero()) return false;
    Monomial lead = *leading(rr);
    rr = rr * (Rational(1) / rr.coeff(lead));
    rows_.emplace(std::move(lead), std::move(rr));
    return true;
}

int SpanSolver::add(const GradedVector& v) {
    GradedVector cur = v;
    std::vector<Rational> combo(count_, Rational(0));
    for (auto& [row, expr] : rows_) {
        const Monomial* lead = nullptr;
        for (auto& [m, c] : row.terms())
            if (!lead || mono_less(*ctx_, *lead, m)) lead = &m;
        Rational c = cur.coeff(*lead);
        if (c == 0) continue;
        cur += row * (-c);
        for (size_t i = 0; i < expr.size(); ++i) combo[i] -= c * expr[i];
    }
    if (cur.is_zero()) return -1;
    const Monomial* lead = nullptr;
    for (auto& [m, c] : cur.terms())
        if (!lead || mono_less(*ctx_, *lead, m)) lead = &m;
    Rational inv = Rational(1) / cur.coeff(*lead);
    cur = cur * inv;
    combo.resize(count_ + 1, Rational(0));
    for (auto& q : combo) q *= inv;
    combo[count_] = inv;
    rows_.emplace_back(std::move(cur), std::move(combo));
    ++count_;
    return static_cast<int>(count_) - 1;
}

std::optional<std::vector<Rational>> SpanSolver::express(const GradedVector& v) const {
    GradedVector cur = v;
    std::vector<Rational> combo(count_, Rational(0));
    for (auto& [row, expr] : rows_) {
        const Monomial* lead = nullptr;
        for (auto& [m, c] : row.terms())
            if (!lead || mono_less(*ctx_, *lead, m)) lead = &m;
        Rational c = cur.coeff(*lead);
        if (c == 0) continue;
        cur += row * (-c);
        for (size_t i = 0; i < expr.size(); ++i) combo[i] -= c * expr[i];
    }
    if (!cur.is_zero()) return std::nullopt;
    for (auto& q : combo) q = -q;
    return combo;
}

namespace {

Rational homogeneous_weight(const VOAInstance& voa, const GradedVector& a) {
    Module vac(voa, ModuleId::vacuum());
    return weight_of(vac, a);
}

} // namespace

GradedVector circle_g(const Module& host, const GradedVector& a, int sector,
                      const GradedVector& u, int k) {
    if (a.is_zero() || u.is_zero()) return {};
    const int T = host.voa().T;
    const int delta = sector == 0 ? 1 : 0;
    Rational wa = homogeneous_weight(host.voa(), a);
    Rational nu = wa - 1 + delta + Rational(sector, T);
    Rational bound = host.truncation_bound(a, u);
    GradedVector out;
    for (long long j = 0;; ++j) {
        Exponent mode = Exponent(j - 1 - delta - k);
        if (mode.to_rational() > bound) break;
        Rational c = binomial(nu, j);
        if (c == 0) continue;
        GradedVector t = host.act(a, mode, u);
        if (!t.is_zero()) out += t * c;
    }
    return out;
}

GradedVector star_g_left(const Module& host, const GradedVector& a, const GradedVector& u) {
    GradedVector a0 = (a + theta_involution(a)) * Rational(1, 2);
    if (host.voa().twist == Twist::Identity) a0 = a;
    if (a0.is_zero() || u.is_zero()) return {};
    Rational wa = homogeneous_weight(host.voa(), a0);
    Rational bound = host.truncation_bound(a0, u);
    GradedVector out;
    for (long long j = 0;; ++j) {
        Exponent mode = Exponent(j - 1);
        if (mode.to_rational() > bound) break;
        Rational c = binomial(wa, j);
        if (c == 0) continue;
        GradedVector t = host.act(a0, mode, u);
        if (!t.is_zero()) out += t * c;
    }
    return out;
}

GradedVector star_g_right(const Module& host, const GradedVector& u, const GradedVector& a) {
    GradedVector a0 = (a + theta_involution(a)) * Rational(1, 2);
    if (host.voa().twist == Twist::Identity) a0 = a;
    if (a0.is_zero() || u.is_zero()) return {};
    Rational wa = homogeneous_weight(host.voa(), a0);
    Rational bound = host.truncation_bound(a0, u);
    GradedVector out;
    for (long long j = 0;; ++j) {
        Exponent mode = Exponent(j - 1);
        if (mode.to_rational() > bound) break;
        Rational c = binomial(wa - 1, j);
        if (c == 0) continue;
        GradedVector t = host.act(a0, mode, u);
        if (!t.is_zero()) out += t * c;
    }
    return out;
}

std::vector<GradedVector> o_subspace(const Module& host, const Rational& window,
                                     const OSubspaceOptions& opt) {
    const VOAInstance& voa = host.voa();
    std::vector<EigenElt> eigs = sector_eigen_basis(voa, window);
    std::vector<Monomial> mons = module_basis(host, window);
    auto ctx = std::make_shared<Module>(host.voa(), host.id());
    Reducer red(ctx);
    for (auto& e : eigs) {
        if (e.wt == 0) continue;  // vacuum circle products vanish
        int delta = e.sector == 0 ? 1 : 0;
        for (auto& mono : mons) {
            Rational du = host.degree(mono);
            for (int k = 0; k <= (opt.include_derived_family ? 1 : 0); ++k) {
                if (e.wt + du + delta + k > window) continue;
                GradedVector rel =
                    circle_g(host, e.vec, e.sector, GradedVector::single(mono), k);
                if (!rel.is_zero()) red.add_relation(rel);
            }
        }
    }
    if (opt.bimodule_lambda_relations) {
        for (auto& mono : mons) {
            Rational du = host.degree(mono);
            if (du + 1 > window) continue;
            GradedVector u = GradedVector::single(mono);
            GradedVector rel = host.l_op(-1, u) + u * (host.weight(mono) + opt.lambda);
            if (!rel.is_zero()) red.add_relation(rel);
        }
    }
    std::vector<GradedVector> rows;
    rows.reserve(red.rows().size());
    for (auto& [lead, row] : red.rows()) rows.push_back(row);
    return rows;
}

std::vector<Rational> ReducedAlgebra::express(const GradedVector& v) const {
    auto coords = span->express(red->reduce(v));
    if (!coords)
        throw WindowExceeded("class leaves the reported window; enlarge the truncation");
    return *coords;
}

ReducedAlgebra quotient_algebra(const VOAInstance& voa, const Rational& trunc,
                                const Rational& slack) {
    ReducedAlgebra alg;
    alg.trunc = trunc;
    alg.work_window = trunc + slack;
    alg.vac = std::make_shared<Module>(voa, ModuleId::vacuum());
    alg.red = std::make_shared<Reducer>(alg.vac);
    for (auto& rel : o_subspace(*alg.vac, alg.work_window)) alg.red->add_relation(rel);
    alg.span = std::make_shared<SpanSolver>(alg.vac);
    std::vector<Monomial> mons = module_basis(*alg.vac, trunc);
    std::sort(mons.begin(), mons.end(),
              [&](const Monomial& a, const Monomial& b) { return mono_less(*alg.vac, a, b); });
    for (auto& m : mons) {
        GradedVector canon = alg.red->reduce(GradedVector::single(m));
        if (canon.is_zero()) continue;
        if (alg.span->add(canon) >= 0) alg.basis.push_back({m, canon});
    }
    alg.identity_index = -1;
    auto one = alg.express(voa.vacuum());
    for (size_t i = 0; i < one.size(); ++i) {
        if (one[i] == 0) continue;
        if (alg.identity_index >= 0 || one[i] != 1) {
            alg.identity_index = -1;
            break;
        }
        alg.identity_index = static_cast<int>(i);
    }
    alg.omega_coords = alg.express(voa.conformal_vector());
    size_t n = alg.basis.size();
    alg.structure.assign(n, std::vector<std::vector<Rational>>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            GradedVector p = star_g_left(*alg.vac, GradedVector::single(alg.basis[i].rep),
                                         GradedVector::single(alg.basis[j].rep));
            auto coords = alg.span->express(alg.red->reduce(p));
            if (coords) alg.structure[i][j] = *coords;
            else alg.products_closed = false;
        }
    return alg;
}

std::vector<Rational> ReducedBimodule::express(const GradedVector& v) const {
    auto coords = span->express(red->reduce(v));
    if (!coords) throw WindowExceeded("bimodule class leaves the reported window");
    return *coords;
}

ReducedBimodule quotient_bimodule(const ReducedAlgebra& alg, const ModuleId& mid,
                                  const BimoduleMode& mode, const Rational& trunc,
                                  const Rational& slack) {
    ReducedBimodule bm;
    bm.trunc = trunc;
    bm.mod = std::make_shared<Module>(alg.vac->voa(), mid);
    bm.red = std::make_shared<Reducer>(bm.mod);
    OSubspaceOptions opt;
    opt.bimodule_lambda_relations = mode.b_mode;
    opt.lambda = mode.lambda;
    for (auto& rel : o_subspace(*bm.mod, trunc + slack, opt)) bm.red->add_relation(rel);
    bm.span = std::make_shared<SpanSolver>(bm.mod);
    std::vector<Monomial> mons = module_basis(*bm.mod, trunc);
    std::sort(mons.begin(), mons.end(),
              [&](const Monomial& a, const Monomial& b) { return mono_less(*bm.mod, a, b); });
    for (auto& m : mons) {
        GradedVector canon = bm.red->reduce(GradedVector::single(m));
        if (canon.is_zero()) continue;
        if (bm.span->add(canon) >= 0) bm.basis.push_back({m, canon});
    }
    size_t na = alg.basis.size(), nb = bm.basis.size();
    bm.left.assign(na, std::vector<std::vector<Rational>>(nb));
    bm.right.assign(na, std::vector<std::vector<Rational>>(nb));
    for (size_t k = 0; k < na; ++k) {
        GradedVector a = GradedVector::single(alg.basis[k].rep);
        for (size_t j = 0; j < nb; ++j) {
            GradedVector u = GradedVector::single(bm.basis[j].rep);
            bm.left[k][j] = bm.express(star_g_left(*bm.mod, a, u));
            bm.right[k][j] = bm.express(star_g_right(*bm.mod, u, a));
        }
    }
    return bm;
}

bool graded_surjection_check(const VOAInstance& voa, const Rational& window) {
    ReducedAlgebra alg = quotient_algebra(voa, window);
    const Module& vac = *alg.vac;
    auto max_degree = [&](const GradedVector& v) {
        Rational d(0);
        for (auto& [m, c] : v.terms()) d = std::max(d, vac.degree(m));
        return d;
    };
    std::vector<EigenElt> eigs = sector_eigen_basis(voa, window);
    std::vector<Monomial> mons = module_basis(vac, window);
    for (auto& e : eigs) {
        for (auto& mono : mons) {
            Rational wb = vac.degree(mono);
            GradedVector b = GradedVector::single(mono);
            // the map kills C_2(V): [a_{(-2)} b] lies in filtration level wa+wb
            if (e.wt + wb + 1 <= window) {
                GradedVector c2 = vac.act(e.vec, Exponent(-2), b);
                if (!c2.is_zero() && max_degree(alg.reduce(c2)) > e.wt + wb) return false;
            }
            // graded product: [a_{(-1)} b] = [a] *_g [b] modulo lower filtration
            if (e.wt + wb <= window) {
                GradedVector d = vac.act(e.vec, Exponent(-1), b);
                if (e.sector == 0) d = d - star_g_left(vac, e.vec, b);
                if (!d.is_zero() && max_degree(alg.reduce(d)) > e.wt + wb - 1) return false;
            }
        }
    }
    return true;
}

} // namespace voatwist
