#include "voatwist/kernels.hpp"

namespace voatwist {

MultiPointFunction f_kernel(const KernelIndex& idx, std::vector<std::string> vars,
                            const std::string& z, const std::string& w) {
    // w^n / (z-w)
    MultiPointFunction f = MultiPointFunction::inv_difference(vars, z, w, 1);
    f = f.mul_power(w, idx.n);
    for (int k = 0; k < idx.i; ++k) f = f.derivative(w);
    f = f * (Rational(1) / Rational(factorial(idx.i)));
    return f.mul_power(z, -idx.n);
}

SeriesMPF f_kernel_expansion(const KernelIndex& idx, const ExpansionSite& site,
                             const Exponent& trunc) {
    const Rational n = idx.n.to_rational();
    const int i = idx.i;
    SeriesMPF out;
    out.var = site.var;
    std::vector<std::string> rest{"w"};
    if (site.tag == ExpansionSite::AtZero) {
        // -sum_j binom(n-j-1, i) z^{j-n} w^{n-j-i-1}
        for (long long j = 0;; ++j) {
            Exponent e = Exponent(j) - idx.n;
            if (e > trunc) break;
            Rational c = -binomial(n - j - 1, i);
            if (c == 0) continue;
            out.terms.emplace(e, MultiPointFunction::power(
                                     rest, "w", idx.n - Exponent(j + i + 1), c));
        }
        out.window = {std::min(-idx.n, trunc), std::max(-idx.n, trunc)};
    } else if (site.tag == ExpansionSite::AtInfinity) {
        // sum_j binom(n+j, i) z^{-n-j-1} w^{n+j-i}
        for (long long j = 0;; ++j) {
            Exponent e = -idx.n - Exponent(j + 1);
            if (e < trunc) break;
            Rational c = binomial(n + j, i);
            if (c == 0) continue;
            out.terms.emplace(e, MultiPointFunction::power(
                                     rest, "w", idx.n + Exponent(j) - Exponent(i), c));
        }
        Exponent top = -idx.n - Exponent(1);
        out.window = {std::min(trunc, top), std::max(trunc, top)};
    } else {
        // sum_{l=0..i} sum_{p>=0} binom(n, i-l) binom(-n, p) w^{l-i-p} (z-w)^{p-l-1}
        std::map<Exponent, Rational> acc;  // exponent in (z-w) -> w-free coefficient? no:
        // for fixed e = p-l-1 all terms share w-power -e-i-1
        for (int l = 0; l <= i; ++l) {
            Rational bl = binomial(n, i - l);
            if (bl == 0) continue;
            for (long long p = 0;; ++p) {
                Exponent e = Exponent(p - l - 1);
                if (e > trunc) break;
                Rational c = bl * binomial(-n, p);
                if (c == 0) continue;
                acc[e] += c;
            }
        }
        for (auto& [e, c] : acc) {
            if (c == 0) continue;
            out.terms.emplace(e, MultiPointFunction::power(rest, "w", -e - Exponent(i + 1), c));
        }
        out.window = {Exponent(-i - 1), trunc};
    }
    return out;
}

MultiPointFunction kernel_recurrence_defect(const Exponent& n, int i) {
    MultiPointFunction a = f_kernel({n, i});
    MultiPointFunction b = f_kernel({n + Exponent(1), i});
    MultiPointFunction c = MultiPointFunction::power({"z1", "w"}, "z1", -n - Exponent(1),
                                                     binomial(n.to_rational(), i));
    c = c.mul_power("w", n - Exponent(i));
    return a - b - c;
}

PuiseuxSeries residue_sum(const MultiPointFunction& f, long long r, int T, const Exponent& trunc) {
    if (f.vars().size() != 2)
        throw UnsupportedShape("residue_sum expects a two-point function");
    const std::string z = f.vars()[0], w = f.vars()[1];
    MultiPointFunction s = f.mul_power(z, Exponent(r, T));
    if (!(s.coset(z) == Exponent(0)))
        throw NotSingleValued("z^{r/T} f does not factor through the covering");
    MultiPointFunction total = s.residue_at_zero(z) - s.residue_at_infinity(z) +
                               s.residue_at_diagonal(z, w);
    // the three residues are exact rational functions of w, so no truncation
    // is ever applied; trunc only caps the reported window
    PuiseuxSeries out = total.to_puiseux();
    (void)trunc;
    return out;
}

} // namespace voatwist
