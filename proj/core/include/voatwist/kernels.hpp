#ifndef VOATWIST_KERNELS_HPP
#define VOATWIST_KERNELS_HPP

#include "voatwist/multipoint.hpp"
#include "voatwist/puiseux.hpp"

namespace voatwist {

struct KernelIndex {
    Exponent n;  // element of (1/T)Z
    int i = 0;
};

/// F_{n,i}(p,q) = z^{-n}/i! d_w^i ( w^n/(z-w) ) over the given variable pair.
MultiPointFunction f_kernel(const KernelIndex& idx, std::vector<std::string> vars,
                            const std::string& z, const std::string& w);
inline MultiPointFunction f_kernel(const KernelIndex& idx) {
    return f_kernel(idx, {"z1", "w"}, "z1", "w");
}

/// Closed-form expansions of F_{n,i} at the three sites (the generic expander
/// is MultiPointFunction::expand; these are the independent formulas).
SeriesMPF f_kernel_expansion(const KernelIndex& idx, const ExpansionSite& site,
                             const Exponent& trunc);

/// F_{n,i} - F_{n+1,i} - binom(n,i) z^{-n-1} w^{n-i}; identically zero.
MultiPointFunction kernel_recurrence_defect(const Exponent& n, int i);

/// (1/T) Res_0 + (1/T) Res_inf + sum over one branch of Res_q of
/// z^{r/T} f dz on the T-twisted line; identically zero for admissible f.
/// f must be a two-point function (variables z, w).
PuiseuxSeries residue_sum(const MultiPointFunction& f, long long r, int T, const Exponent& trunc);

} // namespace voatwist

#endif
