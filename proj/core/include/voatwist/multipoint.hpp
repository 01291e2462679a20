#ifndef VOATWIST_MULTIPOINT_HPP
#define VOATWIST_MULTIPOINT_HPP

#include <map>
#include <string>
#include <vector>

#include "voatwist/errors.hpp"
#include "voatwist/exponent.hpp"
#include "voatwist/poly.hpp"
#include "voatwist/puiseux.hpp"

#include "json.hpp"

namespace voatwist {

struct ExpansionSite {
    enum Tag { AtZero, AtInfinity, AtDiagonal } tag;
    std::string var;
    std::string base;  // diagonal only: expand var around base

    static ExpansionSite at_zero(std::string v) { return {AtZero, std::move(v), {}}; }
    static ExpansionSite at_infinity(std::string v) { return {AtInfinity, std::move(v), {}}; }
    static ExpansionSite at_diagonal(std::string v, std::string b) {
        if (v == b) throw UnsupportedShape("diagonal site needs two distinct variables");
        return {AtDiagonal, std::move(v), std::move(b)};
    }
};

class MultiPointFunction;

/// One-variable series whose coefficients are rational functions of the
/// remaining points; the output form of the three expansion maps.
struct SeriesMPF {
    std::string var;
    std::map<Exponent, MultiPointFunction> terms;
    Window window;

    /// Collapses to a scalar Puiseux series when every coefficient is constant.
    PuiseuxSeries to_scalar() const;
    Rational residue_scalar() const;  // coefficient of var^{-1} as a constant
};

/// Rational function of the shape used throughout: a polynomial numerator,
/// one (possibly fractional) power prefactor per variable, and poles along
/// the difference divisors x_a = x_b. Variables are named; by convention the
/// z-points come first and "w" is last.
class MultiPointFunction {
public:
    MultiPointFunction() = default;
    explicit MultiPointFunction(std::vector<std::string> vars)
        : vars_(std::move(vars)),
          num_(static_cast<int>(vars_.size())),
          pref_(vars_.size(), Exponent(0)) {}

    static MultiPointFunction zero(std::vector<std::string> vars) {
        return MultiPointFunction(std::move(vars));
    }
    static MultiPointFunction constant(std::vector<std::string> vars, const Rational& c);
    /// var^e as a bare monomial
    static MultiPointFunction power(std::vector<std::string> vars, const std::string& var,
                                    const Exponent& e, const Rational& c = Rational(1));
    /// c / (x_a - x_b)^l   (a before b in the variable list)
    static MultiPointFunction inv_difference(std::vector<std::string> vars,
                                             const std::string& a, const std::string& b,
                                             int l, const Rational& c = Rational(1));

    const std::vector<std::string>& vars() const { return vars_; }
    int var_index(const std::string& name) const;
    bool is_zero() const { return num_.is_zero(); }
    const Poly& numerator() const { return num_; }
    const std::vector<Exponent>& prefactors() const { return pref_; }
    const std::map<std::pair<int, int>, int>& poles() const { return poles_; }

    friend MultiPointFunction operator+(const MultiPointFunction& a, const MultiPointFunction& b);
    friend MultiPointFunction operator-(const MultiPointFunction& a, const MultiPointFunction& b);
    friend MultiPointFunction operator*(const MultiPointFunction& a, const MultiPointFunction& b);
    friend MultiPointFunction operator*(const MultiPointFunction& a, const Rational& c);
    MultiPointFunction& operator+=(const MultiPointFunction& b) { return *this = *this + b; }

    MultiPointFunction derivative(const std::string& var) const;
    MultiPointFunction mul_power(const std::string& var, const Exponent& e) const;
    /// Multiply by (x_a - x_b)^k; negative k deepens the pole.
    MultiPointFunction mul_difference(const std::string& a, const std::string& b, int k) const;

    /// Exact equality as rational functions (cross-multiplied).
    bool rational_equal(const MultiPointFunction& other) const;

    /// Res of the formal expansion at var = 0 (coefficient of var^{-1}).
    MultiPointFunction residue_at_zero(const std::string& var) const;
    /// Res of the formal expansion at var = infinity.
    MultiPointFunction residue_at_infinity(const std::string& var) const;
    /// Res of the expansion along var = base (coefficient of (var-base)^{-1}).
    MultiPointFunction residue_at_diagonal(const std::string& var, const std::string& base) const;

    SeriesMPF expand(const ExpansionSite& site, const Exponent& trunc) const;

    /// Fractional part of the prefactor exponent of `var` (coset in Q/Z).
    Exponent coset(const std::string& var) const;

    MultiPointFunction rename_vars(const std::vector<std::string>& names) const;
    /// Embed into a larger variable list (old names must appear in order).
    MultiPointFunction embed(const std::vector<std::string>& names) const;
    /// Reorder to the given name list (a permutation of the current one).
    MultiPointFunction reorder(const std::vector<std::string>& names) const;

    PuiseuxSeries to_puiseux() const;  // single-variable, no poles

    nlohmann::json to_json() const;
    std::string to_latex() const;

private:
    void canonicalize();
    friend MultiPointFunction align_and_combine(const MultiPointFunction& a,
                                                const MultiPointFunction& b, bool subtract);

    std::vector<std::string> vars_;
    Poly num_;
    std::vector<Exponent> pref_;
    std::map<std::pair<int, int>, int> poles_;
};

/// (x_a - x_b)^l expanded as a plain polynomial.
Poly difference_power(int nv, int a, int b, int l);

} // namespace voatwist

#endif
