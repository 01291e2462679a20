#ifndef VOATWIST_PUISEUX_HPP
#define VOATWIST_PUISEUX_HPP

#include <map>
#include <string>

#include "voatwist/errors.hpp"
#include "voatwist/exponent.hpp"
#include "voatwist/rational.hpp"

#include "json.hpp"

namespace voatwist {

/// Sparse formal Puiseux series in one variable with an explicit
/// guaranteed-exact window. All arithmetic intersects windows; nothing is
/// ever rounded.
class PuiseuxSeries {
public:
    PuiseuxSeries() : var_("z"), window_(Window::all()) {}
    explicit PuiseuxSeries(std::string var, Window w = Window::all())
        : var_(std::move(var)), window_(w) {}

    static PuiseuxSeries monomial(const std::string& var, const Exponent& e,
                                  const Rational& c, Window w = Window::all()) {
        PuiseuxSeries s(var, w);
        s.add_term(e, c);
        return s;
    }

    const std::string& var() const { return var_; }
    const Window& window() const { return window_; }
    void set_window(const Window& w) { window_ = w; clamp(); }
    const std::map<Exponent, Rational>& terms() const { return terms_; }

    void add_term(const Exponent& e, const Rational& c) {
        if (c == 0 || !window_.contains(e)) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Rational coeff(const Exponent& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    bool is_zero() const { return terms_.empty(); }

    /// Coefficient of the exponent -1 term. Zero if -1 sits below the support
    /// bound; an error only if -1 lies beyond the exact range.
    Rational residue() const {
        Exponent minus1(-1);
        if (minus1 > window_.hi)
            throw WindowTooNarrow("residue: exponent -1 beyond exact window");
        if (minus1 < window_.lo) return Rational(0);
        return coeff(minus1);
    }

    friend PuiseuxSeries operator+(const PuiseuxSeries& a, const PuiseuxSeries& b) {
        check_vars(a, b);
        PuiseuxSeries r(a.var_, intersect_add(a.window_, b.window_));
        for (auto& [e, c] : a.terms_) r.add_term(e, c);
        for (auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }
    friend PuiseuxSeries operator-(const PuiseuxSeries& a, const PuiseuxSeries& b) {
        return a + (b * Rational(-1));
    }
    friend PuiseuxSeries operator*(const PuiseuxSeries& a, const Rational& c) {
        PuiseuxSeries r(a.var_, a.window_);
        if (c == 0) return r;
        for (auto& [e, k] : a.terms_) r.terms_.emplace(e, k * c);
        return r;
    }
    friend PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b) {
        check_vars(a, b);
        PuiseuxSeries r(a.var_, combine_mul(a.window_, b.window_));
        for (auto& [ea, ca] : a.terms_)
            for (auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
        return r;
    }

    bool same_terms(const PuiseuxSeries& o) const { return terms_ == o.terms_; }

    /// Equality of the exactly-known parts on the overlap of the two windows.
    friend bool agree_on_overlap(const PuiseuxSeries& a, const PuiseuxSeries& b) {
        check_vars(a, b);
        Window w = intersect_add(a.window_, b.window_);
        for (auto& [e, c] : a.terms_)
            if (w.contains(e) && b.coeff(e) != c) return false;
        for (auto& [e, c] : b.terms_)
            if (w.contains(e) && a.coeff(e) != c) return false;
        return true;
    }

    nlohmann::json to_json() const {
        nlohmann::json terms = nlohmann::json::array();
        for (auto& [e, c] : terms_)
            terms.push_back({{"exp", e.str()}, {"coef", rat_str(c)}});
        return {{"var", var_},
                {"terms", terms},
                {"window", {window_.lo.str(), window_.hi.str()}}};
    }
    static PuiseuxSeries from_json(const nlohmann::json& j);

private:
    static void check_vars(const PuiseuxSeries& a, const PuiseuxSeries& b) {
        if (a.var_ != b.var_)
            throw UnsupportedShape("series variables differ: " + a.var_ + " vs " + b.var_);
    }
    void clamp() {
        for (auto it = terms_.begin(); it != terms_.end();)
            it = window_.contains(it->first) ? std::next(it) : terms_.erase(it);
    }

    std::string var_;
    std::map<Exponent, Rational> terms_;
    Window window_;
};

} // namespace voatwist

#endif
