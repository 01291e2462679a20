#ifndef VOATWIST_VOA_HPP
#define VOATWIST_VOA_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "voatwist/errors.hpp"
#include "voatwist/exponent.hpp"
#include "voatwist/rational.hpp"

#include "json.hpp"

namespace voatwist {

enum class Twist { Identity, Theta };

struct HeisMode {
    int gen;
    Exponent mode;  // creation modes are negative
    friend auto operator<=>(const HeisMode& a, const HeisMode& b) {
        if (auto c = a.mode <=> b.mode; c != 0) return c;
        return a.gen <=> b.gen;
    }
    friend bool operator==(const HeisMode&, const HeisMode&) = default;
};

/// Normal-ordered basis monomial: creation modes sorted most-negative first,
/// then an optional group-algebra tail e^beta (coordinates in the alpha
/// basis) or a twisted bottom-level tag.
struct Monomial {
    std::vector<HeisMode> modes;
    std::vector<Rational> lattice;  // empty when the space has no e^beta tail
    int tchi = 0;                   // +-1 on twisted lattice bottom levels

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.modes == b.modes && a.lattice == b.lattice && a.tchi == b.tchi;
    }
    friend bool operator<(const Monomial& a, const Monomial& b) {
        if (a.modes != b.modes)
            return std::lexicographical_compare(a.modes.begin(), a.modes.end(), b.modes.begin(),
                                                b.modes.end());
        if (a.lattice != b.lattice)
            return std::lexicographical_compare(a.lattice.begin(), a.lattice.end(),
                                                b.lattice.begin(), b.lattice.end());
        return a.tchi < b.tchi;
    }
    std::string str(int rank = 1) const;
};

class GradedVector {
public:
    GradedVector() = default;
    static GradedVector single(const Monomial& m, const Rational& c = Rational(1)) {
        GradedVector v;
        v.add(m, c);
        return v;
    }

    void add(const Monomial& m, const Rational& c) {
        if (c == 0) return;
        auto it = t_.find(m);
        if (it == t_.end()) t_.emplace(m, c);
        else {
            it->second += c;
            if (it->second == 0) t_.erase(it);
        }
    }
    const std::map<Monomial, Rational>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    Rational coeff(const Monomial& m) const {
        auto it = t_.find(m);
        return it == t_.end() ? Rational(0) : it->second;
    }

    friend GradedVector operator+(const GradedVector& a, const GradedVector& b) {
        GradedVector r = a;
        for (auto& [m, c] : b.t_) r.add(m, c);
        return r;
    }
    friend GradedVector operator-(const GradedVector& a, const GradedVector& b) {
        GradedVector r = a;
        for (auto& [m, c] : b.t_) r.add(m, -c);
        return r;
    }
    friend GradedVector operator*(const GradedVector& a, const Rational& c) {
        GradedVector r;
        if (c == 0) return r;
        for (auto& [m, q] : a.t_) r.t_.emplace(m, q * c);
        return r;
    }
    GradedVector& operator+=(const GradedVector& b) {
        for (auto& [m, c] : b.t_) add(m, c);
        return *this;
    }
    friend bool operator==(const GradedVector& a, const GradedVector& b) { return a.t_ == b.t_; }

    nlohmann::json to_json(int rank = 1) const;

private:
    std::map<Monomial, Rational> t_;
};

struct VOAInstance {
    enum class Kind { Heisenberg, LatticeA1 };
    Kind kind;
    int rank;
    std::vector<std::vector<Rational>> gram;
    Twist twist;
    int T;

    static VOAInstance heisenberg(int rank, std::vector<std::vector<Rational>> gram, Twist tw);
    static VOAInstance heisenberg_rank1(Twist tw);  // (alpha|alpha) = 2
    static VOAInstance lattice_a1(Twist tw);        // L = Z alpha, (alpha|alpha) = 2

    Rational pair(const std::vector<Rational>& a, const std::vector<Rational>& b) const;
    Rational pair_gen(int i, const std::vector<Rational>& b) const;  // (alpha_i | b)
    GradedVector vacuum() const;
    GradedVector conformal_vector() const;  // omega
    bool is_lattice() const { return kind == Kind::LatticeA1; }
};

struct ModuleId {
    enum class Kind { Vacuum, HeisLambda, LatticeCoset, TwistedFock, TwistedLattice };
    Kind kind = Kind::Vacuum;
    std::vector<Rational> lambda;  // HeisLambda / LatticeCoset representative
    int chi = +1;                  // TwistedLattice character sign

    static ModuleId vacuum() { return {}; }
    static ModuleId heis_lambda(std::vector<Rational> l) {
        return {Kind::HeisLambda, std::move(l), +1};
    }
    static ModuleId lattice_coset(std::vector<Rational> mu) {
        return {Kind::LatticeCoset, std::move(mu), +1};
    }
    static ModuleId twisted_fock() { return {Kind::TwistedFock, {}, +1}; }
    static ModuleId twisted_lattice(int chi) { return {Kind::TwistedLattice, {}, chi}; }
};

/// A concrete graded module of a VOAInstance, providing exact vertex-operator
/// mode actions. Untwisted modules carry integer modes; theta-twisted ones
/// carry modes in (1/2)+Z for the odd part.
class Module {
public:
    Module(VOAInstance voa, ModuleId id);

    const VOAInstance& voa() const { return voa_; }
    const ModuleId& id() const { return id_; }

    int mode_den() const { return twisted() ? voa_.T : 1; }
    bool twisted() const {
        return id_.kind == ModuleId::Kind::TwistedFock ||
               id_.kind == ModuleId::Kind::TwistedLattice;
    }
    Exponent gen_coset() const { return twisted() ? Exponent(1, 2) : Exponent(0); }
    Rational bottom_weight() const { return h_; }

    Rational degree(const Monomial& m) const;
    Rational weight(const Monomial& m) const { return h_ + degree(m); }
    Rational degree(const GradedVector& v) const;  // NotHomogeneous unless graded
    bool valid_monomial(const Monomial& m) const;

    /// a_(n) v for a VOA element a; pure, exact, linear in both arguments.
    GradedVector act(const GradedVector& a, const Exponent& n, const GradedVector& v) const;
    GradedVector act(const Monomial& a, const Exponent& n, const Monomial& v) const;

    GradedVector l_op(long long n, const GradedVector& v) const;  // L(n) = omega_(n+1)
    /// zero-mode o(a) = a_(wt a - 1) on this module
    GradedVector zero_mode(const GradedVector& a, const GradedVector& v) const;

    /// Smallest bound B with a_(x) v = 0 for all x > B.
    Rational truncation_bound(const GradedVector& a, const GradedVector& v) const;

private:
    GradedVector apply_gen(int gen, const Exponent& x, const Monomial& v) const;
    GradedVector lattice_op(const std::vector<Rational>& beta, const Exponent& n,
                            const Monomial& v) const;

    VOAInstance voa_;
    ModuleId id_;
    Rational h_;
    mutable std::map<std::tuple<Monomial, Exponent, Monomial>, GradedVector> memo_;
};

struct ModeOperator {
    GradedVector source;
    Exponent mode;
};

/// Applies a_(mode); throws SectorMismatch when the mode index violates the
/// index property of the module for a sector-homogeneous source.
GradedVector mode_action(const Module& m, const ModeOperator& op, const GradedVector& v);

/// a_(j) b inside the vertex algebra (V as a module over itself).
GradedVector nth_product(const VOAInstance& voa, const GradedVector& a, long long j,
                         const GradedVector& b);

GradedVector theta_involution(const GradedVector& v);
/// 0 or 1 when v is a theta-eigenvector, nullopt otherwise.
std::optional<int> theta_sector(const GradedVector& v);

Rational weight_of(const Module& m, const GradedVector& v);  // NotHomogeneous unless graded

/// LHS - RHS of the component twisted Jacobi identity for a in sector r,
/// b in sector s, applied to v.
GradedVector jacobi_component_defect(const Module& m, const GradedVector& a, int r,
                                     const GradedVector& b, int s, long long mm, long long nn,
                                     long long l, const GradedVector& v);

std::vector<Monomial> module_basis(const Module& m, const Rational& max_degree);

struct EigenElt {
    GradedVector vec;
    int sector;  // g-eigenvalue index r
    Rational wt;
};
/// Weight- and sector-homogeneous basis of V up to the given weight.
std::vector<EigenElt> sector_eigen_basis(const VOAInstance& voa, const Rational& max_wt);

std::string monomial_str(const Monomial& m, int rank = 1);

} // namespace voatwist

#endif
