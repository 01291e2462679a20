#ifndef VOATWIST_ZHU_HPP
#define VOATWIST_ZHU_HPP

#include <memory>
#include <optional>

#include "voatwist/voa.hpp"

namespace voatwist {

struct TruncationWindow {
    Rational max_degree;
};

/// Graded monomial order used for all eliminations: by module degree, then
/// PBW-lexicographic with the lattice label last.
bool mono_less(const Module& ctx, const Monomial& a, const Monomial& b);

/// Exact row-reduction engine over monomial coordinates. Each stored row is
/// fully reduced against the previously stored rows, so leading monomials
/// are distinct and normal forms are canonical.
class Reducer {
public:
    explicit Reducer(std::shared_ptr<const Module> ctx) : ctx_(std::move(ctx)) {}

    GradedVector reduce(const GradedVector& v) const;
    /// Reduce and insert; returns false when the relation was dependent.
    bool add_relation(const GradedVector& r);
    size_t rank() const { return rows_.size(); }
    const std::map<Monomial, GradedVector>& rows() const { return rows_; }
    const Module& ctx() const { return *ctx_; }

private:
    std::optional<Monomial> leading(const GradedVector& v) const;
    std::shared_ptr<const Module> ctx_;
    std::map<Monomial, GradedVector> rows_;  // keyed by leading monomial
};

/// Span tracker with coefficient bookkeeping: expresses vectors in terms of
/// the generators added so far.
class SpanSolver {
public:
    explicit SpanSolver(std::shared_ptr<const Module> ctx) : ctx_(std::move(ctx)) {}
    /// Returns the new basis index, or -1 when v is dependent on the span.
    int add(const GradedVector& v);
    std::optional<std::vector<Rational>> express(const GradedVector& v) const;
    size_t size() const { return count_; }

private:
    std::shared_ptr<const Module> ctx_;
    size_t count_ = 0;
    // rows in echelon form together with their expression in the generators
    std::vector<std::pair<GradedVector, std::vector<Rational>>> rows_;
};

/// a o_g u = Res_z (1+z)^{wt a - 1 + delta(r) + r/T} z^{-1-delta(r)-k} Y(a,z)u.
/// `sector` is the g-eigenvalue index of a; k >= 0 gives the derived family.
GradedVector circle_g(const Module& host, const GradedVector& a, int sector,
                      const GradedVector& u, int k = 0);

/// a *_g u and u *_g a for the V^0-projection of a (zero otherwise).
GradedVector star_g_left(const Module& host, const GradedVector& a, const GradedVector& u);
GradedVector star_g_right(const Module& host, const GradedVector& u, const GradedVector& a);

struct OSubspaceOptions {
    bool bimodule_lambda_relations = false;  // add (L(-1)+L(0)+lambda)u generators
    Rational lambda = Rational(0);
    bool include_derived_family = true;  // k=1 relations of the o_g family
};

/// Row basis of the circle-product relation span inside the working window.
std::vector<GradedVector> o_subspace(const Module& host, const Rational& window,
                                     const OSubspaceOptions& opt = {});

struct ReducedClass {
    Monomial rep;
    GradedVector canonical;
};

struct ReducedAlgebra {
    std::shared_ptr<const Module> vac;
    std::shared_ptr<Reducer> red;
    std::shared_ptr<SpanSolver> span;
    Rational trunc;
    Rational work_window;
    std::vector<ReducedClass> basis;
    // structure[i][j] = coordinates of [basis_i] *_g [basis_j]; empty entries
    // mark products that leave the window (then products_closed is false)
    std::vector<std::vector<std::vector<Rational>>> structure;
    bool products_closed = true;
    int identity_index = -1;
    std::vector<Rational> omega_coords;

    size_t dim() const { return basis.size(); }
    GradedVector reduce(const GradedVector& v) const { return red->reduce(v); }
    std::vector<Rational> express(const GradedVector& v) const;
    /// right action coordinates of the class of `a` (for Hom computations)
    std::vector<Rational> class_of(const GradedVector& a) const { return express(a); }
};

ReducedAlgebra quotient_algebra(const VOAInstance& voa, const Rational& trunc,
                                const Rational& slack = Rational(2));

struct BimoduleMode {
    bool b_mode = false;  // A_g(M) when false, B_{g,lambda}(M) when true
    Rational lambda = Rational(0);
};

struct ReducedBimodule {
    std::shared_ptr<const Module> mod;
    std::shared_ptr<Reducer> red;
    std::shared_ptr<SpanSolver> span;
    Rational trunc;
    std::vector<ReducedClass> basis;
    // left[k] and right[k]: matrices of the algebra basis class k,
    // columns indexed by bimodule basis, entries by bimodule basis
    std::vector<std::vector<std::vector<Rational>>> left, right;

    size_t dim() const { return basis.size(); }
    std::vector<Rational> express(const GradedVector& v) const;
};

ReducedBimodule quotient_bimodule(const ReducedAlgebra& alg, const ModuleId& mid,
                                  const BimoduleMode& mode, const Rational& trunc,
                                  const Rational& slack = Rational(2));

/// Checks that a |-> [a] + A_g(V)_{m-1} kills C_2(V) and respects products
/// degree-by-degree inside the window.
bool graded_surjection_check(const VOAInstance& voa, const Rational& window);

} // namespace voatwist

#endif
