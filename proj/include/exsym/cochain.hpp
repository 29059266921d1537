#pragma once

#include <map>

#include "exsym/algebra.hpp"

namespace exsym {

// Alternating multilinear form of fixed arity on an n-dim space, with values
// in a vdim-dim space. Only values on strictly increasing index tuples are
// stored; value() extends by the sign of the sorting permutation.
class AltForm {
public:
    AltForm() = default;
    AltForm(int arity, int dim, int vdim) : arity_(arity), dim_(dim), vdim_(vdim) {}

    int arity() const { return arity_; }
    int dim() const { return dim_; }
    int vdim() const { return vdim_; }

    VecQ value(std::vector<int> idx) const;  // signed; zero on repeated indices
    Rat scalar(const std::vector<int>& idx) const;
    void set(std::vector<int> idx, VecQ v);
    void add(std::vector<int> idx, VecQ v);

    // full multilinear evaluation on vectors
    VecQ eval(const std::vector<VecQ>& args) const;
    // first argument a vector, the rest basis indices
    VecQ eval_mixed(const VecQ& first, const std::vector<int>& rest) const;

    bool is_zero() const;
    bool operator==(const AltForm& o) const { return entries_ == o.entries_; }

    AltForm operator+(const AltForm& o) const;
    AltForm operator-(const AltForm& o) const;
    AltForm scaled(const Rat& c) const;

    const std::map<std::vector<int>, VecQ>& entries() const { return entries_; }
    static std::vector<std::vector<int>> combos(int dim, int arity);

private:
    int arity_ = 0, dim_ = 0, vdim_ = 0;
    std::map<std::vector<int>, VecQ> entries_;  // keys strictly increasing
};

// Chevalley-Eilenberg differential. rho[i] acts on the value space; an empty
// rho means trivial coefficients.
AltForm ce_differential(const AltForm& w, const BracketTensor& lb, const std::vector<MatQ>& rho);

// tau interpreted as the 1-form e_i -> tau.col(i)
AltForm one_form(const MatQ& tau);

// <tau1 ^ tau2>(x,y) = <tau1 x, tau2 y> - <tau1 y, tau2 x>
AltForm wedge_inner(const MatQ& tau1, const MatQ& tau2, const MatQ& gram);
// <beta ^ tau>(x,y,z) = cyclic sum <beta(x,y), tau z>
AltForm wedge_inner(const AltForm& beta, const MatQ& tau, const MatQ& gram);
// <alpha ^ beta>: alternating pairing of two a-valued 2-forms (a 4-form)
AltForm wedge_inner(const AltForm& alpha, const AltForm& beta, const MatQ& gram);

// Lie-derivative condition: sum_i w(..., D_dom x_i, ...) = D_val o w
bool form_D_invariant(const AltForm& w, const MatQ& D_dom, const MatQ& D_val);
// th_val o w(th_dom x_1, ..., th_dom x_k) = sign * w
bool form_theta_invariant(const AltForm& w, const MatQ& th_dom, const MatQ& th_val, int sign);

AltForm pullback(const AltForm& w, const MatQ& S);     // w(S., ..., S.)
AltForm postcompose(const AltForm& w, const MatQ& U);  // U o w

}  // namespace exsym
