#pragma once

#include <memory>
#include <string>
#include <vector>

#include "dcrit/graded.hpp"
#include "dcrit/hopf.hpp"

namespace dcrit {

enum class ModelKind { ZeroLocus, CriticalLocus, BV };

std::string model_kind_str(ModelKind k);

// Raw, validated input shared by the model builders. Coactions and f are
// polynomials over `ring`.
struct ModelInput {
    std::shared_ptr<VarTable> ring;
    const HopfAlgebra* H = nullptr;
    std::vector<std::map<HKey, Polynomial>> coaction; // delta(x_i)
    Polynomial f;
    std::map<std::string, int> antifield_weight; // overrides, by variable name
    std::map<int, int> ghost_weight;             // overrides, by Lie index
};

struct CheckResult {
    bool ok = true;
    std::string detail; // witness on failure
};

// A free graded-commutative dg-algebra with H-coaction, presented by
// generators. The three instances built here share the machinery:
//   ZeroLocus      x_i, v_i in degree 0 (v_i are plain variables),
//                  ghost-antifields in degree -1, d xi = mu*(xi)
//   CriticalLocus  x_i deg 0, v_i deg -1, xi_a deg -2,
//                  d v_i = df/dx_i, d xi_a = mu*(xi_a)
//   BV             CriticalLocus plus ghosts theta^a in degree +1
class DgModel {
public:
    ModelKind kind;
    const HopfAlgebra* H = nullptr;
    Polynomial f;

    const ModelContext& ctx() const { return *ctx_; }
    ModelContext& ctx() { return *ctx_; }

    int num_x = 0;                    // leading variables of ctx().vars are the x_i
    std::vector<int> antifield;       // x index -> generator index (or v-variable index for ZeroLocus)
    std::vector<int> ghost_antifield; // Lie index -> generator index
    std::vector<int> ghost;           // Lie index -> generator index (BV only)

    std::vector<std::map<HKey, Polynomial>> var_coaction;    // per variable
    std::vector<std::map<HKey, GradedElement>> gen_coaction; // per generator

    std::vector<GradedElement> d_var, d_gen;

    DgModel() : ctx_(std::make_unique<ModelContext>()) {}
    DgModel(DgModel&&) = default;
    DgModel& operator=(DgModel&&) = default;

    Derivation differential() const;
    // Lie algebra action on the model algebra, rho(xi_a)(z) = z_0 xi_a(z_1).
    Derivation rho(int a) const;
    // mu*(xi_a) = -sum_i rho(xi_a)(x_i) v_i
    GradedElement moment_map(int a) const;

    GradedElement gen_elem(int g) const { return GradedElement::generator(ctx_.get(), g); }
    GradedElement var_elem(int v) const {
        return GradedElement::from_poly(ctx_.get(), Polynomial::variable(&ctx_->vars, v));
    }

    // Multiplicative extension of the coaction to a whole element.
    std::map<HKey, GradedElement> coact(const GradedElement& e) const;

    // True when every variable and every even generator has weight > 0,
    // which makes each (degree, weight) component finite-dimensional.
    bool exact_mode_ok(std::string* why = nullptr) const;

private:
    std::unique_ptr<ModelContext> ctx_;
};

DgModel build_zero_locus(const ModelInput& in);    // O(mu^{-1}(0))
DgModel build_critical_locus(const ModelInput& in); // O(Z)
DgModel build_bv(const ModelInput& in);            // O(BV) generators

// delta(f) = f (x) 1 plus the infinitesimal test rho(xi_a)(f) = 0.
CheckResult check_invariance(const ModelInput& in);
// Coaction axioms on the generators of A: (id (x) eps) delta = id and
// coassociativity (delta (x) id) delta = (id (x) Delta) delta.
CheckResult check_coaction_axioms(const ModelInput& in);

CheckResult verify_d_squared(const DgModel& m);
CheckResult check_weight_homogeneity(const DgModel& m);
// delta(d g) = (d (x) id)(delta g) on every variable and generator.
CheckResult check_equivariance(const DgModel& m);

} // namespace dcrit
