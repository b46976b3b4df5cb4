#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "dcrit/rational.hpp"

namespace dcrit {

enum class GroupClass { FiniteGroup, Torus, Multiplicative, Additive };

std::string group_class_str(GroupClass c);

// Basis key of H. Finite group: {element index}. Torus of rank r: Laurent
// exponents of t_1..t_r. Multiplicative: torus of rank 1. Additive: {n},
// n >= 0, the monomial t^n.
using HKey = std::vector<int>;
using HElt = std::map<HKey, Rat>;
using HTensor = std::map<std::vector<HKey>, Rat>; // element of H^{(x) k}

void helt_add(HElt& a, const HKey& k, const Rat& c);
HElt helt_mul(const class HopfAlgebra& H, const HElt& a, const HElt& b);

// H = O(G) for the supported affine group schemes, presented in an exact
// basis with the structure maps given on basis elements.
class HopfAlgebra {
public:
    static HopfAlgebra finite_group(std::vector<std::string> names,
                                    const std::map<std::pair<std::string, std::string>,
                                                   std::string>& products);
    static HopfAlgebra torus(int rank);
    static HopfAlgebra multiplicative();
    static HopfAlgebra additive();

    GroupClass cls() const { return cls_; }
    int rank() const { return rank_; }
    int order() const { return static_cast<int>(names_.size()); } // finite only
    const std::vector<std::string>& element_names() const { return names_; }

    HKey unit_key() const;
    bool is_unit_key(const HKey& k) const { return k == unit_key(); }
    std::string key_str(const HKey& k) const;

    Rat counit(const HKey& k) const;
    std::pair<HKey, Rat> antipode(const HKey& k) const;
    std::vector<std::tuple<HKey, HKey, Rat>> coproduct(const HKey& k) const;
    // Basis products have at most one term in every supported class.
    std::optional<std::pair<HKey, Rat>> product(const HKey& a, const HKey& b) const;

    HElt counit_kernel_projection(const HElt& h) const; // h - eps(h) 1
    HElt antipode_elt(const HElt& h) const;
    Rat counit_elt(const HElt& h) const;

    // Checks the Hopf axioms (coassociativity, counit, antipode) on an
    // exhaustive basis sample; throws std::runtime_error on failure.
    void validate() const;

    // --- Lie algebra g = Der_eps(H, K) ----------------------------------
    int lie_dim() const { return lie_dim_; }
    Rat xi_eval(int a, const HKey& k) const;
    Rat xi_eval_elt(int a, const HElt& h) const;
    // f^c_{ab} from [xi_a, xi_b](h) = xi_a(h1) xi_b(h2) - xi_b(h1) xi_a(h2).
    Rat structure_constant(int c, int a, int b) const;
    Rat bracket_eval(int a, int b, const HKey& k) const;
    // Representative of the a-th dual basis vector of g* = H+/H+^2,
    // normalized so that xi_b(rep_a) = delta_ab.
    HElt gstar_rep(int a) const;
    // Right adjoint coaction h -> h2 (x) S(h1) h3 evaluated on gstar_rep(a)
    // and projected to g* coordinates: entry [a][b] multiplies theta^b.
    std::vector<std::vector<HElt>> adjoint_coaction_gstar() const;

    // --- Kaehler forms over H -------------------------------------------
    // Number of 1-form module generators dt_i; zero for finite groups
    // (K^G is etale, so Omega^1 vanishes).
    int hvar_count() const;
    std::string hvar_name(int i) const;
    // d^dR of a basis element: sum of coeff * t^(new key) * dt_(hvar).
    std::vector<std::tuple<int, HKey, Rat>> key_derham(const HKey& k) const;

    // --- normalized basis of H+ -----------------------------------------
    bool is_plus_key(const HKey& k) const;
    // Coordinates of the projection h - eps(h)1 on the normalized basis.
    std::vector<std::pair<HKey, Rat>> project_plus_key(const HKey& k) const;
    // The H-element a normalized basis key stands for.
    HElt lift_plus_key(const HKey& k) const;
    std::string plus_key_str(const HKey& k) const;
    // All normalized basis keys (finite group only).
    std::vector<HKey> plus_basis() const;

private:
    GroupClass cls_ = GroupClass::Torus;
    int rank_ = 1;
    std::vector<std::string> names_; // finite group element names
    std::vector<std::vector<int>> table_;
    std::vector<int> inverse_;
    int identity_ = 0;

    int lie_dim_ = 0;
    std::vector<std::vector<Rat>> finite_xi_; // finite-group solve output

    void finite_validate_table() const;
    void compute_lie();
};

// Delta^n h as an element of H^{(x) (n+1)}; n = 0 returns h itself.
HTensor sweedler_iterate(const HopfAlgebra& H, const HElt& h, int n);

} // namespace dcrit
