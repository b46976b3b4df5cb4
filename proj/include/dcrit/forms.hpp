#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dcrit/model.hpp"

namespace dcrit {

// One d^dR symbol. Var/Gen symbols differentiate the model algebra; HVar
// symbols are dt_i on the H tensor factor at `slot` (1-based).
enum class DSymKind : std::uint8_t { Var = 0, Gen = 1, HVar = 2 };

struct DSym {
    DSymKind kind = DSymKind::Var;
    int slot = 0; // only HVar symbols carry a slot
    int index = 0;
    auto operator<=>(const DSym&) const = default;
};

// Sorted (symbol, exponent) pairs; odd symbols never repeat. A symbol
// d(s) has internal degree |s| and is odd iff |s| + 1 is odd.
using DWord = std::vector<std::pair<DSym, int>>;

// Term key of the double complex Omega^p over O(Z) (x) H^{(x)m}: algebra
// word, m tensor legs in the H basis, and the wedge word of symbols.
// Canonical letter order: polynomial part, word, legs, symbols.
struct FormKey {
    Word word;
    std::vector<HKey> hlegs;
    DWord dword;
    auto operator<=>(const FormKey&) const = default;
};

int dsym_degree(const DgModel& m, const DSym& s);
int dsym_parity(const DgModel& m, const DSym& s);
int dword_parity(const DgModel& m, const DWord& d);
int dword_degree(const DgModel& m, const DWord& d);
int dword_weight(const DgModel& m, const DWord& d);

struct DWordMerge {
    DWord word;
    int sign;
};
DWordMerge merge_dwords(const DgModel& m, const DWord& a, const DWord& b);

// Element of the Kaehler form bicomplex over a model. Levels (numbers of
// H legs) and form degrees may be mixed within one container; products
// are slotwise on legs and pad level-0 factors with unit legs.
class StackyForm {
public:
    StackyForm() : model_(nullptr) {}
    explicit StackyForm(const DgModel* m) : model_(m) {}

    static StackyForm embed(const DgModel* m, const GradedElement& e);   // level 0, p = 0
    static StackyForm embed_poly(const DgModel* m, const Polynomial& p);
    static StackyForm term(const DgModel* m, const FormKey& k, const Polynomial& p);

    const DgModel* model() const { return model_; }
    const std::map<FormKey, Polynomial>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const FormKey& k, const Polynomial& p);
    StackyForm operator+(const StackyForm& o) const;
    StackyForm operator-(const StackyForm& o) const;
    StackyForm operator-() const;
    StackyForm operator*(const StackyForm& o) const;
    StackyForm scaled(const Rat& c) const;
    bool operator==(const StackyForm& o) const;

    std::string str() const;

private:
    const DgModel* model_;
    std::map<FormKey, Polynomial> terms_;
};

int key_vertical_degree(const DgModel& m, const FormKey& k); // word + symbol degrees
int key_level(const FormKey& k);                             // number of H legs
int key_form_degree(const FormKey& k);                       // total symbol exponent
int key_parity(const DgModel& m, const FormKey& k);          // word + symbol parities
int key_weight(const DgModel& m, const FormKey& k, const Expo& mono);

// The de Rham differential of the level algebras, d^dR(s) = ds.
StackyForm derham(const StackyForm& f);
// Extension of the model differential, commuting with d^dR on symbols.
StackyForm vertical(const StackyForm& f);
// Cosimplicial differential: alternating sum of the coface maps
// (coaction, coproduct on each leg, unit insertion), extended to forms.
StackyForm d_delta(const StackyForm& f);
// Total differential of the Pi-total complex: d + (-1)^{vertical} d_Delta.
StackyForm d_total(const StackyForm& f);
// Contraction with an even derivation, on level-0 forms.
StackyForm contract(const StackyForm& f, const Derivation& v);

} // namespace dcrit
