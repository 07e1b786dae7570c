// Clifford-theoretic machinery for a triple (G, N normal, theta in Irr(N)):
// the theta-orbit and (extended) inertia groups, extensions of theta to the
// cyclic-over-N subgroups N<x>, goodness of cosets, the sigma indicator on
// good classes, and the Gow indicator on involution cosets.
#pragma once

#include <optional>

#include "realchar/chartable.hpp"

namespace realchar {

struct InertiaData {
    ClassFunction theta;
    std::vector<ClassFunction> orbit;  // distinct conjugates, coset-sweep order
    Subgroup inertia;                  // G_theta, ambient coordinates
    Subgroup extended_inertia;         // G*_theta = stabilizer of {theta, theta-bar}
    bool theta_is_real = false;
    bool dual_is_conjugate = false;    // theta-bar lies in the G-orbit of theta
};

struct ExtensionFamily {
    int x = 0;                              // ambient element
    Subgroup local;                         // N<x>
    GroupPtr local_group;
    std::vector<int> n_class_in_local;      // N-class -> class index in N<x>
    std::vector<ClassFunction> extensions;  // irreducibles of N<x> restricting to theta
    int chosen = 0;                         // canonical choice: first in table order
};

struct SigmaRow {
    int class_index = 0;  // class of G_theta/N
    int rep_bar = 0;      // quotient element
    int rep = 0;          // minimal ambient coset representative
    long class_size = 0;
    int order_bar = 0;
    bool good = false;
    int sigma = 0;
    std::optional<int> witness;  // ambient element carrying (x,theta) to (x^-1,theta-bar)
    bool two_regular = false;
};

struct SigmaReport {
    bool dual_is_conjugate = false;
    std::vector<SigmaRow> rows;

    int count_good() const;
    int count_sigma(int s) const;
};

struct GowRow {
    int coset_bar = 0;  // involution coset of G*_theta/N, quotient element
    int rep = 0;        // minimal ambient representative
    int order_bar = 0;
    int eps = 0;
};

struct GowReport {
    std::vector<GowRow> rows;
    long type_difference() const;  // #(+1) - #(-1)
};

// theta^g (n |-> theta(g n g^-1)) on the same subgroup bundle; g must
// normalize the subgroup
ClassFunction conjugate_character(const ClassFunction& theta, int g);

// One (G, N, theta) analysis. Goodness sweeps run inside G_theta and sigma
// witnesses are searched in G*_theta, which is exactly the reduction the
// Clifford correspondence grants. Extension data is cached per element.
class ThetaContext {
public:
    ThetaContext(GroupPtr g, Subgroup n, ClassFunction theta);

    const GroupPtr& ambient() const { return g_; }
    const Subgroup& normal() const { return n_; }
    const GroupPtr& normal_group() const { return ngrp_; }
    const ClassFunction& theta() const { return theta_; }
    const InertiaData& inertia() const { return inertia_; }

    const GroupPtr& inertia_group() const { return tgrp_; }
    const Group::QuotientCtx& inertia_quotient() const;   // G_theta / N
    const GroupPtr& extended_group() const { return sgrp_; }
    const Group::QuotientCtx& extended_quotient() const;  // G*_theta / N

    // lift a quotient element of G_theta/N (resp. G*_theta/N) to the ambient group
    int lift_inertia(int bar) const;
    int lift_extended(int bar) const;

    const Subgroup& normal_in_inertia() const { return n_in_t_; }
    const Subgroup& normal_in_extended() const { return n_in_s_; }

    const ExtensionFamily& extensions_at(int x) const;
    bool is_good(int x) const;
    // sigma value and the first witness in enumeration order; {0, nullopt}
    // when no element carries (x, theta) to (x^-1, theta-bar)
    std::pair<int, std::optional<int>> sigma(int x) const;
    bool sigma_witness_ok(int x, int e) const;      // e satisfies the pair condition
    int sigma_sign_with(int x, int e, int ext) const;  // sign using a given witness/extension
    int gow(int t) const;                           // eps_t(theta), t^2 in N

    SigmaReport sigma_report() const;
    GowReport gow_report() const;

    bool theta_conj_is_dual(int g) const;  // theta^g == conjugate(theta)

private:
    GroupPtr g_;
    Subgroup n_;
    GroupPtr ngrp_;
    ClassFunction theta_;
    InertiaData inertia_;
    GroupPtr tgrp_;   // G_theta bundle
    GroupPtr sgrp_;   // G*_theta bundle
    Subgroup n_in_t_;
    Subgroup n_in_s_;
    mutable std::map<int, ExtensionFamily> families_;
    mutable std::map<int, bool> good_;
};

// spec-level entry points
InertiaData inertia_data(const GroupPtr& g, const Subgroup& n, const ClassFunction& theta);
ExtensionFamily extensions_of(const GroupPtr& g, const Subgroup& n,
                              const ClassFunction& theta, int x);
bool is_good(const GroupPtr& g, const Subgroup& n, const ClassFunction& theta, int x);
std::pair<int, std::optional<int>> sigma_indicator(const GroupPtr& g, const Subgroup& n,
                                                   const ClassFunction& theta, int x);
int gow_indicator(const GroupPtr& g, const Subgroup& n, const ClassFunction& theta, int t);
SigmaReport sigma_report(const GroupPtr& g, const Subgroup& n, const ClassFunction& theta);
GowReport gow_report(const GroupPtr& g, const Subgroup& n, const ClassFunction& theta);

}  // namespace realchar
