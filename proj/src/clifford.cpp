#include "realchar/clifford.hpp"

#include <algorithm>

namespace realchar {

int SigmaReport::count_good() const {
    int n = 0;
    for (auto& r : rows) n += r.good ? 1 : 0;
    return n;
}

int SigmaReport::count_sigma(int s) const {
    int n = 0;
    for (auto& r : rows) n += (r.good && r.sigma == s) ? 1 : 0;
    return n;
}

long GowReport::type_difference() const {
    long d = 0;
    for (auto& r : rows) d += r.eps;
    return d;
}

ClassFunction conjugate_character(const ClassFunction& theta, int g) {
    GroupPtr h = theta.group;
    GroupPtr parent = h->parent_group();
    if (!parent) throw InputError("conjugate_character: subgroup bundle required");
    const GroupTable& pt = parent->table();
    const auto& to_par = h->table().to_parent();
    const auto& from_par = h->table().from_parent();
    int gi = pt.inv(g);
    ClassFunction r;
    r.group = h;
    r.values.reserve(theta.values.size());
    for (int k = 0; k < h->classes().num(); ++k) {
        int rep = to_par[h->classes().reps[k]];
        int c = pt.mul(pt.mul(g, rep), gi);
        int hi = from_par[c];
        if (hi < 0) throw InputError("conjugate_character: element does not normalize the subgroup");
        r.values.push_back(theta.values[h->classes().class_of[hi]]);
    }
    return r;
}

namespace {

Subgroup members_to_subgroup(const GroupTable& g, std::vector<int> mem) {
    Subgroup h;
    h.inset.assign(g.order(), 0);
    for (int m : mem) h.inset[m] = 1;
    std::sort(mem.begin(), mem.end());
    h.members = std::move(mem);
    h.is_normal = true;
    for (int a : g.generators())
        for (int m : h.members)
            if (!h.inset[g.conj(m, a)]) { h.is_normal = false; break; }
    return h;
}

// translate a subgroup of the ambient group into view coordinates
Subgroup translate_into(const GroupPtr& view, const Subgroup& amb) {
    const auto& from_par = view->table().from_parent();
    std::vector<int> mem;
    for (int m : amb.members) {
        int i = from_par[m];
        if (i >= 0) mem.push_back(i);
    }
    return members_to_subgroup(view->table(), std::move(mem));
}

}  // namespace

ThetaContext::ThetaContext(GroupPtr g, Subgroup n, ClassFunction theta)
    : g_(std::move(g)), n_(std::move(n)), theta_(std::move(theta)) {
    if (!n_.is_normal) throw InputError("theta context: subgroup is not normal");
    ngrp_ = theta_.group;
    if (!ngrp_ || ngrp_->parent_group().get() != g_.get() ||
        ngrp_->table().to_parent() != n_.members)
        throw InputError("theta context: theta must live on the given normal subgroup");
    if (!is_irreducible(theta_)) throw InputError("theta context: theta is not irreducible");

    // inertia sweep over coset representatives
    ClassFunction dual = conjugate(theta_);
    inertia_.theta = theta_;
    inertia_.theta_is_real = (theta_ == dual);
    const auto& q = g_->quotient_by(n_);
    std::vector<int> in_cosets, ext_cosets;
    for (int bar = 0; bar < q.group->order(); ++bar) {
        int rep = q.section[bar];
        ClassFunction tg = conjugate_character(theta_, rep);
        bool is_self = (tg == theta_);
        bool is_dual = (tg == dual);
        if (is_self) in_cosets.push_back(bar);
        if (is_self || is_dual) ext_cosets.push_back(bar);
        if (is_dual) inertia_.dual_is_conjugate = true;
        if (std::find(inertia_.orbit.begin(), inertia_.orbit.end(), tg) ==
            inertia_.orbit.end())
            inertia_.orbit.push_back(tg);
    }
    auto fill = [&](const std::vector<int>& cosets) {
        std::vector<int> mem;
        for (int bar : cosets)
            for (int m : n_.members) mem.push_back(g_->table().mul(m, q.section[bar]));
        return members_to_subgroup(g_->table(), std::move(mem));
    };
    inertia_.inertia = fill(in_cosets);
    inertia_.extended_inertia = fill(ext_cosets);
    if (inertia_.theta_is_real || !inertia_.dual_is_conjugate) {
        if (inertia_.extended_inertia.members != inertia_.inertia.members)
            throw EngineDefect("theta context: extended inertia group mismatch");
    }

    tgrp_ = g_->subgroup(inertia_.inertia);
    sgrp_ = g_->subgroup(inertia_.extended_inertia);
    n_in_t_ = translate_into(tgrp_, n_);
    n_in_s_ = translate_into(sgrp_, n_);
}

const Group::QuotientCtx& ThetaContext::inertia_quotient() const {
    return tgrp_->quotient_by(n_in_t_);
}

const Group::QuotientCtx& ThetaContext::extended_quotient() const {
    return sgrp_->quotient_by(n_in_s_);
}

int ThetaContext::lift_inertia(int bar) const {
    return tgrp_->table().to_parent()[inertia_quotient().section[bar]];
}

int ThetaContext::lift_extended(int bar) const {
    return sgrp_->table().to_parent()[extended_quotient().section[bar]];
}

bool ThetaContext::theta_conj_is_dual(int g) const {
    if (inertia_.theta_is_real) return inertia_.inertia.contains(g);
    return inertia_.extended_inertia.contains(g) && !inertia_.inertia.contains(g);
}

const ExtensionFamily& ThetaContext::extensions_at(int x) const {
    auto it = families_.find(x);
    if (it != families_.end()) return it->second;
    if (!inertia_.inertia.contains(x))
        throw InputError("extensions: element is not in the inertia group, theta does not extend");

    ExtensionFamily fam;
    fam.x = x;
    const GroupTable& gt = g_->table();
    // N<x> = union of the cosets N x^t
    std::vector<int> mem;
    int xt = 0, m = 0;
    do {
        for (int nm : n_.members) mem.push_back(gt.mul(nm, xt));
        xt = gt.mul(xt, x);
        ++m;
    } while (!n_.contains(xt));
    fam.local = members_to_subgroup(gt, std::move(mem));
    fam.local_group = g_->subgroup(fam.local);

    // class fusion N -> N<x>
    const auto& lg = *fam.local_group;
    fam.n_class_in_local.resize(ngrp_->classes().num());
    for (int k = 0; k < ngrp_->classes().num(); ++k) {
        int par = ngrp_->table().to_parent()[ngrp_->classes().reps[k]];
        fam.n_class_in_local[k] = lg.classes().class_of[lg.table().from_parent()[par]];
    }

    for (auto& chi : lg.character_table().irr) {
        bool restricts = true;
        for (int k = 0; k < ngrp_->classes().num() && restricts; ++k)
            restricts = (chi.values[fam.n_class_in_local[k]] == theta_.values[k]);
        if (restricts) fam.extensions.push_back(chi);
    }
    if ((int)fam.extensions.size() != m)
        throw EngineDefect("extensions: count differs from the cyclic quotient order");
    fam.chosen = 0;
    return families_.emplace(x, std::move(fam)).first->second;
}

bool ThetaContext::is_good(int x) const {
    auto it = good_.find(x);
    if (it != good_.end()) return it->second;
    bool result = true;
    if (!n_.contains(x)) {  // x in N: the extension is theta itself, fixed by G_theta
        const ExtensionFamily& fam = extensions_at(x);
        const ClassFunction& tx = fam.extensions[fam.chosen];
        const GroupTable& gt = g_->table();
        for (int y : inertia_.inertia.members) {
            if (!n_.contains(gt.commutator(x, y))) continue;  // y not in C(xN)
            if (conjugate_character(tx, y) != tx) { result = false; break; }
        }
    }
    good_[x] = result;
    return result;
}

bool ThetaContext::sigma_witness_ok(int x, int e) const {
    if (!inertia_.extended_inertia.contains(e)) return false;
    const GroupTable& gt = g_->table();
    if (!n_.contains(gt.mul(gt.conj(x, e), x))) return false;  // x^e must lie in N x^-1
    return theta_conj_is_dual(e);
}

int ThetaContext::sigma_sign_with(int x, int e, int ext) const {
    const ExtensionFamily& fam = extensions_at(x);
    const ClassFunction& tx = fam.extensions[ext];
    return conjugate_character(tx, e) == conjugate(tx) ? 1 : -1;
}

std::pair<int, std::optional<int>> ThetaContext::sigma(int x) const {
    for (int e : inertia_.extended_inertia.members) {
        if (!sigma_witness_ok(x, e)) continue;
        return {sigma_sign_with(x, e, extensions_at(x).chosen), e};
    }
    return {0, std::nullopt};
}

int ThetaContext::gow(int t) const {
    const GroupTable& gt = g_->table();
    if (!n_.contains(gt.mul(t, t)))
        throw InputError("gow indicator: t^2 does not lie in N");
    const auto& from_par = ngrp_->table().from_parent();
    const auto& ncls = ngrp_->classes();
    Cyclotomic sum;
    for (int nm : n_.members) {
        int nt = gt.mul(nm, t);
        int sq = gt.mul(nt, nt);
        sum += theta_.values[ncls.class_of[from_par[sq]]];
    }
    Cyclotomic eps = sum / Cyclotomic(Rational(n_.order()));
    auto v = eps.as_integer();
    if (!v || *v < -1 || *v > 1)
        throw EngineDefect("gow indicator: value " + eps.str() + " outside {-1,0,1}");
    return static_cast<int>(*v);
}

SigmaReport ThetaContext::sigma_report() const {
    SigmaReport rep;
    rep.dual_is_conjugate = inertia_.dual_is_conjugate;
    const auto& q = inertia_quotient();
    const auto& qg = *q.group;
    for (int k = 0; k < qg.classes().num(); ++k) {
        SigmaRow row;
        row.class_index = k;
        row.rep_bar = qg.classes().reps[k];
        row.rep = lift_inertia(row.rep_bar);
        row.class_size = qg.classes().size(k);
        row.order_bar = qg.table().element_order(row.rep_bar);
        row.two_regular = (row.order_bar % 2 == 1);
        row.good = is_good(row.rep);
        if (row.good) {
            auto [s, w] = sigma(row.rep);
            row.sigma = s;
            row.witness = w;
        }
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

GowReport ThetaContext::gow_report() const {
    GowReport rep;
    const auto& q = extended_quotient();
    for (int bar = 0; bar < q.group->order(); ++bar) {
        if (q.group->table().element_order(bar) > 2) continue;
        GowRow row;
        row.coset_bar = bar;
        row.rep = lift_extended(bar);
        row.order_bar = q.group->table().element_order(bar);
        row.eps = gow(row.rep);
        rep.rows.push_back(row);
    }
    return rep;
}

// ---- free-function wrappers ------------------------------------------------

InertiaData inertia_data(const GroupPtr& g, const Subgroup& n, const ClassFunction& theta) {
    return ThetaContext(g, n, theta).inertia();
}

ExtensionFamily extensions_of(const GroupPtr& g, const Subgroup& n,
                              const ClassFunction& theta, int x) {
    return ThetaContext(g, n, theta).extensions_at(x);
}

bool is_good(const GroupPtr& g, const Subgroup& n, const ClassFunction& theta, int x) {
    ThetaContext ctx(g, n, theta);
    if (!ctx.inertia().inertia.contains(x))
        throw InputError("is_good: element is not in the inertia group");
    return ctx.is_good(x);
}

std::pair<int, std::optional<int>> sigma_indicator(const GroupPtr& g, const Subgroup& n,
                                                   const ClassFunction& theta, int x) {
    ThetaContext ctx(g, n, theta);
    if (!ctx.inertia().inertia.contains(x))
        throw InputError("sigma: element is not in the inertia group");
    if (!ctx.is_good(x)) throw InputError("sigma: coset is not good for theta");
    return ctx.sigma(x);
}

int gow_indicator(const GroupPtr& g, const Subgroup& n, const ClassFunction& theta, int t) {
    return ThetaContext(g, n, theta).gow(t);
}

SigmaReport sigma_report(const GroupPtr& g, const Subgroup& n, const ClassFunction& theta) {
    return ThetaContext(g, n, theta).sigma_report();
}

GowReport gow_report(const GroupPtr& g, const Subgroup& n, const ClassFunction& theta) {
    return ThetaContext(g, n, theta).gow_report();
}

}  // namespace realchar
