#include "realchar/counting.hpp"

#include <algorithm>
#include <set>

namespace realchar {

namespace {

long require_integer(const Cyclotomic& v, const char* what) {
    auto z = v.as_integer();
    if (!z) throw EngineDefect(std::string(what) + ": expected an integer, got " + v.str());
    return static_cast<long>(*z);
}

std::string triple_tag(const ThetaContext& ctx) {
    return ctx.ambient()->name() + " N" + std::to_string(ctx.normal().order()) + " theta(deg " +
           to_string(*ctx.theta().degree().as_integer()) + ")";
}

}  // namespace

ClassFunction theta_of(const GroupPtr& g, const Subgroup& n, int theta_index) {
    GroupPtr ngrp = g->subgroup(n);
    const auto& tab = ngrp->character_table();
    if (theta_index < 0 || theta_index >= (int)tab.irr.size())
        throw InputError("theta index " + std::to_string(theta_index) + " out of range (N has " +
                         std::to_string(tab.irr.size()) + " irreducible characters)");
    return tab.irr[theta_index];
}

std::vector<IrrOverEntry> irr_over(const ThetaContext& ctx) {
    std::vector<IrrOverEntry> out;
    const auto& tab = ctx.ambient()->character_table();
    for (int i = 0; i < (int)tab.irr.size(); ++i) {
        const auto& chi = tab.irr[i];
        Cyclotomic m = inner_product(restrict_to(chi, ctx.normal_group()), ctx.theta());
        long mult = require_integer(m, "multiplicity");
        if (mult == 0) continue;
        IrrOverEntry e;
        e.index = i;
        e.degree = tab.degrees[i];
        e.multiplicity = mult;
        e.fs = static_cast<int>(require_integer(fs_indicator(chi), "fs indicator"));
        e.real = (conjugate(chi) == chi);
        out.push_back(e);
    }
    return out;
}

long induced_fs(const ThetaContext& ctx) {
    return require_integer(fs_indicator(induce_from(ctx.theta())), "induced fs");
}

VerificationReport gallagher_count(const ThetaContext& ctx) {
    VerificationReport r;
    r.subject = "gallagher: " + triple_tag(ctx);
    r.theorem_value = ctx.sigma_report().count_good();
    r.oracle_value = (long)irr_over(ctx).size();
    r.pass = (r.theorem_value == r.oracle_value);
    return r;
}

VerificationReport count_real(const ThetaContext& ctx) {
    VerificationReport r;
    r.subject = "count-real: " + triple_tag(ctx);
    if (!ctx.inertia().dual_is_conjugate) {
        r.theorem_value = 0;
        r.detail = "dual not conjugate to theta; no real character can lie over it";
    } else {
        auto rep = ctx.sigma_report();
        r.theorem_value = rep.count_sigma(1) - rep.count_sigma(-1);
    }
    long real = 0;
    for (auto& e : irr_over(ctx)) real += e.real ? 1 : 0;
    r.oracle_value = real;
    r.pass = (r.theorem_value == r.oracle_value);
    return r;
}

VerificationReport epsilon_induced(const ThetaContext& ctx) {
    VerificationReport r;
    r.subject = "epsilon-induced: " + triple_tag(ctx);
    r.theorem_value = ctx.gow_report().type_difference();
    r.oracle_value = induced_fs(ctx);
    r.pass = (r.theorem_value == r.oracle_value);
    return r;
}

VerificationReport richards_check(const ThetaContext& ctx) {
    VerificationReport r;
    r.subject = "richards: " + triple_tag(ctx);
    long index = ctx.inertia().inertia.order() / ctx.normal().order();
    if (!ctx.inertia().theta_is_real || index % 2 == 0) {
        r.applicable = false;
        r.pass = true;
        r.detail = "precondition unmet (theta real and odd |G_theta/N| required)";
        return r;
    }
    // extensions of theta to all of G_theta
    GroupPtr t = ctx.inertia_group();
    const auto& nsub = ctx.normal_in_inertia();
    GroupPtr nin = t->subgroup(nsub);
    std::vector<int> nclass_in_t(nin->classes().num());
    std::vector<ClassFunction> real_ext;
    int over_real = 0, over_real_ext = 0;
    for (auto& chi : t->character_table().irr) {
        auto res = restrict_to(chi, nin);
        bool is_ext = true;
        for (int k = 0; k < (int)res.values.size() && is_ext; ++k)
            is_ext = (res.values[k] == ctx.theta().values[k]);
        bool real = (conjugate(chi) == chi);
        if (is_ext && real) real_ext.push_back(chi);
        if (real && !inner_product(res, ctx.theta()).is_zero()) {
            ++over_real;
            if (is_ext) ++over_real_ext;
        }
    }
    long g_real = 0;
    for (auto& e : irr_over(ctx)) g_real += e.real ? 1 : 0;
    r.theorem_value = 1;
    r.oracle_value = g_real;
    r.pass = (real_ext.size() == 1 && over_real == 1 && over_real_ext == 1 && g_real == 1);
    if (!r.pass)
        r.detail = "real extensions: " + std::to_string(real_ext.size()) +
                   ", real characters over theta in G_theta: " + std::to_string(over_real) +
                   ", in G: " + std::to_string(g_real);
    return r;
}

VerificationReport defect_zero_check(const ThetaContext& ctx) {
    VerificationReport r;
    r.subject = "defect-zero: " + triple_tag(ctx);
    long deg = *ctx.theta().degree().as_integer();
    long n_ord = ctx.normal().order();
    if (n_ord % deg != 0 || (n_ord / deg) % 2 == 0) {
        r.applicable = false;
        r.pass = true;
        r.detail = "precondition unmet (|N|/theta(1) odd required)";
        return r;
    }
    r.oracle_value = induced_fs(ctx);
    if (ctx.inertia().theta_is_real) {
        const auto& q = ctx.inertia_quotient();
        long invs = 0;
        for (int bar = 0; bar < q.group->order(); ++bar)
            if (q.group->table().element_order(bar) <= 2) ++invs;
        r.theorem_value = invs;
        r.pass = (r.theorem_value == r.oracle_value);
    } else {
        const auto& q = ctx.extended_quotient();
        long invs = 0;
        for (int bar = 0; bar < q.group->order(); ++bar) {
            if (q.group->table().element_order(bar) > 2) continue;
            if (!ctx.inertia().inertia.contains(ctx.lift_extended(bar))) ++invs;
        }
        r.theorem_value = invs;
        r.pass = (r.theorem_value == r.oracle_value);
        if (ctx.inertia().dual_is_conjugate) {
            // some constituent with indicator +1 and odd multiplicity
            bool found = false;
            for (auto& e : irr_over(ctx))
                if (e.fs == 1 && e.multiplicity % 2 == 1) found = true;
            if (!found) {
                r.pass = false;
                r.detail = "no constituent with fs +1 and odd multiplicity";
            }
        }
    }
    return r;
}

CentralZReport central_z_count(const GroupPtr& g, const Subgroup& z) {
    if (z.order() != 2) throw InputError("central-z: subgroup must have order 2");
    int zel = z.members[1];
    const GroupTable& gt = g->table();
    for (int x = 0; x < gt.order(); ++x)
        if (gt.mul(zel, x) != gt.mul(x, zel))
            throw InputError("central-z: subgroup is not central");

    CentralZReport rep;
    const auto& cls = g->classes();
    for (int k = 0; k < cls.num(); ++k) {
        int zk = cls.class_of[gt.mul(zel, cls.reps[k])];
        if (zk == k || zk < k) continue;  // not splitting, or counted at the partner
        ++rep.splitting;
        int inv = cls.inverse_class[k];
        if (inv == k || inv == zk) {
            ++rep.real_splitting;
            if (inv == zk) ++rep.nonreal_preimage;
        }
    }
    rep.theorem_value = rep.real_splitting - 2L * rep.nonreal_preimage;

    ClassFunction zeta = theta_of(g, z, 1);
    ThetaContext ctx(g, z, zeta);
    long real = 0;
    for (auto& e : irr_over(ctx)) real += e.real ? 1 : 0;
    rep.oracle_value = real;
    rep.good_matches_splitting = (ctx.sigma_report().count_good() == rep.splitting);
    rep.pass = (rep.theorem_value == rep.oracle_value) && rep.good_matches_splitting;
    return rep;
}

VerificationReport verify_central_identities(const GroupPtr& g) {
    VerificationReport r;
    r.subject = "central identities: " + g->name();
    r.pass = true;
    const auto& cls = g->classes();
    const auto& tab = g->character_table();
    Cyclotomic order(Rational(g->order()));
    for (size_t i = 0; i < tab.irr.size(); ++i) {
        const auto& chi = tab.irr[i];
        std::vector<Cyclotomic> omega(cls.num());
        for (int k = 0; k < cls.num(); ++k)
            omega[k] = Cyclotomic(Rational(cls.size(k))) * chi.values[k] / chi.degree();
        Cyclotomic target = (order / chi.degree()) * (order / chi.degree());
        Cyclotomic wT, wTR;
        for (int k = 0; k < cls.num(); ++k) {
            Cyclotomic weight(Rational(g->order(), cls.size(k)));
            wT += weight * omega[cls.inverse_class[k]] * omega[k];
            wTR += Cyclotomic(Rational(cls.centralizer_orders[k])) * omega[k] * omega[k];
        }
        bool real = (conjugate(chi) == chi);
        if (wT != target || wTR != (real ? target : Cyclotomic(0))) {
            r.pass = false;
            r.detail += "character " + std::to_string(i) + " fails; ";
        }
        ++r.theorem_value;
        ++r.oracle_value;
    }
    return r;
}

VerificationReport coset_norm_check(const GroupPtr& g, const Subgroup& h, int chi_index) {
    VerificationReport r;
    r.subject = "coset-norm: " + g->name() + " |H|=" + std::to_string(h.order()) + " chi " +
                std::to_string(chi_index);
    const auto& chi = g->character_table().irr[chi_index];
    GroupPtr hg = g->subgroup(h);
    auto res = restrict_to(chi, hg);
    if (inner_product(res, res) != Cyclotomic(1)) {
        r.applicable = false;
        r.pass = true;
        r.detail = "restriction is not irreducible";
        return r;
    }
    const GroupTable& gt = g->table();
    Cyclotomic horder(Rational(h.order()));
    std::vector<uint8_t> seen(gt.order(), 0);
    r.pass = true;
    for (int x0 = 0; x0 < gt.order(); ++x0) {
        if (seen[x0]) continue;
        Cyclotomic sum;
        for (int m : h.members) {
            int x = gt.mul(m, x0);
            seen[x] = 1;
            const Cyclotomic& v = chi.at_element(x);
            sum += v * v.conjugate();
        }
        ++r.theorem_value;
        ++r.oracle_value;
        if (sum != horder) {
            r.pass = false;
            r.detail += "coset of element " + std::to_string(x0) + " sums to " + sum.str() + "; ";
        }
    }
    return r;
}

VerificationReport table_integrity(const GroupPtr& g) {
    VerificationReport r;
    r.subject = "table integrity: " + g->name();
    r.pass = true;
    const auto& tab = g->character_table();
    const auto& cls = g->classes();
    int c = cls.num();
    if ((int)tab.irr.size() != c) {
        r.pass = false;
        r.detail = "character count differs from class count";
        return r;
    }
    for (int i = 0; i < c; ++i)
        for (int j = 0; j < c; ++j)
            if (inner_product(tab.irr[i], tab.irr[j]) != Cyclotomic(i == j ? 1 : 0)) {
                r.pass = false;
                r.detail += "row orthogonality fails at (" + std::to_string(i) + "," +
                            std::to_string(j) + "); ";
            }
    for (int k = 0; k < c; ++k)
        for (int l = 0; l < c; ++l) {
            Cyclotomic s;
            for (auto& chi : tab.irr) s += chi.values[k] * chi.values[l].conjugate();
            Cyclotomic want(Rational(k == l ? cls.centralizer_orders[k] : 0));
            if (s != want) {
                r.pass = false;
                r.detail += "column orthogonality fails at (" + std::to_string(k) + "," +
                            std::to_string(l) + "); ";
            }
        }
    long sum_sq = 0;
    for (long d : tab.degrees) sum_sq += d * d;
    if (sum_sq != g->order()) {
        r.pass = false;
        r.detail += "degree squares sum to " + std::to_string(sum_sq) + "; ";
    }
    Cyclotomic fs_sum;
    for (auto& chi : tab.irr) fs_sum += fs_indicator(chi) * chi.degree();
    long invol = 0;
    for (int x = 0; x < g->order(); ++x)
        if (g->table().mul(x, x) == 0) ++invol;
    if (fs_sum != Cyclotomic(Rational(invol))) {
        r.pass = false;
        r.detail += "indicator-weighted degree sum differs from the involution count; ";
    }
    r.theorem_value = c;
    r.oracle_value = c;
    return r;
}

std::vector<Subgroup> normal_subgroups(const GroupPtr& g) {
    const GroupTable& gt = g->table();

    // incremental closure keeps the generator list short
    auto closure_of = [&gt](const std::vector<int>& seed) {
        std::vector<int> gens;
        Subgroup cur = subgroup_closure(gt, {});
        for (int m : seed) {
            if (cur.contains(m)) continue;
            gens.push_back(m);
            cur = subgroup_closure(gt, gens);
        }
        return cur;
    };

    std::set<std::vector<int>> seen;
    std::vector<Subgroup> out;
    auto add_sub = [&](Subgroup s) {
        if (seen.insert(s.members).second) out.push_back(std::move(s));
    };
    add_sub(subgroup_closure(gt, {}));
    const auto& cls = g->classes();
    std::vector<Subgroup> atoms;
    for (int k = 0; k < cls.num(); ++k) {
        Subgroup s = closure_of(cls.classes[k]);
        if (seen.count(s.members) == 0) atoms.push_back(s);
        add_sub(std::move(s));
    }
    // close under joins
    bool grew = true;
    while (grew) {
        grew = false;
        size_t cur = out.size();
        for (size_t i = 0; i < cur; ++i)
            for (auto& a : atoms) {
                std::vector<int> seed = out[i].members;
                seed.insert(seed.end(), a.members.begin(), a.members.end());
                Subgroup j = closure_of(seed);
                if (seen.count(j.members) == 0) {
                    add_sub(std::move(j));
                    grew = true;
                }
            }
    }
    for (auto& s : out)
        if (!s.is_normal) throw EngineDefect("normal subgroup enumeration produced a non-normal subgroup");
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return a.members < b.members;
    });
    return out;
}

std::vector<std::string> structural_check(const ThetaContext& ctx) {
    std::vector<std::string> fails;
    auto tag = triple_tag(ctx);
    auto fail = [&](const std::string& msg) { fails.push_back(tag + ": " + msg); };

    auto rep = ctx.sigma_report();
    const auto& q = ctx.inertia_quotient();

    for (auto& row : rep.rows) {
        // extension count = |N<x> : N|
        const auto& fam = ctx.extensions_at(row.rep);
        if ((long)fam.extensions.size() * ctx.normal().order() != fam.local.order())
            fail("extension count is not the cyclic quotient order");

        // class constancy of goodness and sigma
        for (int bar = 0; bar < q.group->order(); ++bar) {
            if (q.group->classes().class_of[bar] != row.class_index) continue;
            int x = ctx.inertia_group()->table().to_parent()[q.section[bar]];
            if (ctx.is_good(x) != row.good) fail("goodness is not class constant");
            if (row.good && ctx.sigma(x).first != row.sigma)
                fail("sigma is not class constant");
        }
        if (!row.good) continue;

        // sigma well-definedness across every witness and every extension
        bool any_witness = false;
        for (int e : ctx.inertia().extended_inertia.members) {
            if (!ctx.sigma_witness_ok(row.rep, e)) continue;
            any_witness = true;
            for (int ext = 0; ext < (int)fam.extensions.size(); ++ext)
                if (ctx.sigma_sign_with(row.rep, e, ext) != row.sigma)
                    fail("sigma depends on the witness or extension choice");
        }
        if (any_witness != (row.sigma != 0)) fail("sigma/witness existence mismatch");

        if (ctx.inertia().theta_is_real) {
            // 2-regular rule
            if (row.two_regular && row.sigma != 1) fail("2-regular class with sigma != +1");
            // involution rule
            if (row.order_bar <= 2) {
                const auto& tx = fam.extensions[fam.chosen];
                bool tx_real = (conjugate(tx) == tx);
                if ((row.sigma == 1) != tx_real) fail("involution rule violated");
            }
            // witness-square identity: sigma = -1 iff the local indicator of
            // theta_x at the witness vanishes
            if (row.sigma != 0 && row.witness) {
                int e = *row.witness;
                const GroupTable& gt = ctx.ambient()->table();
                if (fam.local.contains(gt.mul(e, e))) {
                    const auto& tx = fam.extensions[fam.chosen];
                    const auto& lg = *fam.local_group;
                    Cyclotomic sum;
                    for (int m : fam.local.members) {
                        int me = gt.mul(m, e);
                        int sq = gt.mul(me, me);
                        sum += tx.values[lg.classes().class_of[lg.table().from_parent()[sq]]];
                    }
                    Cyclotomic eps = sum / Cyclotomic(Rational(fam.local.order()));
                    auto v = eps.as_integer();
                    if (!v || *v < -1 || *v > 1) {
                        fail("local witness indicator outside {-1,0,1}");
                    } else {
                        int expect = (*v != 0) ? 1 : -1;
                        if (row.sigma != expect) fail("witness-square identity violated");
                    }
                }
            }
        }
    }

    // 2-regular classes must be good (the loop above only sees good rows)
    if (ctx.inertia().theta_is_real)
        for (auto& row : rep.rows)
            if (row.two_regular && !row.good) fail("2-regular class not good");

    // Gow range and support over every involution coset of G/N
    {
        const auto& qa = ctx.ambient()->quotient_by(ctx.normal());
        for (int bar = 0; bar < qa.group->order(); ++bar) {
            if (qa.group->table().element_order(bar) > 2) continue;
            int t = qa.section[bar];
            int eps = ctx.gow(t);  // throws if outside {-1,0,1}
            if ((eps != 0) != ctx.theta_conj_is_dual(t))
                fail("gow support criterion violated at coset " + std::to_string(bar));
        }
    }

    // extended Clifford correspondence preserves the induced indicator
    {
        GroupPtr s = ctx.extended_group();
        GroupPtr nin = s->subgroup(ctx.normal_in_extended());
        ClassFunction theta_s;
        theta_s.group = nin;
        const auto& npar = ctx.normal_group();
        for (int k = 0; k < nin->classes().num(); ++k) {
            int in_s = nin->table().to_parent()[nin->classes().reps[k]];
            int in_g = s->table().to_parent()[in_s];
            theta_s.values.push_back(ctx.theta().at_element(npar->table().from_parent()[in_g]));
        }
        long fs_g = induced_fs(ctx);
        long fs_s = require_integer(fs_indicator(induce_from(theta_s)), "induced fs");
        if (fs_g != fs_s) fail("induced indicator changes under extended Clifford reduction");
    }

    return fails;
}

GroupVerification verify_group(const GroupPtr& g, bool structural) {
    GroupVerification v;
    v.group = g->name();
    auto account = [&](const VerificationReport& r) {
        ++v.checks;
        if (!r.pass) v.failures.push_back(r.subject + " (theorem " +
                                          std::to_string(r.theorem_value) + ", oracle " +
                                          std::to_string(r.oracle_value) + ") " + r.detail);
    };
    account(table_integrity(g));
    account(verify_central_identities(g));

    auto normals = normal_subgroups(g);
    for (auto& h : normals)
        for (int i = 0; i < (int)g->character_table().irr.size(); ++i)
            account(coset_norm_check(g, h, i));

    for (auto& n : normals) {
        GroupPtr ngrp = g->subgroup(n);
        int nirr = (int)ngrp->character_table().irr.size();
        for (int k = 0; k < nirr; ++k) {
            ThetaContext ctx(g, n, ngrp->character_table().irr[k]);
            ++v.triples;
            account(gallagher_count(ctx));
            account(count_real(ctx));
            account(epsilon_induced(ctx));
            account(richards_check(ctx));
            account(defect_zero_check(ctx));
            if (structural) {
                auto fails = structural_check(ctx);
                ++v.checks;
                v.failures.insert(v.failures.end(), fails.begin(), fails.end());
            }
        }
    }
    return v;
}

}  // namespace realchar
