#include "realchar/chartable.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace realchar {

namespace {

// ---- F_p arithmetic -------------------------------------------------------

struct Fp {
    uint64_t p;
    uint64_t add(uint64_t a, uint64_t b) const { return (a + b) % p; }
    uint64_t sub(uint64_t a, uint64_t b) const { return (a + p - b) % p; }
    uint64_t mul(uint64_t a, uint64_t b) const { return a * b % p; }
    uint64_t pow(uint64_t a, uint64_t e) const {
        uint64_t r = 1;
        a %= p;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    uint64_t inv(uint64_t a) const { return pow(a, p - 2); }
};

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

long pick_prime(int exponent, int order) {
    double bound = 2.0 * std::sqrt((double)order);
    long p = exponent + 1;
    while (p <= (long)bound || !is_prime(p)) p += exponent;
    return p;
}

uint64_t primitive_root(const Fp& fp) {
    long p1 = (long)fp.p - 1;
    std::vector<long> qs;
    long m = p1;
    for (long d = 2; d * d <= m; ++d)
        if (m % d == 0) {
            qs.push_back(d);
            while (m % d == 0) m /= d;
        }
    if (m > 1) qs.push_back(m);
    for (uint64_t g = 2;; ++g) {
        bool ok = true;
        for (long q : qs)
            if (fp.pow(g, p1 / q) == 1) { ok = false; break; }
        if (ok) return g;
    }
}

// column-reduced subspace of F_p^c with pivot bookkeeping
struct Space {
    std::vector<std::vector<uint64_t>> basis;  // each vector length c
    std::vector<int> pivots;
};

Space echelonize(const Fp& fp, std::vector<std::vector<uint64_t>> vecs) {
    Space s;
    for (auto& v : vecs) {
        for (size_t t = 0; t < s.basis.size(); ++t) {
            uint64_t f = v[s.pivots[t]];
            if (f)
                for (size_t i = 0; i < v.size(); ++i)
                    v[i] = fp.sub(v[i], fp.mul(f, s.basis[t][i]));
        }
        int piv = -1;
        for (size_t i = 0; i < v.size(); ++i)
            if (v[i]) { piv = (int)i; break; }
        if (piv < 0) continue;
        uint64_t f = fp.inv(v[piv]);
        for (auto& x : v) x = fp.mul(x, f);
        for (size_t t = 0; t < s.basis.size(); ++t) {
            uint64_t g = s.basis[t][piv];
            if (g)
                for (size_t i = 0; i < v.size(); ++i)
                    s.basis[t][i] = fp.sub(s.basis[t][i], fp.mul(g, v[i]));
        }
        s.basis.push_back(std::move(v));
        s.pivots.push_back(piv);
    }
    return s;
}

// kernel basis of a d x d matrix over F_p
std::vector<std::vector<uint64_t>> kernel(const Fp& fp, std::vector<std::vector<uint64_t>> m) {
    int d = (int)m.size();
    std::vector<int> pivot_col(d, -1);
    int row = 0;
    for (int col = 0; col < d && row < d; ++col) {
        int pr = -1;
        for (int r = row; r < d; ++r)
            if (m[r][col]) { pr = r; break; }
        if (pr < 0) continue;
        std::swap(m[row], m[pr]);
        uint64_t f = fp.inv(m[row][col]);
        for (auto& x : m[row]) x = fp.mul(x, f);
        for (int r = 0; r < d; ++r) {
            if (r == row || !m[r][col]) continue;
            uint64_t g = m[r][col];
            for (int i = 0; i < d; ++i) m[r][i] = fp.sub(m[r][i], fp.mul(g, m[row][i]));
        }
        pivot_col[row++] = col;
    }
    std::vector<uint8_t> is_pivot(d, 0);
    for (int r = 0; r < row; ++r) is_pivot[pivot_col[r]] = 1;
    std::vector<std::vector<uint64_t>> ker;
    for (int col = 0; col < d; ++col) {
        if (is_pivot[col]) continue;
        std::vector<uint64_t> v(d, 0);
        v[col] = 1;
        for (int r = 0; r < row; ++r) v[pivot_col[r]] = fp.sub(0, m[r][col]);
        ker.push_back(std::move(v));
    }
    return ker;
}

}  // namespace

// ---- Group bundle ---------------------------------------------------------

Group::Group(GroupTable t) : table_(std::move(t)) {
    classes_ = conjugacy_classes(table_);
    exponent_ = group_exponent(table_);
}

GroupPtr Group::create(GroupTable table) {
    return GroupPtr(new Group(std::move(table)));
}

GroupPtr Group::subgroup(const Subgroup& h) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = subgroups_.find(h.members);
    if (it != subgroups_.end()) return it->second;
    GroupTable t = subgroup_table(table_, h, table_.generators());
    auto g = GroupPtr(new Group(std::move(t)));
    const_cast<Group*>(g.get())->parent_ = shared_from_this();
    subgroups_[h.members] = g;
    return g;
}

const Group::QuotientCtx& Group::quotient_by(const Subgroup& n) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = quotients_.find(n.members);
    if (it != quotients_.end()) return *it->second;
    QuotientGroup q = quotient(table_, n);
    auto ctx = std::make_unique<QuotientCtx>();
    ctx->group = GroupPtr(new Group(std::move(q.table)));
    const_cast<Group*>(ctx->group.get())->parent_ = shared_from_this();
    ctx->projection = std::move(q.projection);
    ctx->section = std::move(q.section);
    auto& ref = *ctx;
    quotients_[n.members] = std::move(ctx);
    return ref;
}

const Cyclotomic& ClassFunction::at_element(int g) const {
    return values[group->classes().class_of[g]];
}

int power_class(const Group& g, int c, long k) {
    int rep = g.classes().reps[c];
    return g.classes().class_of[g.table().pow(rep, k)];
}

// ---- Dixon-Schneider ------------------------------------------------------

namespace {

std::vector<std::vector<uint64_t>> class_matrix(const Group& g, int i, const Fp& fp) {
    const auto& cls = g.classes();
    int c = cls.num();
    std::vector<std::vector<uint64_t>> m(c, std::vector<uint64_t>(c, 0));
    const GroupTable& t = g.table();
    for (int x : cls.classes[i]) {
        int xi = t.inv(x);
        for (int k = 0; k < c; ++k) {
            int j = cls.class_of[t.mul(xi, cls.reps[k])];
            m[j][k] = fp.add(m[j][k], 1);
        }
    }
    return m;
}

CharacterTable dixon_schneider(const Group& g) {
    const auto& cls = g.classes();
    int c = cls.num();
    int n = g.order();
    Fp fp{(uint64_t)pick_prime(g.exponent(), n)};
    uint64_t z = fp.pow(primitive_root(fp), (fp.p - 1) / g.exponent());

    // start with the full space, split under each class matrix
    std::vector<Space> spaces;
    {
        std::vector<std::vector<uint64_t>> id(c, std::vector<uint64_t>(c, 0));
        for (int i = 0; i < c; ++i) id[i][i] = 1;
        spaces.push_back(echelonize(fp, std::move(id)));
    }
    for (int i = 1; i < c; ++i) {
        bool split_needed = std::any_of(spaces.begin(), spaces.end(),
                                        [](const Space& s) { return s.basis.size() > 1; });
        if (!split_needed) break;
        auto m = class_matrix(g, i, fp);
        std::vector<Space> next;
        for (auto& w : spaces) {
            int d = (int)w.basis.size();
            if (d == 1) {
                next.push_back(std::move(w));
                continue;
            }
            // restriction of m to w: R[s][t] = (m * w_t)[pivot_s]
            std::vector<std::vector<uint64_t>> mw(d, std::vector<uint64_t>(c, 0));
            for (int t = 0; t < d; ++t)
                for (int r = 0; r < c; ++r) {
                    uint64_t acc = 0;
                    for (int k = 0; k < c; ++k)
                        if (m[r][k]) acc = fp.add(acc, fp.mul(m[r][k], w.basis[t][k]));
                    mw[t][r] = acc;
                }
            std::vector<std::vector<uint64_t>> R(d, std::vector<uint64_t>(d));
            for (int s = 0; s < d; ++s)
                for (int t = 0; t < d; ++t) R[s][t] = mw[t][w.pivots[s]];
            // eigen-split by scanning eigenvalues
            int found = 0;
            for (uint64_t lam = 0; lam < fp.p && found < d; ++lam) {
                auto shifted = R;
                for (int s = 0; s < d; ++s) shifted[s][s] = fp.sub(shifted[s][s], lam);
                auto ker = kernel(fp, shifted);
                if (ker.empty()) continue;
                std::vector<std::vector<uint64_t>> amb;
                for (auto& x : ker) {
                    std::vector<uint64_t> u(c, 0);
                    for (int t = 0; t < d; ++t)
                        if (x[t])
                            for (int r = 0; r < c; ++r)
                                u[r] = fp.add(u[r], fp.mul(x[t], w.basis[t][r]));
                    amb.push_back(std::move(u));
                }
                next.push_back(echelonize(fp, std::move(amb)));
                found += (int)ker.size();
            }
            if (found != d) throw EngineDefect("character table: eigenspace split failed");
        }
        spaces = std::move(next);
    }

    std::vector<std::vector<uint64_t>> omegas;
    for (auto& w : spaces) {
        if (w.basis.size() != 1)
            throw EngineDefect("character table: common eigenspaces not one-dimensional");
        auto v = w.basis[0];
        if (v[0] == 0) throw EngineDefect("character table: eigenvector vanishes at identity");
        uint64_t f = fp.inv(v[0]);
        for (auto& x : v) x = fp.mul(x, f);
        omegas.push_back(std::move(v));
    }
    if ((int)omegas.size() != c)
        throw EngineDefect("character table: wrong number of eigenvectors");

    // degrees and values mod p, then the exact lift through power maps
    std::vector<uint64_t> inv_size(c);
    for (int k = 0; k < c; ++k) inv_size[k] = fp.inv((uint64_t)(cls.size(k) % (long)fp.p));
    long sqrt_n = (long)std::sqrt((double)n) + 1;

    CharacterTable out;
    GroupPtr self = g.shared_from_this();
    for (auto& v : omegas) {
        uint64_t s = 0;
        for (int k = 0; k < c; ++k)
            s = fp.add(s, fp.mul(fp.mul(v[k], v[cls.inverse_class[k]]), inv_size[k]));
        uint64_t d2 = fp.mul((uint64_t)(n % (long)fp.p), fp.inv(s));
        long deg = -1;
        for (long d = 1; d <= sqrt_n; ++d)
            if (fp.mul((uint64_t)d, (uint64_t)d) == d2) { deg = d; break; }
        if (deg < 0) throw EngineDefect("character table: degree recovery failed");

        std::vector<uint64_t> u(c);
        for (int k = 0; k < c; ++k) u[k] = fp.mul(fp.mul((uint64_t)deg, v[k]), inv_size[k]);

        ClassFunction chi;
        chi.group = self;
        chi.values.resize(c);
        for (int k = 0; k < c; ++k) {
            int rep = cls.reps[k];
            int o = g.table().element_order(rep);
            std::vector<int> pow_cls(o);
            int x = 0;
            for (int l = 0; l < o; ++l) {
                pow_cls[l] = cls.class_of[x];
                x = g.table().mul(x, rep);
            }
            uint64_t zo = fp.pow(z, g.exponent() / o);
            uint64_t inv_o = fp.inv((uint64_t)o);
            std::map<int, Rational> terms;
            long total = 0;
            for (int kk = 0; kk < o; ++kk) {
                uint64_t acc = 0;
                for (int l = 0; l < o; ++l) {
                    long ex = (long)(o - kk) * l % o;
                    acc = fp.add(acc, fp.mul(u[pow_cls[l]], fp.pow(zo, (uint64_t)ex)));
                }
                uint64_t mu = fp.mul(inv_o, acc);
                if (mu > (uint64_t)deg)
                    throw EngineDefect("character table: eigenvalue multiplicity out of range");
                if (mu) terms[kk] = Rational((long)mu);
                total += (long)mu;
            }
            if (total != deg)
                throw EngineDefect("character table: multiplicities do not sum to the degree");
            chi.values[k] = Cyclotomic::from_terms(o, terms);
        }
        out.irr.push_back(std::move(chi));
    }

    std::sort(out.irr.begin(), out.irr.end(), [](const ClassFunction& a, const ClassFunction& b) {
        auto da = a.degree().as_integer().value(), db = b.degree().as_integer().value();
        if (da != db) return da < db;
        for (size_t k = 0; k < a.values.size(); ++k) {
            int cp = Cyclotomic::compare(a.values[k], b.values[k]);
            if (cp) return cp < 0;
        }
        return false;
    });
    for (auto& chi : out.irr)
        out.degrees.push_back((long)chi.degree().as_integer().value());
    return out;
}

}  // namespace

const CharacterTable& Group::character_table() const {
    std::lock_guard<std::mutex> lock(mu_);
    if (!chartab_) chartab_ = dixon_schneider(*this);
    return *chartab_;
}

// ---- class function operations --------------------------------------------

Cyclotomic inner_product(const ClassFunction& a, const ClassFunction& b) {
    if (a.group.get() != b.group.get())
        throw InputError("inner_product: class functions on different groups");
    const auto& cls = a.group->classes();
    Cyclotomic s;
    for (int k = 0; k < cls.num(); ++k)
        s += Cyclotomic(Rational(cls.size(k))) * a.values[k] * b.values[k].conjugate();
    return s / Cyclotomic(Rational(a.group->order()));
}

ClassFunction conjugate(const ClassFunction& f) {
    ClassFunction r = f;
    for (auto& v : r.values) v = v.conjugate();
    return r;
}

bool is_irreducible(const ClassFunction& chi) {
    return inner_product(chi, chi) == Cyclotomic(1);
}

ClassFunction restrict_to(const ClassFunction& chi, const GroupPtr& h) {
    if (h->parent_group().get() != chi.group.get())
        throw InputError("restrict_to: not a subgroup bundle of the character's group");
    const auto& fusion = h->table().to_parent();
    const auto& pcls = chi.group->classes();
    ClassFunction r;
    r.group = h;
    for (int k = 0; k < h->classes().num(); ++k) {
        int rep = h->classes().reps[k];
        r.values.push_back(chi.values[pcls.class_of[fusion[rep]]]);
    }
    return r;
}

ClassFunction induce_from(const ClassFunction& theta) {
    GroupPtr h = theta.group;
    GroupPtr g = h->parent_group();
    if (!g) throw InputError("induce_from: character's group has no parent");
    const auto& member_of = h->table().from_parent();
    const auto& hcls = h->classes();
    const auto& gcls = g->classes();
    const GroupTable& gt = g->table();
    ClassFunction r;
    r.group = g;
    Cyclotomic inv_h(Rational(1, h->order()));
    for (int k = 0; k < gcls.num(); ++k) {
        int rep = gcls.reps[k];
        // sum over all y: theta(y rep y^-1) when it lands in H
        std::map<int, long> counts;  // H-class -> count
        for (int y = 0; y < gt.order(); ++y) {
            int t = gt.mul(gt.mul(y, rep), gt.inv(y));
            int hi = member_of[t];
            if (hi >= 0) counts[hcls.class_of[hi]]++;
        }
        Cyclotomic acc;
        for (auto& [hk, cnt] : counts) acc += Cyclotomic(Rational(cnt)) * theta.values[hk];
        r.values.push_back(acc * inv_h);
    }
    return r;
}

Cyclotomic fs_indicator(const ClassFunction& chi) {
    const auto& cls = chi.group->classes();
    Cyclotomic s;
    for (int k = 0; k < cls.num(); ++k) {
        int sq = power_class(*chi.group, k, 2);
        s += Cyclotomic(Rational(cls.size(k))) * chi.values[sq];
    }
    return s / Cyclotomic(Rational(chi.group->order()));
}

Cyclotomic central_character_value(const ClassFunction& chi, int classIdx) {
    if (!is_irreducible(chi))
        throw InputError("central_character_value: character is not irreducible");
    const auto& cls = chi.group->classes();
    return Cyclotomic(Rational(cls.size(classIdx))) * chi.values[classIdx] / chi.degree();
}

ClassFunction scale(const Cyclotomic& c, const ClassFunction& f) {
    ClassFunction r = f;
    for (auto& v : r.values) v = c * v;
    return r;
}

ClassFunction add(const ClassFunction& a, const ClassFunction& b) {
    ClassFunction r = a;
    for (size_t k = 0; k < r.values.size(); ++k) r.values[k] += b.values[k];
    return r;
}

ClassFunction pointwise_mul(const ClassFunction& a, const ClassFunction& b) {
    ClassFunction r = a;
    for (size_t k = 0; k < r.values.size(); ++k) r.values[k] *= b.values[k];
    return r;
}

}  // namespace realchar
