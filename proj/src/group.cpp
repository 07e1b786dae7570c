#include "realchar/group.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <unordered_map>

namespace realchar {

namespace {

constexpr int kDenseLimit = 4096;

uint64_t fnv1a(const uint8_t* data, size_t n) {
    uint64_t h = 1469598103934665603ull;
    for (size_t i = 0; i < n; ++i) {
        h ^= data[i];
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace

struct GroupTable::Impl {
    enum class Kind { Dense, Perm, Matrix, View };
    Kind kind = Kind::Dense;
    int order = 1;
    std::string name = "1";
    std::vector<int> gens;
    std::vector<int> inv;
    std::vector<int> orders;

    std::vector<uint16_t> dense;  // present whenever order <= kDenseLimit

    // Perm: each element is a vector of images of 0..degree-1
    int degree = 0;
    std::vector<int32_t> images;

    // Matrix: each element is a dim x dim matrix over Z/mod
    int mod = 0, dim = 0;
    std::vector<uint8_t> mats;

    // View: element i corresponds to parent element to_parent[i]; products are
    // mapped back through from_parent (subgroup membership map or quotient
    // projection)
    std::shared_ptr<const Impl> parent;
    std::vector<int> to_parent;
    std::vector<int> from_parent;

    // content hash -> element indices, for Perm/Matrix product lookup
    std::unordered_map<uint64_t, std::vector<int>> index;

    size_t elem_bytes() const {
        return kind == Kind::Perm ? degree * sizeof(int32_t) : (size_t)dim * dim;
    }
    const uint8_t* elem_ptr(int i) const {
        if (kind == Kind::Perm)
            return reinterpret_cast<const uint8_t*>(images.data()) + (size_t)i * elem_bytes();
        return mats.data() + (size_t)i * elem_bytes();
    }
    int lookup(const uint8_t* key) const {
        auto it = index.find(fnv1a(key, elem_bytes()));
        if (it == index.end()) return -1;
        for (int cand : it->second)
            if (std::equal(key, key + elem_bytes(), elem_ptr(cand))) return cand;
        return -1;
    }
    void index_insert(int i) {
        index[fnv1a(elem_ptr(i), elem_bytes())].push_back(i);
    }

    int mul_raw(int a, int b) const {
        switch (kind) {
            case Kind::Dense:
                return dense[(size_t)a * order + b];
            case Kind::Perm: {
                thread_local std::vector<int32_t> buf;
                buf.resize(degree);
                const int32_t* pa = images.data() + (size_t)a * degree;
                const int32_t* pb = images.data() + (size_t)b * degree;
                for (int i = 0; i < degree; ++i) buf[i] = pb[pa[i]];
                int r = lookup(reinterpret_cast<const uint8_t*>(buf.data()));
                if (r < 0) throw EngineDefect("group table: product not found");
                return r;
            }
            case Kind::Matrix: {
                thread_local std::vector<uint8_t> buf;
                buf.resize(elem_bytes());
                const uint8_t* pa = mats.data() + (size_t)a * elem_bytes();
                const uint8_t* pb = mats.data() + (size_t)b * elem_bytes();
                for (int i = 0; i < dim; ++i)
                    for (int j = 0; j < dim; ++j) {
                        uint32_t acc = 0;
                        for (int k = 0; k < dim; ++k)
                            acc += (uint32_t)pa[i * dim + k] * pb[k * dim + j];
                        buf[i * dim + j] = static_cast<uint8_t>(acc % mod);
                    }
                int r = lookup(buf.data());
                if (r < 0) throw EngineDefect("group table: product not found");
                return r;
            }
            case Kind::View:
                return from_parent[parent->mul_full(to_parent[a], to_parent[b])];
        }
        return -1;
    }
    int mul_full(int a, int b) const {
        if (!dense.empty()) return dense[(size_t)a * order + b];
        return mul_raw(a, b);
    }

    void finish() {
        if (order <= kDenseLimit && dense.empty()) {
            std::vector<uint16_t> tmp((size_t)order * order);
            for (int a = 0; a < order; ++a)
                for (int b = 0; b < order; ++b)
                    tmp[(size_t)a * order + b] = static_cast<uint16_t>(mul_raw(a, b));
            dense = std::move(tmp);
        }
        inv.assign(order, -1);
        for (int a = 0; a < order; ++a) {
            int x = a;
            while (mul_full(a, x) != 0) x = mul_full(x, a);
            inv[a] = x;
        }
        orders.assign(order, 1);
        for (int a = 1; a < order; ++a) {
            int x = a, k = 1;
            while (x != 0) {
                x = mul_full(x, a);
                ++k;
            }
            orders[a] = k;
        }
    }
};

GroupTable::GroupTable() {
    auto impl = std::make_shared<Impl>();
    impl->kind = Impl::Kind::Dense;
    impl->order = 1;
    impl->dense = {0};
    impl->inv = {0};
    impl->orders = {1};
    impl_ = std::move(impl);
}

int GroupTable::order() const { return impl_->order; }
int GroupTable::mul(int a, int b) const { return impl_->mul_full(a, b); }
int GroupTable::inv(int a) const { return impl_->inv[a]; }
int GroupTable::element_order(int g) const { return impl_->orders[g]; }
const std::vector<int>& GroupTable::generators() const { return impl_->gens; }
const std::string& GroupTable::name() const { return impl_->name; }
bool GroupTable::has_parent() const { return impl_->parent != nullptr; }
const std::vector<int>& GroupTable::to_parent() const { return impl_->to_parent; }
const std::vector<int>& GroupTable::from_parent() const { return impl_->from_parent; }

int GroupTable::pow(int g, long k) const {
    int o = element_order(g);
    long kk = k % o;
    if (kk < 0) kk += o;
    int r = 0;
    for (long i = 0; i < kk; ++i) r = mul(r, g);
    return r;
}

int GroupTable::commutator(int a, int b) const {
    return mul(mul(inv(a), inv(b)), mul(a, b));
}

int GroupTable::conj(int x, int a) const { return mul(mul(inv(a), x), a); }

namespace {

void validate_permutations(const GroupSpec& spec) {
    if (spec.degree <= 0) throw InputError("permutation spec: degree must be positive");
    if (spec.perm_gens.empty()) throw InputError("permutation spec: no generators");
    for (size_t gi = 0; gi < spec.perm_gens.size(); ++gi) {
        const auto& g = spec.perm_gens[gi];
        if ((int)g.size() != spec.degree)
            throw InputError("generator " + std::to_string(gi + 1) + ": expected " +
                             std::to_string(spec.degree) + " images, got " +
                             std::to_string(g.size()));
        std::vector<uint8_t> seen(spec.degree, 0);
        for (size_t pos = 0; pos < g.size(); ++pos) {
            int im = g[pos];
            if (im < 1 || im > spec.degree)
                throw InputError("generator " + std::to_string(gi + 1) + ", position " +
                                 std::to_string(pos + 1) + ": image " + std::to_string(im) +
                                 " out of range");
            if (seen[im - 1])
                throw InputError("generator " + std::to_string(gi + 1) + ", position " +
                                 std::to_string(pos + 1) + ": duplicate image " +
                                 std::to_string(im));
            seen[im - 1] = 1;
        }
    }
}

std::shared_ptr<GroupTable::Impl> enumerate_perm(const GroupSpec& spec) {
    validate_permutations(spec);
    auto impl = std::make_shared<GroupTable::Impl>();
    impl->kind = GroupTable::Impl::Kind::Perm;
    impl->name = spec.name;
    impl->degree = spec.degree;
    int d = spec.degree;

    std::vector<std::vector<int32_t>> gens;
    for (auto& g : spec.perm_gens) {
        std::vector<int32_t> im(d);
        for (int i = 0; i < d; ++i) im[i] = g[i] - 1;
        gens.push_back(std::move(im));
    }

    // BFS closure, identity first, generators applied in the given order
    impl->images.resize(d);
    for (int i = 0; i < d; ++i) impl->images[i] = i;
    impl->order = 1;
    impl->index_insert(0);
    std::queue<int> work;
    work.push(0);
    std::vector<int32_t> buf(d);
    while (!work.empty()) {
        int x = work.front();
        work.pop();
        for (auto& g : gens) {
            const int32_t* px = impl->images.data() + (size_t)x * d;
            for (int i = 0; i < d; ++i) buf[i] = g[px[i]];
            if (impl->lookup(reinterpret_cast<const uint8_t*>(buf.data())) >= 0) continue;
            if (impl->order >= spec.order_cap)
                throw InputError("group order cap " + std::to_string(spec.order_cap) +
                                 " exceeded during enumeration");
            impl->images.insert(impl->images.end(), buf.begin(), buf.end());
            int idx = impl->order++;
            impl->index_insert(idx);
            work.push(idx);
        }
    }
    for (auto& g : gens)
        impl->gens.push_back(impl->lookup(reinterpret_cast<const uint8_t*>(g.data())));
    return impl;
}

std::shared_ptr<GroupTable::Impl> enumerate_matrix(const GroupSpec& spec) {
    if (spec.modulus < 2 || spec.modulus > 255)
        throw InputError("matrix spec: modulus must be in [2,255]");
    if (spec.dim < 1 || spec.dim > 64) throw InputError("matrix spec: bad dimension");
    if (spec.mat_gens.empty()) throw InputError("matrix spec: no generators");
    auto impl = std::make_shared<GroupTable::Impl>();
    impl->kind = GroupTable::Impl::Kind::Matrix;
    impl->name = spec.name;
    impl->mod = spec.modulus;
    impl->dim = spec.dim;
    int d = spec.dim;
    size_t eb = (size_t)d * d;

    std::vector<std::vector<uint8_t>> gens;
    for (auto& g : spec.mat_gens) {
        if ((int)g.size() != d * d) throw InputError("matrix generator: wrong entry count");
        std::vector<uint8_t> m(eb);
        for (size_t i = 0; i < eb; ++i) {
            int v = g[i] % spec.modulus;
            if (v < 0) v += spec.modulus;
            m[i] = static_cast<uint8_t>(v);
        }
        gens.push_back(std::move(m));
    }

    impl->mats.assign(eb, 0);
    for (int i = 0; i < d; ++i) impl->mats[i * d + i] = 1;
    impl->order = 1;
    impl->index_insert(0);
    std::queue<int> work;
    work.push(0);
    std::vector<uint8_t> buf(eb);
    while (!work.empty()) {
        int x = work.front();
        work.pop();
        for (auto& g : gens) {
            const uint8_t* px = impl->mats.data() + (size_t)x * eb;
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) {
                    uint32_t acc = 0;
                    for (int k = 0; k < d; ++k)
                        acc += (uint32_t)px[i * d + k] * g[k * d + j];
                    buf[i * d + j] = static_cast<uint8_t>(acc % spec.modulus);
                }
            if (impl->lookup(buf.data()) >= 0) continue;
            if (impl->order >= spec.order_cap)
                throw InputError("group order cap " + std::to_string(spec.order_cap) +
                                 " exceeded during enumeration");
            impl->mats.insert(impl->mats.end(), buf.begin(), buf.end());
            int idx = impl->order++;
            impl->index_insert(idx);
            work.push(idx);
        }
    }
    for (auto& g : gens) impl->gens.push_back(impl->lookup(g.data()));
    return impl;
}

std::shared_ptr<GroupTable::Impl> build_cayley(const GroupSpec& spec) {
    int n = static_cast<int>(spec.table.size());
    if (n == 0) throw InputError("cayley spec: empty table");
    if (n > kDenseLimit)
        throw InputError("cayley spec: order " + std::to_string(n) + " exceeds limit " +
                         std::to_string(kDenseLimit));
    for (int i = 0; i < n; ++i) {
        if ((int)spec.table[i].size() != n)
            throw InputError("cayley spec: row " + std::to_string(i) + " has wrong length");
        for (int j = 0; j < n; ++j)
            if (spec.table[i][j] < 0 || spec.table[i][j] >= n)
                throw InputError("cayley spec: entry out of range at (" + std::to_string(i) +
                                 "," + std::to_string(j) + ")");
    }
    for (int i = 0; i < n; ++i)
        if (spec.table[0][i] != i || spec.table[i][0] != i)
            throw InputError("cayley spec: row/column 0 is not an identity");
    for (int i = 0; i < n; ++i) {
        bool has_inv = false;
        for (int j = 0; j < n; ++j)
            if (spec.table[i][j] == 0 && spec.table[j][i] == 0) { has_inv = true; break; }
        if (!has_inv)
            throw InputError("cayley spec: element " + std::to_string(i) + " has no inverse");
    }
    auto check_assoc = [&](int a, int b, int c) {
        if (spec.table[spec.table[a][b]][c] != spec.table[a][spec.table[b][c]])
            throw InputError("cayley spec: not associative at (" + std::to_string(a) + "," +
                             std::to_string(b) + "," + std::to_string(c) + ")");
    };
    if (n <= 256) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c) check_assoc(a, b, c);
    } else {
        uint64_t s = 88172645463325252ull;  // xorshift, fixed seed
        auto nxt = [&s]() { s ^= s << 13; s ^= s >> 7; s ^= s << 17; return s; };
        for (long t = 0; t < 200000; ++t)
            check_assoc((int)(nxt() % n), (int)(nxt() % n), (int)(nxt() % n));
    }
    auto impl = std::make_shared<GroupTable::Impl>();
    impl->kind = GroupTable::Impl::Kind::Dense;
    impl->name = spec.name;
    impl->order = n;
    impl->dense.resize((size_t)n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            impl->dense[(size_t)i * n + j] = static_cast<uint16_t>(spec.table[i][j]);
    for (int i = 1; i < n; ++i) impl->gens.push_back(i);
    return impl;
}

}  // namespace

GroupSpec GroupSpec::permutation(std::string name, int degree,
                                 std::vector<std::vector<int>> gens, int cap) {
    GroupSpec s;
    s.kind = Kind::Permutation;
    s.name = std::move(name);
    s.degree = degree;
    s.perm_gens = std::move(gens);
    s.order_cap = cap;
    return s;
}

GroupSpec GroupSpec::cayley(std::string name, std::vector<std::vector<int>> table) {
    GroupSpec s;
    s.kind = Kind::Cayley;
    s.name = std::move(name);
    s.table = std::move(table);
    return s;
}

GroupSpec GroupSpec::matrix(std::string name, int modulus, int dim,
                            std::vector<std::vector<int>> gens, int cap) {
    GroupSpec s;
    s.kind = Kind::Matrix;
    s.name = std::move(name);
    s.modulus = modulus;
    s.dim = dim;
    s.mat_gens = std::move(gens);
    s.order_cap = cap;
    return s;
}

GroupTable enumerate_group(const GroupSpec& spec) {
    std::shared_ptr<GroupTable::Impl> impl;
    switch (spec.kind) {
        case GroupSpec::Kind::Permutation: impl = enumerate_perm(spec); break;
        case GroupSpec::Kind::Cayley: impl = build_cayley(spec); break;
        case GroupSpec::Kind::Matrix: impl = enumerate_matrix(spec); break;
    }
    impl->finish();
    return GroupTable(impl);
}

ConjClassSet conjugacy_classes(const GroupTable& g) {
    int n = g.order();
    std::vector<int> gens = g.generators();
    if (gens.empty())
        for (int i = 1; i < n; ++i) gens.push_back(i);
    std::vector<int> cls(n, -1);
    std::vector<std::vector<int>> classes;
    for (int x0 = 0; x0 < n; ++x0) {
        if (cls[x0] >= 0) continue;
        int id = static_cast<int>(classes.size());
        std::vector<int> members{x0};
        cls[x0] = id;
        std::queue<int> work;
        work.push(x0);
        while (!work.empty()) {
            int x = work.front();
            work.pop();
            for (int a : gens) {
                int y = g.conj(x, a);
                if (cls[y] < 0) {
                    cls[y] = id;
                    members.push_back(y);
                    work.push(y);
                }
            }
        }
        std::sort(members.begin(), members.end());
        classes.push_back(std::move(members));
    }
    // canonical order: element order, class size, minimal member
    std::vector<int> perm(classes.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](int a, int b) {
        int oa = g.element_order(classes[a][0]), ob = g.element_order(classes[b][0]);
        if (oa != ob) return oa < ob;
        if (classes[a].size() != classes[b].size())
            return classes[a].size() < classes[b].size();
        return classes[a][0] < classes[b][0];
    });
    ConjClassSet out;
    out.classes.resize(classes.size());
    out.reps.resize(classes.size());
    out.class_of.assign(n, -1);
    for (size_t k = 0; k < perm.size(); ++k) {
        out.classes[k] = std::move(classes[perm[k]]);
        out.reps[k] = out.classes[k][0];
        for (int m : out.classes[k]) out.class_of[m] = static_cast<int>(k);
    }
    out.inverse_class.resize(out.num());
    out.centralizer_orders.resize(out.num());
    for (int k = 0; k < out.num(); ++k) {
        out.inverse_class[k] = out.class_of[g.inv(out.reps[k])];
        out.centralizer_orders[k] = (long)n / out.size(k);
    }
    return out;
}

int evaluate_word(const GroupTable& g, const std::vector<int>& word) {
    const auto& gens = g.generators();
    int x = 0;
    for (int s : word) {
        if (s == 0 || std::abs(s) > (int)gens.size())
            throw InputError("word references generator " + std::to_string(s) +
                             " but the group has " + std::to_string(gens.size()) +
                             " generators");
        int e = gens[std::abs(s) - 1];
        x = g.mul(x, s > 0 ? e : g.inv(e));
    }
    return x;
}

namespace {

void fill_normality(const GroupTable& g, Subgroup& h) {
    h.is_normal = true;
    std::vector<int> conj_by = g.generators();
    if (conj_by.empty())
        for (int a = 1; a < g.order(); ++a) conj_by.push_back(a);
    for (int a : conj_by) {
        for (int m : h.members)
            if (!h.inset[g.conj(m, a)]) {
                h.is_normal = false;
                return;
            }
    }
}

}  // namespace

Subgroup subgroup_closure(const GroupTable& g, const std::vector<int>& seed) {
    Subgroup h;
    h.inset.assign(g.order(), 0);
    std::vector<int> mem{0};
    h.inset[0] = 1;
    std::vector<int> gens;
    for (int s : seed)
        if (!std::count(gens.begin(), gens.end(), s)) gens.push_back(s);
    std::queue<int> work;
    work.push(0);
    for (int s : gens)
        if (!h.inset[s]) {
            h.inset[s] = 1;
            mem.push_back(s);
            work.push(s);
        }
    while (!work.empty()) {
        int x = work.front();
        work.pop();
        for (int s : gens) {
            int y = g.mul(x, s);
            if (!h.inset[y]) {
                h.inset[y] = 1;
                mem.push_back(y);
                work.push(y);
            }
        }
    }
    std::sort(mem.begin(), mem.end());
    h.members = std::move(mem);
    fill_normality(g, h);
    return h;
}

Subgroup subgroup_from_words(const GroupTable& g,
                             const std::vector<std::vector<int>>& words) {
    std::vector<int> seed;
    for (auto& w : words) seed.push_back(evaluate_word(g, w));
    return subgroup_closure(g, seed);
}

QuotientGroup quotient(const GroupTable& g, const Subgroup& n) {
    if (!n.is_normal) throw InputError("quotient: subgroup is not normal");
    int ord = g.order();
    QuotientGroup q;
    q.projection.assign(ord, -1);
    for (int x = 0; x < ord; ++x) {
        if (q.projection[x] >= 0) continue;
        int id = static_cast<int>(q.section.size());
        q.section.push_back(x);
        for (int m : n.members) q.projection[g.mul(m, x)] = id;
    }
    int qn = static_cast<int>(q.section.size());

    auto impl = std::make_shared<GroupTable::Impl>();
    impl->order = qn;
    impl->name = g.name() + "/N" + std::to_string(n.order());
    impl->parent = g.impl();
    impl->to_parent = q.section;
    impl->from_parent = q.projection;
    impl->kind = GroupTable::Impl::Kind::View;
    for (int a : g.generators()) {
        int im = q.projection[a];
        if (im != 0 && !std::count(impl->gens.begin(), impl->gens.end(), im))
            impl->gens.push_back(im);
    }
    if (impl->gens.empty() && qn > 1)
        for (int i = 1; i < qn; ++i) impl->gens.push_back(i);
    impl->finish();
    q.table = GroupTable(impl);
    return q;
}

GroupTable subgroup_table(const GroupTable& g, const Subgroup& h,
                          const std::vector<int>& gens) {
    auto impl = std::make_shared<GroupTable::Impl>();
    impl->order = h.order();
    impl->name = g.name() + "{" + std::to_string(h.order()) + "}";
    impl->parent = g.impl();
    impl->to_parent = h.members;
    impl->from_parent.assign(g.order(), -1);
    for (int i = 0; i < h.order(); ++i) impl->from_parent[h.members[i]] = i;
    impl->kind = GroupTable::Impl::Kind::View;
    for (int e : gens)
        if (e != 0 && impl->from_parent[e] > 0 &&
            !std::count(impl->gens.begin(), impl->gens.end(), impl->from_parent[e]))
            impl->gens.push_back(impl->from_parent[e]);
    if (impl->gens.empty() && h.order() > 1)
        for (int i = 1; i < h.order(); ++i) impl->gens.push_back(i);
    impl->finish();
    return GroupTable(impl);
}

namespace {

Subgroup scan_subgroup(const GroupTable& g, std::vector<int> mem) {
    Subgroup h;
    h.inset.assign(g.order(), 0);
    for (int m : mem) h.inset[m] = 1;
    std::sort(mem.begin(), mem.end());
    h.members = std::move(mem);
    fill_normality(g, h);
    return h;
}

}  // namespace

Subgroup coset_centralizer(const GroupTable& g, const Subgroup& n, int x) {
    std::vector<int> mem;
    for (int y = 0; y < g.order(); ++y)
        if (n.contains(g.commutator(x, y))) mem.push_back(y);
    return scan_subgroup(g, std::move(mem));
}

Subgroup extended_coset_centralizer(const GroupTable& g, const Subgroup& n, int x) {
    int xi = g.inv(x);
    std::vector<int> mem;
    for (int y = 0; y < g.order(); ++y) {
        int c = g.conj(x, y);
        if (n.contains(g.mul(c, xi)) || n.contains(g.mul(c, x))) mem.push_back(y);
    }
    return scan_subgroup(g, std::move(mem));
}

std::vector<int> inverting_set(const GroupTable& g, const Subgroup& n, int x) {
    std::vector<int> out;
    for (int y = 0; y < g.order(); ++y)
        if (n.contains(g.mul(x, g.conj(x, y)))) out.push_back(y);
    return out;
}

std::vector<int> involution_cosets(const QuotientGroup& q) {
    std::vector<int> out;
    for (int t = 0; t < q.table.order(); ++t)
        if (q.table.element_order(t) <= 2) out.push_back(t);
    return out;  // ascending, so the identity coset comes first
}

std::vector<int> involution_cosets(const GroupTable& g, const Subgroup& n) {
    return involution_cosets(quotient(g, n));
}

int group_exponent(const GroupTable& g) {
    long e = 1;
    for (int i = 0; i < g.order(); ++i) e = std::lcm(e, (long)g.element_order(i));
    return static_cast<int>(e);
}

}  // namespace realchar
