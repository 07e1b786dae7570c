// Exact complex character tables via the Dixon-Schneider method: class
// multiplication matrices are split into common eigenspaces over a prime
// field F_p (p = 1 mod exponent, p > 2 sqrt|G|) and the eigenvector data is
// lifted to exact cyclotomic values through the power maps.
//
// Group bundles a GroupTable with its class data and caches character tables
// and subgroup/quotient bundles, so repeated Clifford-style sweeps stay cheap.
#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "realchar/cyclotomic.hpp"
#include "realchar/group.hpp"

namespace realchar {

class Group;
using GroupPtr = std::shared_ptr<const Group>;

struct ClassFunction {
    GroupPtr group;
    std::vector<Cyclotomic> values;  // one per conjugacy class, canonical order

    const Cyclotomic& at_class(int k) const { return values[k]; }
    const Cyclotomic& at_element(int g) const;
    const Cyclotomic& degree() const { return values[0]; }

    bool operator==(const ClassFunction& o) const {
        return group.get() == o.group.get() && values == o.values;
    }
    bool operator!=(const ClassFunction& o) const { return !(*this == o); }
};

struct CharacterTable {
    std::vector<ClassFunction> irr;  // degree ascending, then value order
    std::vector<long> degrees;
};

class Group : public std::enable_shared_from_this<Group> {
public:
    static GroupPtr create(GroupTable table);

    const GroupTable& table() const { return table_; }
    const ConjClassSet& classes() const { return classes_; }
    int order() const { return table_.order(); }
    const std::string& name() const { return table_.name(); }
    int exponent() const { return exponent_; }

    const CharacterTable& character_table() const;

    // this group's bundle for a subgroup; remembers the embedding
    GroupPtr subgroup(const Subgroup& h) const;
    GroupPtr parent_group() const { return parent_.lock(); }

    struct QuotientCtx {
        GroupPtr group;
        std::vector<int> projection;
        std::vector<int> section;
    };
    const QuotientCtx& quotient_by(const Subgroup& n) const;

private:
    explicit Group(GroupTable t);

    GroupTable table_;
    ConjClassSet classes_;
    int exponent_ = 1;
    std::weak_ptr<const Group> parent_;

    mutable std::mutex mu_;
    mutable std::optional<CharacterTable> chartab_;
    mutable std::map<std::vector<int>, GroupPtr> subgroups_;
    mutable std::map<std::vector<int>, std::unique_ptr<QuotientCtx>> quotients_;
};

// class index of the k-th powers of class c
int power_class(const Group& g, int c, long k);

Cyclotomic inner_product(const ClassFunction& a, const ClassFunction& b);
ClassFunction conjugate(const ClassFunction& f);
bool is_irreducible(const ClassFunction& chi);

// chi on G restricted to a subgroup bundle h (h->parent_group() == chi.group)
ClassFunction restrict_to(const ClassFunction& chi, const GroupPtr& h);
// theta on a subgroup bundle induced up to its parent
ClassFunction induce_from(const ClassFunction& theta);

// (1/|G|) sum chi(g^2); integer in {-1,0,1} for irreducible chi
Cyclotomic fs_indicator(const ClassFunction& chi);
// |K| chi(g_K) / chi(1) for irreducible chi
Cyclotomic central_character_value(const ClassFunction& chi, int classIdx);

// the zero/constant class functions and pointwise combinations
ClassFunction scale(const Cyclotomic& c, const ClassFunction& f);
ClassFunction add(const ClassFunction& a, const ClassFunction& b);
ClassFunction pointwise_mul(const ClassFunction& a, const ClassFunction& b);

}  // namespace realchar
