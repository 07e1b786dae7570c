// Finite group tables: enumeration from generators, conjugacy classes,
// subgroups, quotients, and the coset-level centralizer variants.
//
// Elements are dense indices 0..order-1 with 0 the identity. Small groups
// (order <= 4096) carry a full multiplication table; larger ones multiply
// on demand from their permutation images or matrix entries.
#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "realchar/errors.hpp"

namespace realchar {

struct GroupSpec {
    enum class Kind { Permutation, Cayley, Matrix };
    Kind kind = Kind::Permutation;
    std::string name;

    // permutation kind: generators as 1-based image lists on a common domain
    int degree = 0;
    std::vector<std::vector<int>> perm_gens;

    // cayley kind: full table, 0-based indices, row 0 = identity
    std::vector<std::vector<int>> table;

    // matrix kind: dim x dim matrices over Z/modulus, row-major entries
    int modulus = 0;
    int dim = 0;
    std::vector<std::vector<int>> mat_gens;

    int order_cap = 20000;

    static GroupSpec permutation(std::string name, int degree,
                                 std::vector<std::vector<int>> gens, int cap = 20000);
    static GroupSpec cayley(std::string name, std::vector<std::vector<int>> table);
    static GroupSpec matrix(std::string name, int modulus, int dim,
                            std::vector<std::vector<int>> gens, int cap = 20000);
};

class GroupTable {
public:
    GroupTable();  // trivial group

    int order() const;
    int mul(int a, int b) const;
    int inv(int a) const;
    int pow(int g, long k) const;
    int element_order(int g) const;
    const std::vector<int>& generators() const;
    const std::string& name() const;

    int commutator(int a, int b) const;  // a^-1 b^-1 a b
    int conj(int x, int a) const;        // a^-1 x a

    // subgroup / quotient tables remember their parent
    bool has_parent() const;
    const GroupTable* parent() const;
    const std::vector<int>& to_parent() const;    // element embedding / section
    const std::vector<int>& from_parent() const;  // membership map / projection

    struct Impl;
    explicit GroupTable(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    const std::shared_ptr<const Impl>& impl() const { return impl_; }

private:
    std::shared_ptr<const Impl> impl_;
};

GroupTable enumerate_group(const GroupSpec& spec);

struct ConjClassSet {
    std::vector<std::vector<int>> classes;  // members ascending; canonical class order
    std::vector<int> reps;                  // minimal member per class
    std::vector<int> class_of;              // element -> class index
    std::vector<int> inverse_class;         // K -> class of inverses
    std::vector<long> centralizer_orders;

    int num() const { return static_cast<int>(classes.size()); }
    long size(int k) const { return static_cast<long>(classes[k].size()); }
};

ConjClassSet conjugacy_classes(const GroupTable& g);

struct Subgroup {
    std::vector<int> members;      // ascending element indices of the parent
    std::vector<uint8_t> inset;    // parent-order bitset
    bool is_normal = false;

    int order() const { return static_cast<int>(members.size()); }
    bool contains(int g) const { return inset[g] != 0; }
};

Subgroup subgroup_closure(const GroupTable& g, const std::vector<int>& gens);
Subgroup subgroup_from_words(const GroupTable& g,
                             const std::vector<std::vector<int>>& words);
int evaluate_word(const GroupTable& g, const std::vector<int>& word);

struct QuotientGroup {
    GroupTable table;
    std::vector<int> projection;  // parent element -> quotient element
    std::vector<int> section;     // quotient element -> minimal coset representative
};

QuotientGroup quotient(const GroupTable& g, const Subgroup& n);

// subgroup as a group in its own right (elements = members, ascending)
GroupTable subgroup_table(const GroupTable& g, const Subgroup& h,
                          const std::vector<int>& gens = {});

// C_G(xN) = {y : [x,y] in N}
Subgroup coset_centralizer(const GroupTable& g, const Subgroup& n, int x);
// N_G(Nx u Nx^-1) = {y : x^y in Nx u Nx^-1}
Subgroup extended_coset_centralizer(const GroupTable& g, const Subgroup& n, int x);
// I_G(xN) = {y : x * x^y in N}; empty unless xN is real in G/N
std::vector<int> inverting_set(const GroupTable& g, const Subgroup& n, int x);

// elements of the quotient of order 1 or 2, identity first
std::vector<int> involution_cosets(const QuotientGroup& q);
std::vector<int> involution_cosets(const GroupTable& g, const Subgroup& n);

int group_exponent(const GroupTable& g);

}  // namespace realchar
