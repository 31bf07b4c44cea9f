#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gdm {

/// Finite abelian group given structurally as Z_{m1} x ... x Z_{mr},
/// every factor >= 2. The empty factor list is the trivial group.
/// Equality compares primary decompositions, i.e. isomorphism classes.
class AbelianGroup {
public:
    AbelianGroup() = default; // trivial group
    explicit AbelianGroup(std::vector<std::int64_t> factors);

    /// Parse a spec string such as "Z4xZ2xZ5" (case-insensitive, no
    /// whitespace). "Z1" alone denotes the trivial group; a factor below 2
    /// anywhere else is rejected.
    static AbelianGroup parse(std::string_view spec);

    const std::vector<std::int64_t>& factors() const { return factors_; }
    std::int64_t order() const { return order_; }
    std::size_t rank() const { return factors_.size(); }
    bool trivial() const { return factors_.empty(); }

    /// Multiset of prime-power cyclic factors, sorted by (prime, exponent).
    std::vector<std::pair<std::int64_t, int>> primary_decomposition() const;

    /// Spec string in the same grammar parse() accepts ("Z1" for trivial).
    std::string spec() const;

    bool operator==(const AbelianGroup& other) const;
    bool operator!=(const AbelianGroup& other) const { return !(*this == other); }

private:
    std::vector<std::int64_t> factors_;
    std::int64_t order_ = 1;
};

/// One group element as a mixed-radix residue vector; residues[i] lies in
/// [0, factors[i]). Elements do not carry their group; operations take it.
struct GroupElement {
    std::vector<std::int64_t> residues;

    auto operator<=>(const GroupElement&) const = default;
};

GroupElement identity(const AbelianGroup& g);
GroupElement add(const AbelianGroup& g, const GroupElement& a, const GroupElement& b);
GroupElement sub(const AbelianGroup& g, const GroupElement& a, const GroupElement& b);
GroupElement neg(const AbelianGroup& g, const GroupElement& a);
GroupElement scalar_mul(const AbelianGroup& g, std::int64_t k, const GroupElement& a);

/// Sum of all group elements. Satisfies 2*sum_all(g) = identity.
GroupElement sum_all(const AbelianGroup& g);

/// All elements in mixed-radix lexicographic order (last factor fastest);
/// element 0 is the identity. This is the canonical indexing a_0, a_1, ...
/// used by every construction.
std::vector<GroupElement> enumerate_elements(const AbelianGroup& g);

/// Position of an element in enumerate_elements order.
std::int64_t element_index(const AbelianGroup& g, const GroupElement& a);
GroupElement element_at(const AbelianGroup& g, std::int64_t index);

bool element_valid(const AbelianGroup& g, const GroupElement& a);

/// One representative per isomorphism class of abelian groups of the given
/// order, each in primary form (factors sorted by prime asc, exponent desc).
/// Deterministic order; count is the product over p | order of the number
/// of partitions of the exponent of p.
std::vector<AbelianGroup> enumerate_groups(std::int64_t order);

/// CRT decomposition of g into its p-primary component and the complement,
/// with the residue remapping between the split coordinates and the
/// original factor coordinates.
class SylowSplit {
public:
    SylowSplit(const AbelianGroup& g, std::int64_t p);

    const AbelianGroup& original() const { return original_; }
    /// p-power factors, largest exponent first.
    const AbelianGroup& p_part() const { return p_part_; }
    /// Co-p parts of the original factors, in original factor order.
    const AbelianGroup& rest() const { return rest_; }

    GroupElement to_original(const GroupElement& p_elem, const GroupElement& rest_elem) const;
    std::pair<GroupElement, GroupElement> from_original(const GroupElement& a) const;

private:
    struct Slot {
        std::int64_t modulus;   // original factor
        std::int64_t p_pow;     // p^e part (1 if none)
        std::int64_t cofactor;  // modulus / p_pow (1 if none)
        int p_index = -1;       // slot in p_part residues
        int rest_index = -1;    // slot in rest residues
        std::int64_t crt_p = 0; // CRT coefficient of the p-residue
        std::int64_t crt_c = 0; // CRT coefficient of the cofactor residue
    };

    AbelianGroup original_, p_part_, rest_;
    std::vector<Slot> slots_;
};

SylowSplit sylow_split(const AbelianGroup& g, std::int64_t p);

bool is_prime(std::int64_t n);

/// Formats an element as "(r1,r2,...)"; "()" for the trivial group.
std::string format_element(const GroupElement& a);

} // namespace gdm
