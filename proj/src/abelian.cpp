#include "gdm/abelian.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "gdm/errors.hpp"

namespace gdm {

namespace {

constexpr std::int64_t kMaxOrder = 1'000'000'000'000LL;

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
    std::vector<std::pair<std::int64_t, int>> out;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) { n /= p; ++e; }
            out.emplace_back(p, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::int64_t ipow(std::int64_t b, int e) {
    std::int64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

// Partitions of n in descending-part form, largest-first order:
// [n], [n-1,1], ..., [1,...,1].
std::vector<std::vector<int>> partitions(int n) {
    std::vector<std::vector<int>> all;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            all.push_back(cur);
            return;
        }
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            cur.push_back(part);
            self(self, remaining - part, part);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return all;
}

std::int64_t egcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y) {
    if (b == 0) { x = 1; y = 0; return a; }
    std::int64_t x1, y1;
    std::int64_t g = egcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
    std::int64_t x, y;
    std::int64_t g = egcd(((a % m) + m) % m, m, x, y);
    if (g != 1) throw InternalCheckError("mod_inverse: arguments not coprime");
    return ((x % m) + m) % m;
}

} // namespace

AbelianGroup::AbelianGroup(std::vector<std::int64_t> factors) : factors_(std::move(factors)) {
    for (std::int64_t m : factors_) {
        if (m < 2) throw ArgumentError("abelian group factor must be >= 2");
        if (order_ > kMaxOrder / m) throw ArgumentError("group order too large");
        order_ *= m;
    }
}

AbelianGroup AbelianGroup::parse(std::string_view spec) {
    if (spec.empty()) throw ArgumentError("empty group spec");
    std::string s(spec);
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::toupper(c); });
    if (s == "Z1") return AbelianGroup{};
    std::vector<std::int64_t> factors;
    std::size_t pos = 0;
    while (pos < s.size()) {
        if (s[pos] != 'Z') throw ArgumentError("group spec: expected 'Z' in \"" + std::string(spec) + "\"");
        ++pos;
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw ArgumentError("group spec: missing factor after 'Z'");
        std::int64_t m = 0;
        for (std::size_t i = start; i < pos; ++i) {
            m = m * 10 + (s[i] - '0');
            if (m > kMaxOrder) throw ArgumentError("group spec: factor too large");
        }
        if (m < 2) throw ArgumentError("group spec: factor below 2 in \"" + std::string(spec) + "\"");
        factors.push_back(m);
        if (pos < s.size()) {
            if (s[pos] != 'X') throw ArgumentError("group spec: expected 'x' separator");
            ++pos;
            if (pos == s.size()) throw ArgumentError("group spec: trailing separator");
        }
    }
    return AbelianGroup(std::move(factors));
}

std::vector<std::pair<std::int64_t, int>> AbelianGroup::primary_decomposition() const {
    std::vector<std::pair<std::int64_t, int>> out;
    for (std::int64_t m : factors_)
        for (auto [p, e] : factorize(m)) out.emplace_back(p, e);
    std::sort(out.begin(), out.end());
    return out;
}

std::string AbelianGroup::spec() const {
    if (factors_.empty()) return "Z1";
    std::ostringstream os;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) os << 'x';
        os << 'Z' << factors_[i];
    }
    return os.str();
}

bool AbelianGroup::operator==(const AbelianGroup& other) const {
    return primary_decomposition() == other.primary_decomposition();
}

GroupElement identity(const AbelianGroup& g) {
    return GroupElement{std::vector<std::int64_t>(g.rank(), 0)};
}

bool element_valid(const AbelianGroup& g, const GroupElement& a) {
    if (a.residues.size() != g.rank()) return false;
    for (std::size_t i = 0; i < a.residues.size(); ++i)
        if (a.residues[i] < 0 || a.residues[i] >= g.factors()[i]) return false;
    return true;
}

static void check_rank(const AbelianGroup& g, const GroupElement& a) {
    if (a.residues.size() != g.rank())
        throw ArgumentError("group element residue count does not match group rank");
}

GroupElement add(const AbelianGroup& g, const GroupElement& a, const GroupElement& b) {
    check_rank(g, a);
    check_rank(g, b);
    GroupElement r = a;
    for (std::size_t i = 0; i < r.residues.size(); ++i)
        r.residues[i] = (r.residues[i] + b.residues[i]) % g.factors()[i];
    return r;
}

GroupElement sub(const AbelianGroup& g, const GroupElement& a, const GroupElement& b) {
    return add(g, a, neg(g, b));
}

GroupElement neg(const AbelianGroup& g, const GroupElement& a) {
    check_rank(g, a);
    GroupElement r = a;
    for (std::size_t i = 0; i < r.residues.size(); ++i)
        r.residues[i] = (g.factors()[i] - r.residues[i]) % g.factors()[i];
    return r;
}

GroupElement scalar_mul(const AbelianGroup& g, std::int64_t k, const GroupElement& a) {
    check_rank(g, a);
    GroupElement r = a;
    for (std::size_t i = 0; i < r.residues.size(); ++i) {
        std::int64_t m = g.factors()[i];
        r.residues[i] = ((r.residues[i] % m) * (((k % m) + m) % m)) % m;
    }
    return r;
}

GroupElement sum_all(const AbelianGroup& g) {
    // Coordinate i contributes each residue 0..m-1 once per combination of
    // the other coordinates: (|G|/m) * m(m-1)/2 mod m, which is m/2 when m
    // is even and the cofactor odd, otherwise 0.
    GroupElement r = identity(g);
    for (std::size_t i = 0; i < g.rank(); ++i) {
        std::int64_t m = g.factors()[i];
        std::int64_t cofactor = g.order() / m;
        if (m % 2 == 0 && cofactor % 2 == 1) r.residues[i] = m / 2;
    }
    return r;
}

std::vector<GroupElement> enumerate_elements(const AbelianGroup& g) {
    if (g.order() > 4'000'000) throw ArgumentError("group too large to enumerate");
    std::vector<GroupElement> out;
    out.reserve(static_cast<std::size_t>(g.order()));
    GroupElement cur = identity(g);
    for (std::int64_t i = 0; i < g.order(); ++i) {
        out.push_back(cur);
        // increment mixed-radix counter, last factor fastest
        for (std::size_t j = g.rank(); j-- > 0;) {
            if (++cur.residues[j] < g.factors()[j]) break;
            cur.residues[j] = 0;
        }
    }
    return out;
}

std::int64_t element_index(const AbelianGroup& g, const GroupElement& a) {
    check_rank(g, a);
    std::int64_t idx = 0;
    for (std::size_t i = 0; i < g.rank(); ++i) idx = idx * g.factors()[i] + a.residues[i];
    return idx;
}

GroupElement element_at(const AbelianGroup& g, std::int64_t index) {
    if (index < 0 || index >= g.order()) throw ArgumentError("element index out of range");
    GroupElement r = identity(g);
    for (std::size_t i = g.rank(); i-- > 0;) {
        r.residues[i] = index % g.factors()[i];
        index /= g.factors()[i];
    }
    return r;
}

std::vector<AbelianGroup> enumerate_groups(std::int64_t order) {
    if (order < 1) throw ArgumentError("group order must be >= 1");
    if (order == 1) return {AbelianGroup{}};
    auto primes = factorize(order);
    // Per prime p^e: one factor block per partition of e. Cartesian
    // product, first prime varying slowest.
    std::vector<std::vector<std::vector<std::int64_t>>> blocks;
    for (auto [p, e] : primes) {
        std::vector<std::vector<std::int64_t>> choices;
        for (const auto& part : partitions(e)) {
            std::vector<std::int64_t> fs;
            for (int x : part) fs.push_back(ipow(p, x));
            choices.push_back(std::move(fs));
        }
        blocks.push_back(std::move(choices));
    }
    std::vector<AbelianGroup> out;
    std::vector<std::size_t> pick(blocks.size(), 0);
    while (true) {
        std::vector<std::int64_t> factors;
        for (std::size_t i = 0; i < blocks.size(); ++i)
            factors.insert(factors.end(), blocks[i][pick[i]].begin(), blocks[i][pick[i]].end());
        out.emplace_back(std::move(factors));
        std::size_t i = blocks.size();
        while (i-- > 0) {
            if (++pick[i] < blocks[i].size()) break;
            pick[i] = 0;
            if (i == 0) return out;
        }
    }
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

SylowSplit::SylowSplit(const AbelianGroup& g, std::int64_t p) : original_(g) {
    if (!is_prime(p)) throw ArgumentError("sylow_split: p must be prime");
    std::vector<std::pair<std::int64_t, int>> p_factors; // (p^e, slot)
    std::vector<std::int64_t> rest_factors;
    slots_.resize(g.rank());
    for (std::size_t t = 0; t < g.rank(); ++t) {
        std::int64_t m = g.factors()[t];
        std::int64_t pe = 1;
        while (m % p == 0) { m /= p; pe *= p; }
        Slot& s = slots_[t];
        s.modulus = g.factors()[t];
        s.p_pow = pe;
        s.cofactor = m;
        if (pe > 1) p_factors.emplace_back(pe, static_cast<int>(t));
        if (m > 1) {
            s.rest_index = static_cast<int>(rest_factors.size());
            rest_factors.push_back(m);
        }
        if (pe > 1 && m > 1) {
            // CRT coefficients: value = xp*crt_p + xc*crt_c (mod modulus)
            std::int64_t inv_c = mod_inverse(m % pe, pe);
            std::int64_t inv_p = mod_inverse(pe % m, m);
            s.crt_p = (m * inv_c) % s.modulus;
            s.crt_c = (pe * inv_p) % s.modulus;
        }
    }
    std::stable_sort(p_factors.begin(), p_factors.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });
    std::vector<std::int64_t> p_list;
    for (std::size_t i = 0; i < p_factors.size(); ++i) {
        p_list.push_back(p_factors[i].first);
        slots_[p_factors[i].second].p_index = static_cast<int>(i);
    }
    p_part_ = AbelianGroup(std::move(p_list));
    rest_ = AbelianGroup(std::move(rest_factors));
}

GroupElement SylowSplit::to_original(const GroupElement& p_elem, const GroupElement& rest_elem) const {
    if (p_elem.residues.size() != p_part_.rank() || rest_elem.residues.size() != rest_.rank())
        throw ArgumentError("sylow_split: residue counts do not match the split parts");
    GroupElement out = identity(original_);
    for (std::size_t t = 0; t < slots_.size(); ++t) {
        const Slot& s = slots_[t];
        std::int64_t xp = s.p_index >= 0 ? p_elem.residues[s.p_index] : 0;
        std::int64_t xc = s.rest_index >= 0 ? rest_elem.residues[s.rest_index] : 0;
        if (s.cofactor == 1)
            out.residues[t] = xp;
        else if (s.p_pow == 1)
            out.residues[t] = xc;
        else
            out.residues[t] = (xp % s.modulus * s.crt_p + xc % s.modulus * s.crt_c) % s.modulus;
    }
    return out;
}

std::pair<GroupElement, GroupElement> SylowSplit::from_original(const GroupElement& a) const {
    if (!element_valid(original_, a)) throw ArgumentError("sylow_split: element not in group");
    GroupElement pe = identity(p_part_);
    GroupElement re = identity(rest_);
    for (std::size_t t = 0; t < slots_.size(); ++t) {
        const Slot& s = slots_[t];
        if (s.p_index >= 0) pe.residues[s.p_index] = a.residues[t] % s.p_pow;
        if (s.rest_index >= 0) re.residues[s.rest_index] = a.residues[t] % s.cofactor;
    }
    return {std::move(pe), std::move(re)};
}

SylowSplit sylow_split(const AbelianGroup& g, std::int64_t p) { return SylowSplit(g, p); }

std::string format_element(const GroupElement& a) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < a.residues.size(); ++i) {
        if (i) os << ',';
        os << a.residues[i];
    }
    os << ')';
    return os.str();
}

} // namespace gdm
