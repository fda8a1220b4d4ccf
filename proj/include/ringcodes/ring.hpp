// ring.hpp -- arithmetic of the eight-element ring R = F2 + u*F2 + u^2*F2, u^3 = u.
#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ringcodes {

/// One of the eight elements a + b*u + c*u^2, packed as bits a | b<<1 | c<<2.
/// Addition is componentwise XOR; multiplication reduces by u^3 = u.
class RingElement {
  public:
    constexpr RingElement() = default;
    constexpr explicit RingElement(unsigned bits) : v_(static_cast<uint8_t>(bits & 7u)) {}
    static constexpr RingElement from_coeffs(bool a, bool b, bool c) {
        return RingElement(unsigned(a) | unsigned(b) << 1 | unsigned(c) << 2);
    }

    constexpr bool a() const { return v_ & 1; }
    constexpr bool b() const { return (v_ >> 1) & 1; }
    constexpr bool c() const { return (v_ >> 2) & 1; }
    constexpr unsigned bits() const { return v_; }
    constexpr bool is_zero() const { return v_ == 0; }

    friend constexpr bool operator==(RingElement, RingElement) = default;

  private:
    uint8_t v_ = 0;
};

namespace detail {
// Product of two elements as polynomials in u over F2, reduced by u^3 = u
// (hence u^4 = u^2). Used only to build the lookup table.
constexpr uint8_t mul_reduce(unsigned x, unsigned y) {
    bool p[5] = {};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (((x >> i) & 1u) && ((y >> j) & 1u)) p[i + j] ^= 1;
    p[1] ^= p[3];
    p[2] ^= p[4];
    return static_cast<uint8_t>(unsigned(p[0]) | unsigned(p[1]) << 1 | unsigned(p[2]) << 2);
}

constexpr std::array<std::array<uint8_t, 8>, 8> make_mul_table() {
    std::array<std::array<uint8_t, 8>, 8> t{};
    for (unsigned x = 0; x < 8; ++x)
        for (unsigned y = 0; y < 8; ++y) t[x][y] = mul_reduce(x, y);
    return t;
}

inline constexpr auto mul_table = make_mul_table();
}  // namespace detail

constexpr RingElement operator+(RingElement x, RingElement y) {
    return RingElement(x.bits() ^ y.bits());
}
constexpr RingElement operator*(RingElement x, RingElement y) {
    return RingElement(detail::mul_table[x.bits()][y.bits()]);
}
constexpr RingElement& operator+=(RingElement& x, RingElement y) { return x = x + y; }
constexpr RingElement& operator*=(RingElement& x, RingElement y) { return x = x * y; }

/// Named elements; elt::w is the non-trivial unit 1 + u + u^2.
namespace elt {
inline constexpr RingElement zero{0};
inline constexpr RingElement one{1};
inline constexpr RingElement u{2};
inline constexpr RingElement one_u{3};      // 1+u
inline constexpr RingElement u2{4};         // u^2
inline constexpr RingElement one_u2{5};     // 1+u^2
inline constexpr RingElement u_u2{6};       // u+u^2
inline constexpr RingElement w{7};          // 1+u+u^2
}  // namespace elt

// The table is self-checking: the square identities and unit structure of the
// ring pin down the multiplication.
static_assert(elt::u * elt::u2 == elt::u);
static_assert(elt::u_u2 * elt::u_u2 == elt::zero);
static_assert(elt::one_u * elt::one_u == elt::one_u2);
static_assert(elt::one_u2 * elt::one_u2 == elt::one_u2);
static_assert(elt::u2 * elt::u2 == elt::u2);
static_assert(elt::w * elt::w == elt::one);

constexpr bool is_unit(RingElement x) { return x == elt::one || x == elt::w; }

/// Units are self-inverse (their squares are 1). Throws for non-units.
inline RingElement inverse(RingElement x) {
    if (!is_unit(x)) throw std::domain_error("ringcodes: not a unit");
    return x;
}

/// The Gray map on symbols: a + b*u + c*u^2  ->  (a+b, b+c, c).
constexpr std::array<bool, 3> gray_symbol(RingElement x) {
    return {bool(x.a() ^ x.b()), bool(x.b() ^ x.c()), x.c()};
}

/// Lee weight = Hamming weight of the Gray symbol.
constexpr unsigned lee_weight(RingElement x) {
    auto g = gray_symbol(x);
    return unsigned(g[0]) + unsigned(g[1]) + unsigned(g[2]);
}

static_assert(lee_weight(elt::zero) == 0 && lee_weight(elt::one) == 1);
static_assert(lee_weight(elt::u) == 2 && lee_weight(elt::u2) == 2);
static_assert(lee_weight(elt::u_u2) == 2 && lee_weight(elt::one_u) == 1);
static_assert(lee_weight(elt::one_u2) == 3 && lee_weight(elt::w) == 1);

/// Generating character chi(a+bu+cu^2) = (-1)^c of the additive group.
constexpr int character(RingElement x) { return x.c() ? -1 : +1; }

/// Coefficients of the unique decomposition x = (1+u^2)*f0 + u^2*(g0 + g1*(u+u^2)).
struct IdempotentPair {
    bool f0 = false;
    bool g0 = false;
    bool g1 = false;
    friend constexpr bool operator==(IdempotentPair, IdempotentPair) = default;
};

constexpr IdempotentPair crt_split(RingElement x) {
    return {x.a(), bool(x.a() ^ x.b() ^ x.c()), x.b()};
}

constexpr RingElement crt_join(IdempotentPair p) {
    RingElement x = RingElement::from_coeffs(p.f0, false, p.f0);  // (1+u^2)*f0
    if (p.g0) x += elt::u2;
    if (p.g1) x += elt::u_u2;  // u^2*(u+u^2) = u+u^2
    return x;
}

static_assert(crt_join(crt_split(elt::one_u2)) == elt::one_u2);
static_assert(crt_split(elt::one) == IdempotentPair{true, true, false});
static_assert(crt_split(elt::u2) == IdempotentPair{false, true, false});
static_assert(crt_split(elt::u_u2) == IdempotentPair{false, false, true});

/// Canonical textual names, indexed by the packed bit value.
inline constexpr std::array<std::string_view, 8> element_names = {
    "0", "1", "u", "1+u", "u^2", "1+u^2", "u+u^2", "1+u+u^2"};

inline std::string to_string(RingElement x) { return std::string(element_names[x.bits()]); }

/// Parses an element name. Case-insensitive; accepts "u2" for "u^2" in any
/// position and "w" for 1+u+u^2.
inline RingElement parse_element(std::string_view s) {
    std::string t;
    t.reserve(s.size());
    for (char ch : s) {
        if (ch == ' ' || ch == '\t') continue;
        t.push_back(ch >= 'A' && ch <= 'Z' ? char(ch - 'A' + 'a') : ch);
    }
    if (t == "w") return elt::w;
    for (unsigned v = 0; v < 8; ++v) {
        std::string name(element_names[v]);
        std::string alt = name;  // variant with "u^2" spelled "u2"
        for (size_t pos; (pos = alt.find("u^2")) != std::string::npos;) alt.replace(pos, 3, "u2");
        if (t == name || t == alt) return RingElement(v);
    }
    throw std::invalid_argument("ringcodes: unknown ring element '" + std::string(s) + "'");
}

}  // namespace ringcodes
