#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace fingeom {
namespace gf {

// Largest supported field order.
constexpr int kMaxOrder = 128;

struct PrimePower {
    int p = 0;
    int h = 0;
    int q = 0;
};

// Exact arithmetic for GF(p^h), q = p^h <= kMaxOrder.
//
// Elements are dense integer codes 0..q-1: code c stands for the polynomial
// sum_i d_i x^i with d_i the base-p digits of c, reduced modulo a fixed
// primitive polynomial (Conway convention for h >= 2, x - g with g the
// smallest primitive root for h = 1).  Code 0 and code 1 are the additive
// and multiplicative identities; codes 0..p-1 are the prime subfield GF(p).
// Immutable after construction, safe for concurrent reads.
class FieldTable {
  public:
    static const FieldTable& get(int p, int h);

    const PrimePower& order() const { return pp_; }
    int p() const { return pp_.p; }
    int h() const { return pp_.h; }
    int q() const { return pp_.q; }

    // Monic primitive polynomial, coefficients c[0]..c[h] low to high.
    const std::vector<int>& primitive_polynomial() const { return poly_; }

    uint8_t add(uint8_t a, uint8_t b) const { return add_[idx(a, b)]; }
    uint8_t sub(uint8_t a, uint8_t b) const { return add_[idx(a, neg_[b])]; }
    uint8_t mul(uint8_t a, uint8_t b) const { return mul_[idx(a, b)]; }
    uint8_t neg(uint8_t a) const { return neg_[a]; }
    uint8_t inv(uint8_t a) const;
    uint8_t div(uint8_t a, uint8_t b) const { return mul(a, inv(b)); }
    uint8_t pow(uint8_t a, long e) const;

    // x^(p^i); periodic in i with period h.
    uint8_t frobenius(uint8_t a, long i) const;

    // A fixed multiplicative generator (the class of x for h >= 2).
    uint8_t generator() const { return gen_; }
    // Discrete log base generator(); only valid for a != 0.
    int log(uint8_t a) const;

    struct QuadraticRoots {
        // identically_zero: a = b = c = 0, every element is a root.
        bool identically_zero = false;
        // Roots of a y^2 + b y + c with multiplicity (size 0, 1 or 2).
        std::vector<uint8_t> roots;
    };
    // Exhaustive scan; exact for q <= kMaxOrder.
    QuadraticRoots solve_quadratic(uint8_t a, uint8_t b, uint8_t c) const;

  private:
    FieldTable(int p, int h);
    size_t idx(uint8_t a, uint8_t b) const { return size_t(a) * pp_.q + b; }

    PrimePower pp_;
    std::vector<int> poly_;
    std::vector<uint8_t> add_, mul_;   // q*q tables
    std::vector<uint8_t> neg_, inv_;   // q tables
    std::vector<uint8_t> frob_;        // one Frobenius application
    std::vector<int> log_;             // discrete log, log_[0] = -1
    uint8_t gen_ = 0;
};

const FieldTable& make_field(int p, int h);

// Factors q = p^h and returns the cached table; throws when q is not a
// supported prime power.
const FieldTable& field_for_order(int q);

// Embedding of GF(q0) into GF(q0^n) together with the coordinate maps
// induced by the basis {1, x, ..., x^(n-1)} of the big field over the
// embedded small field.
struct SubfieldEmbedding {
    const FieldTable* small = nullptr;
    const FieldTable* big = nullptr;
    int n = 0;                        // extension degree
    std::vector<uint8_t> embed;       // small code -> big code
    std::vector<uint8_t> basis;       // n big codes, basis over GF(q0)

    // big code -> n small codes / back; tables over all q = q0^n codes.
    std::vector<std::vector<uint8_t>> expand_table;
    std::vector<uint8_t> contract_table;  // index = sum c_i * q0^i

    std::vector<uint8_t> expand(uint8_t big_code) const {
        return expand_table[big_code];
    }
    uint8_t contract(const std::vector<uint8_t>& coords) const;
};

SubfieldEmbedding subfield_embedding(const FieldTable& small,
                                     const FieldTable& big);

}  // namespace gf
}  // namespace fingeom
