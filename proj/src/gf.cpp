#include "fingeom/gf.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

namespace fingeom {
namespace gf {

namespace {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

int ipow(int b, int e) {
    int r = 1;
    while (e-- > 0) r *= b;
    return r;
}

// Conway polynomials for the composite orders up to kMaxOrder,
// coefficients low to high, monic.
const std::map<std::pair<int, int>, std::vector<int>>& conway_table() {
    static const std::map<std::pair<int, int>, std::vector<int>> t = {
        {{2, 2}, {1, 1, 1}},
        {{2, 3}, {1, 1, 0, 1}},
        {{2, 4}, {1, 1, 0, 0, 1}},
        {{2, 5}, {1, 0, 1, 0, 0, 1}},
        {{2, 6}, {1, 1, 0, 1, 1, 0, 1}},
        {{2, 7}, {1, 1, 0, 0, 0, 0, 0, 1}},
        {{3, 2}, {2, 2, 1}},
        {{3, 3}, {1, 2, 0, 1}},
        {{3, 4}, {2, 0, 0, 2, 1}},
        {{5, 2}, {2, 4, 1}},
        {{5, 3}, {3, 3, 0, 1}},
        {{7, 2}, {3, 6, 1}},
        {{11, 2}, {2, 7, 1}},
    };
    return t;
}

int smallest_primitive_root(int p) {
    for (int g = 1; g < p; ++g) {
        int x = g % p, ord = 1;
        while (x != 1) {
            x = (x * g) % p;
            ++ord;
        }
        if (ord == p - 1) return g;
    }
    throw std::logic_error("no primitive root found");
}

std::vector<int> digits(int code, int p, int h) {
    std::vector<int> d(h);
    for (int i = 0; i < h; ++i) {
        d[i] = code % p;
        code /= p;
    }
    return d;
}

int undigits(const std::vector<int>& d, int p) {
    int c = 0;
    for (size_t i = d.size(); i-- > 0;) c = c * p + d[i];
    return c;
}

}  // namespace

FieldTable::FieldTable(int p, int h) {
    if (!is_prime(p)) throw std::invalid_argument("p is not prime: " + std::to_string(p));
    if (h < 1) throw std::invalid_argument("exponent must be >= 1");
    long q = 1;
    for (int i = 0; i < h; ++i) {
        q *= p;
        if (q > kMaxOrder)
            throw std::invalid_argument("field order exceeds supported maximum");
    }
    pp_ = {p, h, int(q)};

    if (h == 1) {
        poly_ = {p - smallest_primitive_root(p), 1};
    } else {
        auto it = conway_table().find({p, h});
        if (it == conway_table().end())
            throw std::invalid_argument("no primitive polynomial on file for (" +
                                        std::to_string(p) + "," + std::to_string(h) + ")");
        poly_ = it->second;
    }

    int Q = pp_.q;
    add_.assign(size_t(Q) * Q, 0);
    mul_.assign(size_t(Q) * Q, 0);
    neg_.assign(Q, 0);
    inv_.assign(Q, 0);

    for (int a = 0; a < Q; ++a) {
        auto da = digits(a, p, h);
        for (int b = 0; b < Q; ++b) {
            auto db = digits(b, p, h);
            std::vector<int> s(h);
            for (int i = 0; i < h; ++i) s[i] = (da[i] + db[i]) % p;
            add_[idx(a, b)] = uint8_t(undigits(s, p));

            // schoolbook product then reduction by the monic primitive poly
            std::vector<int> prod(2 * h - 1, 0);
            for (int i = 0; i < h; ++i)
                for (int j = 0; j < h; ++j)
                    prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
            for (int d = 2 * h - 2; d >= h; --d) {
                int c = prod[d];
                if (c == 0) continue;
                prod[d] = 0;
                for (int i = 0; i < h; ++i)
                    prod[d - h + i] = ((prod[d - h + i] - c * poly_[i]) % p + p * p) % p;
            }
            prod.resize(h);
            mul_[idx(a, b)] = uint8_t(undigits(prod, p));
        }
    }
    for (int a = 0; a < Q; ++a) {
        auto da = digits(a, p, h);
        for (int& d : da) d = (p - d) % p;
        neg_[a] = uint8_t(undigits(da, p));
    }
    for (int a = 1; a < Q; ++a) {
        for (int b = 1; b < Q; ++b)
            if (mul_[idx(a, b)] == 1) {
                inv_[a] = uint8_t(b);
                break;
            }
        if (a != 1 && inv_[a] == 0)
            throw std::logic_error("polynomial on file is not irreducible");
    }

    gen_ = (h == 1) ? uint8_t(smallest_primitive_root(p)) : uint8_t(p);
    log_.assign(Q, -1);
    uint8_t x = 1;
    for (int e = 0; e < Q - 1; ++e) {
        if (log_[x] != -1) throw std::logic_error("polynomial on file is not primitive");
        log_[x] = e;
        x = mul(x, gen_);
    }
    if (x != 1) throw std::logic_error("generator order mismatch");

    frob_.assign(Q, 0);
    for (int a = 0; a < Q; ++a) frob_[a] = pow(uint8_t(a), p);
}

uint8_t FieldTable::inv(uint8_t a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    return inv_[a];
}

uint8_t FieldTable::pow(uint8_t a, long e) const {
    if (a == 0) {
        if (e < 0) throw std::domain_error("inverse of zero");
        return e == 0 ? 1 : 0;
    }
    long m = e % (q() - 1);
    if (m < 0) m += q() - 1;
    uint8_t r = 1, b = a;
    while (m > 0) {
        if (m & 1) r = mul(r, b);
        b = mul(b, b);
        m >>= 1;
    }
    return r;
}

uint8_t FieldTable::frobenius(uint8_t a, long i) const {
    long m = i % h();
    if (m < 0) m += h();
    uint8_t r = a;
    for (long k = 0; k < m; ++k) r = frob_[r];
    return r;
}

int FieldTable::log(uint8_t a) const {
    if (a == 0) throw std::domain_error("log of zero");
    return log_[a];
}

FieldTable::QuadraticRoots FieldTable::solve_quadratic(uint8_t a, uint8_t b,
                                                       uint8_t c) const {
    QuadraticRoots out;
    if (a == 0 && b == 0 && c == 0) {
        out.identically_zero = true;
        return out;
    }
    for (int y = 0; y < q(); ++y) {
        uint8_t v = add(add(mul(a, mul(uint8_t(y), uint8_t(y))), mul(b, uint8_t(y))), c);
        if (v == 0) out.roots.push_back(uint8_t(y));
    }
    // report multiplicity two for a genuine double root
    if (a != 0 && out.roots.size() == 1) out.roots.push_back(out.roots[0]);
    return out;
}

const FieldTable& FieldTable::get(int p, int h) {
    static std::map<std::pair<int, int>, std::unique_ptr<FieldTable>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(p, h);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, std::unique_ptr<FieldTable>(new FieldTable(p, h))).first;
    return *it->second;
}

const FieldTable& make_field(int p, int h) { return FieldTable::get(p, h); }

const FieldTable& field_for_order(int q) {
    if (q < 2 || q > kMaxOrder) throw std::invalid_argument("field order out of range");
    int p = 2;
    while (q % p != 0) {
        ++p;
    }
    int h = 0, m = q;
    while (m > 1) {
        if (m % p != 0) throw std::invalid_argument("field order is not a prime power");
        m /= p;
        ++h;
    }
    return FieldTable::get(p, h);
}

uint8_t SubfieldEmbedding::contract(const std::vector<uint8_t>& coords) const {
    if (int(coords.size()) != n) throw std::invalid_argument("coordinate length mismatch");
    size_t ix = 0;
    for (size_t i = coords.size(); i-- > 0;) ix = ix * small->q() + coords[i];
    return contract_table[ix];
}

SubfieldEmbedding subfield_embedding(const FieldTable& small, const FieldTable& big) {
    if (small.p() != big.p() || big.h() % small.h() != 0)
        throw std::invalid_argument("not a subfield: orders incompatible");
    SubfieldEmbedding e;
    e.small = &small;
    e.big = &big;
    e.n = big.h() / small.h();

    int q0 = small.q(), Q = big.q();
    // Image of the small generator: smallest big code of order q0-1 whose
    // induced multiplicative map is also additive.
    uint8_t g0 = small.generator();
    for (int y = 1; y < Q && e.embed.empty(); ++y) {
        // multiplicative order of y must be exactly q0-1
        long ord = (Q - 1) / std::gcd<long>(Q - 1, big.log(uint8_t(y)));
        if (ord != q0 - 1) continue;
        std::vector<uint8_t> phi(q0, 0);
        uint8_t sx = 1, by = 1;
        bool ok = true;
        for (int k = 0; k < q0 - 1; ++k) {
            phi[sx] = by;
            sx = small.mul(sx, g0);
            by = big.mul(by, uint8_t(y));
        }
        for (int a = 0; a < q0 && ok; ++a)
            for (int b = 0; b < q0 && ok; ++b)
                if (phi[small.add(uint8_t(a), uint8_t(b))] != big.add(phi[a], phi[b]))
                    ok = false;
        if (ok) e.embed = std::move(phi);
    }
    if (e.embed.empty()) throw std::logic_error("no subfield embedding found");

    e.basis.resize(e.n);
    for (int i = 0; i < e.n; ++i) e.basis[i] = big.pow(big.generator(), i);

    // fill contraction table over all q0^n coordinate vectors
    size_t total = 1;
    for (int i = 0; i < e.n; ++i) total *= q0;
    if (int(total) != Q) throw std::logic_error("degree mismatch");
    e.contract_table.assign(total, 0);
    e.expand_table.assign(Q, {});
    std::vector<char> seen(Q, 0);
    std::vector<uint8_t> coords(e.n, 0);
    for (size_t ix = 0; ix < total; ++ix) {
        size_t t = ix;
        uint8_t v = 0;
        for (int i = 0; i < e.n; ++i) {
            coords[i] = uint8_t(t % q0);
            t /= q0;
            v = big.add(v, big.mul(e.embed[coords[i]], e.basis[i]));
        }
        e.contract_table[ix] = v;
        if (seen[v]) throw std::logic_error("basis is not independent over the subfield");
        seen[v] = 1;
        e.expand_table[v] = coords;
    }
    return e;
}

}  // namespace gf
}  // namespace fingeom
