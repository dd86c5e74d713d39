#include "fingeom/projgeom.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace fingeom {
namespace pg {

Vec normalize(const gf::FieldTable& F, Vec v) {
    for (auto c : v)
        if (c != 0) {
            if (c != 1) {
                uint8_t s = F.inv(c);
                for (auto& x : v) x = F.mul(x, s);
            }
            return v;
        }
    throw std::invalid_argument("cannot normalize the zero vector");
}

PointTable::PointTable(int n, const gf::FieldTable& F) : n_(n), F_(&F) {
    if (n < 1) throw std::invalid_argument("projective dimension must be >= 1");
    int q = F.q();
    // lex order on normalized tuples: leading zeros, then leading 1
    std::vector<Vec> out;
    Vec v(n + 1, 0);
    std::function<void(int, bool)> rec = [&](int pos, bool lead) {
        if (pos == n + 1) {
            if (lead) out.push_back(v);
            return;
        }
        if (!lead) {
            v[pos] = 0;
            rec(pos + 1, false);
            v[pos] = 1;
            rec(pos + 1, true);
        } else {
            for (int c = 0; c < q; ++c) {
                v[pos] = uint8_t(c);
                rec(pos + 1, true);
            }
        }
        v[pos] = 0;
    };
    rec(0, false);
    pts_ = std::move(out);

    double total = 1;
    for (int i = 0; i <= n; ++i) total *= q;
    if (total <= double(1 << 24)) {
        radix_.assign(size_t(total), -1);
        for (size_t id = 0; id < pts_.size(); ++id) {
            // all scalar multiples point to the same id
            for (int s = 1; s < q; ++s) {
                size_t ix = 0;
                for (int i = 0; i <= n; ++i) ix = ix * q + F.mul(pts_[id][i], uint8_t(s));
                radix_[ix] = int32_t(id);
            }
        }
    }
}

int PointTable::id_of(const Vec& v) const {
    if (int(v.size()) != n_ + 1) throw std::invalid_argument("point length mismatch");
    if (!radix_.empty()) {
        size_t ix = 0;
        for (int i = 0; i <= n_; ++i) ix = ix * F_->q() + v[i];
        int32_t id = radix_[ix];
        if (id < 0) throw std::invalid_argument("zero vector is not a point");
        return id;
    }
    Vec nv = normalize(*F_, v);
    auto it = std::lower_bound(pts_.begin(), pts_.end(), nv);
    if (it == pts_.end() || *it != nv) throw std::logic_error("point not found");
    return int(it - pts_.begin());
}

const PointTable& PointTable::get(int n, const gf::FieldTable& F) {
    static std::map<std::pair<int, std::pair<int, int>>, std::unique_ptr<PointTable>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(n, std::make_pair(F.p(), F.h()));
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, std::unique_ptr<PointTable>(new PointTable(n, F))).first;
    return *it->second;
}

bool Subspace::operator<(const Subspace& o) const {
    if (n != o.n) return n < o.n;
    if (rank != o.rank) return rank < o.rank;
    return m < o.m;
}

size_t SubspaceHash::operator()(const Subspace& s) const {
    size_t h = 1469598103934665603ull;
    auto mix = [&h](size_t v) {
        h ^= v;
        h *= 1099511628211ull;
    };
    mix(size_t(s.n));
    mix(size_t(s.rank));
    for (auto b : s.m) mix(b);
    return h;
}

int rref(const gf::FieldTable& F, std::vector<uint8_t>& rows, int ncols) {
    int nrows = ncols == 0 ? 0 : int(rows.size()) / ncols;
    int r = 0;
    for (int col = 0; col < ncols && r < nrows; ++col) {
        int piv = -1;
        for (int i = r; i < nrows; ++i)
            if (rows[size_t(i) * ncols + col] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < ncols; ++j)
                std::swap(rows[size_t(piv) * ncols + j], rows[size_t(r) * ncols + j]);
        uint8_t s = F.inv(rows[size_t(r) * ncols + col]);
        if (s != 1)
            for (int j = col; j < ncols; ++j)
                rows[size_t(r) * ncols + j] = F.mul(rows[size_t(r) * ncols + j], s);
        for (int i = 0; i < nrows; ++i) {
            if (i == r) continue;
            uint8_t f = rows[size_t(i) * ncols + col];
            if (f == 0) continue;
            for (int j = col; j < ncols; ++j)
                rows[size_t(i) * ncols + j] =
                    F.sub(rows[size_t(i) * ncols + j], F.mul(f, rows[size_t(r) * ncols + j]));
        }
        ++r;
    }
    rows.resize(size_t(r) * ncols);
    return r;
}

Subspace make_subspace(const gf::FieldTable& F, int n, const std::vector<Vec>& gens) {
    std::vector<uint8_t> rows;
    rows.reserve(gens.size() * (n + 1));
    for (const auto& g : gens) {
        if (int(g.size()) != n + 1) throw std::invalid_argument("generator length mismatch");
        rows.insert(rows.end(), g.begin(), g.end());
    }
    Subspace s;
    s.n = n;
    s.q = F.q();
    s.rank = rref(F, rows, n + 1);
    s.m = std::move(rows);
    return s;
}

Subspace empty_subspace(const gf::FieldTable& F, int n) {
    Subspace s;
    s.n = n;
    s.q = F.q();
    s.rank = 0;
    return s;
}

Subspace full_space(const gf::FieldTable& F, int n) {
    Subspace s;
    s.n = n;
    s.q = F.q();
    s.rank = n + 1;
    s.m.assign(size_t(n + 1) * (n + 1), 0);
    for (int i = 0; i <= n; ++i) s.m[size_t(i) * (n + 1) + i] = 1;
    return s;
}

Subspace point_subspace(const gf::FieldTable& F, int n, const Vec& v) {
    return make_subspace(F, n, {v});
}

Subspace span(const gf::FieldTable& F, const Subspace& a, const Subspace& b) {
    if (a.n != b.n || a.q != b.q) throw std::invalid_argument("ambient space mismatch");
    std::vector<uint8_t> rows = a.m;
    rows.insert(rows.end(), b.m.begin(), b.m.end());
    Subspace s;
    s.n = a.n;
    s.q = a.q;
    s.rank = rref(F, rows, a.n + 1);
    s.m = std::move(rows);
    return s;
}

Subspace span_all(const gf::FieldTable& F, const std::vector<Subspace>& parts) {
    if (parts.empty()) throw std::invalid_argument("span of nothing");
    std::vector<uint8_t> rows;
    for (const auto& p : parts) {
        if (p.n != parts[0].n || p.q != parts[0].q)
            throw std::invalid_argument("ambient space mismatch");
        rows.insert(rows.end(), p.m.begin(), p.m.end());
    }
    Subspace s;
    s.n = parts[0].n;
    s.q = parts[0].q;
    s.rank = rref(F, rows, s.n + 1);
    s.m = std::move(rows);
    return s;
}

Subspace dual_subspace(const gf::FieldTable& F, const Subspace& a) {
    // nullspace of the generator matrix under the standard dot product
    int n = a.n, nc = n + 1;
    // Solve a.m * y^T = 0.  Columns of the solution space from RREF of a.m.
    std::vector<uint8_t> rows = a.m;
    int r = rref(F, rows, nc);
    std::vector<int> pivots;
    {
        int col = 0;
        for (int i = 0; i < r; ++i) {
            while (col < nc && rows[size_t(i) * nc + col] == 0) ++col;
            pivots.push_back(col);
        }
    }
    std::vector<char> is_pivot(nc, 0);
    for (int p : pivots) is_pivot[p] = 1;
    std::vector<Vec> basis;
    for (int j = 0; j < nc; ++j) {
        if (is_pivot[j]) continue;
        Vec y(nc, 0);
        y[j] = 1;
        for (int i = 0; i < r; ++i) y[pivots[i]] = F.neg(rows[size_t(i) * nc + j]);
        basis.push_back(std::move(y));
    }
    return make_subspace(F, n, basis);
}

Subspace meet(const gf::FieldTable& F, const Subspace& a, const Subspace& b) {
    if (a.n != b.n || a.q != b.q) throw std::invalid_argument("ambient space mismatch");
    return dual_subspace(F, span(F, dual_subspace(F, a), dual_subspace(F, b)));
}

bool contains_point(const gf::FieldTable& F, const Subspace& a, const Vec& v) {
    // reduce v against the RREF rows
    Vec w = v;
    int nc = a.n + 1;
    int col = 0;
    for (int i = 0; i < a.rank; ++i) {
        while (col < nc && a.m[size_t(i) * nc + col] == 0) ++col;
        if (col >= nc) break;
        uint8_t f = w[col];
        if (f != 0)
            for (int j = col; j < nc; ++j) w[j] = F.sub(w[j], F.mul(f, a.m[size_t(i) * nc + j]));
    }
    for (auto c : w)
        if (c != 0) return false;
    return true;
}

bool contains_subspace(const gf::FieldTable& F, const Subspace& outer, const Subspace& inner) {
    for (int i = 0; i < inner.rank; ++i) {
        Vec v(inner.row(i), inner.row(i) + inner.n + 1);
        if (!contains_point(F, outer, v)) return false;
    }
    return true;
}

bool disjoint(const gf::FieldTable& F, const Subspace& a, const Subspace& b) {
    std::vector<uint8_t> rows = a.m;
    rows.insert(rows.end(), b.m.begin(), b.m.end());
    return rref(F, rows, a.n + 1) == a.rank + b.rank;
}

std::vector<Vec> subspace_points(const gf::FieldTable& F, const Subspace& a) {
    // normalized representatives: coefficient vectors with leading coeff 1
    std::vector<Vec> out;
    int nc = a.n + 1, q = F.q();
    std::vector<uint8_t> coef(a.rank, 0);
    std::function<void(int, bool)> rec = [&](int pos, bool lead) {
        if (pos == a.rank) {
            if (!lead) return;
            Vec v(nc, 0);
            for (int i = 0; i < a.rank; ++i) {
                if (coef[i] == 0) continue;
                for (int j = 0; j < nc; ++j)
                    v[j] = F.add(v[j], F.mul(coef[i], a.m[size_t(i) * nc + j]));
            }
            out.push_back(normalize(F, std::move(v)));
            return;
        }
        if (!lead) {
            coef[pos] = 0;
            rec(pos + 1, false);
            coef[pos] = 1;
            rec(pos + 1, true);
        } else {
            for (int c = 0; c < q; ++c) {
                coef[pos] = uint8_t(c);
                rec(pos + 1, true);
            }
        }
        coef[pos] = 0;
    };
    rec(0, false);
    return out;
}

std::vector<int> subspace_point_ids(const gf::FieldTable& F, const Subspace& a) {
    const auto& pt = PointTable::get(a.n, F);
    std::vector<int> ids;
    for (const auto& v : subspace_points(F, a)) ids.push_back(pt.id_of(v));
    std::sort(ids.begin(), ids.end());
    return ids;
}

QuotientMap::QuotientMap(const gf::FieldTable& F, const Subspace& K) : F_(&F), K_(K) {
    if (K.rank == 0) throw std::invalid_argument("quotient by the empty subspace");
    // lexicographically least complement: greedy over points in id order
    const auto& pt = PointTable::get(K.n, F);
    Subspace acc = K;
    std::vector<Vec> cgens;
    for (int id = 0; id < pt.count() && acc.rank < K.n + 1; ++id) {
        if (!contains_point(F, acc, pt.point(id))) {
            cgens.push_back(pt.point(id));
            acc = span(F, acc, point_subspace(F, K.n, pt.point(id)));
        }
    }
    C_ = make_subspace(F, K.n, cgens);
    // stacked basis [K; C] and its inverse for coordinate extraction
    std::vector<uint8_t> basis = K_.m;
    basis.insert(basis.end(), C_.m.begin(), C_.m.end());
    basis_inv_ = mat_inverse(F, basis, K.n + 1);
}

Subspace QuotientMap::map(const Subspace& s) const {
    if (!contains_subspace(*F_, s, K_))
        throw std::invalid_argument("subspace does not contain the quotient kernel");
    const auto& F = *F_;
    int nc = K_.n + 1, k = K_.rank, tc = nc - k;
    std::vector<Vec> gens;
    for (int i = 0; i < s.rank; ++i) {
        Vec coords(nc, 0);
        for (int j = 0; j < nc; ++j) {
            uint8_t acc = 0;
            for (int l = 0; l < nc; ++l)
                acc = F.add(acc, F.mul(s.m[size_t(i) * nc + l], basis_inv_[size_t(l) * nc + j]));
            coords[j] = acc;
        }
        Vec tail(coords.begin() + k, coords.end());
        bool zero = true;
        for (auto c : tail)
            if (c) zero = false;
        if (!zero) gens.push_back(std::move(tail));
    }
    auto out = make_subspace(F, tc - 1, gens);
    if (out.rank != s.rank - k) throw std::logic_error("quotient dimension mismatch");
    return out;
}

Subspace QuotientMap::lift(const Subspace& t) const {
    const auto& F = *F_;
    int nc = K_.n + 1, k = K_.rank;
    std::vector<Vec> gens;
    for (int i = 0; i < K_.rank; ++i) gens.emplace_back(K_.row(i), K_.row(i) + nc);
    for (int i = 0; i < t.rank; ++i) {
        Vec v(nc, 0);
        for (int j = 0; j < nc; ++j) {
            uint8_t acc = 0;
            for (int l = 0; l < nc - k; ++l)
                acc = F.add(acc, F.mul(t.m[size_t(i) * (nc - k) + l], C_.m[size_t(l) * nc + j]));
            v[j] = acc;
        }
        gens.push_back(std::move(v));
    }
    return make_subspace(F, K_.n, gens);
}

unsigned long long gaussian_binomial(int n, int k, int q) {
    if (k < 0 || k > n) return 0;
    if (k == 0 || k == n) return 1;
    // recurrence [n k] = [n-1 k-1] + q^k [n-1 k]
    std::vector<std::vector<unsigned long long>> t(n + 1, std::vector<unsigned long long>(k + 1, 0));
    for (int i = 0; i <= n; ++i) t[i][0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= std::min(i, k); ++j) {
            unsigned long long qk = 1;
            for (int e = 0; e < j; ++e) qk *= (unsigned long long)(q);
            t[i][j] = (i == j) ? 1 : t[i - 1][j - 1] + qk * t[i - 1][j];
        }
    return t[n][k];
}

void for_each_subspace(const gf::FieldTable& F, int n, int pdim,
                       const std::function<bool(const Subspace&)>& visit) {
    int nc = n + 1, r = pdim + 1, q = F.q();
    if (r < 0 || r > nc) return;
    if (r == 0) {
        visit(empty_subspace(F, n));
        return;
    }
    // iterate pivot column subsets in ascending lex order
    std::vector<int> piv(r);
    for (int i = 0; i < r; ++i) piv[i] = i;
    bool more = true;
    while (more) {
        // free positions: (i,j) with j > piv[i], j not a pivot column
        std::vector<char> is_piv(nc, 0);
        for (int p : piv) is_piv[p] = 1;
        std::vector<std::pair<int, int>> free_pos;
        for (int i = 0; i < r; ++i)
            for (int j = piv[i] + 1; j < nc; ++j)
                if (!is_piv[j]) free_pos.emplace_back(i, j);
        std::vector<uint8_t> vals(free_pos.size(), 0);
        bool done = false;
        while (!done) {
            Subspace s;
            s.n = n;
            s.q = q;
            s.rank = r;
            s.m.assign(size_t(r) * nc, 0);
            for (int i = 0; i < r; ++i) s.m[size_t(i) * nc + piv[i]] = 1;
            for (size_t t = 0; t < free_pos.size(); ++t)
                s.m[size_t(free_pos[t].first) * nc + free_pos[t].second] = vals[t];
            if (!visit(s)) return;
            // odometer
            size_t t = 0;
            for (; t < vals.size(); ++t) {
                if (vals[t] + 1 < q) {
                    ++vals[t];
                    break;
                }
                vals[t] = 0;
            }
            if (t == vals.size()) done = true;
        }
        // next pivot subset
        int i = r - 1;
        while (i >= 0 && piv[i] == nc - r + i) --i;
        if (i < 0) {
            more = false;
        } else {
            ++piv[i];
            for (int j = i + 1; j < r; ++j) piv[j] = piv[j - 1] + 1;
        }
    }
}

std::vector<Subspace> all_subspaces(const gf::FieldTable& F, int n, int pdim) {
    std::vector<Subspace> out;
    for_each_subspace(F, n, pdim, [&](const Subspace& s) {
        out.push_back(s);
        return true;
    });
    return out;
}

std::vector<Subspace> subspaces_through(const gf::FieldTable& F, const Subspace& s,
                                        int target_dim) {
    if (target_dim < s.dim() || target_dim > s.n)
        throw std::invalid_argument("target dimension out of range");
    if (target_dim == s.dim()) return {s};
    if (s.rank == 0) return all_subspaces(F, s.n, target_dim);
    QuotientMap qm(F, s);
    std::vector<Subspace> out;
    for (const auto& t : all_subspaces(F, qm.target_dim(), target_dim - s.rank))
        out.push_back(qm.lift(t));
    return out;
}

Collineation identity_collineation(const gf::FieldTable& F, int n) {
    Collineation g;
    g.n = n;
    g.q = F.q();
    g.frob = 0;
    g.mat.assign(size_t(n + 1) * (n + 1), 0);
    for (int i = 0; i <= n; ++i) g.mat[size_t(i) * (n + 1) + i] = 1;
    return g;
}

Vec apply_point_vec(const gf::FieldTable& F, const Collineation& g, const Vec& v) {
    int nc = g.n + 1;
    Vec w(nc, 0);
    for (int j = 0; j < nc; ++j) {
        uint8_t acc = 0;
        for (int i = 0; i < nc; ++i)
            acc = F.add(acc, F.mul(F.frobenius(v[i], g.frob), g.mat[size_t(i) * nc + j]));
        w[j] = acc;
    }
    return w;
}

Subspace apply_collineation(const gf::FieldTable& F, const Collineation& g,
                            const Subspace& s) {
    if (g.n != s.n) throw std::invalid_argument("collineation dimension mismatch");
    std::vector<Vec> gens;
    for (int i = 0; i < s.rank; ++i)
        gens.push_back(apply_point_vec(F, g, Vec(s.row(i), s.row(i) + s.n + 1)));
    return make_subspace(F, s.n, gens);
}

Collineation compose(const gf::FieldTable& F, const Collineation& second,
                     const Collineation& first) {
    // x -> frob^f1(x) M1 -> frob^f2(frob^f1(x) M1) M2
    //    = frob^(f1+f2)(x) frob^f2(M1) M2
    Collineation g;
    g.n = first.n;
    g.q = first.q;
    g.frob = (first.frob + second.frob) % F.h();
    std::vector<uint8_t> m1f = first.mat;
    for (auto& c : m1f) c = F.frobenius(c, second.frob);
    g.mat = mat_mul(F, m1f, second.mat, first.n + 1);
    return g;
}

Collineation inverse(const gf::FieldTable& F, const Collineation& g) {
    Collineation r;
    r.n = g.n;
    r.q = g.q;
    r.frob = (F.h() - g.frob) % F.h();
    r.mat = mat_inverse(F, g.mat, g.n + 1);
    for (auto& c : r.mat) c = F.frobenius(c, r.frob);
    return r;
}

std::vector<uint8_t> mat_mul(const gf::FieldTable& F, const std::vector<uint8_t>& a,
                             const std::vector<uint8_t>& b, int m) {
    std::vector<uint8_t> c(size_t(m) * m, 0);
    for (int i = 0; i < m; ++i)
        for (int k = 0; k < m; ++k) {
            uint8_t aik = a[size_t(i) * m + k];
            if (!aik) continue;
            for (int j = 0; j < m; ++j)
                c[size_t(i) * m + j] =
                    F.add(c[size_t(i) * m + j], F.mul(aik, b[size_t(k) * m + j]));
        }
    return c;
}

std::vector<uint8_t> mat_inverse(const gf::FieldTable& F, const std::vector<uint8_t>& a,
                                 int m) {
    std::vector<uint8_t> aug(size_t(m) * 2 * m, 0);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) aug[size_t(i) * 2 * m + j] = a[size_t(i) * m + j];
        aug[size_t(i) * 2 * m + m + i] = 1;
    }
    int r = rref(F, aug, 2 * m);
    if (r != m) throw std::invalid_argument("matrix is singular");
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (aug[size_t(i) * 2 * m + j] != (i == j ? 1 : 0))
                throw std::invalid_argument("matrix is singular");
    std::vector<uint8_t> inv(size_t(m) * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) inv[size_t(i) * m + j] = aug[size_t(i) * 2 * m + m + j];
    return inv;
}

std::vector<Collineation> collineation_generators(int n, const gf::FieldTable& F) {
    int nc = n + 1;
    std::vector<Collineation> gens;
    auto blank = [&] {
        Collineation g;
        g.n = n;
        g.q = F.q();
        g.frob = 0;
        g.mat.assign(size_t(nc) * nc, 0);
        return g;
    };
    // coordinate cycle
    {
        auto g = blank();
        for (int i = 0; i < nc; ++i) g.mat[size_t(i) * nc + (i + 1) % nc] = 1;
        gens.push_back(g);
    }
    // transposition of the first two coordinates
    if (nc >= 2) {
        auto g = identity_collineation(F, n);
        g.mat[0] = 0;
        g.mat[1] = 1;
        g.mat[size_t(1) * nc + 0] = 1;
        g.mat[size_t(1) * nc + 1] = 0;
        gens.push_back(g);
    }
    // transvection x0 -> x0 + x1
    if (nc >= 2) {
        auto g = identity_collineation(F, n);
        g.mat[size_t(0) * nc + 1] = 1;
        gens.push_back(g);
    }
    // primitive diagonal scaling
    if (F.q() > 2) {
        auto g = identity_collineation(F, n);
        g.mat[0] = F.generator();
        gens.push_back(g);
    }
    if (F.h() > 1) {
        auto g = identity_collineation(F, n);
        g.frob = 1;
        gens.push_back(g);
    }
    return gens;
}

Subspace restrict_to_carrier(const gf::FieldTable& F, const Subspace& u,
                             const Subspace& carrier) {
    if (!contains_subspace(F, carrier, u))
        throw std::invalid_argument("subspace is not inside the carrier");
    int nc = carrier.n + 1;
    std::vector<int> pivots;
    {
        int col = 0;
        for (int i = 0; i < carrier.rank; ++i) {
            while (col < nc && carrier.m[size_t(i) * nc + col] == 0) ++col;
            pivots.push_back(col);
        }
    }
    std::vector<Vec> gens;
    for (int i = 0; i < u.rank; ++i) {
        Vec v(carrier.rank);
        for (int j = 0; j < carrier.rank; ++j) v[j] = u.m[size_t(i) * nc + pivots[j]];
        gens.push_back(std::move(v));
    }
    return make_subspace(F, carrier.rank - 1, gens);
}

Subspace lift_from_carrier(const gf::FieldTable& F, const Subspace& u,
                           const Subspace& carrier) {
    if (u.n != carrier.rank - 1) throw std::invalid_argument("carrier dimension mismatch");
    int nc = carrier.n + 1;
    std::vector<Vec> gens;
    for (int i = 0; i < u.rank; ++i) {
        Vec v(nc, 0);
        for (int j = 0; j < carrier.rank; ++j) {
            uint8_t c = u.m[size_t(i) * carrier.rank + j];
            if (!c) continue;
            for (int l = 0; l < nc; ++l)
                v[l] = F.add(v[l], F.mul(c, carrier.m[size_t(j) * nc + l]));
        }
        gens.push_back(std::move(v));
    }
    return make_subspace(F, carrier.n, gens);
}

std::string subspace_to_text(const Subspace& s) {
    std::ostringstream os;
    os << s.n << ' ' << s.q << ' ' << s.rank << '\n';
    for (int i = 0; i < s.rank; ++i) {
        for (int j = 0; j <= s.n; ++j) {
            if (j) os << ' ';
            os << int(s.m[size_t(i) * (s.n + 1) + j]);
        }
        os << '\n';
    }
    return os.str();
}

Subspace subspace_from_text(std::istream& in) {
    int n, q, r;
    if (!(in >> n >> q >> r)) throw std::invalid_argument("bad subspace header");
    Subspace s;
    s.n = n;
    s.q = q;
    s.rank = r;
    s.m.resize(size_t(r) * (n + 1));
    for (auto& c : s.m) {
        int v;
        if (!(in >> v) || v < 0 || v >= q) throw std::invalid_argument("bad subspace entry");
        c = uint8_t(v);
    }
    // canonical form is required on load
    const auto& F = gf::field_for_order(q);
    std::vector<uint8_t> check = s.m;
    if (rref(F, check, n + 1) != r || check != s.m)
        throw std::invalid_argument("subspace rows are not in reduced row echelon form");
    return s;
}

}  // namespace pg
}  // namespace fingeom
