#pragma once

#include <map>
#include <string>
#include <vector>

#include "nlie/representation.hpp"

namespace nlie {

// Key of a degree-p cochain value: p-1 wedge slots (strictly increasing
// (n-1)-tuples, repetition across slots allowed) and one final basis index.
struct CochainKey {
    std::vector<Tuple> slots;
    int z = 0;

    bool operator==(const CochainKey& o) const { return slots == o.slots && z == o.z; }
    bool operator<(const CochainKey& o) const {
        if (slots != o.slots) return slots < o.slots;
        return z < o.z;
    }
};

inline std::string cochain_key_to_string(const CochainKey& k) {
    std::string s;
    for (const Tuple& t : k.slots) s += "X" + tuple_to_string(t) + " ";
    return s + "z=e" + std::to_string(k.z + 1);
}

// alpha^p: (wedge)^(p-1) x g -> V with values stored sparsely on basis keys.
// No antisymmetry across wedge slots is assumed; the "n-ary" degree-2 view
// used for deformation terms bakes full antisymmetry in at construction.
class Cochain {
public:
    Cochain() = default;
    Cochain(int degree, const NLieAlgebra& shape, int vdim)
        : degree_(degree), arity_(shape.arity()), dim_(shape.dim()), vdim_(vdim),
          field_(shape.field()) {
        if (degree < 1) throw DegreeMismatch("cochain degree must be >= 1");
    }

    int degree() const { return degree_; }
    int arity() const { return arity_; }
    int dim() const { return dim_; }
    int vdim() const { return vdim_; }
    Field field() const { return field_; }
    const std::map<CochainKey, Vector>& values() const { return values_; }
    bool is_zero() const { return values_.empty(); }

    void add(const CochainKey& key, const Vector& v) {
        validate(key);
        if (v.dim() != vdim_ || v.field() != field_)
            throw DimensionMismatch("cochain value shape");
        if (v.is_zero()) return;
        auto it = values_.find(key);
        if (it == values_.end()) {
            values_.emplace(key, v);
        } else {
            it->second += v;
            if (it->second.is_zero()) values_.erase(it);
        }
    }

    // Sign-normalizes the key in place and looks it up; nullptr when the value
    // is zero (absent key or a repeated index inside a slot, sign = 0 then).
    // Allocation-free when the key's buffers already have capacity.
    const Vector* find_normalized(CochainKey& key, int& sign) const {
        if (static_cast<int>(key.slots.size()) != degree_ - 1)
            throw DegreeMismatch("cochain expects " + std::to_string(degree_ - 1) +
                                 " wedge slots");
        sign = 1;
        for (Tuple& t : key.slots) {
            int s = sort_with_sign(t);
            if (s == 0) {
                sign = 0;
                return nullptr;
            }
            sign *= s;
        }
        auto it = values_.find(key);
        return it == values_.end() ? nullptr : &it->second;
    }

    // Slots may arrive unsorted; each is sign-normalized independently.
    Vector eval_basis(std::vector<Tuple> slots, int z) const {
        CochainKey key{std::move(slots), z};
        int sign = 1;
        const Vector* v = find_normalized(key, sign);
        if (v == nullptr) return Vector(vdim_, field_);
        return sign < 0 ? -*v : *v;
    }

    // Final slot extended linearly to a vector.
    Vector eval_vec(const std::vector<Tuple>& slots, const Vector& v) const {
        Vector out(vdim_, field_);
        for (int k = 0; k < dim_; ++k)
            if (!v[k].is_zero()) out.add_scaled(v[k], eval_basis(slots, k));
        return out;
    }

    Cochain operator+(const Cochain& o) const {
        match(o);
        Cochain r = *this;
        for (const auto& [k, v] : o.values_) r.add(k, v);
        return r;
    }
    Cochain operator*(const Scalar& a) const {
        Cochain r(degree_, arity_, dim_, vdim_, field_);
        if (a.is_zero()) return r;
        for (const auto& [k, v] : values_) r.values_[k] = v * a;
        return r;
    }
    bool operator==(const Cochain& o) const {
        match(o);
        return values_ == o.values_;
    }

private:
    Cochain(int degree, int arity, int dim, int vdim, Field f)
        : degree_(degree), arity_(arity), dim_(dim), vdim_(vdim), field_(f) {}

    void match(const Cochain& o) const {
        if (degree_ != o.degree_) throw DegreeMismatch();
        if (arity_ != o.arity_ || dim_ != o.dim_ || vdim_ != o.vdim_)
            throw DimensionMismatch("cochain shapes differ");
        if (field_ != o.field_) throw FieldMismatch();
    }
    void validate(const CochainKey& key) const {
        if (static_cast<int>(key.slots.size()) != degree_ - 1)
            throw DegreeMismatch("cochain key arity");
        for (const Tuple& t : key.slots) {
            if (static_cast<int>(t.size()) != arity_ - 1)
                throw ShapeMismatch("wedge slot length");
            for (std::size_t i = 0; i < t.size(); ++i) {
                if (t[i] < 0 || t[i] >= dim_) throw IndexOutOfRange("cochain slot index");
                if (i > 0 && t[i - 1] >= t[i])
                    throw ShapeMismatch("wedge slot must be strictly increasing");
            }
        }
        if (key.z < 0 || key.z >= dim_) throw IndexOutOfRange("cochain final index");
    }

    int degree_ = 1;
    int arity_ = 2;
    int dim_ = 0;
    int vdim_ = 0;
    Field field_ = Field::Q;
    std::map<CochainKey, Vector> values_;
};

// Linear maps g -> V are exactly the 1-cochains.
inline Cochain cochain_from_map(const NLieAlgebra& shape, const Matrix& m) {
    if (m.cols() != shape.dim()) throw DimensionMismatch("1-cochain shape");
    Cochain c(1, shape, m.rows());
    for (int z = 0; z < shape.dim(); ++z) c.add(CochainKey{{}, z}, m.column(z));
    return c;
}

// An antisymmetric n-ary table (bracket-candidate shape) viewed as the
// degree-2 cochain (X, z) -> table[X ^ z]; full antisymmetry is inherited
// from the table, so every (slot, z) entry is filled here.
inline Cochain nary_to_cochain(const BracketCandidate& table) {
    Cochain c(2, table, table.dim());
    for (const Tuple& x : increasing_tuples(table.dim(), table.arity() - 1))
        for (int z = 0; z < table.dim(); ++z) {
            Tuple full = x;
            full.push_back(z);
            c.add(CochainKey{{x}, z}, table.bracket_basis(std::move(full)));
        }
    return c;
}

// The literal coboundary (d a)(X_1,...,X_p, z) =
//     sum_{i<k} (-1)^i a(X_1,...,^X_i,...,X_{k-1}, X_i o X_k, X_{k+1},...,X_p, z)
//   + sum_i    (-1)^i a(X_1,...,^X_i,...,X_p, [X_i, z])
//   + sum_i    (-1)^{i+1} rho(X_i) a(X_1,...,^X_i,...,X_p, z)
//   + sum_{i=1}^{n-1} (-1)^{n+p-i+1} rho(x_p^1,...,^x_p^i,...,x_p^{n-1}, z)
//                                  a(X_1,...,X_{p-1}, x_p^i)
// with [X_i, z] the adjoint action ad_{X_i} z.
//
// The class form caches everything that depends only on (rep, p) so that
// check_d_squared can push many cochains through the same operator.
class CoboundaryOp {
public:
    CoboundaryOp(const Representation& rep, int degree) : rep_(&rep), p_(degree) {
        const NLieAlgebra& g = rep.algebra();
        if (p_ < 1) throw DegreeMismatch("coboundary degree must be >= 1");
        const int d = g.dim(), n = g.arity(), p = p_;
        auto wedges = increasing_tuples(d, n - 1);
        const std::size_t w = wedges.size();
        if (w == 0) return;
        std::vector<std::size_t> idx(p, 0);
        while (true) {
            Combo combo;
            combo.xs.resize(p);
            for (int i = 0; i < p; ++i) combo.xs[i] = wedges[idx[i]];
            for (int i = 0; i < p; ++i)
                for (int k = i + 1; k < p; ++k) {
                    combo.comps.push_back(circle_product(
                        g, FundamentalObject::basis(d, g.field(), combo.xs[i]),
                        FundamentalObject::basis(d, g.field(), combo.xs[k])));
                    // slot sources after removing X_i, composite replacing X_k
                    // at position k-1; -1 marks the composite slot
                    std::vector<int> src;
                    for (int t = 0; t < p; ++t)
                        if (t != i && t != k) src.push_back(t);
                    src.insert(src.begin() + (k - 1), -1);
                    combo.comp_src.push_back(std::move(src));
                }
            for (int i = 0; i < p; ++i) {
                combo.rho_xi.push_back(rep.rho_basis(combo.xs[i]));
                std::vector<Vector> ads;
                ads.reserve(d);
                for (int z = 0; z < d; ++z) ads.push_back(g.ad_basis(combo.xs[i], z));
                combo.ad.push_back(std::move(ads));
            }
            const Tuple& xp = combo.xs[p - 1];
            for (int i = 0; i < n - 1; ++i) {
                std::vector<Matrix> mats;
                mats.reserve(d);
                for (int z = 0; z < d; ++z) {
                    Tuple arg = erase_at(xp, static_cast<std::size_t>(i));
                    arg.push_back(z);
                    mats.push_back(rep.rho_basis(std::move(arg)));
                }
                combo.rho_tail.push_back(std::move(mats));
            }
            combos_.push_back(std::move(combo));
            int pos = p - 1;
            while (pos >= 0 && idx[pos] + 1 == w) { idx[pos] = 0; --pos; }
            if (pos < 0) break;
            ++idx[pos];
        }
    }

    Cochain apply(const Cochain& a) const {
        const NLieAlgebra& g = rep_->algebra();
        if (a.arity() != g.arity() || a.dim() != g.dim() || a.vdim() != rep_->vdim())
            throw DimensionMismatch("cochain does not match the representation");
        if (a.degree() != p_) throw DegreeMismatch("operator built for another degree");
        const int d = g.dim(), n = g.arity(), p = p_;
        Cochain out(p + 1, g, rep_->vdim());
        if (a.is_zero()) return out;

        CochainKey scratch;
        scratch.slots.assign(p - 1, Tuple{});
        int sgn = 1;
        std::vector<const Vector*> tail(n - 1);
        std::vector<int> tail_sgn(n - 1);

        for (const Combo& combo : combos_) {
            const std::vector<Tuple>& xs = combo.xs;
            // fourth-sum inputs a(X_1..X_{p-1}; x_p^i) do not depend on z
            const Tuple& xp = xs[p - 1];
            for (int t = 0; t + 1 < p; ++t) scratch.slots[t] = xs[t];
            for (int i = 0; i < n - 1; ++i) {
                scratch.z = xp[i];
                tail[i] = a.find_normalized(scratch, tail_sgn[i]);
            }

            for (int z = 0; z < d; ++z) {
                Vector val(rep_->vdim(), g.field());
                scratch.z = z;
                // first sum, signs (-1)^i with i one-based
                std::size_t pair = 0;
                for (int i = 0; i < p; ++i)
                    for (int k = i + 1; k < p; ++k, ++pair) {
                        const FundamentalObject& comp = combo.comps[pair];
                        if (comp.is_zero()) continue;
                        const std::vector<int>& src = combo.comp_src[pair];
                        int cpos = 0;
                        for (int s = 0; s + 1 < p; ++s) {
                            if (src[s] >= 0) scratch.slots[s] = xs[src[s]];
                            else cpos = s;
                        }
                        const bool minus1 = (i + 1) % 2 != 0;
                        for (const auto& [key, coeff] : comp.terms()) {
                            scratch.slots[cpos] = key;
                            scratch.z = z;
                            if (const Vector* v = a.find_normalized(scratch, sgn)) {
                                bool neg = minus1 != (sgn < 0);
                                val.add_scaled(neg ? -coeff : coeff, *v);
                            }
                        }
                    }
                // second and third sums: slots = xs without X_i
                for (int i = 0; i < p; ++i) {
                    for (int s = 0, t = 0; t < p; ++t)
                        if (t != i) scratch.slots[s++] = xs[t];
                    const bool minus2 = (i + 1) % 2 != 0; // (-1)^i, one-based
                    const Vector& adz = combo.ad[i][z];
                    for (int k = 0; k < d; ++k) {
                        const Scalar& c = adz[k];
                        if (c.is_zero()) continue;
                        scratch.z = k;
                        if (const Vector* v = a.find_normalized(scratch, sgn)) {
                            bool neg = minus2 != (sgn < 0);
                            val.add_scaled(neg ? -c : c, *v);
                        }
                    }
                    scratch.z = z;
                    if (const Vector* v = a.find_normalized(scratch, sgn)) {
                        Vector rv = combo.rho_xi[i].apply(*v);
                        bool neg = !minus2 != (sgn < 0); // (-1)^{i+1}, one-based
                        if (neg) val -= rv; else val += rv;
                    }
                }
                // fourth sum, signs (-1)^{n+p-i+1} with i one-based
                for (int i = 1; i <= n - 1; ++i) {
                    const Vector* av = tail[i - 1];
                    if (av == nullptr) continue;
                    Vector term = combo.rho_tail[i - 1][z].apply(*av);
                    bool neg = ((n + p - i + 1) % 2 != 0) != (tail_sgn[i - 1] < 0);
                    if (neg) val -= term; else val += term;
                }
                if (!val.is_zero()) out.add(CochainKey{xs, z}, val);
            }
        }
        return out;
    }

private:
    struct Combo {
        std::vector<Tuple> xs;
        std::vector<FundamentalObject> comps;   // X_i o X_k for i < k, row-major
        std::vector<std::vector<int>> comp_src; // per pair: slot sources, -1 = composite
        std::vector<Matrix> rho_xi;
        std::vector<std::vector<Vector>> ad;    // [i][z] = ad_{X_i} e_z
        std::vector<std::vector<Matrix>> rho_tail; // [i][z] = rho(xp w/o entry i, z)
    };
    const Representation* rep_;
    int p_;
    std::vector<Combo> combos_;
};

inline Cochain coboundary(const Representation& rep, const Cochain& a) {
    return CoboundaryOp(rep, a.degree()).apply(a);
}

// d(d a) = 0 for every delta cochain of degree p (one basis key, one basis
// value of V).  This pins the sign conventions above against the structure.
inline Report check_d_squared(const Representation& rep, int p) {
    Report report("d-squared-p" + std::to_string(p));
    const NLieAlgebra& g = rep.algebra();
    const int d = g.dim();
    auto wedges = increasing_tuples(d, g.arity() - 1);
    std::vector<std::vector<Tuple>> slot_combos{{}};
    for (int s = 1; s < p; ++s) {
        std::vector<std::vector<Tuple>> next;
        for (const auto& combo : slot_combos)
            for (const Tuple& w : wedges) {
                auto c = combo;
                c.push_back(w);
                next.push_back(std::move(c));
            }
        slot_combos = std::move(next);
    }
    CoboundaryOp inner(rep, p), outer(rep, p + 1);
    for (const auto& slots : slot_combos) {
        for (int z = 0; z < d; ++z) {
            for (int v = 0; v < rep.vdim(); ++v) {
                Cochain c(p, g, rep.vdim());
                c.add(CochainKey{slots, z}, Vector::basis(rep.vdim(), v, g.field()));
                Cochain dd = outer.apply(inner.apply(c));
                if (!dd.is_zero()) {
                    report.fail("delta cochain at " +
                                    cochain_key_to_string(CochainKey{slots, z}) + " -> v" +
                                    std::to_string(v + 1),
                                "d(d a) has " + std::to_string(dd.values().size()) +
                                    " nonzero values, first at " +
                                    cochain_key_to_string(dd.values().begin()->first));
                    if (report.full()) return report;
                }
            }
        }
    }
    return report;
}

// Nijenhuis-Richardson-style bracket of two n-ary cochains (adjoint
// coefficients), a degree-3 cochain:
// [a,b](X,Y,z) = a(X,b(Y,z)) - a(Y,b(X,z)) + b(X,a(Y,z)) - b(Y,a(X,z))
//              - a(b(X,.) o Y, z) - b(a(X,.) o Y, z)
// where (b(X,.) o Y) = sum_k y_1 ^ ... ^ b(X,y_k) ^ ... ^ y_{n-1}.
inline Cochain nr_bracket(const NLieAlgebra& g, const Cochain& a, const Cochain& b) {
    if (a.degree() != 2 || b.degree() != 2)
        throw DegreeMismatch("nr_bracket expects n-ary (degree-2) cochains");
    if (a.vdim() != g.dim() || b.vdim() != g.dim())
        throw DimensionMismatch("nr_bracket needs adjoint-valued cochains");
    const int d = g.dim(), n = g.arity();
    Cochain out(3, g, g.dim());
    auto wedges = increasing_tuples(d, n - 1);

    auto hook = [&](const Cochain& c, const Tuple& x, const Tuple& y) {
        // c(x,.) o y as a fundamental object
        FundamentalObject fo(d, n - 1, g.field());
        for (std::size_t k = 0; k < y.size(); ++k) {
            Vector w = c.eval_basis({x}, y[k]);
            for (int m = 0; m < d; ++m)
                if (!w[m].is_zero()) fo.add_term(replace_at(y, k, m), w[m]);
        }
        return fo;
    };
    auto eval_fo = [&](const Cochain& c, const FundamentalObject& fo, int z) {
        Vector out_v(d, g.field());
        for (const auto& [key, coeff] : fo.terms())
            out_v.add_scaled(coeff, c.eval_basis({key}, z));
        return out_v;
    };

    for (const Tuple& x : wedges)
        for (const Tuple& y : wedges)
            for (int z = 0; z < d; ++z) {
                Vector val = a.eval_vec({x}, b.eval_basis({y}, z));
                val -= a.eval_vec({y}, b.eval_basis({x}, z));
                val += b.eval_vec({x}, a.eval_basis({y}, z));
                val -= b.eval_vec({y}, a.eval_basis({x}, z));
                val -= eval_fo(a, hook(b, x, y), z);
                val -= eval_fo(b, hook(a, x, y), z);
                out.add(CochainKey{{x, y}, z}, val);
            }
    return out;
}

} // namespace nlie
