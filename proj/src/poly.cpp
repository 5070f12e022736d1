#include "tanalg/poly.hpp"

#include <algorithm>
#include <map>

#include "tanalg/errors.hpp"

namespace tanalg {

static MonomialOrder order_of(const RingPtr& ring) {
    return ring ? ring->order : MonomialOrder::grevlex;
}

Poly Poly::constant(RingPtr ring, Rational c) {
    Poly p(std::move(ring));
    if (!c.is_zero()) {
        if (!p.ring_) throw RingError("constant polynomial needs a ring");
        p.terms_.push_back({Expo(p.ring_->nvars(), 0), std::move(c)});
    }
    return p;
}

Poly Poly::variable(RingPtr ring, int index) {
    if (!ring) throw RingError("variable polynomial needs a ring");
    if (index < 0 || index >= ring->nvars()) throw DomainError("variable index out of range");
    Expo e(ring->nvars(), 0);
    e[index] = 1;
    return monomial(std::move(ring), std::move(e), 1);
}

Poly Poly::monomial(RingPtr ring, Expo e, Rational c) {
    if (!ring) throw RingError("monomial needs a ring");
    if (static_cast<int>(e.size()) != ring->nvars())
        throw RingError("exponent vector length does not match ring");
    Poly p(std::move(ring));
    if (!c.is_zero()) p.terms_.push_back({std::move(e), std::move(c)});
    return p;
}

Poly Poly::from_terms(RingPtr ring, std::vector<Term> terms) {
    if (!ring) throw RingError("from_terms needs a ring");
    MonomialOrder ord = ring->order;
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
        return cmp_mono(a.mono, b.mono, ord) > 0;
    });
    Poly p(std::move(ring));
    for (auto& t : terms) {
        if (static_cast<int>(t.mono.size()) != p.ring_->nvars())
            throw RingError("exponent vector length does not match ring");
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
            p.terms_.back().coeff += t.coeff;
            if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
        } else if (!t.coeff.is_zero()) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

Poly Poly::from_sorted(RingPtr ring, std::vector<Term> terms) {
    Poly p(std::move(ring));
    p.terms_ = std::move(terms);
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && expo_degree(terms_[0].mono) == 0);
}

Rational Poly::constant_coeff() const {
    if (terms_.empty()) return 0;
    const Term& last = terms_.back();
    return expo_degree(last.mono) == 0 ? last.coeff : Rational(0);
}

int Poly::total_degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, expo_degree(t.mono));
    return d;
}

int Poly::degree_in(int var) const {
    int d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono[var]);
    return d;
}

const Term& Poly::leading_term() const {
    if (terms_.empty()) throw DomainError("leading term of the zero polynomial");
    return terms_.front();
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

// Merge of two canonically sorted term lists.
static Poly add_scaled(const Poly& a, const Poly& b, const Rational& scale) {
    const RingPtr& ring = merged_ring(a.ring(), b.ring());
    MonomialOrder ord = order_of(ring);
    Poly out(ring);
    std::vector<Term> terms;
    terms.reserve(a.terms().size() + b.terms().size());
    size_t i = 0, j = 0;
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    while (i < ta.size() || j < tb.size()) {
        if (j == tb.size()) {
            terms.push_back(ta[i++]);
        } else if (i == ta.size()) {
            Term t = tb[j++];
            t.coeff *= scale;
            if (!t.coeff.is_zero()) terms.push_back(std::move(t));
        } else {
            int c = cmp_mono(ta[i].mono, tb[j].mono, ord);
            if (c > 0) {
                terms.push_back(ta[i++]);
            } else if (c < 0) {
                Term t = tb[j++];
                t.coeff *= scale;
                if (!t.coeff.is_zero()) terms.push_back(std::move(t));
            } else {
                Rational coeff = ta[i].coeff + scale * tb[j].coeff;
                if (!coeff.is_zero()) terms.push_back({ta[i].mono, std::move(coeff)});
                ++i;
                ++j;
            }
        }
    }
    return Poly::from_sorted(ring, std::move(terms));
}

// Private fast path: callers guarantee sorted, merged, zero-free terms.
Poly operator+(const Poly& a, const Poly& b) { return add_scaled(a, b, 1); }
Poly operator-(const Poly& a, const Poly& b) { return add_scaled(a, b, -1); }

Poly operator*(const Poly& a, const Poly& b) {
    const RingPtr& ring = merged_ring(a.ring(), b.ring());
    if (a.is_zero() || b.is_zero()) return Poly(ring);
    MonomialOrder ord = order_of(ring);
    auto greater = [&](const Expo& x, const Expo& y) { return cmp_mono(x, y, ord) > 0; };
    std::map<Expo, Rational, decltype(greater)> acc(greater);
    for (const auto& ta : a.terms())
        for (const auto& tb : b.terms()) {
            Expo m = expo_mul(ta.mono, tb.mono);
            auto [it, fresh] = acc.try_emplace(std::move(m), ta.coeff * tb.coeff);
            if (!fresh) it->second += ta.coeff * tb.coeff;
        }
    std::vector<Term> terms;
    terms.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (!c.is_zero()) terms.push_back({m, std::move(c)});
    return Poly::from_sorted(ring, std::move(terms));
}

Poly operator*(const Rational& c, const Poly& f) {
    if (c.is_zero()) return Poly(f.ring());
    return add_scaled(Poly(f.ring()), f, c);
}

Poly partial(const Poly& f, int var) {
    if (!f.ring()) return Poly();
    if (var < 0 || var >= f.ring()->nvars()) throw DomainError("partial: variable index out of range");
    std::vector<Term> terms;
    for (const auto& t : f.terms()) {
        if (t.mono[var] == 0) continue;
        Term d = t;
        d.coeff *= Rational(t.mono[var]);
        d.mono[var] -= 1;
        terms.push_back(std::move(d));
    }
    // differentiation preserves strict descending order
    return Poly::from_sorted(f.ring(), std::move(terms));
}

Poly pow(const Poly& f, int k) {
    if (k < 0) throw DomainError("pow: negative exponent");
    if (!f.ring()) throw RingError("pow needs a ringed polynomial");
    Poly r = Poly::constant(f.ring(), 1);
    Poly base = f;
    for (int e = k; e > 0; e >>= 1) {
        if (e & 1) r = r * base;
        if (e > 1) base = base * base;
    }
    return r;
}

Poly monic(const Poly& f) {
    if (f.is_zero()) return f;
    Rational lc = f.leading_term().coeff;
    if (lc.is_one()) return f;
    return (Rational(1) / lc) * f;
}

Poly substitute(const Poly& f, std::span<const Poly> images, const RingPtr& target) {
    if (f.is_zero()) return Poly(target);
    if (static_cast<int>(images.size()) != f.ring()->nvars())
        throw RingError("substitute: wrong number of images");
    // memoized powers per variable
    std::vector<std::vector<Poly>> powers(images.size());
    auto power = [&](int i, int k) -> const Poly& {
        auto& col = powers[i];
        if (col.empty()) col.push_back(Poly::constant(target, 1));
        while (static_cast<int>(col.size()) <= k) col.push_back(col.back() * images[i]);
        return col[k];
    };
    Poly acc(target);
    for (const auto& t : f.terms()) {
        Poly prod = Poly::constant(target, t.coeff);
        for (size_t i = 0; i < images.size(); ++i)
            if (t.mono[i] > 0) prod = prod * power(static_cast<int>(i), t.mono[i]);
        acc = acc + prod;
    }
    return acc;
}

std::optional<Poly> exact_divide(const Poly& f, const Poly& g) {
    const RingPtr& ring = merged_ring(f.ring(), g.ring());
    if (g.is_zero()) throw DomainError("exact_divide by zero");
    if (f.is_zero()) return Poly(ring);
    const Term& lg = g.leading_term();
    std::vector<Term> qterms;
    Poly r = f;
    while (!r.is_zero()) {
        const Term& lr = r.leading_term();
        if (!expo_divides(lg.mono, lr.mono)) return std::nullopt;
        Term q{expo_div(lr.mono, lg.mono), lr.coeff / lg.coeff};
        r = r - (Poly::monomial(ring, q.mono, q.coeff) * g);
        qterms.push_back(std::move(q));
    }
    return Poly::from_terms(ring, std::move(qterms));
}

// ---- gcd machinery (primitive PRS on a recursive main-variable view) ----

namespace {

// coefficient of x_v^k in f, as a polynomial with x_v-degree 0
Poly coeff_of_power(const Poly& f, int v, int k) {
    std::vector<Term> terms;
    for (const auto& t : f.terms())
        if (t.mono[v] == k) {
            Term c = t;
            c.mono[v] = 0;
            terms.push_back(std::move(c));
        }
    return Poly::from_terms(f.ring(), std::move(terms));
}

Poly mul_var_pow(const Poly& f, int v, int k) {
    std::vector<Term> terms = f.terms();
    for (auto& t : terms) t.mono[v] += k;
    return Poly::from_sorted(f.ring(), std::move(terms));
}

Poly gcd_impl(const Poly& a, const Poly& b);

Poly content_in(const Poly& f, int v) {
    Poly c;
    for (int k = 0; k <= f.degree_in(v); ++k) {
        Poly ck = coeff_of_power(f, v, k);
        if (ck.is_zero()) continue;
        c = c.is_zero() ? ck : gcd_impl(c, ck);
        if (c.is_constant()) break;
    }
    return monic(c);
}

Poly primitive_part(const Poly& f, int v) {
    if (f.is_zero()) return f;
    Poly c = content_in(f, v);
    auto q = exact_divide(f, c);
    return *q; // content divides by construction
}

// pseudo-remainder of a by b with respect to x_v; deg_v(result) < deg_v(b)
Poly prem(const Poly& a, const Poly& b, int v) {
    Poly r = a;
    int db = b.degree_in(v);
    Poly lcb = coeff_of_power(b, v, db);
    while (!r.is_zero() && r.degree_in(v) >= db) {
        int dr = r.degree_in(v);
        Poly lcr = coeff_of_power(r, v, dr);
        r = lcb * r - mul_var_pow(lcr * b, v, dr - db);
    }
    return r;
}

Poly gcd_impl(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const RingPtr& ring = merged_ring(a.ring(), b.ring());
    int v = -1;
    for (int i = ring->nvars(); i-- > 0;)
        if (a.degree_in(i) > 0 || b.degree_in(i) > 0) {
            v = i;
            break;
        }
    if (v < 0) return Poly::constant(ring, 1); // nonzero constants
    if (a.degree_in(v) == 0) return gcd_impl(a, content_in(b, v));
    if (b.degree_in(v) == 0) return gcd_impl(content_in(a, v), b);

    Poly ca = content_in(a, v), cb = content_in(b, v);
    Poly c = gcd_impl(ca, cb);
    Poly A = *exact_divide(a, ca);
    Poly B = *exact_divide(b, cb);
    if (A.degree_in(v) < B.degree_in(v)) std::swap(A, B);
    while (!B.is_zero()) {
        Poly r = prem(A, B, v);
        A = std::move(B);
        B = r.is_zero() ? Poly(ring) : primitive_part(r, v);
    }
    return c * primitive_part(A, v);
}

} // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
    return monic(gcd_impl(a, b));
}

Poly squarefree_part(const Poly& f) {
    if (f.is_zero()) throw DomainError("squarefree part of zero");
    if (f.is_constant()) return Poly::constant(f.ring(), 1);
    Poly g = f;
    for (int v = 0; v < f.ring()->nvars(); ++v) {
        if (f.degree_in(v) == 0) continue;
        g = poly_gcd(g, partial(f, v));
        if (g.is_constant()) break;
    }
    return monic(*exact_divide(f, g));
}

} // namespace tanalg
