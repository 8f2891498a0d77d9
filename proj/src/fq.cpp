#include "wmk/fq.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <memory>
#include <mutex>

namespace wmk {

namespace {

bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Fixed irreducible moduli, little-endian coefficient lists (constant first).
std::vector<uint8_t> modulus_for(unsigned p, unsigned e) {
    if (p == 2 && e == 2) return {1, 1, 1};        // w^2+w+1
    if (p == 2 && e == 3) return {1, 1, 0, 1};     // w^3+w+1
    if (p == 3 && e == 2) return {1, 0, 1};        // w^2+1
    if (p == 2 && e == 4) return {1, 1, 0, 0, 1};  // w^4+w+1
    throw Error(Error::Kind::Validation,
                "no fixed modulus for F_" + std::to_string(p) + "^" + std::to_string(e));
}

std::vector<uint8_t> digits_of(unsigned v, unsigned p, unsigned e) {
    std::vector<uint8_t> d(e, 0);
    for (unsigned i = 0; i < e; ++i) {
        d[i] = v % p;
        v /= p;
    }
    return d;
}

unsigned value_of(const std::vector<uint8_t>& d, unsigned p) {
    unsigned v = 0;
    for (size_t i = d.size(); i-- > 0;) v = v * p + d[i];
    return v;
}

}  // namespace

Fq::Fq(unsigned p_, unsigned e_) : p(p_), e(e_) {
    if (!is_prime(p)) throw Error(Error::Kind::Validation, "characteristic must be prime");
    unsigned long long qq = 1;
    for (unsigned i = 0; i < e; ++i) qq *= p;
    if (qq > 64) throw Error(Error::Kind::Validation, "field size > 64 not supported");
    q = (unsigned)qq;
    if (e > 1) (void)modulus_for(p, e);  // validated against the fixed table

    add_.assign(q * q, 0);
    mul_.assign(q * q, 0);
    neg_.assign(q, 0);
    inv_.assign(q, 0);
    frob_.assign(q, 0);
    pthroot_.assign(q, 0);
    trace_.assign(q, 0);
    wp_rep_.assign(q, 0);

    auto addv = [&](unsigned a, unsigned b) {
        auto da = digits_of(a, p, e), db = digits_of(b, p, e);
        for (unsigned i = 0; i < e; ++i) da[i] = (da[i] + db[i]) % p;
        return value_of(da, p);
    };
    auto mulv = [&](unsigned a, unsigned b) {
        auto da = digits_of(a, p, e), db = digits_of(b, p, e);
        std::vector<unsigned> prod(2 * e - 1, 0);
        for (unsigned i = 0; i < e; ++i)
            for (unsigned j = 0; j < e; ++j) prod[i + j] += da[i] * db[j];
        if (e > 1) {
            auto mod = modulus_for(p, e);  // monic degree e
            for (size_t k = prod.size(); k-- > e;) {
                unsigned c = prod[k] % p;
                if (!c) continue;
                // x^k = x^{k-e} * (x^e) and x^e = -(lower part of modulus)
                for (unsigned i = 0; i < e; ++i)
                    prod[k - e + i] += c * (p - mod[i] % p) % p * 1u;
                prod[k] = 0;
            }
        }
        std::vector<uint8_t> out(e);
        for (unsigned i = 0; i < e; ++i) out[i] = prod[i] % p;
        return value_of(out, p);
    };

    for (unsigned a = 0; a < q; ++a)
        for (unsigned b = 0; b < q; ++b) {
            add_[a * q + b] = (uint8_t)addv(a, b);
            mul_[a * q + b] = (uint8_t)mulv(a, b);
        }
    for (unsigned a = 0; a < q; ++a) {
        for (unsigned b = 0; b < q; ++b) {
            if (add_[a * q + b] == 0) neg_[a] = (uint8_t)b;
            if (mul_[a * q + b] == 1) inv_[a] = (uint8_t)b;
        }
        uint8_t f = (uint8_t)a;
        for (unsigned i = 1; i < p; ++i) f = mul_[f * q + a];  // a^p
        frob_[a] = f;
    }
    for (unsigned a = 0; a < q; ++a) pthroot_[frob_[a]] = (uint8_t)a;
    for (unsigned a = 0; a < q; ++a) {
        uint8_t s = 0, x = (uint8_t)a;
        for (unsigned i = 0; i < e; ++i) {
            s = add_[s * q + x];
            x = frob_[x];
        }
        trace_[a] = s;
    }

    gen_ = 1;
    for (unsigned g = 2; g < q; ++g) {
        unsigned ord = 1;
        uint8_t x = (uint8_t)g;
        while (x != 1) {
            x = mul_[x * q + g];
            ++ord;
        }
        if (ord == q - 1) {
            gen_ = (uint8_t)g;
            break;
        }
    }

    // Canonical representatives modulo the image of x -> x^p - x: the image
    // is ker(trace), and {i*c : 0 <= i < p} for any c with trace(c) != 0 is a
    // full transversal. Pick the smallest-encoded such c.
    uint8_t c0 = 0;
    for (unsigned a = 1; a < q; ++a)
        if (trace_[a] != 0) {
            c0 = (uint8_t)a;
            break;
        }
    for (unsigned a = 0; a < q; ++a) {
        uint8_t rep = 0, ic = 0;
        for (unsigned i = 0; i < p; ++i) {
            // a - i*c0 in the image?
            uint8_t dcand = add_[a * q + neg_[ic]];
            if (trace_[dcand] == 0) {
                rep = ic;
                break;
            }
            ic = add_[ic * q + c0];
        }
        wp_rep_[a] = rep;
    }
}

const Fq& Fq::get(unsigned p, unsigned e) {
    static std::map<std::pair<unsigned, unsigned>, std::unique_ptr<Fq>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(p, e);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, std::unique_ptr<Fq>(new Fq(p, e))).first;
    return *it->second;
}

uint8_t Fq::inv(uint8_t a) const {
    if (a == 0) throw Error(Error::Kind::Validation, "division by zero in F_q");
    return inv_[a];
}

uint8_t Fq::pow(uint8_t a, long long n) const {
    if (n < 0) {
        a = inv(a);
        n = -n;
    }
    uint8_t r = 1, b = a;
    while (n) {
        if (n & 1) r = mul(r, b);
        b = mul(b, b);
        n >>= 1;
    }
    return r;
}

uint8_t Fq::zeta(unsigned l) const {
    if (l == 0 || (q - 1) % l != 0)
        throw NoRootOfUnity("F_" + std::to_string(q) + " has no primitive " + std::to_string(l) +
                            "-th root of unity");
    return pow(gen_, (q - 1) / l);
}

std::optional<uint8_t> Fq::artin_schreier_preimage(uint8_t c) const {
    for (unsigned x = 0; x < q; ++x) {
        uint8_t v = sub(frob_[x], (uint8_t)x);
        if (v == c) return (uint8_t)x;
    }
    return std::nullopt;
}

uint8_t Fq::wp_class_rep(uint8_t c) const { return wp_rep_[c]; }

std::string Fq::elem_str(uint8_t a) const {
    if (e == 1) return std::to_string((unsigned)a);
    return "[" + std::to_string((unsigned)a) + "]";
}

void FqCtx::convolve(const std::vector<uint8_t>& a, const std::vector<uint8_t>& b,
                     std::vector<uint8_t>& out) const {
    const size_t na = a.size(), nb = b.size(), no = out.size();
    if (!na || !nb || !no) return;
    const unsigned q = F->q, p = F->p;
    const uint8_t* mt = F->mul_table().data();
    if (F->e == 1) {
        // prime field: delayed reduction
        for (size_t k = 0; k < no; ++k) {
            uint64_t acc = 0;
            size_t ilo = k >= nb - 1 ? k - (nb - 1) : 0;
            size_t ihi = std::min(na - 1, k);
            for (size_t i = ilo; i <= ihi; ++i) acc += (uint64_t)a[i] * b[k - i];
            out[k] = (uint8_t)(acc % p);
        }
    } else {
        // table field: products via table, additive accumulation in the field
        for (size_t k = 0; k < no; ++k) {
            uint8_t acc = 0;
            size_t ilo = k >= nb - 1 ? k - (nb - 1) : 0;
            size_t ihi = std::min(na - 1, k);
            for (size_t i = ilo; i <= ihi; ++i) acc = F->add(acc, mt[a[i] * q + b[k - i]]);
            out[k] = acc;
        }
    }
}

}  // namespace wmk
