#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wmk/errors.hpp"

namespace wmk {

// Finite field F_q, q = p^e <= 64. Elements are encoded as integers in
// [0, q): the polynomial c_0 + c_1 w + ... over F_p is encoded as
// sum c_i p^i, so prime-field elements are just residues. The modulus is
// fixed per q for reproducible encodings:
//   F4 : w^2+w+1,  F8 : w^3+w+1,  F9 : w^2+1,  F16 : w^4+w+1.
// Extension fields are provided exactly for q in {4, 8, 9, 16}; prime
// fields for any prime p <= 61.
class Fq {
  public:
    static const Fq& get(unsigned p, unsigned e = 1);

    unsigned p, e, q;

    uint8_t add(uint8_t a, uint8_t b) const { return add_[a * q + b]; }
    uint8_t sub(uint8_t a, uint8_t b) const { return add_[a * q + neg_[b]]; }
    uint8_t neg(uint8_t a) const { return neg_[a]; }
    uint8_t mul(uint8_t a, uint8_t b) const { return mul_[a * q + b]; }
    uint8_t inv(uint8_t a) const;
    uint8_t div(uint8_t a, uint8_t b) const { return mul(a, inv(b)); }
    uint8_t pow(uint8_t a, long long n) const;
    // Frobenius and its inverse (the unique p-th root).
    uint8_t frob(uint8_t a) const { return frob_[a]; }
    uint8_t pth_root(uint8_t a) const { return pthroot_[a]; }
    // Trace to the prime field, returned as an element of F_p (< p).
    uint8_t trace(uint8_t a) const { return trace_[a]; }
    // A fixed multiplicative generator.
    uint8_t generator() const { return gen_; }
    // Primitive l-th root of unity; throws NoRootOfUnity unless l | q-1.
    uint8_t zeta(unsigned l) const;
    // Solves x^p - x = c; nullopt when c is not in the image.
    // (The image is exactly ker(trace).)
    std::optional<uint8_t> artin_schreier_preimage(uint8_t c) const;
    // Canonical representative of c modulo the image of x -> x^p - x.
    uint8_t wp_class_rep(uint8_t c) const;

    std::string elem_str(uint8_t a) const;

    const std::vector<uint8_t>& mul_table() const { return mul_; }

  private:
    Fq(unsigned p, unsigned e);
    std::vector<uint8_t> add_, mul_, neg_, inv_, frob_, pthroot_, trace_;
    std::vector<uint8_t> wp_rep_;
    uint8_t gen_;
};

// Coefficient context for series over F_q (see series.hpp).
struct FqCtx {
    const Fq* F = nullptr;
    using value_type = uint8_t;

    bool operator==(const FqCtx& o) const { return F == o.F; }

    static uint8_t zero() { return 0; }
    uint8_t one() const { return 1; }
    uint8_t add(uint8_t a, uint8_t b) const { return F->add(a, b); }
    uint8_t sub(uint8_t a, uint8_t b) const { return F->sub(a, b); }
    uint8_t neg(uint8_t a) const { return F->neg(a); }
    uint8_t mul(uint8_t a, uint8_t b) const { return F->mul(a, b); }
    uint8_t inv(uint8_t a) const { return F->inv(a); }
    static bool is_zero(uint8_t a) { return a == 0; }
    std::string str(uint8_t a) const { return F->elem_str(a); }

    // c[k] += sum_{i+j==k} a[i] b[j] over the window [k0, k1).
    void convolve(const std::vector<uint8_t>& a, const std::vector<uint8_t>& b,
                  std::vector<uint8_t>& out) const;
};

// Coefficient context for series over Q.
struct QCtx;

}  // namespace wmk
