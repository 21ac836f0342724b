/*
   Copyright 2026 The critfact authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/// Exact arithmetic for the three supported coefficient fields: the
/// rationals (GMP-backed), prime fields F_p, and explicit extensions
/// F_p[t]/(m) with m monic irreducible. Contexts are immutable and
/// shareable; elements never mix contexts.

#ifndef CRITFACT_FIELD_HPP
#define CRITFACT_FIELD_HPP

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "critfact/errors.hpp"

namespace critfact {

enum class FieldKind { Rationals, Prime, Ext };

class FieldCtx;
using FieldCtxPtr = std::shared_ptr<const FieldCtx>;

class FieldElem;

class FieldCtx : public std::enable_shared_from_this<FieldCtx> {
public:
    static FieldCtxPtr rationals();
    static FieldCtxPtr prime(long long p);
    // Empty modulus asks for deterministic generation (first irreducible
    // monic degree-k polynomial in lexicographic coefficient order).
    static FieldCtxPtr ext(long long p, int k, std::vector<long long> modulus = {});

    FieldKind kind() const { return kind_; }
    long long characteristic() const { return p_; }
    int ext_degree() const { return k_; }
    const std::vector<long long>& modulus() const { return modulus_; }
    mpz_class cardinality() const;  // 0 for the rationals
    bool is_finite() const { return kind_ != FieldKind::Rationals; }

    FieldCtxPtr prime_subfield() const;

    FieldElem zero() const;
    FieldElem one() const;
    FieldElem from_int(long long n) const;
    FieldElem from_mpq(const mpq_class& q) const;  // rationals only
    FieldElem from_coords(const std::vector<long long>& coords) const;

    // Deterministic element enumeration: 0, 1, -1, 2, -2, ... over Q;
    // 0..p-1 over F_p, then by t-degree over extensions. nullopt once the
    // field is exhausted.
    std::optional<FieldElem> enumerate(const mpz_class& index) const;

    std::string describe() const;  // "q", "p=7", "p=2,k=3,m=t^3+t+1"

    bool same(const FieldCtx& other) const;

private:
    friend class FieldElem;
    FieldCtx() = default;

    FieldKind kind_ = FieldKind::Rationals;
    long long p_ = 0;
    int k_ = 1;
    std::vector<long long> modulus_;  // lowest-degree first, size k+1, monic
};

/// Value tied to a FieldCtx. Rationals live in `q`, finite-field values in
/// `v` (length 1 for prime fields, k for extensions, least degree first).
class FieldElem {
public:
    FieldElem() = default;

    const FieldCtxPtr& ctx() const { return ctx_; }
    bool is_zero() const;
    bool is_one() const;

    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator/(const FieldElem& o) const;
    FieldElem operator-() const;
    FieldElem inv() const;
    FieldElem pow(const mpz_class& e) const;
    bool operator==(const FieldElem& o) const;
    bool operator!=(const FieldElem& o) const { return !(*this == o); }

    FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
    FieldElem& operator-=(const FieldElem& o) { return *this = *this - o; }
    FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }

    // a^p; an automorphism fixing exactly the prime field.
    FieldElem frobenius() const;
    // Coordinates in the power basis {1, t, ..., t^{k-1}} over GF(p).
    std::vector<FieldElem> prime_coords() const;

    const mpq_class& rational() const { return q_; }
    const std::vector<long long>& coords() const { return v_; }

    // Total order matching the enumeration order (0 < 1 < -1 < ...); used
    // only for canonical tie-breaking, not for algebra.
    static int canon_compare(const FieldElem& a, const FieldElem& b);

    std::string to_string() const;

private:
    friend class FieldCtx;
    FieldElem(FieldCtxPtr ctx, mpq_class q) : ctx_(std::move(ctx)), q_(std::move(q)) {}
    FieldElem(FieldCtxPtr ctx, std::vector<long long> v) : ctx_(std::move(ctx)), v_(std::move(v)) {}

    void check_same_ctx(const FieldElem& o) const;

    FieldCtxPtr ctx_;
    mpq_class q_;
    std::vector<long long> v_;
};

inline bool canon_less(const FieldElem& a, const FieldElem& b) { return FieldElem::canon_compare(a, b) < 0; }

}  // namespace critfact

#endif
