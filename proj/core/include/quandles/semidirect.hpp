#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "quandles/finite_group.hpp"

namespace quandles {

/// An element (g, m) of G x| Z: a base-group index and an unbounded integer.
struct SemiZElement {
    int g = 0;
    long long m = 0;

    bool operator==(const SemiZElement& rhs) const { return g == rhs.g && m == rhs.m; }
};

/// The semidirect product H = G x|_phi Z.
///
/// H is infinite, so no table is ever materialized; only element-level
/// operations exist. The group law is (g,m)*(h,n) = (phi^n(g)h, m+n) and the
/// inverse is (g,m)^-1 = (phi^-m(g^-1), -m). Negative powers of phi go
/// through the precomputed inverse automorphism.
///
/// All operations are pure over immutable state and safe to share.
class SemiZGroup {
public:
    /// Throws std::invalid_argument unless phi is an automorphism of base.
    SemiZGroup(FiniteGroup base, GroupAutomorphism phi);

    SemiZElement identity() const { return {0, 0}; }
    SemiZElement mul(const SemiZElement& a, const SemiZElement& b) const;
    SemiZElement inverse(const SemiZElement& a) const;

    /// y^-1 * x * y, the conjugation quandle operation of H.
    SemiZElement conjugate(const SemiZElement& x, const SemiZElement& y) const;

    /// phi^m(g); |m| applications of phi or its inverse.
    int phi_power(int g, long long m) const;

    const FiniteGroup& base() const { return base_; }
    const GroupAutomorphism& phi() const { return phi_; }
    const GroupAutomorphism& phi_inverse() const { return phi_inverse_; }

private:
    FiniteGroup base_;
    GroupAutomorphism phi_;
    GroupAutomorphism phi_inverse_;
};

struct ExponentDoesNotAnnihilate : std::runtime_error {
    explicit ExponentDoesNotAnnihilate(const std::string& what) : std::runtime_error(what) {}
};

/// The finite quotient G x|_phi (Z/k). Requires phi^k = identity (k need not
/// be minimal). Element (g, m) is encoded as index m*n + g; the identity
/// (0, 0) therefore already sits at index 0.
struct SemiCyclicGroup {
    FiniteGroup base;
    GroupAutomorphism phi;
    int modulus = 1;

    int encode(int g, int m) const { return m * base.order() + g; }
    std::pair<int, int> decode(int index) const {
        return {index % base.order(), index / base.order()};
    }

    /// "(g,m)" strings, one per encoded index.
    std::vector<std::string> element_labels() const;
};

/// Validates phi^k = identity and packages the quotient data. Throws
/// ExponentDoesNotAnnihilate otherwise.
SemiCyclicGroup semi_cyclic(FiniteGroup base, GroupAutomorphism phi, int k);

/// Materializes G x|_phi (Z/k) as a validated multiplication table of order
/// n*k, with the law (g,m)*(h,n) = (phi^n(g)h, m+n mod k) and the encoding of
/// SemiCyclicGroup. Throws ExponentDoesNotAnnihilate if phi^k != identity.
FiniteGroup build_finite_witness(const FiniteGroup& base, const GroupAutomorphism& phi, int k);

} // namespace quandles
