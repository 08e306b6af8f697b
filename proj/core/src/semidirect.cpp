#include "quandles/semidirect.hpp"

#include <string>

namespace quandles {

SemiZGroup::SemiZGroup(FiniteGroup base, GroupAutomorphism phi)
    : base_(std::move(base)), phi_(std::move(phi)) {
    if (!is_automorphism(base_, phi_.map))
        throw std::invalid_argument("phi is not an automorphism of the base group");
    phi_inverse_ = quandles::inverse(phi_);
}

int SemiZGroup::phi_power(int g, long long m) const {
    const GroupAutomorphism& step = m >= 0 ? phi_ : phi_inverse_;
    long long count = m >= 0 ? m : -m;
    for (long long i = 0; i < count; ++i)
        g = step.apply(g);
    return g;
}

SemiZElement SemiZGroup::mul(const SemiZElement& a, const SemiZElement& b) const {
    // (g,m)*(h,n) = (phi^n(g)h, m+n)
    return {base_.mul(phi_power(a.g, b.m), b.g), a.m + b.m};
}

SemiZElement SemiZGroup::inverse(const SemiZElement& a) const {
    // (g,m)^-1 = (phi^-m(g^-1), -m)
    return {phi_power(base_.inv(a.g), -a.m), -a.m};
}

SemiZElement SemiZGroup::conjugate(const SemiZElement& x, const SemiZElement& y) const {
    return mul(mul(inverse(y), x), y);
}

std::vector<std::string> SemiCyclicGroup::element_labels() const {
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(base.order()) * modulus);
    for (int m = 0; m < modulus; ++m)
        for (int g = 0; g < base.order(); ++g)
            labels.push_back("(" + std::to_string(g) + "," + std::to_string(m) + ")");
    return labels;
}

SemiCyclicGroup semi_cyclic(FiniteGroup base, GroupAutomorphism phi, int k) {
    if (k < 1)
        throw std::invalid_argument("modulus must be positive");
    if (!is_automorphism(base, phi.map))
        throw std::invalid_argument("phi is not an automorphism of the base group");
    Perm power = phi.map;
    for (int i = 1; i < k; ++i)
        power = perm_compose(power, phi.map);
    if (!perm_is_identity(power))
        throw ExponentDoesNotAnnihilate("phi^" + std::to_string(k) + " is not the identity");
    return SemiCyclicGroup{std::move(base), std::move(phi), k};
}

FiniteGroup build_finite_witness(const FiniteGroup& base, const GroupAutomorphism& phi, int k) {
    SemiCyclicGroup w = semi_cyclic(base, phi, k);
    const int n = base.order();
    const int order = n * k;

    // phi^m for m in 0..k-1
    std::vector<Perm> phi_pow(k);
    phi_pow[0] = perm_identity(n);
    for (int m = 1; m < k; ++m)
        phi_pow[m] = perm_compose(phi_pow[m - 1], phi.map);

    Table t(order, std::vector<int>(order));
    for (int m = 0; m < k; ++m)
        for (int g = 0; g < n; ++g)
            for (int mm = 0; mm < k; ++mm)
                for (int h = 0; h < n; ++h)
                    t[w.encode(g, m)][w.encode(h, mm)] =
                        w.encode(base.mul(phi_pow[mm][g], h), (m + mm) % k);
    // The identity (0,0) encodes to index 0, so check_group will not relabel.
    return check_group(std::move(t));
}

} // namespace quandles
