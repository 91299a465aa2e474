#include "homology/signature.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace homology {

Signature::Signature(std::vector<Int> orders) : orders_(std::move(orders))
{
    if (orders_.size() < 3) {
        throw std::invalid_argument("Signature: need at least 3 cone orders, got " +
                                    std::to_string(orders_.size()));
    }
    for (const Int &k : orders_) {
        if (k < 2) throw std::invalid_argument("Signature: cone orders must be >= 2");
    }
    was_reordered_ = !std::is_sorted(orders_.begin(), orders_.end());
    if (was_reordered_) std::sort(orders_.begin(), orders_.end());
}

std::string Signature::str() const
{
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        if (i > 0) os << ", ";
        os << orders_[i];
    }
    os << ")";
    return os.str();
}

Int signature_lcm(const Signature &sig)
{
    Int l = 1;
    for (const Int &k : sig.orders()) l = int_lcm(l, k);
    return l;
}

MaclachlanCheck maclachlan_check(const Signature &sig)
{
    const auto &ks = sig.orders();
    const Int full = signature_lcm(sig);
    for (std::size_t skip = 0; skip < ks.size(); ++skip) {
        Int partial = 1;
        for (std::size_t j = 0; j < ks.size(); ++j) {
            if (j != skip) partial = int_lcm(partial, ks[j]);
        }
        if (partial != full) return {false, skip + 1};
    }
    return {true, std::nullopt};
}

AbelianGroup homology_group(const Signature &sig)
{
    const auto &ks = sig.orders();
    const std::size_t n1 = ks.size();
    IntMatrix relations(n1 + 1, n1);
    for (std::size_t j = 0; j < n1; ++j) relations.at(0, j) = 1;
    for (std::size_t j = 0; j < n1; ++j) relations.at(j + 1, j) = ks[j];
    return quotient_structure(n1, relations);
}

Int homology_order(const Signature &sig)
{
    Int product = 1;
    for (const Int &k : sig.orders()) product *= k;
    return product / signature_lcm(sig);
}

Int homology_genus(const Signature &sig)
{
    // angle defect sum(1 - 1/k_j) - 2, negated curvature of the base
    Rational excess(-2);
    for (const Int &k : sig.orders()) excess += Rational(k - 1, k);
    if (excess <= 0) {
        const char *kind = (excess == 0) ? "euclidean" : "spherical";
        throw std::domain_error("homology_genus: signature " + sig.str() + " is " + kind +
                                ", not hyperbolic");
    }
    Rational g = 1 + Rational(homology_order(sig)) * excess / 2;
    if (denominator(g) != 1) {
        throw std::domain_error("homology_genus: Riemann-Hurwitz value for " + sig.str() +
                                " is not an integer (lcm condition fails)");
    }
    return numerator(g);
}

HomologyVerdict is_homology_signature(const Signature &sig)
{
    HomologyVerdict v;
    MaclachlanCheck mc = maclachlan_check(sig);
    v.maclachlan_ok = mc.ok;
    v.failing_index = mc.failing_index;
    v.group = homology_group(sig);
    v.group_order = v.group.order();
    if (mc.ok) v.cover_genus = homology_genus(sig);
    return v;
}

bool is_homology_pair(const Signature &sig, const AbelianGroup &candidate)
{
    return homology_group(sig) == candidate;
}

} // namespace homology
