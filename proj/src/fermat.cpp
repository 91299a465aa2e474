#include "homology/fermat.hpp"

#include "homology/signature.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace homology {

FermatType::FermatType(Int k, std::size_t n) : k_(std::move(k)), n_(n)
{
    if (k_ < 2 || n_ < 2) {
        throw std::invalid_argument("FermatType: need k >= 2 and n >= 2");
    }
    if ((k_ - 1) * Int(n_ - 1) <= 2) {
        std::ostringstream os;
        os << "FermatType: (k-1)(n-1) must exceed 2, got k=" << k_ << ", n=" << n_;
        throw std::invalid_argument(os.str());
    }
}

ExponentVector::ExponentVector(std::vector<Int> coords, Int modulus)
    : coords_(std::move(coords)), modulus_(std::move(modulus))
{
    if (modulus_ < 2) throw std::invalid_argument("ExponentVector: modulus must be >= 2");
    if (coords_.empty()) throw std::invalid_argument("ExponentVector: empty coordinate list");
    for (Int &c : coords_) {
        c %= modulus_;
        if (c < 0) c += modulus_;
    }
}

bool ExponentVector::is_zero() const
{
    for (const Int &c : coords_) {
        if (c != 0) return false;
    }
    return true;
}

ExponentVector ExponentVector::plus(const ExponentVector &rhs) const
{
    if (modulus_ != rhs.modulus_ || coords_.size() != rhs.coords_.size()) {
        throw std::invalid_argument("ExponentVector::plus: mismatched shapes or moduli");
    }
    std::vector<Int> out = coords_;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += rhs.coords_[i];
    return ExponentVector(std::move(out), modulus_);
}

ExponentVector ExponentVector::scaled(const Int &factor) const
{
    std::vector<Int> out = coords_;
    for (Int &c : out) c *= factor;
    return ExponentVector(std::move(out), modulus_);
}

ExponentVector ExponentVector::negated() const
{
    return scaled(Int(-1));
}

std::string ExponentVector::str() const
{
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i > 0) os << ", ";
        os << coords_[i];
    }
    os << ") mod " << modulus_;
    return os.str();
}

Int fermat_genus(const FermatType &t)
{
    Int power = 1;
    for (std::size_t i = 0; i + 1 < t.n(); ++i) power *= t.k();
    Rational g = 1 + Rational(power * (Int(t.n() - 1) * (t.k() - 1) - 2), 2);
    if (denominator(g) != 1) {
        throw std::logic_error("fermat_genus: closed formula produced a non-integer");
    }
    Int closed = numerator(g);

    Signature uniform{std::vector<Int>(t.n() + 1, t.k())};
    Int via_cover = homology_genus(uniform);
    if (closed != via_cover) {
        std::ostringstream os;
        os << "fermat_genus: closed formula gives " << closed << " but the uniform signature "
           << uniform.str() << " gives " << via_cover;
        throw std::logic_error(os.str());
    }
    return closed;
}

std::vector<ExponentVector> generators(const FermatType &t)
{
    std::vector<ExponentVector> out;
    out.reserve(t.n() + 1);
    for (std::size_t j = 0; j < t.n(); ++j) {
        std::vector<Int> coords(t.n(), 0);
        coords[j] = 1;
        out.emplace_back(std::move(coords), t.k());
    }
    out.push_back(ExponentVector(std::vector<Int>(t.n(), 1), t.k()).negated());
    return out;
}

std::optional<AxialPower> fixed_point_classification(const FermatType &t, const ExponentVector &v)
{
    if (v.modulus() != t.k() || v.size() != t.n()) {
        throw std::invalid_argument("fixed_point_classification: vector does not live in Z_k^n");
    }
    if (v.is_zero()) return std::nullopt;

    // Multiple of a basis vector: exactly one nonzero coordinate.
    std::size_t nonzero = 0, where = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v.coords()[i] != 0) {
            ++nonzero;
            where = i;
        }
    }
    if (nonzero == 1) return AxialPower{where + 1, v.coords()[where]};

    // Multiple of a_{n+1} = (-1, ..., -1): all coordinates equal and nonzero.
    const Int &c = v.coords()[0];
    for (const Int &x : v.coords()) {
        if (x != c) return std::nullopt;
    }
    return AxialPower{t.n() + 1, t.k() - c};
}

IntMatrix permutation_action(const FermatType &t, const std::vector<std::size_t> &sigma)
{
    const std::size_t n1 = t.n() + 1;
    if (sigma.size() != n1) {
        throw std::invalid_argument("permutation_action: permutation must have length n+1");
    }
    std::vector<bool> seen(n1, false);
    for (std::size_t image : sigma) {
        if (image < 1 || image > n1 || seen[image - 1]) {
            throw std::invalid_argument("permutation_action: not a permutation of {1, ..., n+1}");
        }
        seen[image - 1] = true;
    }

    std::vector<ExponentVector> gens = generators(t);
    IntMatrix m(t.n(), t.n());
    for (std::size_t j = 0; j < t.n(); ++j) {
        const ExponentVector &image = gens[sigma[j] - 1];
        for (std::size_t i = 0; i < t.n(); ++i) m.at(i, j) = image.coords()[i];
    }

    // M must also carry a_{n+1} to its image; this is forced by linearity
    // and the relation a_1 + ... + a_{n+1} = 0, so failure is a bug.
    const ExponentVector &last = gens[t.n()];
    const ExponentVector &expect = gens[sigma[t.n()] - 1];
    for (std::size_t i = 0; i < t.n(); ++i) {
        Int acc = 0;
        for (std::size_t j = 0; j < t.n(); ++j) acc += m.at(i, j) * last.coords()[j];
        acc %= t.k();
        if (acc < 0) acc += t.k();
        if (acc != expect.coords()[i]) {
            throw std::logic_error("permutation_action: image of the last rotation is inconsistent");
        }
    }
    return m;
}

std::string CurveModel::lambda_repr(std::size_t index) const
{
    if (index == 0) return "1";
    if (index > lambdas.size()) {
        throw std::out_of_range("CurveModel::lambda_repr: index " + std::to_string(index));
    }
    const LambdaValue &v = lambdas[index - 1];
    if (const auto *r = std::get_if<Rational>(&v)) {
        std::ostringstream os;
        os << *r;
        return os.str();
    }
    return std::get<std::string>(v);
}

std::vector<std::string> CurveModel::branch_values() const
{
    std::vector<std::string> out = {"inf", "0", "1"};
    for (std::size_t i = 1; i <= lambdas.size(); ++i) out.push_back(lambda_repr(i));
    return out;
}

std::string CurveModel::str() const
{
    std::ostringstream os;
    for (std::size_t e = 0; e < equations.size(); ++e) {
        const CurveEquation &eq = equations[e];
        if (e > 0) os << "\n";
        if (eq.lambda_index != 0) os << "(" << lambda_repr(eq.lambda_index) << ") * ";
        os << "x_" << eq.variables[0] << "^" << degree;
        os << " + x_" << eq.variables[1] << "^" << degree;
        os << " + x_" << eq.variables[2] << "^" << degree << " = 0";
    }
    return os.str();
}

CurveModel curve_model(const FermatType &t, const std::vector<LambdaValue> &lambdas)
{
    if (lambdas.size() != t.n() - 2) {
        throw std::invalid_argument("curve_model: expected " + std::to_string(t.n() - 2) +
                                    " branch values after inf, 0, 1; got " +
                                    std::to_string(lambdas.size()));
    }
    std::set<Rational> seen_rationals;
    std::set<std::string> seen_symbols;
    for (const LambdaValue &v : lambdas) {
        if (const auto *r = std::get_if<Rational>(&v)) {
            if (*r == 0 || *r == 1) {
                throw std::invalid_argument("curve_model: branch values 0 and 1 are already in use");
            }
            if (!seen_rationals.insert(*r).second) {
                throw std::invalid_argument("curve_model: repeated branch value");
            }
        } else {
            const std::string &s = std::get<std::string>(v);
            if (s.empty() || s == "0" || s == "1" || s == "inf") {
                throw std::invalid_argument("curve_model: invalid symbolic branch value '" + s + "'");
            }
            if (!seen_symbols.insert(s).second) {
                throw std::invalid_argument("curve_model: repeated symbolic branch value '" + s + "'");
            }
        }
    }

    CurveModel model;
    model.degree = t.k();
    model.num_variables = t.n() + 1;
    model.lambdas = lambdas;
    for (std::size_t j = 0; j + 1 < t.n(); ++j) {
        model.equations.push_back(CurveEquation{j, {1, 2, j + 3}});
    }
    return model;
}

} // namespace homology
