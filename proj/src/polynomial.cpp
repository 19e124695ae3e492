#include "gauth/polynomial.hpp"

#include "gauth/errors.hpp"

namespace gauth {

Polynomial::Polynomial(PrimeField field, std::vector<uint64_t> coefficients)
    : field_(field), coeffs_(std::move(coefficients)) {
    if (coeffs_.empty()) throw FieldError("polynomial needs at least one coefficient");
    for (uint64_t c : coeffs_) {
        if (!field_.canonical(c)) throw FieldError("coefficient out of field range");
    }
}

uint64_t poly_eval(const Polynomial& poly, uint64_t x) {
    const PrimeField& f = poly.field();
    if (!f.canonical(x)) throw FieldError("evaluation point out of field range");
    const auto& c = poly.coefficients();
    uint64_t acc = 0;
    for (size_t i = c.size(); i-- > 0;) {
        acc = f.add(f.mul(acc, x), c[i]);
    }
    return acc;
}

Polynomial sample_polynomial(const PrimeField& field, size_t t, DetRng& rng) {
    if (t == 0) throw FieldError("threshold t must be at least 1");
    std::vector<uint64_t> coeffs(t);
    for (size_t i = 0; i < t; ++i) coeffs[i] = field.sample(rng);
    if (t >= 2) {
        while (coeffs[t - 1] == 0) coeffs[t - 1] = field.sample(rng);
    }
    return Polynomial(field, std::move(coeffs));
}

} // namespace gauth
