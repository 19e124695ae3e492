#include "gauth/lagrange.hpp"

#include <string>

#include "gauth/errors.hpp"

namespace gauth {

namespace {

void check_eval_points(const PrimeField& field, std::span<const uint64_t> xs) {
    for (size_t a = 0; a < xs.size(); ++a) {
        if (xs[a] == 0) throw DegenerateEvalPointError("evaluation point zero is reserved for the secret");
        if (!field.canonical(xs[a])) throw DegenerateEvalPointError("evaluation point out of field range");
        for (size_t b = a + 1; b < xs.size(); ++b) {
            if (xs[a] == xs[b])
                throw DegenerateEvalPointError("duplicate evaluation point " + std::to_string(xs[a]));
        }
    }
}

} // namespace

uint64_t lagrange_coefficient_at_zero(const PrimeField& field, std::span<const uint64_t> xs, size_t i) {
    if (i >= xs.size()) throw DegenerateEvalPointError("lagrange index out of range");
    check_eval_points(field, xs);
    uint64_t num = 1, den = 1;
    for (size_t r = 0; r < xs.size(); ++r) {
        if (r == i) continue;
        num = field.mul(num, field.neg(xs[r]));
        den = field.mul(den, field.sub(xs[i], xs[r]));
    }
    return field.mul(num, field.inv(den));
}

std::vector<uint64_t> lagrange_coefficients_at_zero(const PrimeField& field, std::span<const uint64_t> xs) {
    check_eval_points(field, xs);
    std::vector<uint64_t> out(xs.size());
    for (size_t i = 0; i < xs.size(); ++i) {
        uint64_t num = 1, den = 1;
        for (size_t r = 0; r < xs.size(); ++r) {
            if (r == i) continue;
            num = field.mul(num, field.neg(xs[r]));
            den = field.mul(den, field.sub(xs[i], xs[r]));
        }
        out[i] = field.mul(num, field.inv(den));
    }
    return out;
}

uint64_t interpolate_secret(const PrimeField& field,
                            std::span<const std::pair<uint64_t, uint64_t>> points) {
    if (points.empty()) throw DegenerateEvalPointError("interpolation needs at least one point");
    std::vector<uint64_t> xs(points.size());
    for (size_t i = 0; i < points.size(); ++i) xs[i] = points[i].first;
    auto lambda = lagrange_coefficients_at_zero(field, xs);
    uint64_t acc = 0;
    for (size_t i = 0; i < points.size(); ++i) {
        acc = field.add(acc, field.mul(lambda[i], points[i].second));
    }
    return acc;
}

Polynomial interpolate_polynomial(const PrimeField& field,
                                  std::span<const std::pair<uint64_t, uint64_t>> points) {
    if (points.empty()) throw DegenerateEvalPointError("interpolation needs at least one point");
    std::vector<uint64_t> xs(points.size());
    for (size_t i = 0; i < points.size(); ++i) xs[i] = points[i].first;
    check_eval_points(field, xs);

    size_t n = points.size();
    std::vector<uint64_t> coeffs(n, 0);
    std::vector<uint64_t> basis;
    for (size_t i = 0; i < n; ++i) {
        // Expand ell_i(x) = prod_{r != i} (x - x_r) / (x_i - x_r).
        basis.assign(1, 1);
        uint64_t den = 1;
        for (size_t r = 0; r < n; ++r) {
            if (r == i) continue;
            basis.push_back(0);
            for (size_t k = basis.size() - 1; k > 0; --k) {
                basis[k] = field.add(field.mul(basis[k], field.neg(xs[r])), basis[k - 1]);
            }
            basis[0] = field.mul(basis[0], field.neg(xs[r]));
            den = field.mul(den, field.sub(xs[i], xs[r]));
        }
        uint64_t scale = field.mul(points[i].second, field.inv(den));
        for (size_t k = 0; k < n; ++k) {
            coeffs[k] = field.add(coeffs[k], field.mul(basis[k], scale));
        }
    }
    return Polynomial(field, std::move(coeffs));
}

} // namespace gauth
