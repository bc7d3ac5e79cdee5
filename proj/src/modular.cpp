#include "coalign/modular.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

namespace coalign {

Modulus::Modulus(std::int64_t q) : q_(q) {
    if (q < 2) throw std::invalid_argument("modulus must be at least 2");
}

Residue::Residue(std::int64_t value, Modulus m) : m_(m) {
    const std::int64_t q = m.value();
    v_ = value % q;
    if (v_ < 0) v_ += q;
}

namespace {

void check_same_modulus(const Residue& a, const Residue& b) {
    if (!(a.modulus() == b.modulus()))
        throw std::logic_error("residues of different moduli must not mix");
}

}  // namespace

Residue operator+(Residue a, Residue b) {
    check_same_modulus(a, b);
    return Residue(a.value() + b.value(), a.modulus());
}

Residue operator-(Residue a, Residue b) {
    check_same_modulus(a, b);
    return Residue(a.value() - b.value(), a.modulus());
}

Residue operator*(Residue a, Residue b) {
    check_same_modulus(a, b);
    return Residue(a.value() * b.value(), a.modulus());
}

EuclidResult extended_euclid(std::int64_t a, std::int64_t b) {
    if (a < 0 || b < 0 || (a == 0 && b == 0))
        throw std::invalid_argument("extended_euclid: arguments must be non-negative, not both zero");
    std::int64_t r0 = a, x0 = 1, y0 = 0;
    std::int64_t r1 = b, x1 = 0, y1 = 1;
    while (r1 != 0) {
        const std::int64_t q = r0 / r1;
        r0 -= q * r1;
        std::swap(r0, r1);
        x0 -= q * x1;
        std::swap(x0, x1);
        y0 -= q * y1;
        std::swap(y0, y1);
    }
    return {r0, x0, y0};
}

std::optional<Residue> inverse(Residue a) {
    const std::int64_t q = a.modulus().value();
    const EuclidResult e = extended_euclid(a.value(), q);
    if (e.gcd != 1) return std::nullopt;
    return Residue(e.x, a.modulus());
}

bool is_unit(Residue a) {
    return std::gcd(a.value(), a.modulus().value()) == 1;
}

std::vector<Residue> solve_linear(Residue w, Residue r) {
    check_same_modulus(w, r);
    const std::int64_t q = w.modulus().value();
    const std::int64_t g = std::gcd(w.value(), q);
    if (r.value() % g != 0) return {};
    // Reduce to a unit coefficient modulo q/g, then lift the g solutions.
    const std::int64_t qg = q / g;
    std::int64_t x0 = 0;
    if (qg > 1) {
        const Modulus mg{qg};
        const Residue wg(w.value() / g, mg);
        const Residue rg(r.value() / g, mg);
        x0 = (*inverse(wg) * rg).value();
    }
    std::vector<Residue> out;
    out.reserve(static_cast<std::size_t>(g));
    for (std::int64_t k = 0; k < g; ++k)
        out.emplace_back(x0 + k * qg, w.modulus());
    return out;
}

}  // namespace coalign
