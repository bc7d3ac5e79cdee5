#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace coalign {

// Modulus q of the ring Z/qZ, q >= 2.
class Modulus {
public:
    explicit Modulus(std::int64_t q);
    std::int64_t value() const { return q_; }
    friend bool operator==(const Modulus&, const Modulus&) = default;

private:
    std::int64_t q_;
};

// An element of Z/qZ, kept reduced to [0, q).  The constructor accepts
// any integer and reduces it.  Residues of different moduli never mix:
// arithmetic across moduli throws std::logic_error before computing.
class Residue {
public:
    Residue(std::int64_t value, Modulus m);
    std::int64_t value() const { return v_; }
    Modulus modulus() const { return m_; }

    friend Residue operator+(Residue a, Residue b);
    friend Residue operator-(Residue a, Residue b);
    friend Residue operator*(Residue a, Residue b);
    friend bool operator==(const Residue&, const Residue&) = default;

private:
    Modulus m_;
    std::int64_t v_;
};

// Solves a*x + b*y = gcd(a, b) for non-negative a, b (not both zero).
struct EuclidResult {
    std::int64_t gcd;
    std::int64_t x;
    std::int64_t y;
};
EuclidResult extended_euclid(std::int64_t a, std::int64_t b);

// b with a*b == 1 (mod q); present iff gcd(a, q) == 1.
std::optional<Residue> inverse(Residue a);

bool is_unit(Residue a);

// All x with w*x == r (mod q), in ascending value order.  Empty iff
// gcd(w, q) does not divide r; otherwise exactly gcd(w, q) solutions.
std::vector<Residue> solve_linear(Residue w, Residue r);

}  // namespace coalign
