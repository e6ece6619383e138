#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dporders/rational.hpp"

namespace dporders {

/// Identifies the base surface of a lattice basis: the projective plane or a
/// Hirzebruch surface F_n (F_0 = P1 x P1).
struct BasisTag {
    enum class Kind { P2, Hirzebruch };

    Kind kind = Kind::P2;
    int n = 0; // Hirzebruch index, 0..2 in every workflow here

    static BasisTag p2() { return BasisTag{Kind::P2, 0}; }
    static BasisTag hirzebruch(int n) { return BasisTag{Kind::Hirzebruch, n}; }

    bool is_p2() const { return kind == Kind::P2; }
    bool is_hirzebruch() const { return kind == Kind::Hirzebruch; }

    /// Number of base-lattice coordinates: 1 for P2 (H), 2 for F_n (C0, F).
    std::size_t rank() const { return is_p2() ? 1 : 2; }

    bool operator==(const BasisTag&) const = default;
};

std::string to_string(const BasisTag& tag);

/// A divisor class in the total-transform basis of an iterated blowup:
/// base coordinates (H, or C0 and F) followed by one coordinate per blowup
/// point in creation order. The intersection form is diagonal on the
/// exceptional part: E_i . E_j = -delta_ij and E_i is orthogonal to every
/// base class.
class DivisorClass {
public:
    DivisorClass(BasisTag tag, std::vector<Rat> base_coeffs,
                 std::vector<Rat> exc_coeffs = {});

    static DivisorClass zero(BasisTag tag, std::size_t blowups = 0);
    /// d * H on P2, padded to `blowups` exceptional coordinates.
    static DivisorClass p2(Rat d, std::size_t blowups = 0);
    /// a * C0 + b * F on F_n.
    static DivisorClass ruled(int n, Rat a, Rat b, std::size_t blowups = 0);
    /// The total-transform exceptional E_index (0-based creation index).
    static DivisorClass exceptional(BasisTag tag, std::size_t blowups,
                                    std::size_t index);

    const BasisTag& base() const { return tag_; }
    std::size_t blowup_count() const { return exc_.size(); }

    Rat base_coeff(std::size_t i) const;
    Rat exc_coeff(std::size_t i) const;
    const std::vector<Rat>& base_coeffs() const { return base_; }
    const std::vector<Rat>& exc_coeffs() const { return exc_; }

    bool is_zero() const;
    bool integral() const;

    /// Same class on a surface with `blowups` points (>= current); new
    /// coordinates are zero. This is the total transform.
    DivisorClass padded(std::size_t blowups) const;
    /// Drops trailing exceptional coordinates down to `blowups` (<= current).
    DivisorClass truncated(std::size_t blowups) const;

    DivisorClass& operator+=(const DivisorClass& rhs);
    DivisorClass& operator-=(const DivisorClass& rhs);
    DivisorClass& operator*=(const Rat& s);
    friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
    friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
    friend DivisorClass operator*(const Rat& s, DivisorClass a) { return a *= s; }
    friend DivisorClass operator-(DivisorClass a);

    bool operator==(const DivisorClass&) const = default;

    /// Lexicographic order on (base kind, n, base coeffs, exc coeffs); used
    /// for deterministic generator ordering and MMP tie-breaks.
    static bool lex_less(const DivisorClass& a, const DivisorClass& b);

    std::string to_string() const;

private:
    BasisTag tag_{};
    std::vector<Rat> base_; // length tag_.rank()
    std::vector<Rat> exc_;
};

/// Exact intersection number. Throws DimensionError unless both classes share
/// the base tag and the blowup count.
Rat intersect(const DivisorClass& a, const DivisorClass& b);

} // namespace dporders
