#include "dporders/divisor.hpp"

#include <charconv>
#include <sstream>

#include "dporders/errors.hpp"

namespace dporders {

std::string rat_to_string(const Rat& r) {
    std::ostringstream out;
    out << r.numerator() << '/' << r.denominator();
    return out.str();
}

namespace {

std::int64_t parse_i64(std::string_view text, const std::string& context) {
    std::int64_t value = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last)
        throw ParseError("bad integer '" + std::string(text) + "' in " + context);
    return value;
}

} // namespace

Rat rat_from_string(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rat(parse_i64(text, "rational"));
    const auto num = parse_i64(std::string_view(text).substr(0, slash), "rational");
    const auto den = parse_i64(std::string_view(text).substr(slash + 1), "rational");
    if (den <= 0) throw ParseError("rational '" + text + "' needs a positive denominator");
    return Rat(num, den);
}

std::string to_string(const BasisTag& tag) {
    if (tag.is_p2()) return "P2";
    return "F" + std::to_string(tag.n);
}

DivisorClass::DivisorClass(BasisTag tag, std::vector<Rat> base_coeffs,
                           std::vector<Rat> exc_coeffs)
    : tag_(tag), base_(std::move(base_coeffs)), exc_(std::move(exc_coeffs)) {
    if (base_.size() != tag_.rank())
        throw DimensionError("base coefficient count " + std::to_string(base_.size()) +
                             " does not match " + dporders::to_string(tag_));
    if (tag_.is_hirzebruch() && tag_.n < 0)
        throw DimensionError("negative Hirzebruch index");
}

DivisorClass DivisorClass::zero(BasisTag tag, std::size_t blowups) {
    return DivisorClass(tag, std::vector<Rat>(tag.rank(), Rat(0)),
                        std::vector<Rat>(blowups, Rat(0)));
}

DivisorClass DivisorClass::p2(Rat d, std::size_t blowups) {
    return DivisorClass(BasisTag::p2(), {d}, std::vector<Rat>(blowups, Rat(0)));
}

DivisorClass DivisorClass::ruled(int n, Rat a, Rat b, std::size_t blowups) {
    return DivisorClass(BasisTag::hirzebruch(n), {a, b},
                        std::vector<Rat>(blowups, Rat(0)));
}

DivisorClass DivisorClass::exceptional(BasisTag tag, std::size_t blowups,
                                       std::size_t index) {
    if (index >= blowups)
        throw DimensionError("exceptional index " + std::to_string(index) +
                             " out of range for " + std::to_string(blowups) + " blowups");
    auto cls = zero(tag, blowups);
    cls.exc_[index] = Rat(1);
    return cls;
}

Rat DivisorClass::base_coeff(std::size_t i) const {
    if (i >= base_.size()) throw DimensionError("base coefficient index out of range");
    return base_[i];
}

Rat DivisorClass::exc_coeff(std::size_t i) const {
    if (i >= exc_.size()) throw DimensionError("exceptional coefficient index out of range");
    return exc_[i];
}

bool DivisorClass::is_zero() const {
    for (const auto& c : base_)
        if (c != Rat(0)) return false;
    for (const auto& c : exc_)
        if (c != Rat(0)) return false;
    return true;
}

bool DivisorClass::integral() const {
    for (const auto& c : base_)
        if (!is_integer(c)) return false;
    for (const auto& c : exc_)
        if (!is_integer(c)) return false;
    return true;
}

DivisorClass DivisorClass::padded(std::size_t blowups) const {
    if (blowups < exc_.size())
        throw LineageError("cannot pad down from " + std::to_string(exc_.size()) +
                           " to " + std::to_string(blowups) + " blowups");
    auto exc = exc_;
    exc.resize(blowups, Rat(0));
    return DivisorClass(tag_, base_, std::move(exc));
}

DivisorClass DivisorClass::truncated(std::size_t blowups) const {
    if (blowups > exc_.size())
        throw LineageError("cannot truncate up from " + std::to_string(exc_.size()) +
                           " to " + std::to_string(blowups) + " blowups");
    auto exc = exc_;
    exc.resize(blowups);
    return DivisorClass(tag_, base_, std::move(exc));
}

namespace {

void require_same_lattice(const DivisorClass& a, const DivisorClass& b) {
    if (a.base() != b.base())
        throw DimensionError("classes on different bases: " + to_string(a.base()) +
                             " vs " + to_string(b.base()));
    if (a.blowup_count() != b.blowup_count())
        throw DimensionError("classes on different blowups: " +
                             std::to_string(a.blowup_count()) + " vs " +
                             std::to_string(b.blowup_count()));
}

} // namespace

DivisorClass& DivisorClass::operator+=(const DivisorClass& rhs) {
    require_same_lattice(*this, rhs);
    for (std::size_t i = 0; i < base_.size(); ++i) base_[i] += rhs.base_[i];
    for (std::size_t i = 0; i < exc_.size(); ++i) exc_[i] += rhs.exc_[i];
    return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& rhs) {
    require_same_lattice(*this, rhs);
    for (std::size_t i = 0; i < base_.size(); ++i) base_[i] -= rhs.base_[i];
    for (std::size_t i = 0; i < exc_.size(); ++i) exc_[i] -= rhs.exc_[i];
    return *this;
}

DivisorClass& DivisorClass::operator*=(const Rat& s) {
    for (auto& c : base_) c *= s;
    for (auto& c : exc_) c *= s;
    return *this;
}

DivisorClass operator-(DivisorClass a) {
    a *= Rat(-1);
    return a;
}

bool DivisorClass::lex_less(const DivisorClass& a, const DivisorClass& b) {
    if (a.tag_.kind != b.tag_.kind) return a.tag_.kind < b.tag_.kind;
    if (a.tag_.n != b.tag_.n) return a.tag_.n < b.tag_.n;
    if (a.base_ != b.base_) return a.base_ < b.base_;
    return a.exc_ < b.exc_;
}

std::string DivisorClass::to_string() const {
    std::ostringstream out;
    out << '[';
    bool first = true;
    for (const auto& c : base_) {
        if (!first) out << ", ";
        out << rat_to_string(c);
        first = false;
    }
    out << " |";
    for (const auto& c : exc_) out << ' ' << rat_to_string(c);
    out << ']';
    return out.str();
}

Rat intersect(const DivisorClass& a, const DivisorClass& b) {
    require_same_lattice(a, b);
    Rat total(0);
    if (a.base().is_p2()) {
        total += a.base_coeffs()[0] * b.base_coeffs()[0]; // H.H = 1
    } else {
        const Rat n(a.base().n);
        const Rat& a0 = a.base_coeffs()[0];
        const Rat& a1 = a.base_coeffs()[1];
        const Rat& b0 = b.base_coeffs()[0];
        const Rat& b1 = b.base_coeffs()[1];
        // C0.C0 = -n, C0.F = 1, F.F = 0
        total += a0 * b0 * -n + a0 * b1 + a1 * b0;
    }
    for (std::size_t i = 0; i < a.blowup_count(); ++i)
        total -= a.exc_coeffs()[i] * b.exc_coeffs()[i];
    return total;
}

} // namespace dporders
