#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <string>
#include <string_view>

#include "nlie/error.hpp"

namespace nlie {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// The two ground fields the library computes over. Every algebraic object
// carries one of these tags and mixing them is a hard error, never a coercion.
enum class Field : unsigned char { Q, QI };

inline const char* field_name(Field f) { return f == Field::Q ? "Q" : "Q(i)"; }

inline Field field_from_name(std::string_view s) {
    if (s == "Q") return Field::Q;
    if (s == "Q(i)") return Field::QI;
    throw ParseError("unknown field \"" + std::string(s) + "\"", 0);
}

// Exact element of Q or Q(i).  For Field::Q the imaginary part is identically
// zero (enforced by construction).  Rationals are kept canonical (reduced,
// positive denominator) by the cpp_rational backing.
class Scalar {
public:
    Scalar() : field_(Field::Q) {}
    explicit Scalar(Field f) : field_(f) {}
    Scalar(long v, Field f = Field::Q) : field_(f), re_(v) {}
    Scalar(const Rat& v, Field f = Field::Q) : field_(f), re_(v) {}
    Scalar(const Rat& re, const Rat& im, Field f) : field_(f), re_(re), im_(im) {
        if (f == Field::Q && im_ != 0)
            throw FieldMismatch("imaginary part is not allowed over Q");
    }

    Field field() const { return field_; }
    const Rat& re() const { return re_; }
    const Rat& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }

    Scalar operator-() const { return Scalar(-re_, -im_, field_); }

    Scalar operator+(const Scalar& o) const {
        check(o);
        return Scalar(re_ + o.re_, im_ + o.im_, field_);
    }
    Scalar operator-(const Scalar& o) const {
        check(o);
        return Scalar(re_ - o.re_, im_ - o.im_, field_);
    }
    Scalar operator*(const Scalar& o) const {
        check(o);
        if (field_ == Field::Q) return Scalar(re_ * o.re_, field_);
        return Scalar(re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_, field_);
    }
    Scalar inv() const {
        if (is_zero()) throw DivisionByZero();
        if (field_ == Field::Q) return Scalar(Rat(1) / re_, field_);
        Rat n = re_ * re_ + im_ * im_; // norm, nonzero here
        return Scalar(re_ / n, -im_ / n, field_);
    }
    Scalar operator/(const Scalar& o) const { return *this * o.inv(); }

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const {
        check(o);
        return re_ == o.re_ && im_ == o.im_;
    }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    static Scalar zero(Field f) { return Scalar(f); }
    static Scalar one(Field f) { return Scalar(Rat(1), f); }
    static Scalar i() { return Scalar(Rat(0), Rat(1), Field::QI); }

    // Same value reinterpreted over Q(i); widening only.
    Scalar to_qi() const { return Scalar(re_, im_, Field::QI); }

private:
    void check(const Scalar& o) const {
        if (field_ != o.field_)
            throw FieldMismatch(std::string("cannot combine ") + field_name(field_) +
                                " with " + field_name(o.field_));
    }

    Field field_;
    Rat re_, im_;
};

namespace detail {

inline std::string rat_to_string(const Rat& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

// Recursive-descent reader over the scalar grammar.  Keeps the offset of
// everything it touches so ParseError can point at the exact character.
struct ScalarReader {
    std::string_view s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }
    bool at_end() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() { return pos < s.size() ? s[pos] : '\0'; }

    Int read_digits() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw ParseError("expected digits", start);
        return Int(std::string(s.substr(start, pos - start)));
    }

    // int | int/posint  — denominator must be an unsigned positive literal.
    Rat read_rational() {
        skip_ws();
        bool neg = false;
        if (peek() == '+' || peek() == '-') {
            neg = peek() == '-';
            ++pos;
        }
        Int num = read_digits();
        Int den = 1;
        if (pos < s.size() && s[pos] == '/') {
            ++pos;
            std::size_t den_at = pos;
            if (peek() == '+' || peek() == '-')
                throw ParseError("denominator must be a positive integer", den_at);
            den = read_digits();
            if (den == 0) throw ParseError("denominator is zero", den_at);
        }
        Rat r(num, den);
        return neg ? -r : r;
    }
};

} // namespace detail

// Text form of a scalar:
//   rational            ->  "p" or "p/q"
//   pure imaginary      ->  "p/q" + "i"          (e.g. "2i", "-1/3i")
//   general Q(i) value  ->  "<re>+<im>i" / "<re>-<im>i"
// format_scalar(parse_scalar(s, f)) == canonical form of s, and parsing the
// canonical form reproduces the value bit-exactly.
inline std::string format_scalar(const Scalar& v) {
    using detail::rat_to_string;
    if (v.im() == 0) return rat_to_string(v.re());
    if (v.re() == 0) return rat_to_string(v.im()) + "i";
    std::string s = rat_to_string(v.re());
    if (v.im() > 0) s += "+";
    return s + rat_to_string(v.im()) + "i";
}

inline Scalar parse_scalar(std::string_view text, Field field) {
    detail::ScalarReader rd{text};
    if (rd.at_end()) throw ParseError("empty scalar", 0);
    Rat first = rd.read_rational();
    Rat re = 0, im = 0;
    bool has_im = false;
    rd.skip_ws();
    if (rd.peek() == 'i') {
        ++rd.pos; // pure imaginary, optional sign already folded into `first`
        im = first;
        has_im = true;
    } else if (rd.peek() == '+' || rd.peek() == '-') {
        bool neg = rd.peek() == '-';
        ++rd.pos;
        std::size_t im_at = rd.pos;
        Rat mag = rd.read_rational();
        rd.skip_ws();
        if (rd.peek() != 'i') throw ParseError("expected 'i' after imaginary part", rd.pos);
        ++rd.pos;
        if (mag < 0) throw ParseError("sign of imaginary part given twice", im_at);
        re = first;
        im = neg ? -mag : mag;
        has_im = true;
    } else {
        re = first;
    }
    if (!rd.at_end()) throw ParseError("trailing characters after scalar", rd.pos);
    if (has_im && field == Field::Q && im != 0)
        throw FieldMismatch("imaginary scalar \"" + std::string(text) + "\" over Q");
    return Scalar(re, im, field);
}

} // namespace nlie
