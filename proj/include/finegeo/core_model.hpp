#pragma once

// Exact-arithmetic domain types shared by every module: Boolean vectors,
// OV instances, rational scalars, points, planar curves and squared
// distances. No floating point is used in any comparison.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace finegeo {

/// Raised for malformed input (dimension mismatch, empty sets, bad files).
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Fixed-length vector over {0,1}, packed 64 bits per word.
class BitVector {
public:
    explicit BitVector(std::size_t dim);
    BitVector(std::initializer_list<int> bits);
    explicit BitVector(std::span<const std::uint8_t> bits);

    std::size_t dim() const { return dim_; }
    bool get(std::size_t i) const;
    void set(std::size_t i, bool value);
    std::size_t popcount() const;
    std::span<const std::uint64_t> words() const { return words_; }

    std::string to_string() const;

    friend bool operator==(const BitVector&, const BitVector&) = default;

private:
    std::size_t dim_;
    std::vector<std::uint64_t> words_;
};

/// Number of coordinates where both vectors are 1. Zero iff orthogonal.
std::size_t inner_product(const BitVector& a, const BitVector& b);

/// Two vector sets over a common dimension. The sets may differ in size.
class OvInstance {
public:
    OvInstance(std::vector<BitVector> a, std::vector<BitVector> b);

    const std::vector<BitVector>& a() const { return a_; }
    const std::vector<BitVector>& b() const { return b_; }
    std::size_t dim() const { return dim_; }

    friend bool operator==(const OvInstance&, const OvInstance&) = default;

private:
    std::vector<BitVector> a_;
    std::vector<BitVector> b_;
    std::size_t dim_;
};

/// Exact rational in lowest terms with positive denominator.
class Rat {
public:
    Rat() = default;
    Rat(long value) : q_(value) {}                  // NOLINT(google-explicit-constructor)
    Rat(int value) : q_(static_cast<long>(value)) {} // NOLINT(google-explicit-constructor)
    Rat(long num, long den);
    explicit Rat(mpq_class q);

    /// Parses "num/den" or "num" (arbitrary size). Throws InvalidInput.
    static Rat parse(std::string_view text);

    const mpq_class& raw() const { return q_; }
    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }
    int sign() const { return sgn(q_); }

    /// Always "num/den", denominator printed even when 1.
    std::string to_string() const;

    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat x, const Rat& y) { return x += y; }
    friend Rat operator-(Rat x, const Rat& y) { return x -= y; }
    friend Rat operator*(Rat x, const Rat& y) { return x *= y; }
    friend Rat operator/(Rat x, const Rat& y) { return x /= y; }
    friend Rat operator-(const Rat& x) { return Rat(mpq_class(-x.q_)); }

    friend bool operator==(const Rat& x, const Rat& y) { return x.q_ == y.q_; }
    friend std::strong_ordering operator<=>(const Rat& x, const Rat& y)
    {
        const int c = cmp(x.q_, y.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

/// Non-negative squared distance; every threshold is compared in this form.
class SqDist {
public:
    SqDist() = default;
    explicit SqDist(Rat value);
    SqDist(long value) : SqDist(Rat(value)) {} // NOLINT(google-explicit-constructor)

    const Rat& value() const { return value_; }
    std::string to_string() const { return value_.to_string(); }

    friend bool operator==(const SqDist&, const SqDist&) = default;
    friend auto operator<=>(const SqDist& x, const SqDist& y) { return x.value_ <=> y.value_; }

private:
    Rat value_;
};

std::ostream& operator<<(std::ostream& os, const SqDist& d);

/// Point in R^d with exact coordinates.
class PointD {
public:
    PointD() = default;
    explicit PointD(std::vector<Rat> coords) : coords_(std::move(coords)) {}
    PointD(std::initializer_list<Rat> coords) : coords_(coords) {}

    std::size_t dim() const { return coords_.size(); }
    const Rat& operator[](std::size_t i) const { return coords_[i]; }
    std::span<const Rat> coords() const { return coords_; }

    friend bool operator==(const PointD&, const PointD&) = default;

private:
    std::vector<Rat> coords_;
};

struct Point2 {
    Rat x;
    Rat y;

    friend bool operator==(const Point2&, const Point2&) = default;
};

/// Planar polyline with at least one vertex. Positions are 0-based in code;
/// text formats and reports use 1-based positions.
class Curve2 {
public:
    explicit Curve2(std::vector<Point2> points);
    Curve2(std::initializer_list<Point2> points) : Curve2(std::vector<Point2>(points)) {}

    std::size_t size() const { return points_.size(); }
    const Point2& operator[](std::size_t i) const { return points_[i]; }
    std::span<const Point2> points() const { return points_; }
    auto begin() const { return points_.begin(); }
    auto end() const { return points_.end(); }

    friend bool operator==(const Curve2&, const Curve2&) = default;

private:
    std::vector<Point2> points_;
};

SqDist squared_euclidean(const PointD& p, const PointD& q);
SqDist squared_euclidean(const Point2& p, const Point2& q);

} // namespace finegeo
