#include "finegeo/core_model.hpp"

#include <bit>
#include <ostream>

namespace finegeo {

namespace {

constexpr std::size_t kWordBits = 64;

std::size_t word_count(std::size_t dim) { return (dim + kWordBits - 1) / kWordBits; }

} // namespace

BitVector::BitVector(std::size_t dim) : dim_(dim), words_(word_count(dim), 0)
{
    if (dim == 0) {
        throw InvalidInput("bit vector dimension must be at least 1");
    }
}

BitVector::BitVector(std::initializer_list<int> bits) : BitVector(bits.size())
{
    std::size_t i = 0;
    for (int bit : bits) {
        if (bit != 0 && bit != 1) {
            throw InvalidInput("bit vector entries must be 0 or 1");
        }
        set(i++, bit == 1);
    }
}

BitVector::BitVector(std::span<const std::uint8_t> bits) : BitVector(bits.size())
{
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] > 1) {
            throw InvalidInput("bit vector entries must be 0 or 1");
        }
        set(i, bits[i] == 1);
    }
}

bool BitVector::get(std::size_t i) const
{
    return ((words_[i / kWordBits] >> (i % kWordBits)) & 1U) != 0;
}

void BitVector::set(std::size_t i, bool value)
{
    if (i >= dim_) {
        throw InvalidInput("bit index out of range");
    }
    const std::uint64_t mask = std::uint64_t{1} << (i % kWordBits);
    if (value) {
        words_[i / kWordBits] |= mask;
    } else {
        words_[i / kWordBits] &= ~mask;
    }
}

std::size_t BitVector::popcount() const
{
    std::size_t total = 0;
    for (auto w : words_) {
        total += static_cast<std::size_t>(std::popcount(w));
    }
    return total;
}

std::string BitVector::to_string() const
{
    std::string out;
    out.reserve(2 * dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (i != 0) {
            out.push_back(' ');
        }
        out.push_back(get(i) ? '1' : '0');
    }
    return out;
}

std::size_t inner_product(const BitVector& a, const BitVector& b)
{
    if (a.dim() != b.dim()) {
        throw InvalidInput("inner product of vectors with different dimensions");
    }
    const auto wa = a.words();
    const auto wb = b.words();
    std::size_t total = 0;
    for (std::size_t k = 0; k < wa.size(); ++k) {
        total += static_cast<std::size_t>(std::popcount(wa[k] & wb[k]));
    }
    return total;
}

OvInstance::OvInstance(std::vector<BitVector> a, std::vector<BitVector> b)
    : a_(std::move(a)), b_(std::move(b)), dim_(0)
{
    if (a_.empty() || b_.empty()) {
        throw InvalidInput("OV instance needs at least one vector on each side");
    }
    dim_ = a_.front().dim();
    for (const auto* side : {&a_, &b_}) {
        for (const auto& v : *side) {
            if (v.dim() != dim_) {
                throw InvalidInput("OV instance vectors differ in dimension");
            }
        }
    }
}

Rat::Rat(long num, long den)
{
    if (den == 0) {
        throw InvalidInput("rational with zero denominator");
    }
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rat::Rat(mpq_class q) : q_(std::move(q))
{
    q_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o)
{
    if (o.sign() == 0) {
        throw InvalidInput("division by zero");
    }
    q_ /= o.q_;
    return *this;
}

Rat Rat::parse(std::string_view text)
{
    const auto slash = text.find('/');
    auto parse_int = [&](std::string_view part) {
        if (part.empty()) {
            throw InvalidInput("malformed rational '" + std::string(text) + "'");
        }
        std::size_t start = (part.front() == '-' || part.front() == '+') ? 1 : 0;
        if (start == part.size()) {
            throw InvalidInput("malformed rational '" + std::string(text) + "'");
        }
        for (std::size_t i = start; i < part.size(); ++i) {
            if (part[i] < '0' || part[i] > '9') {
                throw InvalidInput("malformed rational '" + std::string(text) + "'");
            }
        }
        std::string digits(part.front() == '+' ? part.substr(1) : part);
        return mpz_class(digits, 10);
    };
    mpz_class num = parse_int(text.substr(0, slash));
    mpz_class den = 1;
    if (slash != std::string_view::npos) {
        den = parse_int(text.substr(slash + 1));
        if (den == 0) {
            throw InvalidInput("rational with zero denominator '" + std::string(text) + "'");
        }
    }
    return Rat(mpq_class(num, den));
}

std::string Rat::to_string() const
{
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.to_string(); }

SqDist::SqDist(Rat value) : value_(std::move(value))
{
    if (value_.sign() < 0) {
        throw InvalidInput("squared distance must be non-negative");
    }
}

std::ostream& operator<<(std::ostream& os, const SqDist& d) { return os << d.value(); }

Curve2::Curve2(std::vector<Point2> points) : points_(std::move(points))
{
    if (points_.empty()) {
        throw InvalidInput("curve must have at least one vertex");
    }
}

SqDist squared_euclidean(const PointD& p, const PointD& q)
{
    if (p.dim() != q.dim()) {
        throw InvalidInput("squared distance of points with different dimensions");
    }
    mpq_class total = 0;
    mpq_class diff;
    for (std::size_t i = 0; i < p.dim(); ++i) {
        diff = p[i].raw() - q[i].raw();
        total += diff * diff;
    }
    return SqDist(Rat(std::move(total)));
}

SqDist squared_euclidean(const Point2& p, const Point2& q)
{
    mpq_class dx = p.x.raw() - q.x.raw();
    mpq_class dy = p.y.raw() - q.y.raw();
    return SqDist(Rat(mpq_class(dx * dx + dy * dy)));
}

} // namespace finegeo
