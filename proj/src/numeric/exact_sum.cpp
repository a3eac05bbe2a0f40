#include "primeweb/numeric/exact_sum.hpp"

#include <cmath>
#include <cstdint>

#include "primeweb/errors.hpp"

namespace primeweb::numeric {

namespace {
// 2^-1074 is the smallest subnormal; shifting by this makes every double an
// integer.
constexpr int kScale = 1074 + 52;
}  // namespace

void ExactSum::add(double x) {
    if (!std::isfinite(x)) throw DomainError("ExactSum: non-finite addend");
    ++count_;
    if (x == 0.0) return;
    int exp = 0;
    const double mant = std::frexp(x, &exp);  // x = mant * 2^exp, 0.5 <= |mant| < 1
    const auto m = static_cast<std::int64_t>(std::ldexp(mant, 53));
    boost::multiprecision::cpp_int term = m;
    const int shift = exp - 53 + kScale;
    if (shift >= 0) {
        term <<= shift;
    } else {
        term >>= -shift;  // cannot drop bits: shift >= -52 only for subnormals
    }
    acc_ += term;
}

double ExactSum::value() const {
    if (acc_ == 0) return 0.0;
    const bool negative = acc_ < 0;
    boost::multiprecision::cpp_int mag = negative ? -acc_ : acc_;
    const auto bits = static_cast<int>(boost::multiprecision::msb(mag)) + 1;
    int shift = 0;
    if (bits > 64) {
        shift = bits - 64;
        mag >>= shift;
    }
    const auto top = mag.convert_to<std::uint64_t>();
    const double v = std::ldexp(static_cast<double>(top), shift - kScale);
    return negative ? -v : v;
}

}  // namespace primeweb::numeric
