#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace primeweb::numeric {

// Exact accumulator for finite doubles. Every addend is converted to a
// scaled integer, so the accumulated value (and the double returned by
// value()) does not depend on summation order.
class ExactSum {
public:
    void add(double x);
    double value() const;
    std::size_t count() const { return count_; }

private:
    boost::multiprecision::cpp_int acc_ = 0;
    std::size_t count_ = 0;
};

}  // namespace primeweb::numeric
