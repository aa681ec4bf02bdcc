#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace goswf::detail {

// IEEE binary128 layout, software arithmetic.
using Quad = boost::multiprecision::number<
    boost::multiprecision::backends::cpp_bin_float<
        113, boost::multiprecision::backends::digit_base_2, void, std::int16_t, -16382, 16383>,
    boost::multiprecision::et_off>;

}  // namespace goswf::detail
