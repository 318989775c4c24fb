#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace qcoord {

using Integer = boost::multiprecision::cpp_int;

}  // namespace qcoord
