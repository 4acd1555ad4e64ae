#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace eqzeta {

using BigInt = boost::multiprecision::cpp_int;

}  // namespace eqzeta
