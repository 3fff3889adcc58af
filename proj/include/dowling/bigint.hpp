#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace dowling {

using BigInt = boost::multiprecision::cpp_int;

}  // namespace dowling
