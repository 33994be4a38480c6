#ifndef RAMPRIMES_FORMAT_HPP
#define RAMPRIMES_FORMAT_HPP

#include <cstdint>
#include <string>

namespace ramprimes {

// Fixed six decimal places; the one float format every export uses.
std::string fixed6(double v);

// Integral values print without a decimal point, everything else as fixed6.
std::string format_number(double v);

// Round to six decimals for JSON emission, so serialized numbers match the
// fixed6 text columns.
double round6(double v);

} // namespace ramprimes

#endif // RAMPRIMES_FORMAT_HPP
