#pragma once

#include "ramprimes/prime_table.hpp"
#include "ramprimes/ramanujan.hpp"

namespace fixtures {

// Shared, built once per test binary.
inline const ramprimes::PrimeTable& table_1m() {
    static const auto table = ramprimes::PrimeTable::build(1000000);
    return table;
}

inline const ramprimes::RamanujanTable& rt500() {
    static const auto rt = ramprimes::compute_ramanujan(500);
    return rt;
}

} // namespace fixtures
