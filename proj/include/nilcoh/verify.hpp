#ifndef NILCOH_VERIFY_HPP
#define NILCOH_VERIFY_HPP

#include "nilcoh/report.hpp"

namespace nilcoh {

// every identity the library models, run for one configuration; any throw
// inside a check becomes a failing record rather than a crash
Report run_verification_suite(const RunConfig& cfg);

// the weight of the adjoint module (highest root) in fundamental coordinates
std::vector<int> adjoint_fundamental(const RootSystem& rs);

}  // namespace nilcoh

#endif
