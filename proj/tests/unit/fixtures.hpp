#pragma once

#include "ssi/ssi.hpp"

namespace ssi::test_support {

// Smallest ladder, ids: a1=0, a2=1 (sink), d1=2, d2=3.
inline const char *kG1Text = "parity 3;\n"
                             "0 3 0 1,3 \"a1\";\n"
                             "1 1 0 1 \"a2\";\n"
                             "2 4 1 1,3 \"d1\";\n"
                             "3 6 1 1 \"d2\";\n";

inline std::vector<PlayValue> values_of(const Valuation &xi) { return xi.values; }

} // namespace ssi::test_support
