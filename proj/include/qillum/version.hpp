// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace qillum {

// Fixed version string; appears in CSV comment headers, so output stays
// byte-identical across runs of the same build.
inline constexpr const char* kVersion = "0.1.0";

}  // namespace qillum
