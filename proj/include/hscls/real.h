#pragma once

namespace hscls {

// All model arithmetic runs in double; the acceptance tolerances
// (1e-12 normalization, 1e-4 finite-difference agreement) rule out float.
using real = double;

}  // namespace hscls
