#pragma once

#include <string>
#include <vector>

#include "blasius/model.hpp"

namespace blasius {

/// Numerical verification of the a-priori estimates over a (p, c, a) grid.
struct VerifyOptions {
    std::vector<double> p_grid{1.0, 2.0, 3.0, 7.0};
    std::vector<double> c_grid{0.5, 1.0};
    std::vector<double> a_grid{0.05, 0.2, 1.0, 5.0};
    double eps = 1e-12;
    /// Test hook: multiplies c2 after evaluation; a value != 1 must make the
    /// suite fail (negative control).
    double corrupt_c2 = 1.0;
};

struct VerifyCheck {
    std::string name;
    bool pass = false;
    bool hard = true; ///< false for p < 1, where the theory is unproven
    double value = 0.0;
    double limit = 0.0;
};

struct VerifyReport {
    std::vector<VerifyCheck> checks;

    /// True iff every hard check passed (soft failures are warnings only).
    bool ok() const;
    std::size_t hard_failures() const;
    std::size_t soft_failures() const;
    std::string to_text() const;
};

VerifyReport run_verification(const VerifyOptions& opts = {});

} // namespace blasius
